// narain-lab: command-line surface over the lattice / theta / period-domain
// verification library.  Exit codes: 0 pass, 1 verification failure,
// 2 usage or input errors.

#include "nlab/json_io.hpp"
#include "nlab/period.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nlab;

namespace {

cplx parse_complex_pair(const std::string& s, const char* what) {
	std::istringstream in(s);
	double re, im;
	char comma;
	if (!(in >> re >> comma >> im) || comma != ',')
		throw std::invalid_argument(std::string(what) + ": expected RE,IM, got '" + s + "'");
	return cplx(re, im);
}

json load_json(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open '" + path + "'");
	return json::parse(in);  // throws with line/column diagnostics
}

int cmd_theta_eval(const std::string& lattice, const std::string& tau_s,
                   const std::string& z_path) {
	Lattice l = build_lattice(lattice);
	cplx tau = parse_complex_pair(tau_s, "--tau");
	CVec z = CVec::Zero(l.rank);
	if (!z_path.empty()) {
		z = cvec_from_json(load_json(z_path));
		if (z.size() != l.rank)
			throw std::invalid_argument("--z: expected " + std::to_string(l.rank) + " entries");
	}
	json out{{"lattice", l.name}, {"tau", to_json(tau)}, {"z", to_json(z)},
	         {"theta", to_json(theta_lattice(l, tau, z))}};
	if (l.rank == 16) out["character"] = to_json(character(l, tau, z));
	std::cout << out.dump(2) << "\n";
	return 0;
}

int cmd_theta_qexp(const std::string& lattice, int order, const std::string& series) {
	Lattice l = build_lattice(lattice);
	ThetaQExpansions qe = q_expansion(l, order);
	const QExpansion& q = series == "character" ? qe.character : qe.theta;
	if (series == "character" && l.rank != 16)
		throw std::invalid_argument("--series character requires a rank-16 lattice");
	std::cout << "exponent,coefficient\n";
	for (const auto& [expo, coeff] : q.coefficients) {
		if (expo.denominator() == 1)
			std::cout << expo.numerator().str();
		else
			std::cout << expo.numerator().str() << "/" << expo.denominator().str();
		std::cout << "," << coeff.str() << "\n";
	}
	return 0;
}

int cmd_narain_gram(const std::string& lattice, const std::string& metric_s, double b,
                    const std::string& wilson_path) {
	Lattice l = build_lattice(lattice);
	double g11, g12, g22;
	{
		std::istringstream in(metric_s);
		char c1, c2;
		if (!(in >> g11 >> c1 >> g12 >> c2 >> g22) || c1 != ',' || c2 != ',')
			throw std::invalid_argument("--metric: expected g11,g12,g22");
	}
	Eigen::Matrix2d g;
	g << g11, g12, g12, g22;
	RVec z1 = RVec::Zero(l.rank), z2 = RVec::Zero(l.rank);
	if (!wilson_path.empty()) {
		json w = load_json(wilson_path);
		z1 = rvec_from_json(w.at("z1"));
		z2 = rvec_from_json(w.at("z2"));
	}
	HeteroticTriplet h = make_heterotic(l, g, b, z1, z2);
	MomentaBasis basis = momenta_basis(l, h);
	Eigen::MatrixXd gram = momenta_gram(l, basis);
	double max_err = (gram - expected_gram(l)).cwiseAbs().maxCoeff();
	PeriodLine pl = period_line(l, h);
	bool pass = max_err <= tol_structural &&
	            pl.omega_omega_abs <= tol_structural * std::max(1.0, pl.omega.squaredNorm()) &&
	            pl.omega_conj > 0;
	json rows = json::array();
	for (int i = 0; i < gram.rows(); ++i) {
		json row = json::array();
		for (int j = 0; j < gram.cols(); ++j) row.push_back(gram(i, j));
		rows.push_back(row);
	}
	json out{{"triplet", to_json(l, h)},
	         {"gram", rows},
	         {"gram_max_err", max_err},
	         {"omega_omega_abs", pl.omega_omega_abs},
	         {"omega_conj", pl.omega_conj},
	         {"pass", pass}};
	std::cout << out.dump(2) << "\n";
	return pass ? 0 : 1;
}

int cmd_family_construct(const std::string& category, const std::string& tau_s,
                         const std::string& psi_path, int cube_root) {
	cplx tau = parse_complex_pair(tau_s, "--tau");
	json pj = load_json(psi_path);
	if (!pj.is_array() || pj.size() != 16)
		throw std::invalid_argument("--psi: expected 16 complex values");
	std::vector<TorusPoint> psi;
	for (const json& p : pj) psi.push_back(torus_from_value(tau, cplx_from_json(p)));
	SpecialFamily fam = category == "a" ? construct_family_a(tau, psi, cube_root)
	                                    : construct_family_b(tau, psi, cube_root);
	FamilyReport rep = verify_special_family(fam);
	json out = to_json(fam);
	out["verification"] = to_json(rep);
	std::cout << out.dump(2) << "\n";
	return rep.pass ? 0 : 1;
}

int cmd_family_verify(const std::string& path, double tol) {
	FamilyReport rep = verify_special_family(family_from_json(load_json(path)), tol);
	std::cout << to_json(rep).dump(2) << "\n";
	return rep.pass ? 0 : 1;
}

int cmd_group_mul(const std::string& path1, const std::string& path2) {
	ParabolicElement g1 = parabolic_from_json(load_json(path1));
	ParabolicElement g2 = parabolic_from_json(load_json(path2));
	Lattice l = build_lattice(g1.lattice_name);
	std::string why;
	if (!is_valid(l, g1, &why)) throw std::invalid_argument(path1 + ": invalid element (" + why + ")");
	if (!is_valid(l, g2, &why)) throw std::invalid_argument(path2 + ": invalid element (" + why + ")");
	std::cout << to_json(multiply(l, g1, g2)).dump(2) << "\n";
	return 0;
}

int cmd_verify_all(const RunConfig& cfg) {
	std::vector<SweepResult> results = verify_all(cfg);
	json rep = to_json(results);
	rep["config"] = json{{"lattice", cfg.lattice},
	                     {"convention", cfg.convention == Convention::body ? "body" : "appendix"},
	                     {"seed", cfg.seed},
	                     {"threads", cfg.threads}};
	std::cout << rep.dump(2) << "\n";
	return rep["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"narain-lab: lattice, theta-function and period-domain verification"};
	app.require_subcommand(1);

	std::string convention = "body";
	app.add_option("--convention", convention, "sigma_n scaling convention")
	    ->check(CLI::IsMember({"body", "appendix"}));

	// theta
	CLI::App* theta = app.add_subcommand("theta", "theta function evaluation");
	theta->require_subcommand(1);
	std::string th_lattice = "e8e8", th_tau, th_z, th_series = "theta";
	int th_order = 4;
	CLI::App* th_eval = theta->add_subcommand("eval", "evaluate Theta(tau, z)");
	th_eval->add_option("--lattice", th_lattice)->check(CLI::IsMember({"e8", "e8e8", "gamma16"}));
	th_eval->add_option("--tau", th_tau, "RE,IM")->required();
	th_eval->add_option("--z", th_z, "JSON file with a complex vector");
	CLI::App* th_qexp = theta->add_subcommand("qexp", "exact q-expansion as CSV");
	th_qexp->add_option("--lattice", th_lattice)->check(CLI::IsMember({"e8", "e8e8", "gamma16"}));
	th_qexp->add_option("--order", th_order, "truncation order");
	th_qexp->add_option("--series", th_series)->check(CLI::IsMember({"theta", "character"}));

	// narain
	CLI::App* narain = app.add_subcommand("narain", "Narain momenta lattice");
	narain->require_subcommand(1);
	std::string na_lattice = "e8e8", na_metric, na_wilson;
	double na_b = 0;
	CLI::App* na_gram = narain->add_subcommand("gram", "momenta basis Gram check");
	na_gram->add_option("--lattice", na_lattice)->check(CLI::IsMember({"e8e8", "gamma16"}));
	na_gram->add_option("--metric", na_metric, "g11,g12,g22")->required();
	na_gram->add_option("--b", na_b, "B-field scalar");
	na_gram->add_option("--wilson", na_wilson, "JSON file with z1, z2");

	// family
	CLI::App* family = app.add_subcommand("family", "special families on E_tau");
	family->require_subcommand(1);
	std::string fa_category = "a", fa_tau, fa_psi, fa_file;
	int fa_root = 0;
	double fa_tol = 1e-9;
	CLI::App* fa_con = family->add_subcommand("construct", "theorem p331 recipes");
	fa_con->add_option("--category", fa_category)->check(CLI::IsMember({"a", "b"}));
	fa_con->add_option("--tau", fa_tau, "RE,IM")->required();
	fa_con->add_option("--psi", fa_psi, "JSON file with 16 complex psi values")->required();
	fa_con->add_option("--cube-root", fa_root, "division-by-3 preimage index 0..8")
	    ->check(CLI::Range(0, 8));
	CLI::App* fa_ver = family->add_subcommand("verify", "check definition defex");
	fa_ver->add_option("file", fa_file, "family JSON file")->required();
	fa_ver->add_option("--tol", fa_tol, "torus comparison tolerance");

	// group
	CLI::App* group = app.add_subcommand("group", "parabolic group arithmetic");
	group->require_subcommand(1);
	std::string gr_g1, gr_g2;
	CLI::App* gr_mul = group->add_subcommand("mul", "multiply two elements");
	gr_mul->add_option("g1", gr_g1, "element JSON file")->required();
	gr_mul->add_option("g2", gr_g2, "element JSON file")->required();

	// verify-all
	RunConfig cfg;
	CLI::App* vall = app.add_subcommand("verify-all", "run every verification sweep");
	vall->alias("verify_all");
	vall->add_option("--lattice", cfg.lattice)->check(CLI::IsMember({"e8e8", "gamma16"}));
	vall->add_option("--seed", cfg.seed);
	vall->add_option("--threads", cfg.threads, "0: NARAIN_LAB_THREADS or hardware");
	vall->add_option("--samples-automorphy", cfg.samples_automorphy)->check(CLI::PositiveNumber);
	vall->add_option("--samples-lemma", cfg.samples_lemma)->check(CLI::PositiveNumber);
	vall->add_option("--samples-group", cfg.samples_group)->check(CLI::PositiveNumber);
	vall->add_option("--samples-gram", cfg.samples_gram)->check(CLI::PositiveNumber);
	vall->add_option("--samples-section", cfg.samples_section)->check(CLI::PositiveNumber);
	vall->add_option("--samples-family", cfg.samples_family)->check(CLI::PositiveNumber);
	vall->add_option("--tol-structural", cfg.tol_structural);
	vall->add_option("--tol-automorphy", cfg.tol_automorphy);
	vall->add_option("--tol-character", cfg.tol_character);
	vall->add_option("--tol-mainth", cfg.tol_mainth);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	cfg.convention = convention == "body" ? Convention::body : Convention::appendix;

	try {
		if (th_eval->parsed()) return cmd_theta_eval(th_lattice, th_tau, th_z);
		if (th_qexp->parsed()) return cmd_theta_qexp(th_lattice, th_order, th_series);
		if (na_gram->parsed()) return cmd_narain_gram(na_lattice, na_metric, na_b, na_wilson);
		if (fa_con->parsed()) return cmd_family_construct(fa_category, fa_tau, fa_psi, fa_root);
		if (fa_ver->parsed()) return cmd_family_verify(fa_file, fa_tol);
		if (gr_mul->parsed()) return cmd_group_mul(gr_g1, gr_g2);
		if (vall->parsed()) return cmd_verify_all(cfg);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}

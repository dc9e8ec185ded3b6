// Acceptance harness: one printed PASS/FAIL line per criterion.  Exit code
// is the number of failed criteria, so the ctest entry is red whenever any
// criterion is not met (including the documented honest failures of
// criterion 7, where the measured constants differ from the stated ones by
// fixed factors; see README "Deviations").

#include "nlab/json_io.hpp"
#include "nlab/verify.hpp"

#include <cstdio>
#include <map>
#include <vector>

using namespace nlab;

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string& what, const std::string& detail) {
	if (!pass) ++failures;
	std::printf("CRITERION %d: %s — %s%s%s\n", criterion, pass ? "PASS" : "FAIL", what.c_str(),
	            detail.empty() ? "" : " | ", detail.c_str());
	std::fflush(stdout);
}

std::string err_note(const std::vector<SweepResult>& rs) {
	std::string s;
	char buf[160];
	for (const SweepResult& r : rs) {
		std::snprintf(buf, sizeof buf, "%s%s: max_err %.3g (%lld samples)", s.empty() ? "" : "; ",
		              r.name.c_str(), r.max_err, r.samples);
		s += buf;
	}
	return s;
}

bool all_pass(const std::vector<SweepResult>& rs) {
	for (const SweepResult& r : rs)
		if (!r.pass) return false;
	return true;
}

// Brute-force coordinate-box oracle for the E8 = D8+ norm counts, written
// independently of the Fincke-Pohst enumerator: doubled epsilon coordinates
// are all even or all odd, with coordinate sum = 0 mod 4.
std::map<long long, long long> e8_box_counts(long long max_norm) {
	std::map<long long, long long> counts;
	long long max4 = 4 * max_norm;
	int r = 1;
	while ((long long)r * r <= max4) ++r;
	for (int parity = 0; parity < 2; ++parity) {
		std::vector<int> values;
		for (int v = -r; v <= r; ++v)
			if (((v % 2) + 2) % 2 == parity) values.push_back(v);
		int nv = (int)values.size();
		std::vector<int> idx(8, 0);
		while (true) {
			long long q = 0, s = 0;
			for (int i = 0; i < 8; ++i) {
				int v = values[idx[i]];
				q += (long long)v * v;
				s += v;
			}
			if (q > 0 && q <= max4 && q % 4 == 0 && ((s % 4) + 4) % 4 == 0) counts[q / 4] += 1;
			int i = 0;
			while (i < 8 && ++idx[i] == nv) idx[i++] = 0;
			if (i == 8) break;
		}
	}
	return counts;
}

RunConfig config_for(const std::string& lattice, Convention conv = Convention::body) {
	RunConfig cfg;
	cfg.lattice = lattice;
	cfg.convention = conv;
	return cfg;
}

void criterion_1() {
	SweepResult r = sweep_classification(config_for("e8e8"));
	line(1, r.pass, "lattice classification (even, unimodular, signatures (16,0) and (2,18))",
	     r.note);
}

void criterion_2() {
	// independent oracle first: box counts for E8, convolved for rank 16
	std::map<long long, long long> e8 = e8_box_counts(8);
	long long oracle[5];
	oracle[0] = 1;
	for (int k = 1; k <= 4; ++k) {
		long long c = 2 * e8[2 * k];  // one factor trivial
		for (int j = 1; j < k; ++j) c += e8[2 * j] * e8[2 * (k - j)];
		oracle[k] = c;
	}
	bool pass = true;
	std::string detail = "coefficients";
	for (const char* name : {"e8e8", "gamma16"}) {
		ThetaQExpansions qe = q_expansion(build_lattice(name), 4);
		for (int k = 0; k <= 4; ++k)
			if (qe.theta.coefficients[k].second != Int(oracle[k])) pass = false;
	}
	for (int k = 0; k <= 4; ++k) detail += " " + std::to_string(oracle[k]);
	detail += " (box-oracle values; the two theta series coincide)";
	line(2, pass, "theta coincidence Theta_{E8+E8} = Theta_{Gamma16} through q^4", detail);
}

void criterion_3() {
	std::vector<SweepResult> rs = {sweep_mainth(config_for("e8e8")),
	                               sweep_mainth(config_for("gamma16"))};
	line(3, all_pass(rs), "automorphy equality over >= 500 random (g, tau, z) per lattice",
	     err_note(rs));
}

void criterion_4() {
	std::vector<SweepResult> rs = {sweep_lemma_translation(config_for("e8e8")),
	                               sweep_lemma_modular(config_for("e8e8")),
	                               sweep_mm_isometry(config_for("e8e8"))};
	line(4, all_pass(rs), "translation/modular lemma sweeps at 1e-9; isometry factor exactly 1",
	     err_note(rs));
}

void criterion_5() {
	std::vector<SweepResult> rs = {sweep_group_algebra(config_for("e8e8")),
	                               sweep_alpha_homomorphism(config_for("e8e8")),
	                               sweep_group_algebra(config_for("gamma16")),
	                               sweep_alpha_homomorphism(config_for("gamma16"))};
	line(5, all_pass(rs), "group algebra, inverse formula, factorization, alpha and its kernel",
	     err_note(rs));
}

void criterion_6() {
	std::vector<SweepResult> rs = {sweep_narain_gram(config_for("e8e8")),
	                               sweep_period_line(config_for("e8e8")),
	                               sweep_narain_gram(config_for("gamma16")),
	                               sweep_period_line(config_for("gamma16"))};
	line(6, all_pass(rs), "Narain Gram = H+H-Lambda; omega.omega = 0, omega.conj(omega) > 0",
	     err_note(rs));
}

void criterion_7() {
	// part 1: theta-tilde inverts the sections (holds)
	std::vector<SweepResult> rs = {
	    sweep_theta_tilde_section(config_for("e8e8", Convention::body)),
	    sweep_theta_tilde_section(config_for("e8e8", Convention::appendix))};
	bool section_ok = all_pass(rs);

	// parts 2 and 3: the stated constants r(sigma_n) = Im tau and
	// pair(sigma_n, conj sigma_n) = Im(u) Im(tau), checked as written.
	Lattice l = build_lattice("e8e8");
	Rng rng(7070);
	double max_r_err = 0, max_pair_err = 0;
	double r_ratio = 0, pair_ratio_body = 0, pair_ratio_app = 0;
	for (int k = 0; k < 1000; ++k) {
		cplx tau(rng.uniform(-0.5, 0.5), rng.uniform(0.3, 3.0));
		cplx u(rng.uniform(-1, 1), rng.uniform(0.2, 2.0));
		CVec z(16);
		for (int i = 0; i < 16; ++i) z(i) = cplx(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
		ComplexTriplet sb = narain_section(l, tau, z, u, Convention::body);
		ComplexTriplet sa = narain_section(l, tau, z, u, Convention::appendix);
		double r = r_value(l, sb);
		max_r_err = std::max(max_r_err, std::abs(r - tau.imag()));
		r_ratio = r / tau.imag();
		double target = u.imag() * tau.imag();
		double pb = pair_form(l, sb, conj(sb)).real();
		double pa = pair_form(l, sa, conj(sa)).real();
		max_pair_err = std::max({max_pair_err, std::abs(pb - target), std::abs(pa - target)});
		pair_ratio_body = pb / target;
		pair_ratio_app = pa / target;
	}
	bool r_ok = max_r_err <= 1e-12;
	bool pair_ok = max_pair_err <= 1e-11;
	char buf[320];
	std::snprintf(buf, sizeof buf,
	              "theta_tilde o sigma = id: %s; r = Im(tau): max_err %.3g (measured r = %.12g "
	              "Im(tau)); pair = Im(u)Im(tau): max_err %.3g (measured %.12g x body, %.12g x "
	              "appendix)",
	              section_ok ? "ok" : "FAIL", max_r_err, r_ratio, max_pair_err, pair_ratio_body,
	              pair_ratio_app);
	line(7, section_ok && r_ok && pair_ok, "section/fibration contracts as stated", buf);
}

void criterion_8() {
	std::vector<SweepResult> rs = {sweep_families(config_for("e8e8"))};
	line(8, all_pass(rs), "special-family construction verifies; 0.1 perturbations fail",
	     err_note(rs));
}

void criterion_9() {
	SweepResult r = sweep_eta_anchor(config_for("e8e8"));
	line(9, r.pass, "eta(i) matches the high-precision summation oracle to 1e-12", err_note({r}));
}

}  // namespace

int main() {
	criterion_1();
	criterion_2();
	criterion_3();
	criterion_4();
	criterion_5();
	criterion_6();
	criterion_7();
	criterion_8();
	criterion_9();
	std::printf("ACCEPTANCE: %d of 9 criteria failed\n", failures);
	return failures;
}

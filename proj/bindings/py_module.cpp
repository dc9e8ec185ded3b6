// Python bindings for the main library operations.

#include "nlab/json_io.hpp"
#include "nlab/period.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nlab;

namespace {

Lattice lat(const std::string& name) { return build_lattice(name); }

}  // namespace

PYBIND11_MODULE(_narain_lab, m) {
	m.doc() = "lattice, theta-function and period-domain verification library";

	py::class_<Classification>(m, "Classification")
	    .def_readonly("rank", &Classification::rank)
	    .def_readonly("even", &Classification::even)
	    .def_readonly("unimodular", &Classification::unimodular)
	    .def_readonly("positive", &Classification::positive)
	    .def_readonly("negative", &Classification::negative)
	    .def_readonly("det", &Classification::det);

	m.def("classify", [](const std::string& name) { return classify(lat(name)); });
	m.def("gram_matrix", [](const std::string& name) { return IMat(lat(name).gram); });
	m.def("norm_counts", [](const std::string& name, long long max_norm) {
		return enumerate_by_norm(lat(name), max_norm).counts;
	});

	m.def("eta", &eta);
	m.def(
	    "theta",
	    [](const std::string& name, cplx tau, const CVec& z) {
		    return theta_lattice(lat(name), tau, z);
	    },
	    py::arg("lattice"), py::arg("tau"), py::arg("z"));
	m.def(
	    "character",
	    [](const std::string& name, cplx tau, const CVec& z) {
		    return character(lat(name), tau, z);
	    },
	    py::arg("lattice"), py::arg("tau"), py::arg("z"));
	m.def(
	    "q_expansion",
	    [](const std::string& name, int order) {
		    ThetaQExpansions qe = q_expansion(lat(name), order);
		    auto conv = [](const QExpansion& q) {
			    std::vector<std::pair<std::string, std::string>> out;
			    for (const auto& [e, c] : q.coefficients) {
				    std::string es = e.numerator().str();
				    if (e.denominator() != 1) es += "/" + e.denominator().str();
				    out.emplace_back(es, c.str());
			    }
			    return out;
		    };
		    py::dict d;
		    d["theta"] = conv(qe.theta);
		    if (!qe.character.coefficients.empty()) d["character"] = conv(qe.character);
		    return d;
	    },
	    py::arg("lattice"), py::arg("order"));

	py::class_<SweepResult>(m, "SweepResult")
	    .def_readonly("name", &SweepResult::name)
	    .def_readonly("samples", &SweepResult::samples)
	    .def_readonly("max_err", &SweepResult::max_err)
	    .def_readonly("pass_", &SweepResult::pass)
	    .def_readonly("note", &SweepResult::note)
	    .def("__repr__", [](const SweepResult& r) {
		    return "<SweepResult " + r.name + (r.pass ? " PASS" : " FAIL") + ">";
	    });

	m.def(
	    "verify_all",
	    [](const std::string& lattice, unsigned long long seed, int samples,
	       const std::string& convention) {
		    RunConfig cfg;
		    cfg.lattice = lattice;
		    cfg.seed = seed;
		    cfg.convention = convention == "appendix" ? Convention::appendix : Convention::body;
		    if (samples > 0) {
			    cfg.samples_automorphy = cfg.samples_lemma = cfg.samples_group =
			        cfg.samples_section = samples;
			    cfg.samples_gram = cfg.samples_family = std::max(1, samples / 5);
		    }
		    return verify_all(cfg);
	    },
	    py::arg("lattice") = "e8e8", py::arg("seed") = 20260823ULL, py::arg("samples") = 0,
	    py::arg("convention") = "body");

	m.def(
	    "group_mul",
	    [](const std::string& g1, const std::string& g2) {
		    ParabolicElement a = parabolic_from_json(json::parse(g1));
		    ParabolicElement b = parabolic_from_json(json::parse(g2));
		    return to_json(multiply(lat(a.lattice_name), a, b)).dump();
	    },
	    "multiply two parabolic elements given as JSON strings");

	m.def(
	    "construct_family",
	    [](const std::string& category, cplx tau, const std::vector<cplx>& psi_values,
	       int cube_root) {
		    std::vector<TorusPoint> psi;
		    for (cplx v : psi_values) psi.push_back(torus_from_value(tau, v));
		    SpecialFamily fam = category == "b" ? construct_family_b(tau, psi, cube_root)
		                                        : construct_family_a(tau, psi, cube_root);
		    return to_json(fam).dump();
	    },
	    py::arg("category"), py::arg("tau"), py::arg("psi_values"), py::arg("cube_root") = 0);
	m.def("verify_family", [](const std::string& fam_json, double tol) {
		FamilyReport rep = verify_special_family(family_from_json(json::parse(fam_json)), tol);
		return to_json(rep).dump();
	}, py::arg("family_json"), py::arg("tol") = 1e-9);

	m.def(
	    "narain_gram",
	    [](const std::string& lattice, const Eigen::Matrix2d& metric, double b,
	       const RVec& z1, const RVec& z2) {
		    Lattice l = lat(lattice);
		    HeteroticTriplet h = make_heterotic(l, metric, b, z1, z2);
		    return Eigen::MatrixXd(momenta_gram(l, momenta_basis(l, h)));
	    },
	    py::arg("lattice"), py::arg("metric"), py::arg("b"), py::arg("z1"), py::arg("z2"));
	m.def("expected_gram",
	      [](const std::string& lattice) { return Eigen::MatrixXd(expected_gram(lat(lattice))); });
}

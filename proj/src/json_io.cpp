#include "nlab/json_io.hpp"

namespace nlab {

json to_json(cplx v) { return json::array({v.real(), v.imag()}); }

cplx cplx_from_json(const json& j) {
	if (!j.is_array() || j.size() != 2)
		throw std::invalid_argument("expected a complex number as [re, im]");
	return cplx(j[0].get<double>(), j[1].get<double>());
}

json to_json(const IMat& m) {
	json rows = json::array();
	for (int i = 0; i < m.rows(); ++i) {
		json row = json::array();
		for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
		rows.push_back(row);
	}
	return rows;
}

IMat imat_from_json(const json& j) {
	if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a matrix (array of rows)");
	int rows = (int)j.size(), cols = (int)j[0].size();
	IMat m(rows, cols);
	for (int r = 0; r < rows; ++r) {
		if ((int)j[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
		for (int c = 0; c < cols; ++c) m(r, c) = j[r][c].get<long long>();
	}
	return m;
}

json to_json(const IVec& v) {
	json a = json::array();
	for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
	return a;
}

IVec ivec_from_json(const json& j) {
	if (!j.is_array()) throw std::invalid_argument("expected an integer vector");
	IVec v((int)j.size());
	for (int i = 0; i < v.size(); ++i) v(i) = j[i].get<long long>();
	return v;
}

json to_json(const RVec& v) {
	json a = json::array();
	for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
	return a;
}

RVec rvec_from_json(const json& j) {
	if (!j.is_array()) throw std::invalid_argument("expected a real vector");
	RVec v((int)j.size());
	for (int i = 0; i < v.size(); ++i) v(i) = j[i].get<double>();
	return v;
}

json to_json(const CVec& v) {
	json a = json::array();
	for (int i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
	return a;
}

CVec cvec_from_json(const json& j) {
	if (!j.is_array()) throw std::invalid_argument("expected a complex vector");
	CVec v((int)j.size());
	for (int i = 0; i < v.size(); ++i) v(i) = cplx_from_json(j[i]);
	return v;
}

json to_json(const ParabolicElement& g) {
	IMat q(2, (int)g.Q.cols());
	for (int c = 0; c < g.Q.cols(); ++c) {
		q(0, c) = g.Q(0, c);
		q(1, c) = g.Q(1, c);
	}
	IMat m = g.m, r = g.R;
	return json{{"lattice", g.lattice_name},
	            {"m", to_json(m)},
	            {"Q", to_json(q)},
	            {"R", to_json(r)},
	            {"f", to_json(g.f)}};
}

ParabolicElement parabolic_from_json(const json& j) {
	ParabolicElement g;
	g.lattice_name = j.at("lattice").get<std::string>();
	IMat m = imat_from_json(j.at("m"));
	IMat r = imat_from_json(j.at("R"));
	if (m.rows() != 2 || m.cols() != 2 || r.rows() != 2 || r.cols() != 2)
		throw std::invalid_argument("m and R must be 2x2");
	g.m = m;
	g.R = r;
	IMat q = imat_from_json(j.at("Q"));
	if (q.rows() != 2) throw std::invalid_argument("Q must have two rows");
	g.Q.resize(2, q.cols());
	for (int c = 0; c < q.cols(); ++c) {
		g.Q(0, c) = q(0, c);
		g.Q(1, c) = q(1, c);
	}
	g.f = imat_from_json(j.at("f"));
	return g;
}

json to_json(const PiElement& p) {
	IMat mod = p.mod;
	return json{{"lattice", p.lattice_name},
	            {"mod", to_json(mod)},
	            {"q1", to_json(p.q1)},
	            {"q2", to_json(p.q2)},
	            {"f", to_json(p.f)}};
}

json to_json(const TorusPoint& p) { return to_json(p.value()); }

json to_json(const SpecialFamily& fam) {
	json pts = json::array();
	for (const TorusPoint& p : fam.points) pts.push_back(to_json(p));
	return json{{"tau", to_json(fam.tau)},
	            {"p0", to_json(fam.p0)},
	            {"q0", to_json(fam.q0)},
	            {"points", pts},
	            {"t", fam.t},
	            {"category", fam.category == FamilyCategory::a ? "a" : "b"}};
}

SpecialFamily family_from_json(const json& j) {
	SpecialFamily fam;
	fam.tau = cplx_from_json(j.at("tau"));
	fam.p0 = torus_from_value(fam.tau, cplx_from_json(j.at("p0")));
	fam.q0 = torus_from_value(fam.tau, cplx_from_json(j.at("q0")));
	for (const json& p : j.at("points"))
		fam.points.push_back(torus_from_value(fam.tau, cplx_from_json(p)));
	fam.t = j.at("t").get<int>();
	std::string cat = j.at("category").get<std::string>();
	if (cat != "a" && cat != "b") throw std::invalid_argument("category must be 'a' or 'b'");
	fam.category = cat == "a" ? FamilyCategory::a : FamilyCategory::b;
	return fam;
}

json to_json(const FamilyReport& rep) {
	json conds = json::array();
	for (size_t i = 0; i < rep.condition.size(); ++i)
		conds.push_back(json{{"condition", rep.condition[i]}, {"residual", rep.residual[i]}});
	return json{{"pass", rep.pass}, {"conditions", conds}};
}

json to_json(const Lattice& l, const HeteroticTriplet& h) {
	(void)l;
	json metric = json::array({json::array({h.metric(0, 0), h.metric(0, 1)}),
	                           json::array({h.metric(1, 0), h.metric(1, 1)})});
	return json{{"lattice", h.lattice_name},
	            {"metric", metric},
	            {"b", h.b},
	            {"z1", to_json(h.z1)},
	            {"z2", to_json(h.z2)}};
}

json to_json(const SweepResult& r) {
	json j{{"name", r.name}, {"samples", r.samples}, {"max_err", r.max_err}, {"pass", r.pass}};
	if (!r.note.empty()) j["note"] = r.note;
	return j;
}

json to_json(const std::vector<SweepResult>& rs) {
	json arr = json::array();
	bool all = true;
	for (const SweepResult& r : rs) {
		arr.push_back(to_json(r));
		all = all && r.pass;
	}
	return json{{"pass", all}, {"checks", arr}};
}

}  // namespace nlab

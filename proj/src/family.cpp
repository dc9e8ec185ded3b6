#include "nlab/family.hpp"

#include <cmath>
#include <stdexcept>

namespace nlab {

namespace {

double mod1(double x) {
	double r = x - std::floor(x);
	if (r >= 1.0) r -= 1.0;  // guards against floor(-1e-18) rounding
	return r;
}

void check_same_curve(const TorusPoint& p, const TorusPoint& q) {
	if (p.tau != q.tau) throw std::invalid_argument("torus points live on different curves");
}

}  // namespace

TorusPoint torus_point(cplx tau, double s, double t) {
	if (tau.imag() <= 0) throw std::domain_error("torus_point: Im tau <= 0");
	return TorusPoint{tau, mod1(s), mod1(t)};
}

TorusPoint torus_from_value(cplx tau, cplx value) {
	double t = value.imag() / tau.imag();
	double s = value.real() - t * tau.real();
	return torus_point(tau, s, t);
}

TorusPoint torus_add(const TorusPoint& p, const TorusPoint& q) {
	check_same_curve(p, q);
	return torus_point(p.tau, p.s + q.s, p.t + q.t);
}

TorusPoint torus_neg(const TorusPoint& p) { return torus_point(p.tau, -p.s, -p.t); }

TorusPoint torus_sub(const TorusPoint& p, const TorusPoint& q) {
	return torus_add(p, torus_neg(q));
}

TorusPoint torus_scale(long long n, const TorusPoint& p) {
	return torus_point(p.tau, (double)n * p.s, (double)n * p.t);
}

TorusPoint torus_divide(const TorusPoint& p, long long n) {
	if (n == 0) throw std::invalid_argument("torus_divide: n = 0");
	return torus_point(p.tau, p.s / (double)n, p.t / (double)n);
}

double torus_distance(const TorusPoint& p, const TorusPoint& q) {
	check_same_curve(p, q);
	double ds = mod1(q.s - p.s), dt = mod1(q.t - p.t);
	double best = 1e300;
	for (int a = -1; a <= 0; ++a)
		for (int b = -1; b <= 0; ++b)
			best = std::min(best, std::abs(cplx(ds + a, 0) + (dt + b) * p.tau));
	return best;
}

bool torus_equal(const TorusPoint& p, const TorusPoint& q, double tol) {
	return torus_distance(p, q) <= tol;
}

TorusPoint psi_of(const Lattice& lambda, cplx tau, const CVec& z, const IVec& gamma) {
	if (z.size() != lambda.rank || gamma.size() != lambda.rank)
		throw std::invalid_argument("psi_of: length mismatch");
	cplx w = 0;
	for (int i = 0; i < lambda.rank; ++i)
		for (int j = 0; j < lambda.rank; ++j)
			w += (double)gamma(i) * (double)lambda.gram(i, j) * z(j);
	return torus_from_value(tau, w);
}

FamilyReport verify_special_family(const SpecialFamily& fam, double tol) {
	if ((int)fam.points.size() != 18)
		throw std::invalid_argument("verify_special_family: expected 18 points");
	FamilyReport rep;
	auto add = [&](const std::string& label, double res) {
		rep.condition.push_back(label);
		rep.residual.push_back(res);
	};
	auto range_sum = [&](int lo, int hi) {  // 1-based inclusive
		TorusPoint s = torus_point(fam.tau, 0, 0);
		for (int i = lo; i <= hi; ++i) s = torus_add(s, fam.points[i - 1]);
		return s;
	};
	if (fam.category == FamilyCategory::a) {
		add("t == 9", fam.t == 9 ? 0.0 : 1.0);
		add("p9 = p18", torus_distance(fam.points[8], fam.points[17]));
		add("p1+...+p9 = 9 p0", torus_distance(range_sum(1, 9), torus_scale(9, fam.p0)));
		add("p10+...+p18 = 9 q0", torus_distance(range_sum(10, 18), torus_scale(9, fam.q0)));
	} else {
		add("2 <= t <= 17", (fam.t >= 2 && fam.t <= 17) ? 0.0 : 1.0);
		add("p1 = p2", torus_distance(fam.points[0], fam.points[1]));
		add("p1+...+p18 = 9 p0 + 9 q0",
		    torus_distance(range_sum(1, 18),
		                   torus_add(torus_scale(9, fam.p0), torus_scale(9, fam.q0))));
		add("3 p0 - p1 = 3 q0 - p(t+1)",
		    torus_distance(torus_sub(torus_scale(3, fam.p0), fam.points[0]),
		                   torus_sub(torus_scale(3, fam.q0), fam.points[fam.t])));
	}
	rep.pass = true;
	for (double r : rep.residual) rep.pass = rep.pass && r <= tol;
	return rep;
}

namespace {

TorusPoint divide3_with_choice(const TorusPoint& p, int cube_root) {
	if (cube_root < 0 || cube_root > 8)
		throw std::invalid_argument("cube_root must be in 0..8");
	TorusPoint d = torus_divide(p, 3);
	return torus_point(d.tau, d.s + (cube_root % 3) / 3.0, d.t + (cube_root / 3) / 3.0);
}

}  // namespace

SpecialFamily construct_family_a(cplx tau, const std::vector<TorusPoint>& psi, int cube_root) {
	if (psi.size() != 16)
		throw std::invalid_argument("construct_family_a: need psi on a1..a8, b1..b8");
	auto pa = [&](int i) { return psi[i - 1]; };       // psi(a_i)
	auto pb = [&](int i) { return psi[8 + i - 1]; };   // psi(b_i)

	// 3 x1 = 2 psi(a1) + psi(a2) - psi(a8)
	TorusPoint rhs_x = torus_sub(torus_add(torus_scale(2, pa(1)), pa(2)), pa(8));
	std::vector<TorusPoint> x(10, torus_point(tau, 0, 0));  // x[1..9]
	x[1] = divide3_with_choice(rhs_x, cube_root);
	for (int l = 2; l <= 8; ++l) x[l] = torus_sub(x[l - 1], pa(l - 1));
	TorusPoint s18 = torus_point(tau, 0, 0);
	for (int l = 1; l <= 8; ++l) s18 = torus_add(s18, x[l]);
	x[9] = torus_neg(s18);

	std::vector<TorusPoint> y(10, torus_point(tau, 0, 0));
	y[9] = x[9];
	// y1 = y9 + (7 psi(b1) + 6 psi(b2) + ... + psi(b7)) - 3 (2 psi(b1) + psi(b2) - psi(b8))
	TorusPoint comb = torus_point(tau, 0, 0);
	for (int j = 1; j <= 7; ++j) comb = torus_add(comb, torus_scale(8 - j, pb(j)));
	TorusPoint bracket = torus_sub(torus_add(torus_scale(2, pb(1)), pb(2)), pb(8));
	y[1] = torus_sub(torus_add(y[9], comb), torus_scale(3, bracket));
	for (int l = 2; l <= 8; ++l) y[l] = torus_add(y[l - 1], pb(l - 1));
	// 3 q0 = 2 psi(b1) + psi(b2) - psi(b8) + 3 y1
	TorusPoint rhs_q = torus_add(bracket, torus_scale(3, y[1]));
	TorusPoint q0 = torus_divide(rhs_q, 3);

	SpecialFamily fam;
	fam.tau = tau;
	fam.p0 = torus_point(tau, 0, 0);
	fam.q0 = q0;
	fam.t = 9;
	fam.category = FamilyCategory::a;
	for (int l = 1; l <= 9; ++l) fam.points.push_back(x[l]);
	for (int l = 1; l <= 9; ++l) fam.points.push_back(y[l]);
	return fam;
}

SpecialFamily construct_family_b(cplx tau, const std::vector<TorusPoint>& psi, int cube_root) {
	if (psi.size() != 16)
		throw std::invalid_argument("construct_family_b: need psi on c1..c16");
	auto pc = [&](int i) { return psi[i - 1]; };  // psi(c_i)

	// 3 p1 = -(2 psi(c1) + ... + 2 psi(c14) + psi(c15) + psi(c16))
	TorusPoint rhs = torus_point(tau, 0, 0);
	for (int j = 1; j <= 14; ++j) rhs = torus_add(rhs, torus_scale(2, pc(j)));
	rhs = torus_add(rhs, torus_add(pc(15), pc(16)));
	rhs = torus_neg(rhs);
	std::vector<TorusPoint> p(19, torus_point(tau, 0, 0));  // p[1..18]
	p[1] = divide3_with_choice(rhs, cube_root);
	p[2] = p[1];
	for (int l = 3; l <= 17; ++l) p[l] = torus_sub(p[l - 1], pc(l - 2));
	// 6 q0 = 2 p1 + p2 + ... + p17
	TorusPoint rhs_q = p[1];
	for (int l = 1; l <= 17; ++l) rhs_q = torus_add(rhs_q, p[l]);
	TorusPoint q0 = torus_divide(rhs_q, 6);
	p[18] = torus_add(p[1], torus_scale(3, q0));

	SpecialFamily fam;
	fam.tau = tau;
	fam.p0 = torus_point(tau, 0, 0);
	fam.q0 = q0;
	fam.t = 17;
	fam.category = FamilyCategory::b;
	for (int l = 1; l <= 18; ++l) fam.points.push_back(p[l]);
	return fam;
}

}  // namespace nlab

#include "nlab/period.hpp"

#include <cmath>

namespace nlab {

cplx lambda_pairing(const Lattice& lambda, const CVec& u, const CVec& v) {
	if (u.size() != lambda.rank || v.size() != lambda.rank)
		throw std::invalid_argument("lambda_pairing: length mismatch");
	cplx s = 0;
	for (int i = 0; i < lambda.rank; ++i)
		for (int j = 0; j < lambda.rank; ++j) s += u(i) * (double)lambda.gram(i, j) * v(j);
	return s;
}

double r_value(const Lattice& lambda, const ComplexTriplet& w) {
	cplx via_pairing = cplx(0, -1) * pair_form(lambda, apply_N(w), conj(w));
	double via_a = 2.0 * std::imag(std::conj(w.a(0)) * w.a(1));
	double scale = std::max(1.0, norm_inf(w) * norm_inf(w));
	if (std::abs(via_pairing - cplx(via_a, 0)) > 1e-12 * scale)
		throw std::logic_error("r_value: the two formulas disagree beyond tolerance");
	return via_a;
}

std::pair<cplx, CVec> theta_tilde(const Lattice& lambda, const ComplexTriplet& w) {
	double r = r_value(lambda, w);
	if (r <= 0) throw std::domain_error("theta_tilde: r(w) <= 0, not in Omega+(F)");
	// r > 0 forces a2 != 0 (Prop. "lem2")
	cplx tau = -w.a(0) / w.a(1);
	CVec z = w.c / w.a(1);
	return {tau, z};
}

ComplexTriplet narain_section(const Lattice& lambda, cplx tau, const CVec& z, cplx u,
                              Convention conv) {
	if (tau.imag() <= 0) throw std::domain_error("narain_section: Im tau <= 0");
	cplx zz = lambda_pairing(lambda, z, z);
	cplx zzbar = lambda_pairing(lambda, z, z.conjugate());
	cplx den = std::conj(tau) - tau;
	cplx c1 = (zz - zzbar) / den;
	cplx c2 = (std::conj(tau) * zz - tau * zzbar) / den;
	ComplexTriplet core = make_triplet(lambda, Eigen::Vector2cd(-tau, 1.0),
	                                   Eigen::Vector2cd(0.5 * c1, 0.5 * c2), z);
	cplx eps = (conv == Convention::body) ? cplx(1, 0) : cplx(-2, 0);
	return exp_N(eps * u, core);
}

ComplexTriplet perturbed_section(const Lattice& lambda, cplx tau, const CVec& z) {
	if (tau.imag() <= 0) throw std::domain_error("perturbed_section: Im tau <= 0");
	cplx zz = lambda_pairing(lambda, z, z);
	return make_triplet(lambda, Eigen::Vector2cd(-tau, 1.0), Eigen::Vector2cd(0.0, 0.5 * zz), z);
}

std::pair<cplx, cplx> fiber_coordinate(const Lattice& lambda, const ComplexTriplet& w1,
                                       const ComplexTriplet& w2) {
	if (std::abs(w2.a(1)) < 1e-14 * std::max(1.0, norm_inf(w2)))
		throw std::invalid_argument("fiber_coordinate: degenerate a2");
	auto [tau1, z1] = theta_tilde(lambda, w1);
	auto [tau2, z2] = theta_tilde(lambda, w2);
	double scale = std::max({1.0, std::abs(tau2), z2.cwiseAbs().maxCoeff()});
	if (std::abs(tau1 - tau2) > 1e-9 * scale || (z1 - z2).cwiseAbs().maxCoeff() > 1e-9 * scale)
		throw std::invalid_argument("fiber_coordinate: theta_tilde projections disagree");
	cplx mu = w1.a(1) / w2.a(1);
	// w1/mu - w2 = lambda N w2 = lambda (0, T a2, 0)
	Eigen::Vector2cd ta = apply_T(w2.a);
	Eigen::Vector2cd diff = w1.b / mu - w2.b;
	cplx lam = (std::abs(ta(0)) >= std::abs(ta(1))) ? diff(0) / ta(0) : diff(1) / ta(1);
	return {lam, mu};
}

static AutomorphyReport make_report(const Lattice& lambda, const ComplexTriplet& lhs,
                                    const ComplexTriplet& rhs, cplx expected_lambda) {
	auto [lam, mu] = fiber_coordinate(lambda, lhs, rhs);
	AutomorphyReport rep;
	rep.lambda = lam;
	rep.expected_lambda = expected_lambda;
	rep.mu = mu;
	cplx d = lam - expected_lambda;  // should be a (small) integer
	rep.lambda_int_err = std::abs(d - std::round(d.real()));
	// e^{2 pi i d} is computed directly so that a huge |factor| cannot
	// overflow the comparison
	rep.factor_rel_err = std::abs(std::exp(cplx(0, 2 * pi) * d) - 1.0);
	rep.factor = std::exp(cplx(0, 2 * pi) * lam);
	rep.expected_factor = std::exp(cplx(0, 2 * pi) * expected_lambda);
	rep.pass = rep.factor_rel_err <= tol_automorphy && rep.lambda_int_err <= tol_automorphy;
	return rep;
}

AutomorphyReport verify_lemma_translation(const Lattice& lambda, cplx tau, const CVec& z,
                                          const IVec& q1, const IVec& q2) {
	CVec zt = z;
	for (int i = 0; i < lambda.rank; ++i) zt(i) += (double)q1(i) + tau * (double)q2(i);
	ComplexTriplet lhs = perturbed_section(lambda, tau, zt);
	ParabolicElement g = make_translation(lambda, q1, q2);
	ComplexTriplet rhs = act_on_period(lambda, g, perturbed_section(lambda, tau, z));
	CVec q2c(lambda.rank);
	for (int i = 0; i < lambda.rank; ++i) q2c(i) = (double)q2(i);
	cplx exp_lam = lambda_pairing(lambda, q2c, z) +
	               0.5 * tau * lambda_pairing(lambda, q2c, q2c);
	return make_report(lambda, lhs, rhs, exp_lam);
}

AutomorphyReport verify_lemma_modular(const Lattice& lambda, cplx tau, const CVec& z,
                                      const Mat22& m) {
	cplx a((double)m(0, 0), 0), b((double)m(0, 1), 0);
	cplx c((double)m(1, 0), 0), d((double)m(1, 1), 0);
	cplx den = c * tau + d;
	ComplexTriplet lhs = perturbed_section(lambda, (a * tau + b) / den, z / den);
	Mat22 mt;
	mt << m(0, 0), -m(0, 1), -m(1, 0), m(1, 1);
	ParabolicElement g = make_modular(lambda, mt);
	ComplexTriplet rhs = act_on_period(lambda, g, perturbed_section(lambda, tau, z));
	cplx exp_lam = -0.5 * c * lambda_pairing(lambda, z, z) / den;
	return make_report(lambda, lhs, rhs, exp_lam);
}

AutomorphyReport verify_mm_isometry(const Lattice& lambda, cplx tau, const CVec& z,
                                    const IMat& f) {
	CVec fz = f.cast<double>().cast<cplx>() * z;
	ComplexTriplet lhs = perturbed_section(lambda, tau, fz);
	ParabolicElement g = make_isometry(lambda, f);
	ComplexTriplet rhs = act_on_period(lambda, g, perturbed_section(lambda, tau, z));
	return make_report(lambda, lhs, rhs, cplx(0, 0));
}

}  // namespace nlab

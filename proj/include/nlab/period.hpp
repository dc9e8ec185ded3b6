#pragma once

#include "nlab/parabolic.hpp"

namespace nlab {

enum class Convention { body, appendix };

// r(w) = -i (N w, conj w) = 2 Im(conj(a1) a2).  Both formulas are evaluated
// and must agree to 1e-12 (relative to the vector size).
double r_value(const Lattice& lambda, const ComplexTriplet& w);

// Theta-tilde projection [a,b,c] -> (-a1/a2, c/a2); requires r(w) > 0.
std::pair<cplx, CVec> theta_tilde(const Lattice& lambda, const ComplexTriplet& w);

// The Narain section of Eq. (narain33) / Eq. (l100):
//   sigma_n = exp(eps u N) [ (-tau, 1), 1/2 (c1, c2), z ]
// with c1 = ((z,z)-(z,zbar))/(taubar-tau), c2 = (taubar (z,z) - tau (z,zbar))/(taubar-tau)
// and eps = +1 for the body convention, -2 for the appendix convention.
ComplexTriplet narain_section(const Lattice& lambda, cplx tau, const CVec& z, cplx u,
                              Convention conv = Convention::body);

// The perturbed Narain map sigma(tau, z) = [ (-tau, 1), 1/2 (0, (z,z)), z ].
ComplexTriplet perturbed_section(const Lattice& lambda, cplx tau, const CVec& z);

// Unique (lambda, mu) with w1 = mu exp(lambda N) w2; requires the theta_tilde
// projections of w1 and w2 to agree.
std::pair<cplx, cplx> fiber_coordinate(const Lattice& lambda, const ComplexTriplet& w1,
                                       const ComplexTriplet& w2);

// Points of Omega+(F) are lines, so the representative scalar mu in
// lhs = mu exp(lambda N) rhs is gauge; the invariant automorphy datum is
// lambda, and the U(N)_C / U(N)_Z fiber factor is e^{2 pi i lambda}
// (well-defined because U(N)_Z shifts lambda by integers).
struct AutomorphyReport {
	cplx lambda;           // N-coordinate with lhs = mu exp(lambda N) rhs
	cplx expected_lambda;  // analytic value from the lemma (mod Z)
	cplx mu;               // representative scalar (reported, not constrained)
	cplx factor;           // e^{2 pi i lambda}, the fibration factor
	cplx expected_factor;  // e^{2 pi i expected_lambda}, the stated factor
	double factor_rel_err = 0;   // |e^{2 pi i (lambda - expected)} - 1|
	double lambda_int_err = 0;   // distance of lambda - expected to Z
	bool pass = false;
};

// Lemma "ll1": sigma(tau, z + q1 + tau q2) = e^{pi i (2 (q2,z) + tau (q2,q2))}
// . g(I,Q,R,I) sigma(tau, z), i.e. expected lambda = (q2,z) + tau (q2,q2)/2.
AutomorphyReport verify_lemma_translation(const Lattice& lambda, cplx tau, const CVec& z,
                                          const IVec& q1, const IVec& q2);

// Lemma "ll2": sigma((a tau + b)/(c tau + d), z/(c tau + d)) =
// e^{-pi i c (z,z)/(c tau + d)} . g(m~,0,0,I) sigma(tau, z) with
// m~ = [[a,-b],[-c,d]]; expected lambda = -c (z,z) / (2 (c tau + d)).
AutomorphyReport verify_lemma_modular(const Lattice& lambda, cplx tau, const CVec& z,
                                      const Mat22& m);

// Theorem "mm", W case: sigma(tau, f z) = g(I,0,0,f) sigma(tau, z) exactly
// (expected lambda = 0, factor 1).
AutomorphyReport verify_mm_isometry(const Lattice& lambda, cplx tau, const CVec& z,
                                    const IMat& f);

// The Lambda-bilinear pairing (u, v) with the positive-definite Gram, for
// complex coordinate vectors.
cplx lambda_pairing(const Lattice& lambda, const CVec& u, const CVec& v);

}  // namespace nlab

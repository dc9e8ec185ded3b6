#pragma once

#include "nlab/parabolic.hpp"

#include <vector>

namespace nlab {

// Dedekind eta(tau) = e^{pi i tau/12} prod_{m>=1} (1 - e^{2 pi i m tau}).
cplx eta(cplx tau);

// Theta_Lambda(tau, z) = sum_{gamma in Lambda} e^{pi i (2 (z,gamma) + tau (gamma,gamma))}
// for Lambda in {e8, e8e8, gamma16}; z in internal coordinates.  Evaluated
// through the epsilon frame as a product of one-dimensional theta sums over
// the D8+/D16+ coset decomposition (exact tail control down to Im tau = 0.05).
cplx theta_lattice(const Lattice& lambda, cplx tau, const CVec& z);

// Reference evaluator: direct lattice sum over enumerate_by_norm vectors up
// to max_norm (test oracle; only sensible for large Im tau).
cplx theta_direct_sum(const Lattice& lambda, cplx tau, const CVec& z, long long max_norm);

// B_Lambda = Theta_Lambda / eta^16 (rank-16 lattices).
cplx character(const Lattice& lambda, cplx tau, const CVec& z);

// The exact value of eta(M tau)^16 / ((c tau + d)^8 eta(tau)^16) — a cube
// root of unity depending only on M (the eta multiplier to the 16th power).
// Obtained by evaluating at a reference point and snapping.
cplx eta16_multiplier(const Mat22& mod);

struct QExpansion {
	// strictly increasing exponents in the q = e^{2 pi i tau} grading
	std::vector<std::pair<Rat, Int>> coefficients;
	int truncation_order = 0;
};
struct ThetaQExpansions {
	QExpansion theta;      // integer exponents 0..max_order
	QExpansion character;  // exponents k - 2/3, exact integer coefficients
};
// Exact q-expansions of Theta_Lambda(tau, 0) and B_Lambda(tau, 0) from
// enumeration counts and formal division by the eta^16 series.
ThetaQExpansions q_expansion(const Lattice& lambda, int max_order);

struct CharacterTransformReport {
	cplx ratio;     // B(p.(tau,z)) / B(tau,z)
	cplx expected;  // composite phi^ch factor (with the eta16 multiplier)
	double rel_err = 0;
	bool pass = false;
};
// Prop. "kac": compare the character ratio against the stated factor for p
// decomposed into its S/W/T parts.
CharacterTransformReport verify_character_transform(const Lattice& lambda, cplx tau,
                                                    const CVec& z, const PiElement& p);

}  // namespace nlab

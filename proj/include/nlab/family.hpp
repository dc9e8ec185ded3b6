#pragma once

#include "nlab/lattice.hpp"

#include <string>
#include <vector>

namespace nlab {

// A point of E_tau = C / (Z + tau Z), stored by its lattice coordinates
// (s, t) in the fundamental parallelogram [0,1)^2; value = s + t*tau.
struct TorusPoint {
	cplx tau;
	double s = 0, t = 0;

	cplx value() const { return cplx(s, 0) + t * tau; }
};

TorusPoint torus_point(cplx tau, double s, double t);        // reduces mod 1
TorusPoint torus_from_value(cplx tau, cplx value);           // solves s + t tau
TorusPoint torus_add(const TorusPoint& p, const TorusPoint& q);
TorusPoint torus_neg(const TorusPoint& p);
TorusPoint torus_sub(const TorusPoint& p, const TorusPoint& q);
TorusPoint torus_scale(long long n, const TorusPoint& p);
// The canonical n-division: reduce, then divide both lattice coordinates by n
// (one of the n^2 preimages, chosen deterministically).
TorusPoint torus_divide(const TorusPoint& p, long long n);
// Distance to the nearest lattice translate of q - p (the comparison metric).
double torus_distance(const TorusPoint& p, const TorusPoint& q);
bool torus_equal(const TorusPoint& p, const TorusPoint& q, double tol = 1e-9);

// The extension homomorphism psi: gamma -> (gamma, z) mod (Z + tau Z), for z
// in Lambda_C (internal coordinates).
TorusPoint psi_of(const Lattice& lambda, cplx tau, const CVec& z, const IVec& gamma);

enum class FamilyCategory { a, b };

// A collection {3p0; p1..pt; 3q0; p(t+1)..p18} of Definition "defex".
struct SpecialFamily {
	cplx tau;
	TorusPoint p0, q0;
	std::vector<TorusPoint> points;  // p1..p18 in order
	int t = 9;
	FamilyCategory category = FamilyCategory::a;
};

struct FamilyReport {
	bool pass = false;
	std::vector<std::string> condition;  // human-readable labels
	std::vector<double> residual;        // torus distances, same order
};

// Definition "defex" conditions, each divisor-class identity reduced to a
// torus group-law identity (Abel's theorem, basepoint 0):
//  (a) t = 9, p9 = p18, p1+...+p9 = 9 p0, p10+...+p18 = 9 q0
//  (b) 2 <= t <= 17, p1 = p2, p1+...+p18 = 9 p0 + 9 q0, 3 p0 - p1 = 3 q0 - p(t+1)
FamilyReport verify_special_family(const SpecialFamily& fam, double tol = 1e-9);

// Theorem "p331" recipes.  psi values are given on the ordered simple roots
// of section 3.2 (a1..a8, b1..b8 for e8e8; c1..c16 for gamma16); cube_root in
// {0..8} selects among the 3^2 division-by-3 preimages (row-major in the two
// lattice directions), 0 being the canonical torus_divide pick.
SpecialFamily construct_family_a(cplx tau, const std::vector<TorusPoint>& psi,
                                 int cube_root = 0);
SpecialFamily construct_family_b(cplx tau, const std::vector<TorusPoint>& psi,
                                 int cube_root = 0);

}  // namespace nlab

#pragma once

#include "nlab/ambient.hpp"

namespace nlab {

// g(m, Q, R, f) of Eq. (type).  Q: Lambda -> Z^2 is stored as a 2x16 integer
// matrix acting on internal coordinates.  In the canonical Lemma "ll1"
// orientation a translation by (q1, q2) has Q(gamma) = (-(gamma,q2), (gamma,q1)),
// i.e. Q = [ -q2^T G ; q1^T G ].
struct ParabolicElement {
	std::string lattice_name;
	Mat22 m;
	Eigen::Matrix<long long, 2, Eigen::Dynamic> Q;  // 2 x rank
	Mat22 R;
	IMat f;  // rank x rank isometry of Lambda
};

ParabolicElement parabolic_identity(const Lattice& lambda);

// Membership test: det m = 1, R^T m + m^T R = m^T Q Q^t m, f^T G f = G.
bool is_valid(const Lattice& lambda, const ParabolicElement& g, std::string* why = nullptr);

// Q Q^t as a 2x2 integer matrix, where Q^t = G^{-1} Q^T is the
// pairing-adjoint Lambda-valued map.
Mat22 qqt(const Lattice& lambda, const ParabolicElement& g);
Mat22 qqt_mixed(const Lattice& lambda, const ParabolicElement& g1, const ParabolicElement& g2);

// Group law g1 g2 = g(m1 m2, Q1 + m~1 Q2 f1^t, R1 m2 + m~1 R2 + Q1 f1 Q2^t m2, f1 f2).
ParabolicElement multiply(const Lattice& lambda, const ParabolicElement& g1,
                          const ParabolicElement& g2);

// g^{-1} = g(m^{-1}, -m^T Q f, R^T, f^{-1}).
ParabolicElement inverse(const Lattice& lambda, const ParabolicElement& g);

bool equal(const ParabolicElement& g1, const ParabolicElement& g2);

// Linear action on L_o (x) C:  g.[x,y,z] = [m x, R x + m~ y + Q f z, Q^t m x + f z].
ComplexTriplet act_on_period(const Lattice& lambda, const ParabolicElement& g,
                             const ComplexTriplet& w);

struct SubgroupFlags {
	bool in_unz, in_s, in_w, in_t;
};
SubgroupFlags subgroup_membership(const Lattice& lambda, const ParabolicElement& g);

// g = t * w * s with t in T, w in W, s in S (the pair (w,s) unique up to +-I).
struct Factorization {
	ParabolicElement t, w, s;
};
Factorization factorize(const Lattice& lambda, const ParabolicElement& g);

// Builders for the distinguished subgroups.
ParabolicElement make_modular(const Lattice& lambda, const Mat22& m);
ParabolicElement make_isometry(const Lattice& lambda, const IMat& f);
// Translation by (q1, q2) with the canonical integral R completion
// R = [[(q2,q2)/2, -(q1,q2)], [0, (q1,q1)/2]].
ParabolicElement make_translation(const Lattice& lambda, const IVec& q1, const IVec& q2);
ParabolicElement make_unz(const Lattice& lambda, long long k);  // exp(k N) as a group element

// The induced automorphism of H x Lambda_C.  Composition order: modular part
// first, then the isometry f, then the translation (matching g = t w s).
// mod is sign-normalized (first nonzero of the bottom row positive), with f
// flipped along, since -I in SL2 acts as z -> -z.
struct PiElement {
	std::string lattice_name;
	Mat22 mod;
	IVec q1, q2;
	IMat f;
};

PiElement pi_identity(const Lattice& lambda);
PiElement pi_normalize(PiElement p);
bool equal(const PiElement& p1, const PiElement& p2);

PiElement alpha(const Lattice& lambda, const ParabolicElement& g);
PiElement pi_multiply(const Lattice& lambda, const PiElement& p1, const PiElement& p2);

// The action on (tau, z); Im tau' > 0 is guaranteed.
std::pair<cplx, CVec> pi_act(const Lattice& lambda, const PiElement& p, cplx tau, const CVec& z);

}  // namespace nlab

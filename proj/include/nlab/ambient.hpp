#pragma once

#include "nlab/basics.hpp"
#include "nlab/lattice.hpp"

namespace nlab {

// An integer element x1 A' + x2 B' + y1 A + y2 B + z of L_o in the triplet
// coordinates of Eq. (lat).  z lives in the configured Lambda (e8e8 or
// gamma16) and is stored against its internal basis.
struct TripletVector {
	std::string lattice_name;
	Eigen::Matrix<long long, 2, 1> x, y;
	IVec z;
};

// A general element of L_o (x) C.
struct ComplexTriplet {
	std::string lattice_name;
	Eigen::Vector2cd a, b;
	CVec c;
};

ComplexTriplet make_triplet(const Lattice& lambda, const Eigen::Vector2cd& a,
                            const Eigen::Vector2cd& b, const CVec& c);
ComplexTriplet to_complex(const Lattice& lambda, const TripletVector& v);
ComplexTriplet triplet_zero(const Lattice& lambda);

ComplexTriplet operator+(const ComplexTriplet& u, const ComplexTriplet& v);
ComplexTriplet operator-(const ComplexTriplet& u, const ComplexTriplet& v);
ComplexTriplet operator*(cplx s, const ComplexTriplet& v);
ComplexTriplet conj(const ComplexTriplet& v);
double norm_inf(const ComplexTriplet& v);

// The ambient pairing x.y' + x'.y - (z,z') of Eq. (lat); bilinear (not
// sesquilinear), with Lambda's positive-definite Gram entering with a minus.
cplx pair_form(const Lattice& lambda, const ComplexTriplet& u, const ComplexTriplet& v);
long long pair_form(const Lattice& lambda, const TripletVector& u, const TripletVector& v);

// T(x1, x2) = (x2, -x1);  T^2 = -id.
Eigen::Vector2cd apply_T(const Eigen::Vector2cd& x);

// N(x, y, z) = (0, Tx, 0);  N^2 = 0.
ComplexTriplet apply_N(const ComplexTriplet& v);

// exp(lambda N) v = v + lambda N(v)  (exact, since N^2 = 0).
ComplexTriplet exp_N(cplx lambda, const ComplexTriplet& v);

}  // namespace nlab

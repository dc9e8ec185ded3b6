#pragma once

#include "nlab/period.hpp"

#include <vector>

namespace nlab {

// A heterotic triplet (A, g, B) on the two-torus R^2 / U: a flat metric
// g_ij = e_i . e_j, a B-field scalar b, and the Wilson-line images
// z_i = A(e_i) in Lambda_R (internal coordinates of the named lattice).
struct HeteroticTriplet {
	std::string lattice_name;
	Eigen::Matrix2d metric;
	double b = 0;
	RVec z1, z2;
};

HeteroticTriplet make_heterotic(const Lattice& lambda, const Eigen::Matrix2d& metric,
                                double b, const RVec& z1, const RVec& z2);

struct DerivedModuli {
	double v = 0;  // sqrt(det g)
	cplx tau;      // (g12 + v i)/g11
	CVec z;        // z2 - tau z1
	cplx u;        // bv + iv
};
DerivedModuli derived_moduli(const Lattice& lambda, const HeteroticTriplet& h);

// Ambient vectors live in R^2 (+) R^2 (+) Lambda_R, the two R^2 factors
// written in an orthonormal frame of the torus (Cholesky of g), so the
// inner product is x.x' - y.y' - (z,z')_Lambda with Euclidean dots.
using Ambient = Eigen::VectorXd;   // length 4 + rank
using CAmbient = Eigen::VectorXcd;

double momenta_dot(const Lattice& lambda, const Ambient& x, const Ambient& y);
cplx momenta_dot(const Lattice& lambda, const CAmbient& x, const CAmbient& y);

// phi_(A,g,B)(w, p, l) of Eq. (mapnn): w in U, p in U^*, l in Lambda.
Ambient momenta_map(const Lattice& lambda, const HeteroticTriplet& h,
                    const Eigen::Vector2d& w, const Eigen::Vector2d& p, const RVec& l);

// The distinguished basis of Eqs. (l4)-(l6), columns ordered
// F1, F2, F1*, F2*, L(basis of Lambda).
struct MomentaBasis {
	std::vector<Ambient> vectors;  // 4 + rank of them
};
MomentaBasis momenta_basis(const Lattice& lambda, const HeteroticTriplet& h);

// Gram of the basis under momenta_dot, and the exact target H (+) H (+) (-Lambda).
Eigen::MatrixXd momenta_gram(const Lattice& lambda, const MomentaBasis& basis);
Eigen::MatrixXd expected_gram(const Lattice& lambda);

struct PeriodLine {
	CAmbient omega;        // ambient coordinates of Eq. (l10)
	ComplexTriplet fcoords;  // the same vector in F-basis triplet coordinates
	double omega_omega_abs = 0;  // |omega . omega|, expected 0
	double omega_conj = 0;       // omega . conj(omega), expected > 0
};
PeriodLine period_line(const Lattice& lambda, const HeteroticTriplet& h);

// Coordinates of an ambient vector in the momenta basis (dense solve).
Eigen::VectorXd basis_coordinates(const Lattice& lambda, const MomentaBasis& basis,
                                  const Ambient& x);

}  // namespace nlab

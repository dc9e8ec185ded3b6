#pragma once

#include "nlab/basics.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nlab {

// An integral lattice given by a symmetric Gram matrix.  The two definite
// rank-16 lattices (e8e8, gamma16) and e8 also carry an exact embedding into
// an orthonormal "epsilon" frame: embed2.col(j) is TWICE the j-th basis
// vector in epsilon coordinates, so all entries are integers (the glue
// vectors have half-integer coordinates).
struct Lattice {
	std::string name;
	int rank = 0;
	IMat gram;
	bool has_embedding = false;
	IMat embed2;
	// Exact inverse Gram matrix; present when |det| = 1 (all built-in lattices).
	bool has_gram_inv = false;
	IMat gram_inv;

	Eigen::MatrixXd embedding() const;  // embed2 / 2, as doubles (exact)
};

// Labels: "e8", "e8e8", "gamma16", "hyperbolic", "lo_e8e8", "lo_gamma16".
Lattice build_lattice(const std::string& name);

struct Classification {
	int rank = 0;
	bool even = false;
	bool unimodular = false;
	int positive = 0;
	int negative = 0;
	std::string det;  // exact determinant, decimal string
};
Classification classify(const Lattice& l);

long long inner_product(const Lattice& l, const IVec& u, const IVec& v);

// Exact integer determinant (Bareiss elimination).
Int det_exact(const IMat& m);
// Exact signature (positive, negative inertia) via symmetric pivoting over
// rationals; zero eigenvalues are not expected for the built-in lattices but
// are simply not counted.
std::pair<int, int> signature_exact(const IMat& m);

struct NormTable {
	std::map<long long, long long> counts;               // norm -> number of vectors
	std::map<long long, std::vector<IVec>> vectors;      // only when requested
};

// Enumerate all v != 0 with 0 < (v,v) <= max_norm in a positive-definite
// lattice (Fincke-Pohst style with an exact integer check at the leaves).
// Vector lists are sorted lexicographically when kept; counting is always
// exact.  Throws if the lattice is not positive definite, or if keep_vectors
// is set and the number of vectors exceeds max_kept.
NormTable enumerate_by_norm(const Lattice& l, long long max_norm,
                            bool keep_vectors = false,
                            long long max_kept = 4000000);

struct RootSystemBasis {
	std::string lattice_name;
	std::vector<IVec> roots;  // internal-basis coordinates, (r,r) = 2
	IMat cartan;              // pairing matrix of the ordered roots
};
// The sixteen ordered simple roots of section 3.2, re-expressed in the
// internal basis of the named lattice ("e8e8" or "gamma16").
RootSystemBasis simple_roots(const std::string& name);

// v - 2 (v,root)/(root,root) root; requires (root,root) = +-2.
IVec weyl_reflect(const Lattice& l, const IVec& root, const IVec& v);

// Reflection as an integer matrix in the internal basis (acts on coordinate
// columns): v -> v - (v,root) * root for norm-2 roots.
IMat weyl_reflection_matrix(const Lattice& l, const IVec& root);

// An element of the D16 Weyl group in the epsilon frame: eps_i is sent to
// sign[i] * eps_perm[i].  The number of -1 signs must be even.
struct SignedPermutation {
	std::vector<int> perm;  // 0-based images
	std::vector<int> sign;  // +-1, evenly many -1

	SignedPermutation();  // identity on 16 letters
	SignedPermutation(std::vector<int> p, std::vector<int> s);

	static SignedPermutation transposition(int i, int j);
	static SignedPermutation sign_pair_flip(int i, int j);  // t_ij

	// (this o other): apply other first.
	SignedPermutation compose(const SignedPermutation& other) const;
	SignedPermutation inverse() const;

	std::vector<Rat> apply(const std::vector<Rat>& eps_coords) const;
	Eigen::VectorXd apply(const Eigen::VectorXd& eps_coords) const;

	bool operator==(const SignedPermutation& o) const;
};

// The signed permutation as an isometry matrix in the internal basis of l
// (columns act on coordinates).  Throws if the result is not integral, i.e.
// if w does not preserve the lattice.
IMat signed_permutation_matrix(const Lattice& l, const SignedPermutation& w);

// Small exact rational linear algebra helpers (dense, no pivot growth
// concerns at rank <= 20).
using RatMat = std::vector<std::vector<Rat>>;
RatMat rat_from_int(const IMat& m);
RatMat rat_inverse(const RatMat& m);
std::vector<Rat> rat_solve(const RatMat& a, const std::vector<Rat>& b);

}  // namespace nlab

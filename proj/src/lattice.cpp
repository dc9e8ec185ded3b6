#include "nlab/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace nlab {

// ---------------------------------------------------------------------------
// exact rational helpers
// ---------------------------------------------------------------------------

RatMat rat_from_int(const IMat& m) {
	RatMat r(m.rows(), std::vector<Rat>(m.cols()));
	for (int i = 0; i < m.rows(); ++i)
		for (int j = 0; j < m.cols(); ++j) r[i][j] = Rat(Int(m(i, j)));
	return r;
}

static int find_pivot(const RatMat& a, int col, int from) {
	for (int i = from; i < (int)a.size(); ++i)
		if (a[i][col] != Rat(0)) return i;
	return -1;
}

RatMat rat_inverse(const RatMat& m) {
	const int n = (int)m.size();
	RatMat a = m;
	RatMat inv(n, std::vector<Rat>(n, Rat(0)));
	for (int i = 0; i < n; ++i) inv[i][i] = Rat(1);
	for (int col = 0; col < n; ++col) {
		int p = find_pivot(a, col, col);
		if (p < 0) throw std::invalid_argument("rat_inverse: singular matrix");
		std::swap(a[col], a[p]);
		std::swap(inv[col], inv[p]);
		Rat d = a[col][col];
		for (int j = 0; j < n; ++j) {
			a[col][j] /= d;
			inv[col][j] /= d;
		}
		for (int i = 0; i < n; ++i) {
			if (i == col || a[i][col] == Rat(0)) continue;
			Rat f = a[i][col];
			for (int j = 0; j < n; ++j) {
				a[i][j] -= f * a[col][j];
				inv[i][j] -= f * inv[col][j];
			}
		}
	}
	return inv;
}

std::vector<Rat> rat_solve(const RatMat& a0, const std::vector<Rat>& b0) {
	const int n = (int)a0.size();
	RatMat a = a0;
	std::vector<Rat> b = b0;
	for (int col = 0; col < n; ++col) {
		int p = find_pivot(a, col, col);
		if (p < 0) throw std::invalid_argument("rat_solve: singular matrix");
		std::swap(a[col], a[p]);
		std::swap(b[col], b[p]);
		Rat d = a[col][col];
		for (int j = 0; j < n; ++j) a[col][j] /= d;
		b[col] /= d;
		for (int i = 0; i < n; ++i) {
			if (i == col || a[i][col] == Rat(0)) continue;
			Rat f = a[i][col];
			for (int j = 0; j < n; ++j) a[i][j] -= f * a[col][j];
			b[i] -= f * b[col];
		}
	}
	return b;
}

Int det_exact(const IMat& m) {
	// Bareiss fraction-free elimination.
	const int n = (int)m.rows();
	if (n == 0) return Int(1);
	std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) a[i][j] = Int(m(i, j));
	Int prev(1);
	int sign = 1;
	for (int k = 0; k < n - 1; ++k) {
		if (a[k][k] == 0) {
			int p = -1;
			for (int i = k + 1; i < n; ++i)
				if (a[i][k] != 0) { p = i; break; }
			if (p < 0) return Int(0);
			std::swap(a[k], a[p]);
			sign = -sign;
		}
		for (int i = k + 1; i < n; ++i)
			for (int j = k + 1; j < n; ++j)
				a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
		prev = a[k][k];
	}
	return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::pair<int, int> signature_exact(const IMat& m) {
	// Symmetric "split off a one-dimensional form" reduction over rationals.
	// If all diagonal entries vanish but the matrix does not, a basis change
	// e_i -> e_i + e_j produces a nonzero diagonal entry (2 m_ij).
	int n = (int)m.rows();
	RatMat a = rat_from_int(m);
	int pos = 0, neg = 0;
	std::vector<int> alive(n);
	for (int i = 0; i < n; ++i) alive[i] = i;
	while (!alive.empty()) {
		int k = (int)alive.size();
		int pivot = -1;
		for (int ii = 0; ii < k; ++ii)
			if (a[alive[ii]][alive[ii]] != Rat(0)) { pivot = ii; break; }
		if (pivot < 0) {
			// find a nonzero off-diagonal entry
			int pi = -1, pj = -1;
			for (int ii = 0; ii < k && pi < 0; ++ii)
				for (int jj = ii + 1; jj < k; ++jj)
					if (a[alive[ii]][alive[jj]] != Rat(0)) { pi = alive[ii]; pj = alive[jj]; break; }
			if (pi < 0) break;  // remaining block is zero (degenerate part)
			// e_pi -> e_pi + e_pj : updates row/col pi
			for (int t = 0; t < n; ++t) a[pi][t] += a[pj][t];
			for (int t = 0; t < n; ++t) a[t][pi] += a[t][pj];
			continue;
		}
		int p = alive[pivot];
		Rat d = a[p][p];
		if (d > Rat(0)) ++pos; else ++neg;
		alive.erase(alive.begin() + pivot);
		// Schur complement on the remaining indices
		for (int ii : alive)
			for (int jj : alive) a[ii][jj] -= a[ii][p] * a[p][jj] / d;
		for (int ii : alive) { a[ii][p] = Rat(0); a[p][ii] = Rat(0); }
	}
	return {pos, neg};
}

// ---------------------------------------------------------------------------
// lattice construction
// ---------------------------------------------------------------------------

Eigen::MatrixXd Lattice::embedding() const {
	if (!has_embedding) throw std::logic_error("lattice has no epsilon embedding");
	return embed2.cast<double>() / 2.0;
}

static IMat e8_embed2() {
	// Columns: the paper-ordered E8 simple roots (alpha_1..alpha_8 with the
	// Dynkin diagram of section 3.2: a chain alpha_1..alpha_7 and alpha_8
	// attached to alpha_3), written in the orthonormal frame where
	// E8 = D8+, times two.
	IMat b = IMat::Zero(8, 8);
	long long half[8] = {1, -1, -1, -1, -1, -1, -1, 1};
	for (int i = 0; i < 8; ++i) b(i, 0) = half[i];
	for (int j = 1; j <= 6; ++j) {  // columns 1..6: e_{j+1} - e_j
		b(j, j) = 2;
		b(j - 1, j) = -2;
	}
	b(0, 7) = 2;  // column 7: e_1 + e_2
	b(1, 7) = 2;
	return b;
}

static IMat gamma16_embed2() {
	// Columns: {e1+e2, e2-e1, e3-e2, ..., e15-e14, (1,...,1)/2} times two.
	// This is a unimodular basis of D16+ (checked by det_exact in tests).
	IMat b = IMat::Zero(16, 16);
	b(0, 0) = 2;
	b(1, 0) = 2;
	for (int j = 1; j <= 14; ++j) {
		b(j, j) = 2;
		b(j - 1, j) = -2;
	}
	for (int i = 0; i < 16; ++i) b(i, 15) = 1;
	return b;
}

static IMat gram_from_embed2(const IMat& e2) {
	IMat g4 = e2.transpose() * e2;
	IMat g(e2.cols(), e2.cols());
	for (int i = 0; i < g.rows(); ++i)
		for (int j = 0; j < g.cols(); ++j) {
			if (g4(i, j) % 4 != 0) throw std::logic_error("non-integral Gram from embedding");
			g(i, j) = g4(i, j) / 4;
		}
	return g;
}

static IMat compute_unimodular_inverse(const IMat& g) {
	RatMat inv = rat_inverse(rat_from_int(g));
	IMat r(g.rows(), g.cols());
	for (int i = 0; i < g.rows(); ++i)
		for (int j = 0; j < g.cols(); ++j) {
			const Rat& q = inv[i][j];
			if (q.denominator() != 1) throw std::logic_error("gram inverse not integral");
			r(i, j) = (long long)q.numerator();
		}
	return r;
}

Lattice build_lattice(const std::string& name) {
	Lattice l;
	l.name = name;
	if (name == "e8") {
		l.rank = 8;
		l.embed2 = e8_embed2();
		l.has_embedding = true;
		l.gram = gram_from_embed2(l.embed2);
	} else if (name == "e8e8") {
		l.rank = 16;
		IMat b8 = e8_embed2();
		l.embed2 = IMat::Zero(16, 16);
		l.embed2.block(0, 0, 8, 8) = b8;
		l.embed2.block(8, 8, 8, 8) = b8;
		l.has_embedding = true;
		l.gram = gram_from_embed2(l.embed2);
	} else if (name == "gamma16") {
		l.rank = 16;
		l.embed2 = gamma16_embed2();
		l.has_embedding = true;
		l.gram = gram_from_embed2(l.embed2);
	} else if (name == "hyperbolic") {
		l.rank = 2;
		l.gram = IMat(2, 2);
		l.gram << 0, 1, 1, -2;
	} else if (name == "lo_e8e8" || name == "lo_gamma16") {
		// Basis order (A', B', A, B, Lambda-basis) with the pairing of
		// Eq. (lat): x.y' + x'.y - (z,z').
		Lattice lam = build_lattice(name == "lo_e8e8" ? "e8e8" : "gamma16");
		l.rank = 4 + lam.rank;
		l.gram = IMat::Zero(l.rank, l.rank);
		l.gram(0, 2) = l.gram(2, 0) = 1;
		l.gram(1, 3) = l.gram(3, 1) = 1;
		l.gram.block(4, 4, lam.rank, lam.rank) = -lam.gram;
	} else {
		throw std::invalid_argument("build_lattice: unknown label '" + name + "'");
	}
	l.gram_inv = compute_unimodular_inverse(l.gram);
	l.has_gram_inv = true;
	return l;
}

Classification classify(const Lattice& l) {
	Classification c;
	c.rank = l.rank;
	c.even = true;
	for (int i = 0; i < l.rank; ++i)
		if (l.gram(i, i) % 2 != 0) c.even = false;
	Int d = det_exact(l.gram);
	c.det = d.str();
	c.unimodular = (d == 1 || d == -1);
	auto sig = signature_exact(l.gram);
	c.positive = sig.first;
	c.negative = sig.second;
	return c;
}

long long inner_product(const Lattice& l, const IVec& u, const IVec& v) {
	if (u.size() != l.rank || v.size() != l.rank)
		throw std::invalid_argument("inner_product: vector length does not match lattice rank");
	long long s = 0;
	for (int i = 0; i < l.rank; ++i)
		for (int j = 0; j < l.rank; ++j) s += u(i) * l.gram(i, j) * v(j);
	return s;
}

// ---------------------------------------------------------------------------
// short-vector enumeration
// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
	const Lattice& l;
	long long max_norm;
	bool keep;
	long long max_kept;
	long long kept = 0;
	// Cholesky of the Gram: gram = U^T D U with U unit upper triangular.
	Eigen::MatrixXd u;
	Eigen::VectorXd d;
	NormTable out;
	std::vector<long long> x;

	Enumerator(const Lattice& ll, long long mn, bool k, long long mk)
	    : l(ll), max_norm(mn), keep(k), max_kept(mk) {
		int n = l.rank;
		Eigen::MatrixXd g = l.gram.cast<double>();
		u = Eigen::MatrixXd::Identity(n, n);
		d = Eigen::VectorXd::Zero(n);
		// standard LDL^T (no pivoting; positive definite input)
		Eigen::MatrixXd a = g;
		for (int k2 = 0; k2 < n; ++k2) {
			d(k2) = a(k2, k2);
			if (d(k2) <= 0) throw std::invalid_argument("enumerate_by_norm: lattice not positive definite");
			for (int j = k2 + 1; j < n; ++j) u(k2, j) = a(k2, j) / d(k2);
			for (int i = k2 + 1; i < n; ++i)
				for (int j = k2 + 1; j < n; ++j) a(i, j) -= a(i, k2) * a(k2, j) / d(k2);
		}
		x.assign(n, 0);
	}

	void record(long long norm) {
		++out.counts[norm];
		if (keep) {
			if (++kept > max_kept)
				throw std::runtime_error("enumerate_by_norm: vector storage budget exceeded");
			IVec v(l.rank);
			for (int i = 0; i < l.rank; ++i) v(i) = x[i];
			out.vectors[norm].push_back(v);
		}
	}

	// Recurse over coordinates from the last one down; remaining is the
	// unspent quadratic budget, center_i = sum_{j>i} u(i,j) x_j.
	void recurse(int i, double remaining) {
		if (i < 0) {
			// exact integer check at the leaf
			long long norm = 0;
			for (int a2 = 0; a2 < l.rank; ++a2)
				for (int b2 = 0; b2 < l.rank; ++b2) norm += x[a2] * l.gram(a2, b2) * x[b2];
			if (norm > 0 && norm <= max_norm) record(norm);
			return;
		}
		double center = 0;
		for (int j = i + 1; j < l.rank; ++j) center += u(i, j) * x[j];
		double radius = std::sqrt(std::max(0.0, remaining / d(i))) + 1e-9;
		long long lo = (long long)std::ceil(-center - radius - 1e-9);
		long long hi = (long long)std::floor(-center + radius + 1e-9);
		for (long long xi = lo; xi <= hi; ++xi) {
			x[i] = xi;
			double t = xi + center;
			double spent = d(i) * t * t;
			recurse(i - 1, remaining - spent + 1e-9);
		}
		x[i] = 0;
	}
};

}  // namespace

NormTable enumerate_by_norm(const Lattice& l, long long max_norm, bool keep_vectors,
                            long long max_kept) {
	if (max_norm < 0) throw std::invalid_argument("enumerate_by_norm: negative norm bound");
	Enumerator e(l, max_norm, keep_vectors, max_kept);
	e.recurse(l.rank - 1, (double)max_norm);
	if (keep_vectors)
		for (auto& [norm, vecs] : e.out.vectors)
			std::sort(vecs.begin(), vecs.end(), [](const IVec& a, const IVec& b) {
				for (int i = 0; i < a.size(); ++i)
					if (a(i) != b(i)) return a(i) < b(i);
				return false;
			});
	return e.out;
}

// ---------------------------------------------------------------------------
// root systems and Weyl reflections
// ---------------------------------------------------------------------------

static IVec solve_in_basis(const Lattice& l, const std::vector<Rat>& eps) {
	// solve embedding * x = eps exactly
	RatMat b(l.rank, std::vector<Rat>(l.rank));
	for (int i = 0; i < l.rank; ++i)
		for (int j = 0; j < l.rank; ++j) b[i][j] = Rat(Int(l.embed2(i, j)), Int(2));
	std::vector<Rat> x = rat_solve(b, eps);
	IVec v(l.rank);
	for (int i = 0; i < l.rank; ++i) {
		if (x[i].denominator() != 1)
			throw std::invalid_argument("vector is not in the lattice");
		v(i) = (long long)x[i].numerator();
	}
	return v;
}

RootSystemBasis simple_roots(const std::string& name) {
	RootSystemBasis rsb;
	rsb.lattice_name = name;
	Lattice l = build_lattice(name);
	if (name == "e8e8") {
		// The internal basis of e8e8 is exactly the paper-ordered list
		// (alpha_1..alpha_8, beta_1..beta_8).
		for (int i = 0; i < 16; ++i) {
			IVec v = IVec::Zero(16);
			v(i) = 1;
			rsb.roots.push_back(v);
		}
	} else if (name == "gamma16") {
		// gamma_l = eps_l - eps_{l+1} (l = 1..15), gamma_16 = eps_15 + eps_16;
		// Dynkin diagram: chain gamma_1..gamma_14 forking into gamma_15, gamma_16.
		for (int ll = 0; ll < 15; ++ll) {
			std::vector<Rat> eps(16, Rat(0));
			eps[ll] = Rat(1);
			eps[ll + 1] = Rat(-1);
			rsb.roots.push_back(solve_in_basis(l, eps));
		}
		std::vector<Rat> eps(16, Rat(0));
		eps[14] = Rat(1);
		eps[15] = Rat(1);
		rsb.roots.push_back(solve_in_basis(l, eps));
	} else {
		throw std::invalid_argument("simple_roots: expected 'e8e8' or 'gamma16'");
	}
	rsb.cartan = IMat(16, 16);
	for (int i = 0; i < 16; ++i)
		for (int j = 0; j < 16; ++j)
			rsb.cartan(i, j) = inner_product(l, rsb.roots[i], rsb.roots[j]);
	return rsb;
}

IVec weyl_reflect(const Lattice& l, const IVec& root, const IVec& v) {
	long long rr = inner_product(l, root, root);
	if (rr != 2 && rr != -2)
		throw std::invalid_argument("weyl_reflect: reflector is not a root ((r,r) != +-2)");
	long long vr = inner_product(l, v, root);
	// v - 2 (v,r)/(r,r) r
	return v - (2 * vr / rr) * root;
}

IMat weyl_reflection_matrix(const Lattice& l, const IVec& root) {
	long long rr = inner_product(l, root, root);
	if (rr != 2 && rr != -2)
		throw std::invalid_argument("weyl_reflection_matrix: reflector is not a root");
	IMat m = IMat::Identity(l.rank, l.rank);
	IVec gr = IVec::Zero(l.rank);
	for (int i = 0; i < l.rank; ++i)
		for (int j = 0; j < l.rank; ++j) gr(i) += l.gram(i, j) * root(j);
	for (int i = 0; i < l.rank; ++i)
		for (int j = 0; j < l.rank; ++j) m(i, j) -= (2 / rr) * root(i) * gr(j);
	return m;
}

// ---------------------------------------------------------------------------
// signed permutations (D16 Weyl group in the epsilon frame)
// ---------------------------------------------------------------------------

SignedPermutation::SignedPermutation() : perm(16), sign(16, 1) {
	for (int i = 0; i < 16; ++i) perm[i] = i;
}

SignedPermutation::SignedPermutation(std::vector<int> p, std::vector<int> s)
    : perm(std::move(p)), sign(std::move(s)) {
	if (perm.size() != 16 || sign.size() != 16)
		throw std::invalid_argument("SignedPermutation: need 16 letters");
	std::vector<bool> seen(16, false);
	int minus = 0;
	for (int i = 0; i < 16; ++i) {
		if (perm[i] < 0 || perm[i] >= 16 || seen[perm[i]])
			throw std::invalid_argument("SignedPermutation: not a permutation");
		seen[perm[i]] = true;
		if (sign[i] != 1 && sign[i] != -1)
			throw std::invalid_argument("SignedPermutation: signs must be +-1");
		if (sign[i] == -1) ++minus;
	}
	if (minus % 2 != 0)
		throw std::invalid_argument("SignedPermutation: odd number of sign flips is not in W(D16)");
}

SignedPermutation SignedPermutation::transposition(int i, int j) {
	SignedPermutation w;
	std::swap(w.perm[i], w.perm[j]);
	return w;
}

SignedPermutation SignedPermutation::sign_pair_flip(int i, int j) {
	if (i == j) throw std::invalid_argument("sign_pair_flip: indices must differ");
	SignedPermutation w;
	w.sign[i] = -1;
	w.sign[j] = -1;
	return w;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
	// (this o other): eps_i -> other -> sign_o[i] eps_{p_o[i]} -> this ->
	// sign_o[i] sign_t[p_o[i]] eps_{p_t[p_o[i]]}
	SignedPermutation w;
	for (int i = 0; i < 16; ++i) {
		w.perm[i] = perm[other.perm[i]];
		w.sign[i] = other.sign[i] * sign[other.perm[i]];
	}
	return w;
}

SignedPermutation SignedPermutation::inverse() const {
	SignedPermutation w;
	for (int i = 0; i < 16; ++i) {
		w.perm[perm[i]] = i;
		w.sign[perm[i]] = sign[i];
	}
	return w;
}

std::vector<Rat> SignedPermutation::apply(const std::vector<Rat>& c) const {
	if (c.size() != 16) throw std::invalid_argument("apply: need a 16-vector");
	std::vector<Rat> r(16, Rat(0));
	for (int i = 0; i < 16; ++i) r[perm[i]] = Rat(Int(sign[i])) * c[i];
	return r;
}

Eigen::VectorXd SignedPermutation::apply(const Eigen::VectorXd& c) const {
	if (c.size() != 16) throw std::invalid_argument("apply: need a 16-vector");
	Eigen::VectorXd r = Eigen::VectorXd::Zero(16);
	for (int i = 0; i < 16; ++i) r(perm[i]) = sign[i] * c(i);
	return r;
}

bool SignedPermutation::operator==(const SignedPermutation& o) const {
	return perm == o.perm && sign == o.sign;
}

IMat signed_permutation_matrix(const Lattice& l, const SignedPermutation& w) {
	if (!l.has_embedding || l.rank != 16)
		throw std::invalid_argument("signed_permutation_matrix: lattice has no rank-16 epsilon frame");
	// matrix = B^{-1} P B with B the embedding, P the signed permutation.
	RatMat b(16, std::vector<Rat>(16));
	for (int i = 0; i < 16; ++i)
		for (int j = 0; j < 16; ++j) b[i][j] = Rat(Int(l.embed2(i, j)), Int(2));
	IMat m(16, 16);
	for (int col = 0; col < 16; ++col) {
		std::vector<Rat> pb(16, Rat(0));
		for (int i = 0; i < 16; ++i) pb[w.perm[i]] = Rat(Int(w.sign[i])) * b[i][col];
		std::vector<Rat> x = rat_solve(b, pb);
		for (int i = 0; i < 16; ++i) {
			if (x[i].denominator() != 1)
				throw std::invalid_argument("signed_permutation_matrix: element does not preserve the lattice");
			m(i, col) = (long long)x[i].numerator();
		}
	}
	return m;
}

}  // namespace nlab

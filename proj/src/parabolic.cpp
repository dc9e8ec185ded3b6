#include "nlab/parabolic.hpp"

namespace nlab {

static Mat22 m_tilde(const Mat22& m) {
	// (m^T)^{-1} for det m = 1
	Mat22 t;
	t << m(1, 1), -m(1, 0), -m(0, 1), m(0, 0);
	return t;
}

static Mat22 m_inv(const Mat22& m) {
	Mat22 t;
	t << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
	return t;
}

static IMat f_adjoint(const Lattice& lambda, const IMat& f) {
	// pairing-adjoint f^t = G^{-1} f^T G; equals f^{-1} for isometries
	return lambda.gram_inv * f.transpose() * lambda.gram;
}

static Eigen::Matrix<long long, Eigen::Dynamic, 2> q_adjoint(
    const Lattice& lambda, const Eigen::Matrix<long long, 2, Eigen::Dynamic>& q) {
	// Q^t = G^{-1} Q^T : Z^2 -> Lambda
	return lambda.gram_inv * q.transpose();
}

ParabolicElement parabolic_identity(const Lattice& lambda) {
	ParabolicElement g;
	g.lattice_name = lambda.name;
	g.m = Mat22::Identity();
	g.Q = Eigen::Matrix<long long, 2, Eigen::Dynamic>::Zero(2, lambda.rank);
	g.R = Mat22::Zero();
	g.f = IMat::Identity(lambda.rank, lambda.rank);
	return g;
}

Mat22 qqt(const Lattice& lambda, const ParabolicElement& g) {
	return g.Q * q_adjoint(lambda, g.Q);
}

Mat22 qqt_mixed(const Lattice& lambda, const ParabolicElement& g1, const ParabolicElement& g2) {
	return g1.Q * q_adjoint(lambda, g2.Q);
}

bool is_valid(const Lattice& lambda, const ParabolicElement& g, std::string* why) {
	if (g.lattice_name != lambda.name || g.Q.cols() != lambda.rank || g.f.rows() != lambda.rank) {
		if (why) *why = "shape/lattice mismatch";
		return false;
	}
	if (g.m(0, 0) * g.m(1, 1) - g.m(0, 1) * g.m(1, 0) != 1) {
		if (why) *why = "det(m) != 1";
		return false;
	}
	Mat22 lhs = g.R.transpose() * g.m + g.m.transpose() * g.R;
	Mat22 rhs = g.m.transpose() * qqt(lambda, g) * g.m;
	if (lhs != rhs) {
		if (why) *why = "R-constraint violated";
		return false;
	}
	if (g.f.transpose() * lambda.gram * g.f != lambda.gram) {
		if (why) *why = "f is not an isometry of Lambda";
		return false;
	}
	return true;
}

ParabolicElement multiply(const Lattice& lambda, const ParabolicElement& g1,
                          const ParabolicElement& g2) {
	if (g1.lattice_name != g2.lattice_name)
		throw std::invalid_argument("multiply: mismatched Lambda");
	ParabolicElement g;
	g.lattice_name = g1.lattice_name;
	Mat22 mt1 = m_tilde(g1.m);
	g.m = g1.m * g2.m;
	g.Q = g1.Q + mt1 * g2.Q * f_adjoint(lambda, g1.f);
	g.R = g1.R * g2.m + mt1 * g2.R + g1.Q * g1.f * q_adjoint(lambda, g2.Q) * g2.m;
	g.f = g1.f * g2.f;
	std::string why;
	if (!is_valid(lambda, g, &why))
		throw std::logic_error("multiply: composed element invalid (" + why + ")");
	return g;
}

ParabolicElement inverse(const Lattice& lambda, const ParabolicElement& g) {
	ParabolicElement h;
	h.lattice_name = g.lattice_name;
	h.m = m_inv(g.m);
	h.Q = -(g.m.transpose() * g.Q * g.f);
	h.R = g.R.transpose();
	h.f = f_adjoint(lambda, g.f);  // = f^{-1}
	return h;
}

bool equal(const ParabolicElement& g1, const ParabolicElement& g2) {
	return g1.lattice_name == g2.lattice_name && g1.m == g2.m && g1.Q == g2.Q &&
	       g1.R == g2.R && g1.f == g2.f;
}

ComplexTriplet act_on_period(const Lattice& lambda, const ParabolicElement& g,
                             const ComplexTriplet& w) {
	if (w.lattice_name != g.lattice_name)
		throw std::invalid_argument("act_on_period: mismatched Lambda");
	Eigen::Matrix2cd m = g.m.cast<double>().cast<cplx>();
	Eigen::Matrix2cd mt = m_tilde(g.m).cast<double>().cast<cplx>();
	Eigen::Matrix2cd R = g.R.cast<double>().cast<cplx>();
	Eigen::MatrixXcd Q = g.Q.cast<double>().cast<cplx>();
	Eigen::MatrixXcd Qt = q_adjoint(lambda, g.Q).cast<double>().cast<cplx>();
	Eigen::MatrixXcd f = g.f.cast<double>().cast<cplx>();
	ComplexTriplet r;
	r.lattice_name = w.lattice_name;
	r.a = m * w.a;
	r.b = R * w.a + mt * w.b + Q * (f * w.c);
	r.c = Qt * (m * w.a) + f * w.c;
	return r;
}

SubgroupFlags subgroup_membership(const Lattice& lambda, const ParabolicElement& g) {
	bool m_id = g.m == Mat22::Identity();
	bool q_zero = g.Q.isZero(0);
	bool r_zero = g.R == Mat22::Zero();
	bool f_id = g.f == IMat::Identity(lambda.rank, lambda.rank);
	SubgroupFlags fl;
	fl.in_unz = m_id && q_zero && f_id && (g.R + g.R.transpose() == Mat22::Zero());
	fl.in_s = q_zero && r_zero && f_id;
	fl.in_w = m_id && q_zero && r_zero;
	fl.in_t = m_id && f_id;  // R + R^T = Q Q^t follows from validity
	return fl;
}

Factorization factorize(const Lattice& lambda, const ParabolicElement& g) {
	Factorization fac;
	fac.s = make_modular(lambda, g.m);
	fac.w = make_isometry(lambda, g.f);
	fac.t = parabolic_identity(lambda);
	fac.t.Q = g.Q;
	fac.t.R = g.R * m_inv(g.m);
	std::string why;
	if (!is_valid(lambda, fac.t, &why))
		throw std::logic_error("factorize: translation part invalid (" + why + ")");
	return fac;
}

ParabolicElement make_modular(const Lattice& lambda, const Mat22& m) {
	ParabolicElement g = parabolic_identity(lambda);
	g.m = m;
	std::string why;
	if (!is_valid(lambda, g, &why)) throw std::invalid_argument("make_modular: " + why);
	return g;
}

ParabolicElement make_isometry(const Lattice& lambda, const IMat& f) {
	ParabolicElement g = parabolic_identity(lambda);
	g.f = f;
	std::string why;
	if (!is_valid(lambda, g, &why)) throw std::invalid_argument("make_isometry: " + why);
	return g;
}

ParabolicElement make_translation(const Lattice& lambda, const IVec& q1, const IVec& q2) {
	ParabolicElement g = parabolic_identity(lambda);
	IVec gq1 = IVec::Zero(lambda.rank), gq2 = IVec::Zero(lambda.rank);
	for (int i = 0; i < lambda.rank; ++i)
		for (int j = 0; j < lambda.rank; ++j) {
			gq1(i) += lambda.gram(i, j) * q1(j);
			gq2(i) += lambda.gram(i, j) * q2(j);
		}
	for (int j = 0; j < lambda.rank; ++j) {
		g.Q(0, j) = -gq2(j);
		g.Q(1, j) = gq1(j);
	}
	long long n11 = inner_product(lambda, q1, q1);
	long long n22 = inner_product(lambda, q2, q2);
	long long n12 = inner_product(lambda, q1, q2);
	// even lattice: n11, n22 are even, so this R is integral and
	// R + R^T = [[(q2,q2), -(q1,q2)], [-(q1,q2), (q1,q1)]] = Q Q^t
	g.R << n22 / 2, -n12, 0, n11 / 2;
	std::string why;
	if (!is_valid(lambda, g, &why)) throw std::logic_error("make_translation: " + why);
	return g;
}

ParabolicElement make_unz(const Lattice& lambda, long long k) {
	ParabolicElement g = parabolic_identity(lambda);
	g.R << 0, k, -k, 0;
	return g;
}

// ---------------------------------------------------------------------------
// Pi = alpha(Gamma_F^+)
// ---------------------------------------------------------------------------

PiElement pi_identity(const Lattice& lambda) {
	PiElement p;
	p.lattice_name = lambda.name;
	p.mod = Mat22::Identity();
	p.q1 = IVec::Zero(lambda.rank);
	p.q2 = IVec::Zero(lambda.rank);
	p.f = IMat::Identity(lambda.rank, lambda.rank);
	return p;
}

PiElement pi_normalize(PiElement p) {
	long long c = p.mod(1, 0), d = p.mod(1, 1);
	bool flip = (c < 0) || (c == 0 && d < 0);
	if (flip) {
		p.mod = -p.mod;
		p.f = -p.f;
	}
	return p;
}

bool equal(const PiElement& p1, const PiElement& p2) {
	return p1.lattice_name == p2.lattice_name && p1.mod == p2.mod && p1.q1 == p2.q1 &&
	       p1.q2 == p2.q2 && p1.f == p2.f;
}

PiElement alpha(const Lattice& lambda, const ParabolicElement& g) {
	Factorization fac = factorize(lambda, g);
	PiElement p;
	p.lattice_name = g.lattice_name;
	// mod part: m = [[a,b],[c,d]] acts through m~ as [[a,-b],[-c,d]]
	p.mod << g.m(0, 0), -g.m(0, 1), -g.m(1, 0), g.m(1, 1);
	// translation part from the canonical orientation Q(gamma) = (-(gamma,q2),(gamma,q1))
	auto& Q = fac.t.Q;
	IVec row0(lambda.rank), row1(lambda.rank);
	for (int j = 0; j < lambda.rank; ++j) {
		row0(j) = Q(0, j);
		row1(j) = Q(1, j);
	}
	p.q1 = lambda.gram_inv * row1;
	p.q2 = -(lambda.gram_inv * row0);
	p.f = g.f;
	return pi_normalize(p);
}

PiElement pi_multiply(const Lattice& lambda, const PiElement& p1, const PiElement& p2) {
	if (p1.lattice_name != p2.lattice_name)
		throw std::invalid_argument("pi_multiply: mismatched Lambda");
	PiElement p;
	p.lattice_name = p1.lattice_name;
	p.mod = p1.mod * p2.mod;
	p.f = p1.f * p2.f;
	// push p2's translation through p1's modular part and isometry:
	// rho(M)(q1, q2) = (a q1 - b q2, d q2 - c q1)
	long long a = p1.mod(0, 0), b = p1.mod(0, 1), c = p1.mod(1, 0), d = p1.mod(1, 1);
	IVec r1 = a * p2.q1 - b * p2.q2;
	IVec r2 = d * p2.q2 - c * p2.q1;
	p.q1 = p1.q1 + p1.f * r1;
	p.q2 = p1.q2 + p1.f * r2;
	return pi_normalize(p);
}

std::pair<cplx, CVec> pi_act(const Lattice& lambda, const PiElement& p, cplx tau, const CVec& z) {
	if (tau.imag() <= 0) throw std::domain_error("pi_act: tau must be in the upper half plane");
	if (z.size() != lambda.rank) throw std::invalid_argument("pi_act: z length mismatch");
	cplx a((double)p.mod(0, 0), 0), b((double)p.mod(0, 1), 0);
	cplx c((double)p.mod(1, 0), 0), d((double)p.mod(1, 1), 0);
	cplx den = c * tau + d;
	cplx tau1 = (a * tau + b) / den;
	CVec z1 = z / den;
	CVec z2 = p.f.cast<double>().cast<cplx>() * z1;
	for (int i = 0; i < lambda.rank; ++i)
		z2(i) += (double)p.q1(i) + tau1 * (double)p.q2(i);
	return {tau1, z2};
}

}  // namespace nlab

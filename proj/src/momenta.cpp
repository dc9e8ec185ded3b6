#include "nlab/momenta.hpp"

#include <cmath>

namespace nlab {

namespace {

// Cholesky frame of the torus metric: g = L L^T with
// L = [[sqrt(g11), 0], [g12/sqrt(g11), v/sqrt(g11)]].  Vectors of U pass to
// orthonormal coordinates through L^T, covectors of U^* through L^{-1}.
Eigen::Matrix2d chol(const Eigen::Matrix2d& g) {
	double s = std::sqrt(g(0, 0));
	double v = std::sqrt(g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1));
	Eigen::Matrix2d l;
	l << s, 0, g(0, 1) / s, v / s;
	return l;
}

Eigen::Vector2d apply_T2(const Eigen::Vector2d& x) { return Eigen::Vector2d(x(1), -x(0)); }

// A^t A as the 2x2 matrix [(z_i, z_j)_Lambda] in U^* coordinates.
Eigen::Matrix2d wilson_sq(const Lattice& lambda, const HeteroticTriplet& h) {
	Eigen::MatrixXd g = lambda.gram.cast<double>();
	Eigen::Matrix2d m;
	m(0, 0) = h.z1.dot(g * h.z1);
	m(0, 1) = m(1, 0) = h.z1.dot(g * h.z2);
	m(1, 1) = h.z2.dot(g * h.z2);
	return m;
}

// A^t l = ((z1,l), (z2,l)) in U^* coordinates.
Eigen::Vector2d wilson_adj(const Lattice& lambda, const HeteroticTriplet& h, const RVec& l) {
	Eigen::MatrixXd g = lambda.gram.cast<double>();
	return Eigen::Vector2d(h.z1.dot(g * l), h.z2.dot(g * l));
}

}  // namespace

HeteroticTriplet make_heterotic(const Lattice& lambda, const Eigen::Matrix2d& metric,
                                double b, const RVec& z1, const RVec& z2) {
	if (metric(0, 1) != metric(1, 0)) throw std::invalid_argument("make_heterotic: g not symmetric");
	if (metric(0, 0) <= 0 || metric(0, 0) * metric(1, 1) - metric(0, 1) * metric(1, 0) <= 0)
		throw std::invalid_argument("make_heterotic: g not positive definite");
	if (z1.size() != lambda.rank || z2.size() != lambda.rank)
		throw std::invalid_argument("make_heterotic: Wilson line length mismatch");
	return HeteroticTriplet{lambda.name, metric, b, z1, z2};
}

DerivedModuli derived_moduli(const Lattice& lambda, const HeteroticTriplet& h) {
	if (h.lattice_name != lambda.name) throw std::invalid_argument("derived_moduli: lattice mismatch");
	DerivedModuli d;
	d.v = std::sqrt(h.metric(0, 0) * h.metric(1, 1) - h.metric(0, 1) * h.metric(0, 1));
	d.tau = cplx(h.metric(0, 1), d.v) / h.metric(0, 0);
	d.z = h.z2.cast<cplx>() - d.tau * h.z1.cast<cplx>();
	d.u = cplx(h.b * d.v, d.v);
	return d;
}

double momenta_dot(const Lattice& lambda, const Ambient& x, const Ambient& y) {
	if (x.size() != 4 + lambda.rank || y.size() != 4 + lambda.rank)
		throw std::invalid_argument("momenta_dot: length mismatch");
	Eigen::MatrixXd g = lambda.gram.cast<double>();
	return x.head(2).dot(y.head(2)) - x.segment(2, 2).dot(y.segment(2, 2)) -
	       x.tail(lambda.rank).dot(g * y.tail(lambda.rank));
}

cplx momenta_dot(const Lattice& lambda, const CAmbient& x, const CAmbient& y) {
	if (x.size() != 4 + lambda.rank || y.size() != 4 + lambda.rank)
		throw std::invalid_argument("momenta_dot: length mismatch");
	Eigen::MatrixXcd g = lambda.gram.cast<double>().cast<cplx>();
	cplx s = x(0) * y(0) + x(1) * y(1) - x(2) * y(2) - x(3) * y(3);
	CVec gz = g * CVec(y.tail(lambda.rank));
	for (int i = 0; i < lambda.rank; ++i) s -= x(4 + i) * gz(i);
	return s;
}

Ambient momenta_map(const Lattice& lambda, const HeteroticTriplet& h,
                    const Eigen::Vector2d& w, const Eigen::Vector2d& p, const RVec& l) {
	Eigen::Matrix2d L = chol(h.metric);
	Eigen::Matrix2d Linv = L.inverse();
	Eigen::Vector2d xw = L.transpose() * w;
	Eigen::Vector2d common = 0.5 * Linv * p - h.b * apply_T2(xw) -
	                         0.5 * Linv * wilson_adj(lambda, h, l) -
	                         0.25 * Linv * (wilson_sq(lambda, h) * w);
	Ambient out(4 + lambda.rank);
	out.head(2) = common - xw;
	out.segment(2, 2) = common + xw;
	out.tail(lambda.rank) = w(0) * h.z1 + w(1) * h.z2 + l;
	return out;
}

MomentaBasis momenta_basis(const Lattice& lambda, const HeteroticTriplet& h) {
	MomentaBasis basis;
	Eigen::Vector2d zero2 = Eigen::Vector2d::Zero();
	RVec zerol = RVec::Zero(lambda.rank);
	for (int i = 0; i < 2; ++i)
		basis.vectors.push_back(momenta_map(lambda, h, -Eigen::Vector2d::Unit(i), zero2, zerol));
	for (int i = 0; i < 2; ++i)
		basis.vectors.push_back(momenta_map(lambda, h, zero2, Eigen::Vector2d::Unit(i), zerol));
	for (int k = 0; k < lambda.rank; ++k)
		basis.vectors.push_back(momenta_map(lambda, h, zero2, zero2, RVec::Unit(lambda.rank, k)));
	return basis;
}

Eigen::MatrixXd momenta_gram(const Lattice& lambda, const MomentaBasis& basis) {
	int n = (int)basis.vectors.size();
	Eigen::MatrixXd g(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) g(i, j) = momenta_dot(lambda, basis.vectors[i], basis.vectors[j]);
	return g;
}

Eigen::MatrixXd expected_gram(const Lattice& lambda) {
	int n = 4 + lambda.rank;
	Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
	g(0, 2) = g(2, 0) = 1;
	g(1, 3) = g(3, 1) = 1;
	g.bottomRightCorner(lambda.rank, lambda.rank) = -lambda.gram.cast<double>();
	return g;
}

PeriodLine period_line(const Lattice& lambda, const HeteroticTriplet& h) {
	DerivedModuli d = derived_moduli(lambda, h);
	cplx tau = d.tau;
	cplx zz = lambda_pairing(lambda, d.z, d.z);
	cplx zzbar = lambda_pairing(lambda, d.z, d.z.conjugate());
	cplx den = 2.0 * (std::conj(tau) - tau);
	cplx beta1 = -2.0 * d.u + (zz - zzbar) / den;
	cplx beta2 = -2.0 * tau * d.u + (std::conj(tau) * zz - tau * zzbar) / den;

	PeriodLine pl;
	pl.fcoords = make_triplet(lambda, Eigen::Vector2cd(-tau, 1.0),
	                          Eigen::Vector2cd(beta1, beta2), d.z);
	MomentaBasis basis = momenta_basis(lambda, h);
	CAmbient omega = CAmbient::Zero(4 + lambda.rank);
	cplx coeff[4] = {-tau, 1.0, beta1, beta2};
	for (int i = 0; i < 4; ++i) omega += coeff[i] * basis.vectors[i].cast<cplx>();
	for (int k = 0; k < lambda.rank; ++k) omega += d.z(k) * basis.vectors[4 + k].cast<cplx>();
	pl.omega = omega;
	pl.omega_omega_abs = std::abs(momenta_dot(lambda, omega, omega));
	pl.omega_conj = momenta_dot(lambda, omega, CAmbient(omega.conjugate())).real();
	return pl;
}

Eigen::VectorXd basis_coordinates(const Lattice& lambda, const MomentaBasis& basis,
                                  const Ambient& x) {
	int n = 4 + lambda.rank;
	Eigen::MatrixXd m(n, n);
	for (int j = 0; j < n; ++j) m.col(j) = basis.vectors[j];
	return m.fullPivLu().solve(x);
}

}  // namespace nlab

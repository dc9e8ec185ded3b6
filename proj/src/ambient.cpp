#include "nlab/ambient.hpp"

namespace nlab {

static void check_lambda(const Lattice& lambda, const std::string& name) {
	if (lambda.name != name)
		throw std::invalid_argument("triplet belongs to Lambda '" + name +
		                            "' but operation was configured with '" + lambda.name + "'");
}

ComplexTriplet make_triplet(const Lattice& lambda, const Eigen::Vector2cd& a,
                            const Eigen::Vector2cd& b, const CVec& c) {
	if (c.size() != lambda.rank)
		throw std::invalid_argument("make_triplet: z-part length does not match Lambda rank");
	return ComplexTriplet{lambda.name, a, b, c};
}

ComplexTriplet to_complex(const Lattice& lambda, const TripletVector& v) {
	check_lambda(lambda, v.lattice_name);
	CVec c(lambda.rank);
	for (int i = 0; i < lambda.rank; ++i) c(i) = (double)v.z(i);
	Eigen::Vector2cd a((double)v.x(0), (double)v.x(1));
	Eigen::Vector2cd b((double)v.y(0), (double)v.y(1));
	return ComplexTriplet{lambda.name, a, b, c};
}

ComplexTriplet triplet_zero(const Lattice& lambda) {
	return ComplexTriplet{lambda.name, Eigen::Vector2cd::Zero(), Eigen::Vector2cd::Zero(),
	                      CVec::Zero(lambda.rank)};
}

ComplexTriplet operator+(const ComplexTriplet& u, const ComplexTriplet& v) {
	if (u.lattice_name != v.lattice_name)
		throw std::invalid_argument("triplet addition: mismatched Lambda");
	return ComplexTriplet{u.lattice_name, u.a + v.a, u.b + v.b, u.c + v.c};
}

ComplexTriplet operator-(const ComplexTriplet& u, const ComplexTriplet& v) {
	if (u.lattice_name != v.lattice_name)
		throw std::invalid_argument("triplet subtraction: mismatched Lambda");
	return ComplexTriplet{u.lattice_name, u.a - v.a, u.b - v.b, u.c - v.c};
}

ComplexTriplet operator*(cplx s, const ComplexTriplet& v) {
	return ComplexTriplet{v.lattice_name, s * v.a, s * v.b, s * v.c};
}

ComplexTriplet conj(const ComplexTriplet& v) {
	return ComplexTriplet{v.lattice_name, v.a.conjugate(), v.b.conjugate(), v.c.conjugate()};
}

double norm_inf(const ComplexTriplet& v) {
	double m = 0;
	for (int i = 0; i < 2; ++i) m = std::max({m, std::abs(v.a(i)), std::abs(v.b(i))});
	for (int i = 0; i < v.c.size(); ++i) m = std::max(m, std::abs(v.c(i)));
	return m;
}

cplx pair_form(const Lattice& lambda, const ComplexTriplet& u, const ComplexTriplet& v) {
	if (u.lattice_name != v.lattice_name)
		throw std::invalid_argument("pair_form: mismatched Lambda");
	check_lambda(lambda, u.lattice_name);
	cplx s = u.a(0) * v.b(0) + u.a(1) * v.b(1) + v.a(0) * u.b(0) + v.a(1) * u.b(1);
	for (int i = 0; i < lambda.rank; ++i)
		for (int j = 0; j < lambda.rank; ++j)
			s -= u.c(i) * (double)lambda.gram(i, j) * v.c(j);
	return s;
}

long long pair_form(const Lattice& lambda, const TripletVector& u, const TripletVector& v) {
	if (u.lattice_name != v.lattice_name)
		throw std::invalid_argument("pair_form: mismatched Lambda");
	check_lambda(lambda, u.lattice_name);
	long long s = u.x(0) * v.y(0) + u.x(1) * v.y(1) + v.x(0) * u.y(0) + v.x(1) * u.y(1);
	s -= inner_product(lambda, u.z, v.z);
	return s;
}

Eigen::Vector2cd apply_T(const Eigen::Vector2cd& x) {
	return Eigen::Vector2cd(x(1), -x(0));
}

ComplexTriplet apply_N(const ComplexTriplet& v) {
	ComplexTriplet r = v;
	r.b = apply_T(v.a);
	r.a.setZero();
	r.c.setZero();
	return r;
}

ComplexTriplet exp_N(cplx lambda, const ComplexTriplet& v) {
	ComplexTriplet r = v;
	r.b += lambda * apply_T(v.a);
	return r;
}

}  // namespace nlab

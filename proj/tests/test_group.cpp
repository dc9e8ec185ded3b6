#include "nlab/verify.hpp"

#include <doctest.h>

using namespace nlab;

namespace {

// The period action of a group element as an explicit 20x20 complex matrix,
// assembled column by column from unit triplets.  Used as an independent
// oracle: the group law must match matrix multiplication.
Eigen::MatrixXcd action_matrix(const Lattice& l, const ParabolicElement& g) {
	int n = 4 + l.rank;
	Eigen::MatrixXcd m(n, n);
	for (int j = 0; j < n; ++j) {
		ComplexTriplet e = triplet_zero(l);
		if (j < 2)
			e.a(j) = 1;
		else if (j < 4)
			e.b(j - 2) = 1;
		else
			e.c(j - 4) = 1;
		ComplexTriplet ge = act_on_period(l, g, e);
		m.col(j).segment(0, 2) = ge.a;
		m.col(j).segment(2, 2) = ge.b;
		m.col(j).tail(l.rank) = ge.c;
	}
	return m;
}

ParabolicElement sample(const Lattice& l, Rng& rng) { return random_parabolic(l, rng); }

}  // namespace

TEST_SUITE("group") {

TEST_CASE("group law matches the matrix representation") {
	Lattice l = build_lattice("e8e8");
	Rng rng(11);
	for (int k = 0; k < 20; ++k) {
		ParabolicElement g1 = sample(l, rng), g2 = sample(l, rng);
		Eigen::MatrixXcd lhs = action_matrix(l, multiply(l, g1, g2));
		Eigen::MatrixXcd rhs = action_matrix(l, g1) * action_matrix(l, g2);
		CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);  // integer entries, exact
	}
}

TEST_CASE("the action preserves the ambient pairing") {
	Lattice l = build_lattice("gamma16");
	Rng rng(12);
	for (int k = 0; k < 10; ++k) {
		ParabolicElement g = sample(l, rng);
		Eigen::MatrixXcd m = action_matrix(l, g);
		Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(20, 20);
		p(0, 2) = p(2, 0) = p(1, 3) = p(3, 1) = 1;
		p.bottomRightCorner(16, 16) = -l.gram.cast<double>().cast<cplx>();
		CHECK((m.transpose() * p * m - p).cwiseAbs().maxCoeff() == 0.0);
	}
}

TEST_CASE("inverse formula and two-sided inverse") {
	Lattice l = build_lattice("e8e8");
	Rng rng(13);
	ParabolicElement id = parabolic_identity(l);
	for (int k = 0; k < 50; ++k) {
		ParabolicElement g = sample(l, rng);
		ParabolicElement gi = inverse(l, g);
		// components per the printed formula
		CHECK(gi.R == Mat22(g.R.transpose()));
		CHECK(equal(multiply(l, g, gi), id));
		CHECK(equal(multiply(l, gi, g), id));
		CHECK(is_valid(l, gi));
	}
}

TEST_CASE("associativity on random triples") {
	Lattice l = build_lattice("gamma16");
	Rng rng(14);
	for (int k = 0; k < 30; ++k) {
		ParabolicElement a = sample(l, rng), b = sample(l, rng), c = sample(l, rng);
		CHECK(equal(multiply(l, multiply(l, a, b), c), multiply(l, a, multiply(l, b, c))));
	}
}

TEST_CASE("builders satisfy the membership constraint") {
	Lattice l = build_lattice("e8e8");
	Rng rng(15);
	std::string why;
	for (int k = 0; k < 20; ++k) {
		IVec q1 = random_small_vector(l, rng, 3, 2), q2 = random_small_vector(l, rng, 3, 2);
		CHECK(is_valid(l, make_translation(l, q1, q2), &why));
		CHECK(is_valid(l, make_modular(l, random_sl2(rng)), &why));
		CHECK(is_valid(l, make_isometry(l, random_isometry(l, rng)), &why));
	}
	CHECK(is_valid(l, make_unz(l, -3), &why));
	// breaking the R constraint is detected
	ParabolicElement bad = make_translation(l, random_small_vector(l, rng, 3, 2), IVec::Zero(16));
	bad.R(1, 0) += 1;
	CHECK_FALSE(is_valid(l, bad, &why));
	CHECK(!why.empty());
}

TEST_CASE("factorize recomposes as t * w * s") {
	Lattice l = build_lattice("e8e8");
	Rng rng(16);
	for (int k = 0; k < 30; ++k) {
		ParabolicElement g = sample(l, rng);
		Factorization f = factorize(l, g);
		SubgroupFlags tf = subgroup_membership(l, f.t);
		SubgroupFlags wf = subgroup_membership(l, f.w);
		SubgroupFlags sf = subgroup_membership(l, f.s);
		CHECK(tf.in_t);
		CHECK(wf.in_w);
		CHECK(sf.in_s);
		CHECK(equal(multiply(l, f.t, multiply(l, f.w, f.s)), g));
		// s and w commute, so t * s * w works as well
		CHECK(equal(multiply(l, f.t, multiply(l, f.s, f.w)), g));
	}
}

TEST_CASE("alpha recovers translation data and is a homomorphism") {
	Lattice l = build_lattice("gamma16");
	Rng rng(17);
	IVec q1 = random_small_vector(l, rng, 3, 2), q2 = random_small_vector(l, rng, 3, 2);
	PiElement p = alpha(l, make_translation(l, q1, q2));
	CHECK(p.q1 == q1);
	CHECK(p.q2 == q2);
	CHECK(p.mod == Mat22(Mat22::Identity()));

	for (int k = 0; k < 30; ++k) {
		ParabolicElement g1 = sample(l, rng), g2 = sample(l, rng);
		PiElement lhs = alpha(l, multiply(l, g1, g2));
		PiElement rhs = pi_multiply(l, alpha(l, g1), alpha(l, g2));
		CHECK(equal(lhs, rhs));
	}
}

TEST_CASE("kernel of alpha is exactly U(N)_Z") {
	Lattice l = build_lattice("e8e8");
	PiElement id = pi_identity(l);
	for (long long k : {-2LL, -1LL, 0LL, 1LL, 5LL}) {
		ParabolicElement u = make_unz(l, k);
		CHECK(subgroup_membership(l, u).in_unz);
		CHECK(equal(alpha(l, u), id));
	}
	Rng rng(18);
	ParabolicElement t =
	    make_translation(l, random_small_vector(l, rng, 2, 1), random_small_vector(l, rng, 2, 1));
	CHECK_FALSE(equal(alpha(l, t), id));
	CHECK_FALSE(subgroup_membership(l, t).in_unz);
}

TEST_CASE("pi_act implements the induced action on (tau, z)") {
	Lattice l = build_lattice("e8e8");
	cplx tau(0.2, 1.3);
	CVec z = CVec::Zero(16);
	z(0) = cplx(0.4, -0.1);
	z(9) = cplx(-0.3, 0.2);

	IVec q1 = IVec::Zero(16), q2 = IVec::Zero(16);
	q1(2) = 1;
	q2(5) = -2;
	auto [t1, z1] = pi_act(l, alpha(l, make_translation(l, q1, q2)), tau, z);
	CHECK(std::abs(t1 - tau) == 0.0);
	CVec expect = z + q1.cast<double>().cast<cplx>() + tau * q2.cast<double>().cast<cplx>();
	CHECK((z1 - expect).cwiseAbs().maxCoeff() < 1e-15);

	Mat22 m;
	m << 1, -1, 0, 1;  // stored in the tilde form [[a,-b],[-c,d]]: tau -> tau + 1
	auto [t2, z2] = pi_act(l, alpha(l, make_modular(l, m)), tau, z);
	CHECK(std::abs(t2 - (tau + 1.0)) < 1e-15);
	CHECK((z2 - z).cwiseAbs().maxCoeff() < 1e-15);

	Mat22 s;
	s << 0, -1, 1, 0;  // S: tau -> -1/tau, z -> z/tau (up to the sign convention)
	auto [t3, z3] = pi_act(l, alpha(l, make_modular(l, s)), tau, z);
	CHECK(std::abs(t3 + 1.0 / tau) < 1e-15);
	CHECK(t3.imag() > 0);
}

TEST_CASE("pi_normalize identifies +-I modular parts") {
	Lattice l = build_lattice("e8e8");
	Mat22 minus = -Mat22::Identity();
	PiElement p = alpha(l, make_modular(l, minus));
	// -I in SL2 acts trivially on tau and as -1 on z; the normalized form
	// carries that sign in the isometry slot.
	CHECK(p.mod == Mat22(Mat22::Identity()));
	CHECK(p.f == IMat(-IMat::Identity(16, 16)));
}

TEST_CASE("mismatched lattices are rejected") {
	Lattice l1 = build_lattice("e8e8");
	Lattice l2 = build_lattice("gamma16");
	CHECK_THROWS_AS(multiply(l1, parabolic_identity(l1), parabolic_identity(l2)),
	                std::exception);
}

}  // TEST_SUITE

#include "nlab/period.hpp"
#include "nlab/verify.hpp"

#include <doctest.h>

using namespace nlab;

namespace {

CVec sample_z(const Lattice& l, Rng& rng, double amp = 0.5) {
	CVec z(l.rank);
	for (int i = 0; i < l.rank; ++i) z(i) = cplx(rng.uniform(-amp, amp), rng.uniform(-amp, amp));
	return z;
}

}  // namespace

TEST_SUITE("period") {

TEST_CASE("r value of the standard leading slot") {
	Lattice l = build_lattice("e8e8");
	ComplexTriplet w = make_triplet(l, Eigen::Vector2cd(cplx(0, -1), 1.0),
	                                Eigen::Vector2cd(0.0, 0.0), CVec::Zero(16));
	CHECK(r_value(l, w) == doctest::Approx(2.0).epsilon(1e-14));
	// r(sigma(tau, z)) = 2 Im tau for any tau, z
	cplx tau(0.3, 1.7);
	Rng rng(31);
	CHECK(r_value(l, perturbed_section(l, tau, sample_z(l, rng))) ==
	      doctest::Approx(2 * tau.imag()).epsilon(1e-13));
}

TEST_CASE("N is square-zero and infinitesimally isometric") {
	Lattice l = build_lattice("gamma16");
	Rng rng(32);
	ComplexTriplet v = make_triplet(
	    l, Eigen::Vector2cd(cplx(0.4, 1.2), cplx(-0.3, 0.8)),
	    Eigen::Vector2cd(cplx(1.1, -0.2), cplx(0.6, 0.9)), sample_z(l, rng));
	ComplexTriplet w = make_triplet(
	    l, Eigen::Vector2cd(cplx(-0.7, 0.1), cplx(0.2, -1.4)),
	    Eigen::Vector2cd(cplx(0.3, 0.3), cplx(-0.9, 0.5)), sample_z(l, rng));
	CHECK(norm_inf(apply_N(apply_N(v))) == 0.0);
	// exp(s N) preserves the pairing
	cplx s(0.8, -0.35);
	cplx before = pair_form(l, v, w);
	cplx after = pair_form(l, exp_N(s, v), exp_N(s, w));
	CHECK(std::abs(after - before) < 1e-13);
	// hence the infinitesimal relation (N v, w) + (v, N w) = 0
	CHECK(std::abs(pair_form(l, apply_N(v), w) + pair_form(l, v, apply_N(w))) < 1e-13);
}

TEST_CASE("integer and complex pair_form agree") {
	Lattice l = build_lattice("e8e8");
	TripletVector u, v;
	u.lattice_name = v.lattice_name = "e8e8";
	u.x << 1, -2;
	u.y << 0, 3;
	u.z = IVec::Zero(16);
	u.z(4) = 2;
	v.x << 0, 1;
	v.y << -1, 1;
	v.z = IVec::Zero(16);
	v.z(4) = 1;
	v.z(9) = -1;
	long long exact = pair_form(l, u, v);
	cplx approx = pair_form(l, to_complex(l, u), to_complex(l, v));
	CHECK(cplx((double)exact, 0) == approx);
	// by hand: x.y' + x'.y - (z,z') with (z,z') = 2 * G(4,4) ... checked via symmetry instead
	CHECK(pair_form(l, v, u) == exact);
}

TEST_CASE("theta_tilde inverts the sections") {
	Rng rng(33);
	for (const char* name : {"e8e8", "gamma16"}) {
		CAPTURE(name);
		Lattice l = build_lattice(name);
		for (int k = 0; k < 10; ++k) {
			cplx tau(rng.uniform(-0.5, 0.5), rng.uniform(0.4, 2.5));
			CVec z = sample_z(l, rng);
			auto [t1, z1] = theta_tilde(l, perturbed_section(l, tau, z));
			CHECK(std::abs(t1 - tau) < 1e-13);
			CHECK((z1 - z).cwiseAbs().maxCoeff() < 1e-13);

			cplx u(rng.uniform(-1, 1), rng.uniform(0.2, 1.5));
			for (Convention conv : {Convention::body, Convention::appendix}) {
				auto [t2, z2] = theta_tilde(l, narain_section(l, tau, z, u, conv));
				CHECK(std::abs(t2 - tau) < 1e-13);
				CHECK((z2 - z).cwiseAbs().maxCoeff() < 1e-13);
			}
		}
	}
}

TEST_CASE("theta_tilde requires r > 0") {
	Lattice l = build_lattice("e8e8");
	ComplexTriplet w = make_triplet(l, Eigen::Vector2cd(cplx(0, 1), 1.0),
	                                Eigen::Vector2cd(0.0, 0.0), CVec::Zero(16));
	CHECK(r_value(l, w) < 0);
	CHECK_THROWS_AS(theta_tilde(l, w), std::exception);
}

TEST_CASE("narain section is isotropic") {
	Lattice l = build_lattice("gamma16");
	Rng rng(34);
	for (int k = 0; k < 10; ++k) {
		cplx tau(rng.uniform(-0.5, 0.5), rng.uniform(0.4, 2.0));
		cplx u(rng.uniform(-1, 1), rng.uniform(0.2, 1.5));
		CVec z = sample_z(l, rng);
		for (Convention conv : {Convention::body, Convention::appendix}) {
			ComplexTriplet s = narain_section(l, tau, z, u, conv);
			CHECK(std::abs(pair_form(l, s, s)) < 1e-12 * (1 + norm_inf(s) * norm_inf(s)));
		}
	}
}

TEST_CASE("derived section constants (documented deviation from the stated ones)") {
	// Measured: r(sigma_n) = 2 Im tau, and pair(sigma_n, conj sigma_n) =
	// -4 Im(u) Im(tau) in the body convention (+8 Im(u) Im(tau) in the
	// appendix one); the acceptance binary checks the stated constants and
	// reports the discrepancy.
	Lattice l = build_lattice("e8e8");
	Rng rng(35);
	for (int k = 0; k < 10; ++k) {
		cplx tau(rng.uniform(-0.5, 0.5), rng.uniform(0.4, 2.0));
		cplx u(rng.uniform(-1, 1), rng.uniform(0.2, 1.5));
		CVec z = sample_z(l, rng);
		ComplexTriplet sb = narain_section(l, tau, z, u, Convention::body);
		ComplexTriplet sa = narain_section(l, tau, z, u, Convention::appendix);
		CHECK(r_value(l, sb) == doctest::Approx(2 * tau.imag()).epsilon(1e-11));
		CHECK(r_value(l, sa) == doctest::Approx(2 * tau.imag()).epsilon(1e-11));
		cplx pb = pair_form(l, sb, conj(sb));
		cplx pa = pair_form(l, sa, conj(sa));
		CHECK(std::abs(pb - cplx(-4 * u.imag() * tau.imag(), 0)) < 1e-10);
		CHECK(std::abs(pa - cplx(8 * u.imag() * tau.imag(), 0)) < 1e-10);
	}
}

TEST_CASE("fiber_coordinate recovers the gauge pair") {
	Lattice l = build_lattice("e8e8");
	Rng rng(36);
	cplx tau(0.2, 1.3);
	ComplexTriplet base = perturbed_section(l, tau, sample_z(l, rng));
	cplx lam(0.6, -0.4), mu(1.7, 0.9);
	ComplexTriplet moved = mu * exp_N(lam, base);
	auto [lam2, mu2] = fiber_coordinate(l, moved, base);
	CHECK(std::abs(lam2 - lam) < 1e-12);
	CHECK(std::abs(mu2 - mu) < 1e-12);
}

TEST_CASE("lemma ll1 on a hand-picked translation") {
	Lattice l = build_lattice("e8e8");
	cplx tau(0.15, 1.2);
	Rng rng(37);
	CVec z = sample_z(l, rng);
	IVec q1 = IVec::Zero(16), q2 = IVec::Zero(16);
	q1(2) = 1;
	q2(6) = -1;
	q2(13) = 2;
	AutomorphyReport rep = verify_lemma_translation(l, tau, z, q1, q2);
	CHECK(rep.pass);
	CHECK(rep.factor_rel_err < tol_automorphy);
	CHECK(rep.lambda_int_err < tol_automorphy);
	// expected lambda = (q2, z) + tau (q2, q2)/2
	cplx expect = lambda_pairing(l, q2.cast<double>().cast<cplx>(), z) +
	              0.5 * tau * lambda_pairing(l, q2.cast<double>().cast<cplx>(),
	                                         q2.cast<double>().cast<cplx>());
	CHECK(std::abs(rep.expected_lambda - expect) < 1e-13);
}

TEST_CASE("lemma ll2 on the S generator") {
	Lattice l = build_lattice("gamma16");
	cplx tau(0.1, 0.9);
	Rng rng(38);
	CVec z = sample_z(l, rng);
	Mat22 s;
	s << 0, -1, 1, 0;
	AutomorphyReport rep = verify_lemma_modular(l, tau, z, s);
	CHECK(rep.pass);
	// expected lambda = -c (z,z) / (2 (c tau + d)) with c = 1, d = 0
	CHECK(std::abs(rep.expected_lambda + lambda_pairing(l, z, z) / (2.0 * tau)) < 1e-13);
}

TEST_CASE("theorem mm W case is exact") {
	Lattice l = build_lattice("e8e8");
	Rng rng(39);
	cplx tau(-0.3, 1.4);
	CVec z = sample_z(l, rng);
	IMat f = random_isometry(l, rng, 4);
	AutomorphyReport rep = verify_mm_isometry(l, tau, z, f);
	CHECK(rep.pass);
	CHECK(std::abs(rep.lambda) < 1e-12);
	CHECK(std::abs(rep.factor - 1.0) < 1e-12);
}

}  // TEST_SUITE

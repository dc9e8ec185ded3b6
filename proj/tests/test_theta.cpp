#include "nlab/theta.hpp"
#include "nlab/verify.hpp"

#include <doctest.h>

using namespace nlab;

namespace {

cplx qpow(cplx tau, int k) { return std::exp(cplx(0, 2 * pi * tau.real() * k) - cplx(2 * pi * tau.imag() * k, 0)); }

}  // namespace

TEST_SUITE("theta") {

TEST_CASE("eta anchors against 40-digit reference values") {
	// reference values computed with 40-digit arithmetic from the product
	// formula (the eta(i) closed form Gamma(1/4)/(2 pi^{3/4}) agrees)
	CHECK(std::abs(eta(cplx(0, 1)) - cplx(0.7682254223260566590, 0)) < 1e-13);
	CHECK(std::abs(eta(cplx(0, 2)) - cplx(0.5923827813324158853, 0)) < 1e-13);
	CHECK(std::abs(eta(cplx(0.3, 1.7)) -
	               cplx(0.6388167961072900259, 0.0502619319544848887)) < 1e-13);
}

TEST_CASE("eta satisfies the T and S transformations numerically") {
	cplx tau(0.37, 0.9);
	CHECK(std::abs(eta(tau + 1.0) - std::exp(cplx(0, pi / 12)) * eta(tau)) < 1e-13);
	// |eta(-1/tau)| = |tau|^{1/2} |eta(tau)|
	CHECK(std::abs(std::abs(eta(-1.0 / tau)) - std::sqrt(std::abs(tau)) * std::abs(eta(tau))) <
	      1e-13);
}

TEST_CASE("theta product evaluator matches the direct lattice sum") {
	Rng rng(21);
	for (const char* name : {"e8", "e8e8", "gamma16"}) {
		CAPTURE(name);
		Lattice l = build_lattice(name);
		// cutoffs keep the dropped tail below 1e-12 at these Im tau while
		// staying inside the enumeration storage budget
		long long max_norm = l.rank == 8 ? 12 : 6;
		for (int k = 0; k < 5; ++k) {
			cplx tau(rng.uniform(-0.4, 0.4), rng.uniform(2.0, 2.5));
			CVec z(l.rank);
			for (int i = 0; i < l.rank; ++i)
				z(i) = cplx(rng.uniform(-0.1, 0.1), rng.uniform(-0.05, 0.05));
			cplx a = theta_lattice(l, tau, z);
			cplx b = theta_direct_sum(l, tau, z, max_norm);
			CHECK(std::abs(a - b) / std::abs(b) < 1e-10);
		}
	}
}

TEST_CASE("theta at z = 0 matches the Eisenstein series value") {
	// E4(2i) = 1.00083698843473765919 (40-digit Lambert-series reference);
	// Theta_{E8}(tau, 0) with the e^{pi i tau (gamma,gamma)} grading is
	// E4(e^{2 pi i tau}) since the lattice is even.
	double e4 = 1.00083698843473765919;
	Lattice e8 = build_lattice("e8");
	Lattice both = build_lattice("e8e8");
	CHECK(std::abs(theta_lattice(e8, cplx(0, 2), CVec::Zero(8)) - e4) < 1e-13);
	CHECK(std::abs(theta_lattice(both, cplx(0, 2), CVec::Zero(16)) - e4 * e4) < 1e-13);
	// gamma16 shares the theta series
	Lattice g16 = build_lattice("gamma16");
	CHECK(std::abs(theta_lattice(g16, cplx(0, 2), CVec::Zero(16)) - e4 * e4) < 1e-12);
}

TEST_CASE("leading q-coefficients recovered by numerical fitting") {
	// peel c1 and c2 from analytic values at large Im tau (where higher
	// terms are provably below the rounding threshold) and compare with the
	// enumeration-based expansion
	Lattice l = build_lattice("e8e8");
	cplx t1(0, 2.5), t2(0, 2.4);
	double c1 = std::round(((theta_lattice(l, t1, CVec::Zero(16)) - 1.0) / qpow(t1, 1)).real());
	CHECK(c1 == 480.0);
	cplx v2 = theta_lattice(l, t2, CVec::Zero(16)) - 1.0 - 480.0 * qpow(t2, 1);
	double c2 = std::round((v2 / qpow(t2, 2)).real());
	CHECK(c2 == 61920.0);
}

TEST_CASE("exact q-expansions from enumeration counts") {
	for (const char* name : {"e8e8", "gamma16"}) {
		CAPTURE(name);
		ThetaQExpansions qe = q_expansion(build_lattice(name), 4);
		REQUIRE(qe.theta.coefficients.size() == 5);
		const Int expect_theta[5] = {1, 480, 61920, 1050240, 7926240};
		for (int k = 0; k <= 4; ++k) {
			CHECK(qe.theta.coefficients[k].first == Rat(k));
			CHECK(qe.theta.coefficients[k].second == expect_theta[k]);
		}
		// B = Theta/eta^16: exponents k - 2/3, leading coefficients include
		// the 496 of the rank-16 gauge group
		REQUIRE(qe.character.coefficients.size() == 5);
		const Int expect_char[5] = {1, 496, 69752, 2115008, 34670620};
		for (int k = 0; k <= 4; ++k) {
			CHECK(qe.character.coefficients[k].first == Rat(Int(3 * k - 2), Int(3)));
			CHECK(qe.character.coefficients[k].second == expect_char[k]);
		}
	}
}

TEST_CASE("theta coefficients are 240 sigma_3(n) for e8") {
	ThetaQExpansions qe = q_expansion(build_lattice("e8"), 5);
	const Int expect[6] = {1, 240, 2160, 6720, 17520, 30240};
	REQUIRE(qe.theta.coefficients.size() == 6);
	for (int k = 0; k <= 5; ++k) CHECK(qe.theta.coefficients[k].second == expect[k]);
}

TEST_CASE("q-expansion truncation budget is enforced") {
	CHECK_THROWS_AS(q_expansion(build_lattice("e8e8"), 5), std::exception);
	CHECK_THROWS_AS(q_expansion(build_lattice("e8"), 13), std::exception);
}

TEST_CASE("analytic theta agrees with its own q-expansion") {
	Lattice l = build_lattice("gamma16");
	ThetaQExpansions qe = q_expansion(l, 4);
	cplx tau(0.2, 2.0);
	cplx sum = 0;
	for (const auto& [e, c] : qe.theta.coefficients)
		sum += double((long long)c) * qpow(tau, (int)e.numerator());
	cplx val = theta_lattice(l, tau, CVec::Zero(16));
	CHECK(std::abs(val - sum) / std::abs(val) < 1e-12);
}

TEST_CASE("eta16 multiplier on the generators") {
	Mat22 t, s;
	t << 1, 1, 0, 1;
	s << 0, -1, 1, 0;
	// eta(tau+1)^16 = e^{4 pi i/3} eta(tau)^16
	CHECK(std::abs(eta16_multiplier(t) - std::exp(cplx(0, 4 * pi / 3))) < 1e-14);
	// eta(-1/tau)^16 = tau^8 eta(tau)^16: trivial multiplier
	CHECK(std::abs(eta16_multiplier(s) - 1.0) < 1e-14);
	// always an exact cube root of unity
	Rng rng(22);
	for (int k = 0; k < 20; ++k) {
		cplx m = eta16_multiplier(random_sl2(rng));
		CHECK(std::abs(m * m * m - 1.0) < 1e-14);
	}
}

TEST_CASE("character transform passes on translations and modular moves") {
	Lattice l = build_lattice("e8e8");
	cplx tau(0.1, 1.1);
	CVec z = CVec::Zero(16);
	z(3) = cplx(0.3, 0.1);
	z(12) = cplx(-0.2, 0.25);

	IVec q1 = IVec::Zero(16), q2 = IVec::Zero(16);
	q1(0) = 1;
	q2(7) = 1;
	CharacterTransformReport r1 =
	    verify_character_transform(l, tau, z, alpha(l, make_translation(l, q1, q2)));
	CHECK(r1.pass);
	CHECK(r1.rel_err < tol_character);

	Mat22 s;
	s << 0, -1, 1, 0;
	CharacterTransformReport r2 =
	    verify_character_transform(l, tau, z, alpha(l, make_modular(l, s)));
	CHECK(r2.pass);
}

TEST_CASE("theta rejects out-of-domain arguments") {
	Lattice l = build_lattice("e8e8");
	CHECK_THROWS_AS(theta_lattice(l, cplx(0, 0.01), CVec::Zero(16)), std::exception);
	CHECK_THROWS_AS(theta_lattice(l, cplx(0, 1), CVec::Zero(3)), std::exception);
}

}  // TEST_SUITE

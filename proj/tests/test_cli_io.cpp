#include "nlab/json_io.hpp"
#include "nlab/verify.hpp"

#include <doctest.h>

using namespace nlab;

TEST_SUITE("cli_io") {

TEST_CASE("complex and vector round trips") {
	cplx v(1.25, -3.5);
	CHECK(cplx_from_json(to_json(v)) == v);

	IVec iv(4);
	iv << 3, -1, 0, 7;
	CHECK(ivec_from_json(to_json(iv)) == iv);

	RVec rv(3);
	rv << 0.5, -1.75, 2.0;
	CHECK(rvec_from_json(to_json(rv)) == rv);

	CVec cv(2);
	cv << cplx(0.1, 0.2), cplx(-0.3, 0.4);
	CHECK(cvec_from_json(to_json(cv)) == cv);

	IMat m(2, 3);
	m << 1, 2, 3, 4, 5, 6;
	CHECK(imat_from_json(to_json(m)) == m);
}

TEST_CASE("parabolic elements survive serialization") {
	Lattice l = build_lattice("e8e8");
	Rng rng(61);
	for (int k = 0; k < 10; ++k) {
		ParabolicElement g = random_parabolic(l, rng);
		json j = to_json(g);
		CHECK(j.at("lattice") == "e8e8");
		ParabolicElement back = parabolic_from_json(j);
		CHECK(equal(back, g));
		// round trip through text as the CLI does
		ParabolicElement back2 = parabolic_from_json(json::parse(j.dump()));
		CHECK(equal(back2, g));
	}
}

TEST_CASE("families survive serialization") {
	Rng rng(62);
	cplx tau(0.11, 1.21);
	std::vector<TorusPoint> psi;
	for (int i = 0; i < 16; ++i) psi.push_back(torus_point(tau, rng.uniform(), rng.uniform()));
	SpecialFamily fam = construct_family_b(tau, psi);
	SpecialFamily back = family_from_json(json::parse(to_json(fam).dump()));
	CHECK(back.t == fam.t);
	CHECK(back.category == fam.category);
	CHECK(std::abs(back.tau - fam.tau) == 0.0);
	REQUIRE(back.points.size() == 18);
	for (int i = 0; i < 18; ++i)
		CHECK(torus_distance(back.points[i], fam.points[i]) < 1e-12);
	CHECK(verify_special_family(back).pass);
}

TEST_CASE("family report serialization carries labels and residuals") {
	cplx tau(0.0, 1.0);
	SpecialFamily fam;
	fam.tau = tau;
	fam.p0 = fam.q0 = torus_point(tau, 0, 0);
	fam.points.assign(18, torus_point(tau, 0, 0));
	fam.points[3] = torus_point(tau, 0.1, 0);  // break a sum condition
	FamilyReport rep = verify_special_family(fam);
	json j = to_json(rep);
	CHECK(j.at("pass") == rep.pass);
	REQUIRE(j.at("conditions").size() == rep.condition.size());
	for (size_t i = 0; i < rep.condition.size(); ++i) {
		CHECK(j.at("conditions")[i].at("condition") == rep.condition[i]);
		CHECK(j.at("conditions")[i].at("residual") == rep.residual[i]);
	}
}

TEST_CASE("sweep results aggregate with an overall pass flag") {
	std::vector<SweepResult> rs(2);
	rs[0] = {"alpha", 10, 1e-14, true, ""};
	rs[1] = {"beta", 5, 0.5, false, "synthetic"};
	json j = to_json(rs);
	CHECK(j.at("pass") == false);
	CHECK(j.at("checks").size() == 2);
	CHECK(j.at("checks")[0].at("name") == "alpha");
	rs[1].pass = true;
	CHECK(to_json(rs).at("pass") == true);
}

TEST_CASE("malformed parabolic JSON is rejected") {
	CHECK_THROWS(parabolic_from_json(json::parse(R"({"lattice":"e8e8"})")));
}

}  // TEST_SUITE

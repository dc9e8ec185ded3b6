#include "nlab/theta.hpp"
#include "nlab/period.hpp"

#include <cmath>

namespace nlab {

cplx eta(cplx tau) {
	if (tau.imag() <= 0) throw std::domain_error("eta: Im tau <= 0");
	cplx q = std::exp(cplx(0, 2 * pi) * tau);
	double absq = std::abs(q);
	cplx prod = 1.0;
	cplx qm = q;
	for (long long m = 1;; ++m) {
		prod *= (1.0 - qm);
		if (std::abs(qm) < 1e-19) break;
		if (m > 2000000) throw std::runtime_error("eta: Im tau too small for the product to converge");
		qm *= q;
	}
	return std::exp(cplx(0, pi / 12.0) * tau) * prod;
}

namespace {

// One-dimensional theta building blocks at a single epsilon coordinate w:
//   a_pm = sum_n (+-1)^n e^{pi i tau n^2 + 2 pi i n w}
//   b_pm = sum_n (+-1)^n e^{pi i tau (n+1/2)^2 + 2 pi i (n+1/2) w}
struct OneDim {
	cplx ap, am, bp, bm;
};

OneDim one_dim_sums(cplx tau, cplx w) {
	OneDim s{0, 0, 0, 0};
	double t = tau.imag();
	double center = -w.imag() / t;
	long long window = (long long)std::ceil(std::sqrt(46.0 / (pi * t))) + 3;
	long long n0 = (long long)std::llround(center);
	for (long long n = n0 - window; n <= n0 + window; ++n) {
		double sgn = (n % 2 == 0) ? 1.0 : -1.0;
		cplx ta = std::exp(cplx(0, pi) * (tau * (double)(n * n) + 2.0 * (double)n * w));
		s.ap += ta;
		s.am += sgn * ta;
		double h = n + 0.5;
		cplx tb = std::exp(cplx(0, pi) * (tau * h * h + 2.0 * h * w));
		s.bp += tb;
		s.bm += sgn * tb;
	}
	// the half-integer sums peak half a step away; widen by recomputing is
	// unnecessary since window already covers +-(window - 1/2)
	return s;
}

// Theta of D_n^+ (n = 8 or 16) in epsilon coordinates:
//   integer part with even coordinate sum      -> (prod a+ + prod a-)/2
//   half-integer part with even coordinate sum -> (prod b+ + prod b-)/2
cplx dn_plus_theta(cplx tau, const CVec& w) {
	cplx pap = 1, pam = 1, pbp = 1, pbm = 1;
	for (int i = 0; i < w.size(); ++i) {
		OneDim s = one_dim_sums(tau, w(i));
		pap *= s.ap;
		pam *= s.am;
		pbp *= s.bp;
		pbm *= s.bm;
	}
	return 0.5 * (pap + pam + pbp + pbm);
}

}  // namespace

cplx theta_lattice(const Lattice& lambda, cplx tau, const CVec& z) {
	if (tau.imag() <= 0) throw std::domain_error("theta_lattice: Im tau <= 0");
	if (tau.imag() < 0.05)
		throw std::domain_error(
		    "theta_lattice: Im tau below the 0.05 budget floor; apply a modular "
		    "transformation first");
	if (z.size() != lambda.rank) throw std::invalid_argument("theta_lattice: z length mismatch");
	if (!lambda.has_embedding)
		throw std::invalid_argument("theta_lattice: lattice has no epsilon frame");
	Eigen::MatrixXcd emb = lambda.embedding().cast<cplx>();
	CVec w = emb * z;
	if (lambda.name == "e8") return dn_plus_theta(tau, w);
	if (lambda.name == "e8e8") return dn_plus_theta(tau, w.head(8)) * dn_plus_theta(tau, w.tail(8));
	if (lambda.name == "gamma16") return dn_plus_theta(tau, w);
	throw std::invalid_argument("theta_lattice: unsupported lattice '" + lambda.name + "'");
}

cplx theta_direct_sum(const Lattice& lambda, cplx tau, const CVec& z, long long max_norm) {
	NormTable tab = enumerate_by_norm(lambda, max_norm, /*keep_vectors=*/true);
	cplx s = 1.0;  // gamma = 0 term
	for (const auto& [norm, vecs] : tab.vectors) {
		for (const IVec& g : vecs) {
			cplx zg = 0;
			for (int i = 0; i < lambda.rank; ++i) {
				cplx gi = 0;
				for (int j = 0; j < lambda.rank; ++j) gi += (double)lambda.gram(i, j) * (double)g(j);
				zg += z(i) * gi;
			}
			s += std::exp(cplx(0, pi) * (2.0 * zg + tau * (double)norm));
		}
	}
	return s;
}

cplx character(const Lattice& lambda, cplx tau, const CVec& z) {
	if (lambda.rank != 16)
		throw std::invalid_argument("character: B_Lambda is defined for the rank-16 lattices");
	cplx e = eta(tau);
	return theta_lattice(lambda, tau, z) / std::pow(e, 16);
}

cplx eta16_multiplier(const Mat22& mod) {
	if (mod(0, 0) * mod(1, 1) - mod(0, 1) * mod(1, 0) != 1)
		throw std::invalid_argument("eta16_multiplier: det != 1");
	const cplx tau0(0.1234, 0.8321);
	cplx a((double)mod(0, 0), 0), b((double)mod(0, 1), 0);
	cplx c((double)mod(1, 0), 0), d((double)mod(1, 1), 0);
	cplx den = c * tau0 + d;
	cplx v = std::pow(eta((a * tau0 + b) / den) / eta(tau0), 16) / std::pow(den, 8);
	for (int k = 0; k < 3; ++k) {
		cplx root = std::exp(cplx(0, 2 * pi * k / 3.0));
		if (std::abs(v - root) < 1e-6) return root;
	}
	throw std::logic_error("eta16_multiplier: value did not snap to a cube root of unity");
}

ThetaQExpansions q_expansion(const Lattice& lambda, int max_order) {
	if (max_order < 0) throw std::invalid_argument("q_expansion: negative order");
	int budget = (lambda.rank <= 8) ? 12 : 4;
	if (max_order > budget)
		throw std::invalid_argument(
		    "q_expansion: enumeration budget exceeded (max order " + std::to_string(budget) +
		    " for rank-" + std::to_string(lambda.rank) + " lattices)");
	NormTable tab = enumerate_by_norm(lambda, 2LL * max_order, /*keep_vectors=*/false);
	std::vector<Int> theta_c(max_order + 1, Int(0));
	theta_c[0] = 1;
	for (const auto& [norm, count] : tab.counts)
		if (norm % 2 == 0 && norm / 2 <= max_order) theta_c[norm / 2] = Int(count);

	ThetaQExpansions out;
	out.theta.truncation_order = max_order;
	for (int k = 0; k <= max_order; ++k)
		out.theta.coefficients.emplace_back(Rat(Int(k)), theta_c[k]);

	if (lambda.rank == 16) {
		// eta^16 = q^{2/3} prod (1-q^n)^16; divide formally.
		std::vector<Int> e(max_order + 1, Int(0));
		e[0] = 1;
		for (int n = 1; n <= max_order; ++n)
			for (int rep = 0; rep < 16; ++rep)
				for (int k = max_order; k >= n; --k) e[k] -= e[k - n];
		std::vector<Int> bc(max_order + 1, Int(0));
		for (int k = 0; k <= max_order; ++k) {
			Int s = theta_c[k];
			for (int j = 1; j <= k; ++j) s -= e[j] * bc[k - j];
			bc[k] = s;
		}
		out.character.truncation_order = max_order;
		for (int k = 0; k <= max_order; ++k)
			out.character.coefficients.emplace_back(Rat(Int(3 * k - 2), Int(3)), bc[k]);
	}
	return out;
}

CharacterTransformReport verify_character_transform(const Lattice& lambda, cplx tau,
                                                    const CVec& z, const PiElement& p) {
	// stepwise composite factor, in the pi_act order (modular, then f, then
	// translation)
	cplx a((double)p.mod(0, 0), 0), b((double)p.mod(0, 1), 0);
	cplx c((double)p.mod(1, 0), 0), d((double)p.mod(1, 1), 0);
	cplx den = c * tau + d;
	cplx tau1 = (a * tau + b) / den;
	CVec z1 = z / den;
	cplx factor_s = std::exp(cplx(0, pi) * c * lambda_pairing(lambda, z, z) / den) /
	                eta16_multiplier(p.mod);
	CVec z2 = p.f.cast<double>().cast<cplx>() * z1;  // factor 1 (Prop. "kac", W part)
	CVec q2c(lambda.rank);
	for (int i = 0; i < lambda.rank; ++i) q2c(i) = (double)p.q2(i);
	cplx factor_t = std::exp(cplx(0, -pi) * (2.0 * lambda_pairing(lambda, q2c, z2) +
	                                         tau1 * lambda_pairing(lambda, q2c, q2c)));
	CharacterTransformReport rep;
	rep.expected = factor_t * factor_s;
	auto [taup, zp] = pi_act(lambda, p, tau, z);
	rep.ratio = character(lambda, taup, zp) / character(lambda, tau, z);
	rep.rel_err = std::abs(rep.ratio - rep.expected) / std::abs(rep.expected);
	rep.pass = rep.rel_err <= tol_character;
	return rep;
}

}  // namespace nlab

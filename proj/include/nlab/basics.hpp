#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace nlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
using Mat22 = Eigen::Matrix<long long, 2, 2>;

// Tolerance policy (see README): structural identities are checked at 1e-12,
// automorphy PASS/FAIL at relative 1e-9, character ratios at 1e-8, and the
// full automorphy-equality sweep at 1e-7.
inline constexpr double tol_structural = 1e-12;
inline constexpr double tol_automorphy = 1e-9;
inline constexpr double tol_character = 1e-8;
inline constexpr double tol_mainth = 1e-7;

inline constexpr double pi = 3.14159265358979323846;

// Deterministic RNG (splitmix64 core) so that seeded sweeps are reproducible
// byte-for-byte, independent of the standard library's distributions.
struct Rng {
	unsigned long long state;
	explicit Rng(unsigned long long seed) : state(seed) {}
	unsigned long long next_u64() {
		unsigned long long z = (state += 0x9e3779b97f4a7c15ULL);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
		return z ^ (z >> 31);
	}
	// uniform in [0, 1)
	double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
	// uniform in [lo, hi)
	double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
	// uniform integer in [lo, hi] inclusive
	long long uniform_int(long long lo, long long hi) {
		return lo + static_cast<long long>(next_u64() % static_cast<unsigned long long>(hi - lo + 1));
	}
};

}  // namespace nlab

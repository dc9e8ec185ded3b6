#pragma once

#include "nlab/family.hpp"
#include "nlab/momenta.hpp"
#include "nlab/theta.hpp"

#include <string>
#include <vector>

namespace nlab {

struct RunConfig {
	std::string lattice = "e8e8";
	Convention convention = Convention::body;
	unsigned long long seed = 20260823ULL;
	int samples_automorphy = 500;
	int samples_lemma = 1000;
	int samples_group = 1000;
	int samples_gram = 100;
	int samples_section = 1000;
	int samples_family = 100;
	double tol_structural = nlab::tol_structural;
	double tol_automorphy = nlab::tol_automorphy;
	double tol_character = nlab::tol_character;
	double tol_mainth = nlab::tol_mainth;
	int threads = 0;  // 0: NARAIN_LAB_THREADS env var, else hardware
};

struct SweepResult {
	std::string name;
	long long samples = 0;
	double max_err = 0;
	bool pass = false;
	std::string note;
};

// Resolved worker count: requested if > 0, else NARAIN_LAB_THREADS, else
// hardware concurrency (always >= 1).
int thread_count(int requested);

// Deterministic random generators used by the sweeps (each draws only from
// the supplied Rng, so sweeps are reproducible independent of threading).
Mat22 random_sl2(Rng& rng, int word_len = 6, long long cap = 40);
IVec random_small_vector(const Lattice& l, Rng& rng, int nonzero, long long amplitude);
IMat random_isometry(const Lattice& l, Rng& rng, int reflections = 3);
ParabolicElement random_parabolic(const Lattice& l, Rng& rng);
cplx random_tau(Rng& rng, double im_lo = 0.3, double im_hi = 3.0);
CVec random_z(const Lattice& l, Rng& rng, double bound = 2.0);

// Individual sweeps (acceptance criteria 1-9 plus supporting invariants).
SweepResult sweep_classification(const RunConfig& cfg);
SweepResult sweep_theta_coincidence(const RunConfig& cfg);
SweepResult sweep_mainth(const RunConfig& cfg);
SweepResult sweep_lemma_translation(const RunConfig& cfg);
SweepResult sweep_lemma_modular(const RunConfig& cfg);
SweepResult sweep_mm_isometry(const RunConfig& cfg);
SweepResult sweep_group_algebra(const RunConfig& cfg);
SweepResult sweep_alpha_homomorphism(const RunConfig& cfg);
SweepResult sweep_narain_gram(const RunConfig& cfg);
SweepResult sweep_period_line(const RunConfig& cfg);
SweepResult sweep_theta_tilde_section(const RunConfig& cfg);
SweepResult sweep_section_constants(const RunConfig& cfg);  // derived r / pairing values
SweepResult sweep_families(const RunConfig& cfg);
SweepResult sweep_eta_anchor(const RunConfig& cfg);
SweepResult sweep_kac(const RunConfig& cfg);
SweepResult sweep_theta_isometry(const RunConfig& cfg);

// The full battery, in a fixed order.
std::vector<SweepResult> verify_all(const RunConfig& cfg);

}  // namespace nlab

#pragma once

#include <cstdint>
#include <string>

#include "wgd/gauss.hpp"

namespace wgd {

struct FuzzOptions {
    long long trials = 1000;
    std::uint64_t seed = 1;
    int max_strands = 4;
    int max_arrows = 8;
    int insert_samples_per_kind = 4;
    // Check Milnor invariants of length 2..mu_max_length alongside the
    // conjugating automorphism; 0 disables.
    int mu_max_length = 3;
    bool check_macros = true;
};

struct FuzzReport {
    long long trials = 0;
    long long instances = 0;
    bool ok = true;
    std::string counterexample;
};

// Move-invariance battery: every applicable rearrangement/deletion move
// plus sampled insertions, checking that the conjugating automorphism is
// unchanged and that Milnor invariants behave as required (all indices
// for welded moves, pairwise-distinct indices for self-arrow moves and
// C2). Stops at the first counterexample.
FuzzReport run_move_invariance_fuzz(const FuzzOptions& opts);

// Normalization battery: ascending_form and horizontal_form outputs
// satisfy their predicates and preserve the conjugating automorphism.
FuzzReport run_normalization_fuzz(const FuzzOptions& opts);

// Diagram corpus shared by the batteries: trial t draws strand and arrow
// counts and the layout from splitmix64(seed, t).
GaussDiagram fuzz_corpus_diagram(const FuzzOptions& opts, long long trial);

}  // namespace wgd

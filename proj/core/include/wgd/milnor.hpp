#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wgd/coloring.hpp"
#include "wgd/gauss.hpp"
#include "wgd/integer.hpp"
#include "wgd/word.hpp"

namespace wgd {

// j-th longitude: the word collected along strand j from the over-passing
// meridians, written in the bottom generators modulo Gamma_k, with the
// zero-framing power of x_j divided out.
struct Longitude {
    int strand = 0;
    int depth = 0;  // defined modulo Gamma_depth
    Word word;
    bool framing_corrected = false;
};

// Index sequence (i_1, ..., i_m, j): repetitions allowed, the last entry
// names the longitude strand.
using MilnorIndex = std::vector<int>;

std::vector<Longitude> longitudes(const GaussDiagram& g, int depth);

// Coefficient of X_{i_1}...X_{i_m} in the Magnus expansion of the
// longitude of strand j, computed at truncation depth m+1. Indices of
// length >= 2 only.
Int milnor_mu(const GaussDiagram& g, const MilnorIndex& index);
// Same coefficient read from a longitude at a deeper truncation; equal
// for every depth > m (depth stability).
Int milnor_mu_at_depth(const GaussDiagram& g, const MilnorIndex& index, int depth);

// All degree-k coefficients of every longitude at depth k+1, keyed by
// (longitude strand, index sequence); zero entries omitted.
using UniversalMilnor = std::map<std::pair<int, MilnorIndex>, Int>;
UniversalMilnor universal_milnor(const GaussDiagram& g, int k);
// Series-path variant with an explicit substitution sweep count, for
// convergence checks; universal_milnor uses sweeps = k + 1.
UniversalMilnor universal_milnor_sweeps(const GaussDiagram& g, int k, int sweeps);

// Smallest invariant length with a nonvanishing value, scanning lengths
// 2..k_max-1; nullopt means all vanish below k_max.
std::optional<int> milnor_filtration_order(const GaussDiagram& g, int k_max);

}  // namespace wgd

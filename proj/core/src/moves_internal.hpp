#pragma once

// Rewrite engine internals shared between apply_move and the
// normalization procedures.

#include <optional>

#include "diagram_buf.hpp"
#include "wgd/moves.hpp"

namespace wgd::detail {

// Validated R3 pattern: roles alpha/beta/gamma with tails of alpha and
// beta adjacent, head(alpha) adjacent to tail(gamma), head(beta) adjacent
// to head(gamma), all three order bits equal.
struct R3Match {
    int alpha, beta, gamma;
    bool sign_ok;  // welded condition sign(alpha) == sign(beta)
};

std::optional<R3Match> match_r3(const DiagramBuf& d, int a, int b, int c);
bool match_r2_del(const DiagramBuf& d, int a, int b);

void apply_move_buf(DiagramBuf& d, const MoveInstance& m);

// C3-1 / C3-3 rewrite sites, exposed for the normalization code.
bool c3_site_kind(const DiagramBuf& d, int strand, int idx, int* version);

}  // namespace wgd::detail

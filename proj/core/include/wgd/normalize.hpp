#pragma once

#include "wgd/gauss.hpp"

namespace wgd {

// Sorts every strand (tails below heads) by repeated C3-1 moves after
// discarding self-arrows. Output passes is_ascending and carries the same
// conjugating automorphism; the equality is re-verified and a mismatch
// raises internal_error.
GaussDiagram ascending_form(const GaussDiagram& g);

// Inductive horizontalization: recurse on the diagram with the last
// strand removed, replay the recorded move script around the removed
// strand's arrows, push the horizontal part on top, then ladder-sort the
// residual block with C2 moves. Output passes is_horizontal and preserves
// the conjugating automorphism (re-verified).
GaussDiagram horizontal_form(const GaussDiagram& g);

}  // namespace wgd

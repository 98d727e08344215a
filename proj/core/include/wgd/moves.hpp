#pragma once

#include <string>
#include <vector>

#include "wgd/gauss.hpp"

namespace wgd {

enum class MoveKind {
    R1Add,
    R1Del,
    R2Add,
    R2Del,
    R3,
    TC,
    SAAdd,
    SADel,
    C31,
    C32,
    C33,
    C2,
};

std::string move_kind_name(MoveKind k);

// Location parameters per kind; arrows are indices into
// GaussDiagram::arrows(), slots are 1-based ranks, insertion gaps are
// 0-based (gap g = below the end currently at rank g+1).
//
//   R1-add : strand, gap, sign, head_above
//   R1-del : arrow (self-arrow with adjacent ends)
//   R2-add : strand/gap (tails), strand2/gap2 (heads, after tail insert),
//            sign (arrow with the lower tail), crossed (lower tail pairs
//            with the upper head)
//   R2-del : arrow, arrow2
//   R3     : arrow, arrow2, arrow3 (roles inferred)
//   TC     : strand, rank (two tails at rank, rank+1)
//   SA-add : strand, gap (tail), gap2 (head, after tail insert), sign
//   SA-del : arrow (any self-arrow)
//   C3-1   : strand, rank (head+tail pair at rank, rank+1)
//   C3-2   : strand, rank (two tails; same rewrite as TC)
//   C3-3   : strand, rank (two heads)
//   C2     : strand, rank (pair whose other ends share a strand)
struct MoveInstance {
    MoveKind kind;
    int strand = 0;
    int rank = 0;  // doubles as the insertion gap for add kinds
    int strand2 = 0;
    int rank2 = 0;
    int arrow = -1;
    int arrow2 = -1;
    int arrow3 = -1;
    int sign = 1;
    bool head_above = true;
    bool crossed = false;
};

MoveInstance mv_r1_add(int strand, int gap, int sign, bool head_above);
MoveInstance mv_r1_del(int arrow);
MoveInstance mv_r2_add(int tail_strand, int tail_gap, int head_strand, int head_gap, int sign,
                       bool crossed);
MoveInstance mv_r2_del(int arrow_a, int arrow_b);
MoveInstance mv_r3(int arrow_a, int arrow_b, int arrow_c);
MoveInstance mv_tc(int strand, int rank);
MoveInstance mv_sa_add(int strand, int tail_gap, int head_gap, int sign);
MoveInstance mv_sa_del(int arrow);
MoveInstance mv_c3(int version, int strand, int rank);  // version 1, 2 or 3
MoveInstance mv_c2(int strand, int rank);

// Rewrites the diagram; throws std::invalid_argument when the local
// pattern is absent or a side condition fails (e.g. the R3 sign rule).
GaussDiagram apply_move(const GaussDiagram& g, const MoveInstance& m);

// Primitive-move script for the C3/C2 macros (R1/R2/R3/TC/SA only).
// Replaying it step by step on g yields exactly apply_move(g, m); each
// entry refers to the diagram produced by its predecessors.
std::vector<MoveInstance> expand_macro(const GaussDiagram& g, const MoveInstance& m);

// Every applicable instance of the rearrangement/deletion kinds.
std::vector<MoveInstance> enumerate_rewrite_moves(const GaussDiagram& g);
// Seeded sample of insertion moves (R1-add, R2-add, SA-add), up to
// per_kind instances of each.
std::vector<MoveInstance> sample_insert_moves(const GaussDiagram& g, std::uint64_t seed,
                                              int per_kind);

}  // namespace wgd

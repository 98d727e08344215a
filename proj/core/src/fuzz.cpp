#include "wgd/fuzz.hpp"

#include <sstream>

#include "wgd/coloring.hpp"
#include "wgd/milnor.hpp"
#include "wgd/moves.hpp"
#include "wgd/normalize.hpp"
#include "wgd/reduced.hpp"

namespace wgd {

namespace {

std::string move_str(const MoveInstance& m) {
    std::ostringstream out;
    out << move_kind_name(m.kind) << "{strand=" << m.strand << " rank=" << m.rank
        << " strand2=" << m.strand2 << " rank2=" << m.rank2 << " arrows=" << m.arrow << ","
        << m.arrow2 << "," << m.arrow3 << " sign=" << m.sign << " head_above=" << m.head_above
        << " crossed=" << m.crossed << "}";
    return out.str();
}

std::string describe(const GaussDiagram& g, const MoveInstance& m, const std::string& what) {
    std::ostringstream out;
    out << what << " under " << move_str(m) << " on diagram:\n" << emit_diagram(g);
    return out.str();
}

bool distinct_index(const std::pair<int, MilnorIndex>& key) {
    MilnorIndex full = key.second;
    full.push_back(key.first);
    for (size_t i = 0; i < full.size(); ++i)
        for (size_t j = i + 1; j < full.size(); ++j)
            if (full[i] == full[j]) return false;
    return true;
}

bool tables_match(const UniversalMilnor& a, const UniversalMilnor& b, bool distinct_only) {
    if (!distinct_only) return a == b;
    auto filtered = [](const UniversalMilnor& t) {
        UniversalMilnor f;
        for (const auto& [k, v] : t)
            if (distinct_index(k)) f.insert({k, v});
        return f;
    };
    return filtered(a) == filtered(b);
}

}  // namespace

GaussDiagram fuzz_corpus_diagram(const FuzzOptions& opts, long long trial) {
    Rng rng(opts.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(trial));
    int n = 1 + static_cast<int>(rng.below(opts.max_strands));
    int arrows = static_cast<int>(rng.below(opts.max_arrows + 1));
    return random_diagram(n, arrows, rng.next());
}

FuzzReport run_move_invariance_fuzz(const FuzzOptions& opts) {
    FuzzReport rep;
    for (long long t = 0; t < opts.trials && rep.ok; ++t) {
        ++rep.trials;
        GaussDiagram g = fuzz_corpus_diagram(opts, t);
        ConjAut phi0 = phi_g_to_a(g);
        std::vector<UniversalMilnor> mu0;
        for (int k = 1; k + 1 <= opts.mu_max_length; ++k) mu0.push_back(universal_milnor(g, k));

        std::vector<MoveInstance> moves = enumerate_rewrite_moves(g);
        std::vector<MoveInstance> inserts =
            sample_insert_moves(g, opts.seed ^ (0xabcdef12345ULL + t), opts.insert_samples_per_kind);
        moves.insert(moves.end(), inserts.begin(), inserts.end());

        for (const MoveInstance& m : moves) {
            ++rep.instances;
            GaussDiagram g2 = g;
            try {
                g2 = apply_move(g, m);
            } catch (const std::exception& e) {
                rep.ok = false;
                rep.counterexample = describe(g, m, std::string("move failed to apply: ") + e.what());
                break;
            }
            if (!validate(g2).empty()) {
                rep.ok = false;
                rep.counterexample = describe(g, m, "move produced an invalid diagram");
                break;
            }
            if (!aut_equal(phi_g_to_a(g2), phi0)) {
                rep.ok = false;
                rep.counterexample = describe(g, m, "conjugating automorphism changed");
                break;
            }
            bool self_arrow_move = m.kind == MoveKind::SAAdd || m.kind == MoveKind::SADel ||
                                   m.kind == MoveKind::C2;
            for (size_t k = 0; k < mu0.size(); ++k) {
                if (!tables_match(mu0[k], universal_milnor(g2, static_cast<int>(k) + 1),
                                  self_arrow_move)) {
                    rep.ok = false;
                    rep.counterexample =
                        describe(g, m, "Milnor invariant of length " + std::to_string(k + 2) +
                                           " changed");
                    break;
                }
            }
            if (!rep.ok) break;
            if (opts.check_macros &&
                (m.kind == MoveKind::C31 || m.kind == MoveKind::C32 || m.kind == MoveKind::C33 ||
                 m.kind == MoveKind::C2)) {
                GaussDiagram replayed = g;
                for (const MoveInstance& step : expand_macro(g, m))
                    replayed = apply_move(replayed, step);
                if (!(replayed == g2)) {
                    rep.ok = false;
                    rep.counterexample =
                        describe(g, m, "macro expansion differs from the direct rewrite");
                    break;
                }
            }
        }
    }
    return rep;
}

FuzzReport run_normalization_fuzz(const FuzzOptions& opts) {
    FuzzReport rep;
    for (long long t = 0; t < opts.trials && rep.ok; ++t) {
        ++rep.trials;
        GaussDiagram g = fuzz_corpus_diagram(opts, t);
        ConjAut phi0 = phi_g_to_a(g);
        try {
            ++rep.instances;
            GaussDiagram a = ascending_form(g);
            if (!is_ascending(a) || !aut_equal(phi_g_to_a(a), phi0)) {
                rep.ok = false;
                rep.counterexample = "ascending_form broke on:\n" + emit_diagram(g);
                break;
            }
            ++rep.instances;
            GaussDiagram h = horizontal_form(g);
            if (!is_horizontal(h) || !aut_equal(phi_g_to_a(h), phi0)) {
                rep.ok = false;
                rep.counterexample = "horizontal_form broke on:\n" + emit_diagram(g);
                break;
            }
        } catch (const std::exception& e) {
            rep.ok = false;
            rep.counterexample =
                std::string("normalization raised: ") + e.what() + "\non:\n" + emit_diagram(g);
        }
    }
    return rep;
}

}  // namespace wgd

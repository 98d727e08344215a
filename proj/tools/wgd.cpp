// wgd: welded Gauss diagram toolbox. Subcommands cover validation,
// normalization, the conjugating-automorphism invariant, link-homotopy
// equivalence, Milnor invariants, Wirtinger presentations, random
// generation and the move-invariance fuzzer.
//
// Exit codes: 0 success (or `equiv` equivalent), 1 `equiv` inequivalent,
// 2 malformed input, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "wgd/coloring.hpp"
#include "wgd/fuzz.hpp"
#include "wgd/milnor.hpp"
#include "wgd/normalize.hpp"
#include "wgd/reduced.hpp"

using json = nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

wgd::GaussDiagram load(const std::string& path) { return wgd::parse_diagram(slurp(path)); }

json int_to_json(const wgd::Int& v) {
    if (v.fits_int64()) return json(v.as_int64());
    return json(v.str());
}

std::vector<int> parse_index(const std::string& spec) {
    std::vector<int> idx;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("");
            idx.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad index list: " + spec);
        }
    }
    if (idx.empty()) throw std::invalid_argument("empty index list");
    return idx;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"welded Gauss diagram toolbox"};
    app.require_subcommand(1);

    std::string file, file2, mode = "ascending", index_spec;
    bool certify = false;
    int all_upto = 0, filtration_upto = 0;
    int rnd_n = 2, rnd_arrows = 4;
    std::uint64_t seed = 1;
    long long trials = 1000;
    int fuzz_strands = 4, fuzz_arrows = 8;

    CLI::App* validate = app.add_subcommand("validate", "check a diagram file");
    validate->add_option("file", file)->required();

    CLI::App* normalize = app.add_subcommand("normalize", "ascending/horizontal form");
    normalize->add_option("--mode", mode)->check(CLI::IsMember({"ascending", "horizontal"}));
    normalize->add_flag("--certify", certify, "re-verify the invariant equality");
    normalize->add_option("file", file)->required();

    CLI::App* invariant =
        app.add_subcommand("invariant", "conjugating-automorphism invariant as JSON");
    invariant->add_option("file", file)->required();

    CLI::App* equiv = app.add_subcommand("equiv", "decide link-homotopy equivalence");
    equiv->add_option("file1", file)->required();
    equiv->add_option("file2", file2)->required();

    CLI::App* milnor = app.add_subcommand("milnor", "Milnor invariants as JSON");
    milnor->add_option("--index", index_spec, "comma-separated index sequence, e.g. 1,2,3");
    milnor->add_option("--all-upto", all_upto, "all invariants of length 2..K");
    milnor->add_option("--filtration", filtration_upto, "filtration order scanned below K");
    milnor->add_option("file", file)->required();

    CLI::App* pi1 = app.add_subcommand("pi1", "Wirtinger presentation as JSON");
    pi1->add_option("file", file)->required();

    CLI::App* random_cmd = app.add_subcommand("random", "seeded random diagram");
    random_cmd->add_option("--n", rnd_n)->required();
    random_cmd->add_option("--arrows", rnd_arrows)->required();
    random_cmd->add_option("--seed", seed)->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "move-invariance battery");
    fuzz->add_option("--trials", trials);
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--max-strands", fuzz_strands);
    fuzz->add_option("--max-arrows", fuzz_arrows);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            wgd::GaussDiagram g(0);
            try {
                g = load(file);
            } catch (const std::invalid_argument& e) {
                std::cout << e.what() << "\n";
                return 2;
            }
            std::cout << "ok\n";
            return 0;
        }
        if (normalize->parsed()) {
            wgd::GaussDiagram g = load(file);
            wgd::GaussDiagram out =
                mode == "ascending" ? wgd::ascending_form(g) : wgd::horizontal_form(g);
            if (certify && !wgd::aut_equal(wgd::phi_g_to_a(out), wgd::phi_g_to_a(g)))
                throw wgd::internal_error("certification failed");
            std::cout << wgd::emit_diagram(out);
            return 0;
        }
        if (invariant->parsed()) {
            std::cout << wgd::conj_aut_json(wgd::phi_g_to_a(load(file))) << "\n";
            return 0;
        }
        if (equiv->parsed()) {
            wgd::GaussDiagram a = load(file), b = load(file2);
            if (a.strand_count() != b.strand_count())
                throw std::invalid_argument("diagrams have different strand counts");
            bool same = wgd::aut_equal(wgd::phi_g_to_a(a), wgd::phi_g_to_a(b));
            std::cout << (same ? "equivalent" : "inequivalent") << "\n";
            return same ? 0 : 1;
        }
        if (milnor->parsed()) {
            wgd::GaussDiagram g = load(file);
            json out;
            if (!index_spec.empty()) {
                std::vector<int> idx = parse_index(index_spec);
                out["I"] = idx;
                out["mu"] = int_to_json(wgd::milnor_mu(g, idx));
            } else if (all_upto > 0) {
                if (all_upto < 2) throw std::invalid_argument("--all-upto needs K >= 2");
                out["upto"] = all_upto;
                json table = json::array();
                for (int len = 2; len <= all_upto; ++len) {
                    for (const auto& [key, v] : wgd::universal_milnor(g, len - 1)) {
                        json entry;
                        std::vector<int> idx = key.second;
                        idx.push_back(key.first);
                        entry["I"] = idx;
                        entry["mu"] = int_to_json(v);
                        table.push_back(entry);
                    }
                }
                out["invariants"] = table;
            } else if (filtration_upto > 0) {
                out["k_max"] = filtration_upto;
                auto order = wgd::milnor_filtration_order(g, filtration_upto);
                if (order)
                    out["filtration_order"] = *order;
                else
                    out["filtration_order"] = ">=" + std::to_string(filtration_upto);
            } else {
                throw std::invalid_argument(
                    "milnor needs one of --index, --all-upto, --filtration");
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (pi1->parsed()) {
            std::cout << wgd::presentation_json(wgd::pi1_presentation(load(file))) << "\n";
            return 0;
        }
        if (random_cmd->parsed()) {
            std::cout << wgd::emit_diagram(wgd::random_diagram(rnd_n, rnd_arrows, seed));
            return 0;
        }
        if (fuzz->parsed()) {
            wgd::FuzzOptions opts;
            opts.trials = trials;
            opts.seed = seed;
            opts.max_strands = fuzz_strands;
            opts.max_arrows = fuzz_arrows;
            wgd::FuzzReport rep = wgd::run_move_invariance_fuzz(opts);
            std::cout << "trials: " << rep.trials << "\n"
                      << "move instances checked: " << rep.instances << "\n";
            if (rep.ok) {
                std::cout << "no counterexample found\n";
                return 0;
            }
            std::cout << "counterexample:\n" << rep.counterexample << "\n";
            return 3;
        }
    } catch (const wgd::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

// Command-line front end: seeded generation, property checks, and JSON
// pipelines over the library. JSON goes to stdout (or --output); logs go to
// stderr. Exit codes: 0 verified/success, 1 property violation or failed
// run (witness in the JSON), 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "baire/generate.hpp"
#include "baire/json_io.hpp"
#include "baire/selftest.hpp"

namespace {

using baire::Json;

struct CommonOptions {
    std::uint64_t seed = 1;
    std::size_t depth = 8;
    std::size_t trials = 100;
    std::string alphabet_text = "omega";
    std::string input_path;
    std::string output_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--seed", opts.seed, "PRNG seed");
    cmd->add_option("--depth", opts.depth, "depth / budget parameter");
    cmd->add_option("--trials", opts.trials, "trial count");
    cmd->add_option("--alphabet", opts.alphabet_text,
                    "alphabet: a positive integer k, or 'omega'");
    cmd->add_option("--input", opts.input_path, "input JSON file (default stdin)");
    cmd->add_option("--output", opts.output_path, "output file (default stdout)");
}

baire::Alphabet parse_alphabet(const std::string& text) {
    if (text == "omega" || text == "w") return baire::Alphabet::countable();
    try {
        const unsigned long k = std::stoul(text);
        if (k == 0 || k > 0xffffffffUL) throw std::invalid_argument("size");
        return baire::Alphabet::finite(static_cast<std::uint32_t>(k));
    } catch (const std::exception&) {
        throw baire::JsonFormatError("alphabet must be a positive integer or 'omega'");
    }
}

Json read_input(const CommonOptions& opts) {
    std::string text;
    if (opts.input_path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(opts.input_path);
        if (!in) throw baire::JsonFormatError("cannot open input file " + opts.input_path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return baire::parse_json_text(text);
}

int emit(const CommonOptions& opts, const Json& payload, int exit_code) {
    const std::string text = payload.dump(2) + "\n";
    if (opts.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.output_path);
        if (!out) {
            std::cerr << "cannot open output file " << opts.output_path << "\n";
            return 2;
        }
        out << text;
    }
    return exit_code;
}

int cmd_check_lipschitz(const CommonOptions& opts) {
    const auto m = baire::partial_map_from_json(read_input(opts));
    const auto v = baire::check_lipschitz(m);
    return emit(opts, baire::lipschitz_verdict_to_json(v), v.ok ? 0 : 1);
}

int cmd_check_isometry(const CommonOptions& opts) {
    const auto m = baire::partial_map_from_json(read_input(opts));
    const auto v = baire::check_isometry(m);
    return emit(opts, baire::isometry_verdict_to_json(v), v.ok ? 0 : 1);
}

int cmd_induce_hom(const CommonOptions& opts) {
    const auto m = baire::partial_map_from_json(read_input(opts));
    try {
        const auto h = baire::induced_hom(m, opts.depth);
        return emit(opts, baire::hom_to_json(h), 0);
    } catch (const baire::NotLipschitzError&) {
        Json j{{"error", "not_lipschitz"},
               {"witness", baire::lipschitz_verdict_to_json(baire::check_lipschitz(m))}};
        return emit(opts, j, 1);
    }
}

int cmd_level_analysis(const CommonOptions& opts) {
    const auto h = baire::hom_from_json(read_input(opts));
    const auto report = baire::level_analysis(h, opts.depth);
    return emit(opts, baire::level_report_to_json(report), 0);
}

int cmd_backforth(const CommonOptions& opts, std::size_t steps) {
    const Json j = read_input(opts);
    const auto A = baire::oracle_from_json(j.contains("A") ? j["A"] : Json{});
    const auto B = baire::oracle_from_json(j.contains("B") ? j["B"] : Json{});
    Json out;
    try {
        std::vector<baire::BnfStep> transcript;
        const baire::PartialMap result = baire::bnf_run(*A, *B, steps, &transcript);
        out["steps"] = steps;
        out["transcript"] = baire::transcript_to_json(transcript);
        out["map"] = baire::partial_map_to_json(result);
        out["isometry"] = baire::isometry_verdict_to_json(baire::check_isometry(result));
        const bool ok = out["isometry"]["ok"].get<bool>();
        return emit(opts, out, ok ? 0 : 1);
    } catch (const baire::OracleExhaustedError& e) {
        out["error"] = "exhausted";
        out["detail"] = e.what();
        return emit(opts, out, 1);
    } catch (const baire::NoFreshLetterError& e) {
        out["error"] = "no_fresh_letter";
        out["detail"] = e.what();
        return emit(opts, out, 1);
    }
}

int cmd_gen_family(const CommonOptions& opts, const std::string& kind_text,
                   std::size_t per_cell, std::size_t cells_max_len) {
    const baire::ParityKind kind = kind_text == "odd" ? baire::ParityKind::Odd
                                                      : baire::ParityKind::Even;
    const baire::Alphabet alphabet = parse_alphabet(opts.alphabet_text);
    // default cells: binary words up to the requested length (valid over any
    // alphabet with at least two letters, and over omega)
    std::vector<baire::Word> cells;
    if (!opts.input_path.empty()) {
        const Json j = read_input(opts);
        if (!j.is_array()) throw baire::JsonFormatError("cell words must be an array");
        for (const auto& w : j) {
            if (!w.is_array()) throw baire::JsonFormatError("each cell must be a word");
            baire::Word word;
            for (const auto& l : w) {
                if (!l.is_number_integer() || l.get<std::int64_t>() < 0)
                    throw baire::JsonFormatError("letters must be nonnegative integers");
                word.push_back(l.get<baire::Letter>());
            }
            cells.push_back(std::move(word));
        }
    } else {
        cells.push_back({});
        std::vector<baire::Word> frontier{{}};
        for (std::size_t len = 1; len <= cells_max_len; ++len) {
            std::vector<baire::Word> next;
            for (const auto& w : frontier)
                for (baire::Letter l = 0; l < 2; ++l) {
                    baire::Word child = w;
                    child.push_back(l);
                    cells.push_back(child);
                    next.push_back(std::move(child));
                }
            frontier = std::move(next);
        }
    }
    const auto family =
        baire::gen_family(kind, cells, per_cell, alphabet, opts.seed, opts.depth);
    return emit(opts, baire::family_to_json(family), 0);
}

int cmd_certify(const CommonOptions& opts) {
    const Json j = read_input(opts);
    if (!j.contains("src") || !j.contains("dst"))
        throw baire::JsonFormatError("expected fields 'src' and 'dst'");
    const auto src = baire::family_from_json(j["src"]);
    const auto dst = baire::family_from_json(j["dst"]);
    const auto cert = baire::certify_no_isometry(src, dst);
    return emit(opts, baire::certificate_to_json(cert),
                cert.isometric_pairs == 0 ? 0 : 1);
}

int cmd_slalom_from_hom(const CommonOptions& opts) {
    const Json j = read_input(opts);
    if (!j.contains("hom") || !j.contains("sample"))
        throw baire::JsonFormatError("expected fields 'hom' and 'sample'");
    const auto h = baire::hom_from_json(j["hom"]);
    const auto sample = baire::bounded_sample_from_json(j["sample"]);
    const auto slalom = baire::slalom_from_hom(h, sample, opts.depth);
    const bool width_ok =
        baire::slalom_width_ok(slalom, baire::WidthProfile::pow_two_plus_one());
    Json out{{"slalom", baire::slalom_to_json(slalom)}, {"width_ok", width_ok}};
    return emit(opts, out, width_ok ? 0 : 1);
}

int cmd_merge_slaloms(const CommonOptions& opts) {
    const Json j = read_input(opts);
    if (!j.is_array()) throw baire::JsonFormatError("expected an array of slaloms");
    std::vector<baire::Slalom> slaloms;
    for (const auto& s : j) slaloms.push_back(baire::slalom_from_json(s));
    const auto merged = baire::merge_slaloms(slaloms);
    const bool width_ok =
        baire::slalom_width_ok(merged, baire::WidthProfile::n_times_pow_two());
    Json out{{"slalom", baire::slalom_to_json(merged)}, {"width_ok", width_ok}};
    return emit(opts, out, width_ok ? 0 : 1);
}

int cmd_tree_width(const CommonOptions& opts) {
    const Json j = read_input(opts);
    baire::WordTree tree;
    std::optional<baire::WidthProfile> profile;
    if (j.is_array()) {
        tree = baire::tree_from_json(j);
    } else {
        tree = baire::tree_from_json(j.contains("tree") ? j["tree"] : Json::array());
        if (j.contains("profile"))
            profile = baire::width_profile_from_json(j["profile"]);
    }
    const auto report = baire::tree_width(tree, profile ? &*profile : nullptr);
    return emit(opts, baire::tree_width_report_to_json(report),
                report.all_within ? 0 : 1);
}

int cmd_hom_image(const CommonOptions& opts) {
    const Json j = read_input(opts);
    if (!j.contains("hom") || !j.contains("tree"))
        throw baire::JsonFormatError("expected fields 'hom' and 'tree'");
    const auto h = baire::hom_from_json(j["hom"]);
    const auto tree = baire::tree_from_json(j["tree"]);
    const auto image = baire::hom_image_tree(h, tree);
    const auto source_counts = tree.level_counts();
    const auto image_counts = image.level_counts();
    bool monotone = true;
    if (h.level_shift() == 0) {
        for (std::size_t n = 0; n < image_counts.size(); ++n)
            if (n >= source_counts.size() || image_counts[n] > source_counts[n])
                monotone = false;
    }
    Json out{{"image", baire::tree_to_json(image)},
             {"source_counts", source_counts},
             {"image_counts", image_counts},
             {"level_counts_monotone", monotone}};
    return emit(opts, out, monotone ? 0 : 1);
}

int cmd_forcing_check(const CommonOptions& opts) {
    const Json j = read_input(opts);
    if (j.contains("condition")) {
        const auto m = baire::partial_map_from_json(j["condition"]);
        const auto v = baire::is_condition(m);
        return emit(opts, baire::condition_verdict_to_json(v), v.ok ? 0 : 1);
    }
    if (j.contains("p") && j.contains("q")) {
        const baire::Condition p(baire::partial_map_from_json(j["p"]));
        const baire::Condition q(baire::partial_map_from_json(j["q"]));
        const bool ok = baire::compatible(p, q);
        Json out{{"compatible", ok}};
        if (!ok) {
            const auto w = baire::incompatibility_witness(p, q);
            out["witness"] =
                Json{{"reason", w.kind == baire::IncompatibilityWitness::Kind::NotLipschitz
                                    ? "not_lipschitz"
                                    : "not_injective"},
                     {"a", baire::point_to_json(w.a)},
                     {"a2", baire::point_to_json(w.a2)}};
            if (w.k) out["witness"]["k"] = *w.k;
        }
        return emit(opts, out, ok ? 0 : 1);
    }
    if (j.contains("separating")) {
        const auto x = baire::separating_set_from_json(j["separating"]);
        const auto v = baire::is_separating(x);
        Json out{{"ok", v.ok}};
        if (!v.ok) out["reason"] = v.reason;
        return emit(opts, out, v.ok ? 0 : 1);
    }
    if (j.contains("p") && j.contains("x")) {
        const baire::Condition p(baire::partial_map_from_json(j["p"]));
        const auto x = baire::separating_set_from_json(j["x"]);
        const bool boxed = baire::in_px(p, x);
        return emit(opts, Json{{"in_px", boxed}}, boxed ? 0 : 1);
    }
    if (j.contains("p") && j.contains("d")) {
        const baire::Condition p(baire::partial_map_from_json(j["p"]));
        std::vector<baire::Condition> d;
        for (const auto& q : j["d"])
            d.emplace_back(baire::partial_map_from_json(q));
        const bool member = baire::closure_member(p, d, opts.depth);
        return emit(opts, Json{{"closure_member", member}, {"depth_bound", opts.depth}},
                    member ? 0 : 1);
    }
    throw baire::JsonFormatError(
        "expected 'condition', 'p'+'q', 'separating', 'p'+'x', or 'p'+'d'");
}

int cmd_forcing_extend(const CommonOptions& opts) {
    const Json j = read_input(opts);
    for (const char* need : {"p", "a", "b", "A", "B"})
        if (!j.contains(need))
            throw baire::JsonFormatError(std::string("missing field '") + need + "'");
    const baire::Condition p(baire::partial_map_from_json(j["p"]));
    const auto a = baire::point_from_json(j["a"]);
    const auto b = baire::point_from_json(j["b"]);
    const auto A = baire::oracle_from_json(j["A"]);
    const auto B = baire::oracle_from_json(j["B"]);
    Json out;
    try {
        const auto q = baire::extend_condition(p, a, b, *A, *B);
        out["condition"] = baire::partial_map_to_json(q.map());
        out["verdict"] = baire::condition_verdict_to_json(baire::is_condition(q.map()));
        return emit(opts, out, 0);
    } catch (const baire::OracleExhaustedError& e) {
        out["error"] = "exhausted";
        out["detail"] = e.what();
        return emit(opts, out, 1);
    } catch (const baire::NoFreshLetterError& e) {
        out["error"] = "no_fresh_letter";
        out["detail"] = e.what();
        return emit(opts, out, 1);
    }
}

int cmd_forcing_antichain(const CommonOptions& opts, std::size_t min_size) {
    const Json j = read_input(opts);
    if (!j.is_array()) throw baire::JsonFormatError("expected an array of conditions");
    std::vector<baire::Condition> conds;
    for (const auto& m : j) conds.emplace_back(baire::partial_map_from_json(m));
    const auto result = baire::find_antichain(conds, min_size);
    return emit(opts, baire::antichain_result_to_json(result, conds),
                result.meets_min_size ? 0 : 1);
}

int cmd_selftest(const CommonOptions& opts) {
    baire::SelftestConfig cfg;
    cfg.seed = opts.seed;
    cfg.trials = opts.trials;
    cfg.depth = opts.depth;
    const Json report = baire::run_selftest(cfg);
    return emit(opts, report, report["all_ok"].get<bool>() ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of Lipschitz maps on Baire and Cantor space"};
    app.require_subcommand(1);

    std::map<std::string, CommonOptions> opts;
    std::size_t steps = 10;
    std::size_t per_cell = 4;
    std::size_t cells_max_len = 3;
    std::size_t min_size = 1;
    std::string kind_text = "odd";

    auto make = [&](const std::string& name, const std::string& help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_common(cmd, opts[name]);
        return cmd;
    };

    make("check-lipschitz", "verify a partial map never shrinks agreement");
    make("check-isometry", "verify a partial map preserves distances exactly");
    make("induce-hom", "table hom canonically induced by a Lipschitz map");
    make("level-analysis", "per-level injectivity/surjectivity of a finite-alphabet hom");
    CLI::App* backforth = make("backforth", "build a partial isometry between two dense sets");
    backforth->add_option("--steps", steps, "number of extension rounds");
    CLI::App* genfam = make("gen-parity-family", "generate an odd/even support family");
    genfam->add_option("--kind", kind_text, "odd or even")
        ->check(CLI::IsMember({"odd", "even"}));
    genfam->add_option("--per-cell", per_cell, "points per cell");
    genfam->add_option("--cells-max-len", cells_max_len,
                       "default cells: binary words up to this length");
    make("certify-no-isometry", "tally two-point sub-isometries across opposite families");
    make("slalom-from-hom", "level sets of a hom over a bounded sample");
    make("merge-slaloms", "union slaloms levelwise below the diagonal");
    make("tree-width", "per-level node counts, optionally against a width profile");
    make("hom-image", "image tree of a word tree under a hom");
    make("forcing-check", "condition/compatibility/separation/box/closure checks");
    make("forcing-extend", "extend a condition through a requested pair");
    CLI::App* antichain = make("forcing-antichain", "largest pairwise-incompatible subfamily");
    antichain->add_option("--min-size", min_size, "exit 0 only at this size or above");
    make("selftest", "run every module's invariant suite");

    CLI11_PARSE(app, argc, argv);
    const std::string name = app.get_subcommands().front()->get_name();
    const CommonOptions& common = opts[name];

    try {
        if (name == "check-lipschitz") return cmd_check_lipschitz(common);
        if (name == "check-isometry") return cmd_check_isometry(common);
        if (name == "induce-hom") return cmd_induce_hom(common);
        if (name == "level-analysis") return cmd_level_analysis(common);
        if (name == "backforth") return cmd_backforth(common, steps);
        if (name == "gen-parity-family")
            return cmd_gen_family(common, kind_text, per_cell, cells_max_len);
        if (name == "certify-no-isometry") return cmd_certify(common);
        if (name == "slalom-from-hom") return cmd_slalom_from_hom(common);
        if (name == "merge-slaloms") return cmd_merge_slaloms(common);
        if (name == "tree-width") return cmd_tree_width(common);
        if (name == "hom-image") return cmd_hom_image(common);
        if (name == "forcing-check") return cmd_forcing_check(common);
        if (name == "forcing-extend") return cmd_forcing_extend(common);
        if (name == "forcing-antichain") return cmd_forcing_antichain(common, min_size);
        if (name == "selftest") return cmd_selftest(common);
        std::cerr << "unknown subcommand " << name << "\n";
        return 2;
    } catch (const baire::JsonFormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        std::cout << Json{{"error", "malformed_input"}, {"detail", e.what()}}.dump(2)
                  << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        std::cout << Json{{"error", "malformed_input"}, {"detail", e.what()}}.dump(2)
                  << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        std::cout << Json{{"error", "invalid_input"}, {"detail", e.what()}}.dump(2)
                  << "\n";
        return 2;
    } catch (const baire::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << Json{{"error", "failed"}, {"detail", e.what()}}.dump(2) << "\n";
        return 1;
    }
}

#include "baire/selftest.hpp"

#include <algorithm>

#include "baire/generate.hpp"

namespace baire {

namespace {

struct Suite {
    std::string name;
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::string first_violation;

    void count(bool ok, const std::string& what) {
        ++trials;
        if (!ok) {
            ++violations;
            if (first_violation.empty()) first_violation = what;
        }
    }

    Json to_json() const {
        Json j{{"name", name},
               {"trials", trials},
               {"violations", violations},
               {"ok", violations == 0}};
        if (!first_violation.empty()) j["first_violation"] = first_violation;
        return j;
    }
};

// triangle comparison through the expansions, independent of distance()
bool expansions_equal(const Point& x, const Point& y, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
        if (x.at(i) != y.at(i)) return false;
    return x.tail() == y.tail();
}

Suite metric_core_suite(const SelftestConfig& cfg) {
    Suite suite;
    suite.name = "metric_core";
    Rng rng = Rng(cfg.seed).derive("metric_core");
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const Point x = gen::random_point(rng, cfg.depth, 4);
        const Point y = gen::random_point(rng, cfg.depth, 4);
        const Point z = gen::random_point(rng, cfg.depth, 4);
        // ultrametric: exponent of d(x,z) is at least the min of the others
        const LogDistance xz = distance(x, z);
        const LogDistance xy = distance(x, y);
        const LogDistance yz = distance(y, z);
        bool ok = true;
        if (xy.is_finite() || yz.is_finite()) {
            if (xz.is_finite()) {
                const std::size_t lower =
                    std::min(xy.is_finite() ? xy.value() : SIZE_MAX,
                             yz.is_finite() ? yz.value() : SIZE_MAX);
                ok = xz.value() >= lower;
            }
        } else {
            ok = xz.is_infinite();
        }
        suite.count(ok, "ultrametric inequality");
        // canonical uniqueness
        const std::size_t horizon = cfg.depth + 2;
        suite.count((x == y) == expansions_equal(x, y, horizon), "canonical uniqueness");
    }
    return suite;
}

Suite hom_suite(const SelftestConfig& cfg) {
    Suite suite;
    suite.name = "lipschitz_maps";
    Rng rng = Rng(cfg.seed).derive("lipschitz_maps");
    const TreeHom parity = TreeHom::parity(Alphabet::countable());
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        // parity never shrinks agreement
        const Point x = gen::random_point(rng, cfg.depth, 5);
        const Point y = gen::random_point(rng, cfg.depth, 5);
        const LogDistance before = distance(x, y);
        const LogDistance after = distance(parity.apply_point(x), parity.apply_point(y));
        bool ok = before.is_infinite() ? after.is_infinite()
                                       : after.at_least(before.value());
        suite.count(ok, "parity is Lipschitz");
        // prepend shifts distance exactly
        const Word prefix = gen::random_word(rng, 3, 5);
        const TreeHom shift = TreeHom::prepend(Alphabet::countable(), prefix);
        const LogDistance shifted =
            distance(shift.apply_point(x), shift.apply_point(y));
        ok = before.is_infinite()
                 ? shifted.is_infinite()
                 : shifted == LogDistance::exponent(before.value() + prefix.size());
        suite.count(ok, "prepend shifts distance by its length");
        // induced table round-trips on its domain
        const Condition cond = gen::random_condition(rng, 3);
        const TreeHom table = induced_hom(cond.map(), cfg.depth);
        ok = true;
        for (const auto& [a, b] : cond.map().pairs())
            for (std::size_t j = 0; j <= cfg.depth; ++j)
                if (table.apply(a.prefix(j)) != b.prefix(j)) ok = false;
        suite.count(ok, "induced table reproduces image prefixes");
    }
    return suite;
}

Suite level_suite(const SelftestConfig&) {
    Suite suite;
    suite.name = "level_analysis";
    // exhaustive sweep over every table hom on binary words of length <= 2:
    // 6 freely chosen letters
    const Alphabet two = Alphabet::finite(2);
    const std::vector<Word> nodes{{0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
        std::map<Word, Word> entries;
        entries[Word{}] = Word{};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            Word parent(nodes[i].begin(), nodes[i].end() - 1);
            Word image = entries[parent];
            image.push_back((mask >> i) & 1u);
            entries[nodes[i]] = std::move(image);
        }
        const TreeHom h = TreeHom::table(two, two, 2, std::move(entries));
        const LevelReport report = level_analysis(h, 2);
        bool ok = true;
        for (const LevelInfo& info : report.levels)
            if (info.injective != info.surjective) ok = false;
        suite.count(ok, "injective equals surjective per level");
        // all-injective equals isometry to depth 2 (meets preserved)
        bool isometry = true;
        std::vector<Word> all{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (std::size_t i = 0; i < all.size() && isometry; ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (word_meet(h.apply(all[i]), h.apply(all[j])).size() !=
                    word_meet(all[i], all[j]).size()) {
                    isometry = false;
                    break;
                }
        suite.count(report.all_injective == isometry,
                    "all-injective equals isometry to depth");
    }
    return suite;
}

Suite back_and_forth_suite(const SelftestConfig& cfg) {
    Suite suite;
    suite.name = "back_and_forth";
    const Alphabet two = Alphabet::finite(2);
    for (std::uint64_t s = 0; s < 3; ++s) {
        const EventuallyConstantDense A(two, 0, cfg.seed + s);
        const EventuallyConstantDense B(two, 1, cfg.seed + 2 * s + 1);
        const std::size_t steps = std::max<std::size_t>(cfg.trials / 8, 8);
        const PartialMap result = bnf_run(A, B, steps);
        suite.count(check_isometry(result).ok, "run stays an isometry");
        bool covered = true;
        for (std::size_t i = 0; i <= steps; ++i) {
            if (!result.contains_domain(A.enumerate(i))) covered = false;
            if (!result.contains_range(B.enumerate(i))) covered = false;
        }
        suite.count(covered, "run covers both enumerations");
        suite.count(result.size() <= 2 * (steps + 1), "run size is bounded");
    }
    return suite;
}

Suite parity_suite(const SelftestConfig& cfg) {
    Suite suite;
    suite.name = "counterexamples";
    const std::vector<Word> cells{{}, {0}, {1}, {2, 1}};
    const ParityFamily odd = gen_family(ParityKind::Odd, cells, 6,
                                        Alphabet::countable(), cfg.seed);
    const ParityFamily even = gen_family(ParityKind::Even, cells, 6,
                                         Alphabet::countable(), cfg.seed + 1);
    suite.count(!family_violation(odd).has_value(), "odd family invariant");
    suite.count(!family_violation(even).has_value(), "even family invariant");
    for (const ParityFamily* fam : {&odd, &even}) {
        bool ok = true;
        for (const ParityCell& cell : fam->cells)
            for (std::size_t i = 0; i < cell.points.size(); ++i)
                for (std::size_t j = i + 1; j < cell.points.size(); ++j)
                    if (first_diff_parity(cell.points[i], cell.points[j]) != fam->kind)
                        ok = false;
        suite.count(ok, "within-cell first differences have the family parity");
    }
    const NoIsometryCertificate cert = certify_no_isometry(odd, even);
    suite.count(cert.isometric_pairs == 0, "no isometric two-point sub-map");
    suite.count(cert.pairs_checked > 0, "certificate checked pairs");
    return suite;
}

Suite slalom_suite(const SelftestConfig& cfg) {
    Suite suite;
    suite.name = "slaloms";
    Rng rng = Rng(cfg.seed).derive("slaloms");
    const WidthProfile pow2 = WidthProfile::pow_two_plus_one();
    const WidthProfile npow2 = WidthProfile::n_times_pow_two();
    std::vector<Slalom> batch;
    for (std::size_t t = 0; t < std::max<std::size_t>(cfg.trials / 4, 8); ++t) {
        const BoundedSample sample = gen::random_bounded_sample(rng, 3, 4, 8, cfg.depth);
        std::vector<Word> prefixes;
        for (const Point& x : sample.points) prefixes.push_back(x.prefix(cfg.depth));
        const TreeHom h = gen::random_partial_table_hom(rng, prefixes, 6);
        const Slalom s = slalom_from_hom(h, sample, cfg.depth);
        bool capture = true;
        for (const Point& x : sample.points) {
            const Word image = h.apply(x.prefix(cfg.depth));
            for (std::size_t n = 0; n < cfg.depth; ++n)
                if (!s.at(n).count(image[n])) capture = false;
        }
        suite.count(capture, "images are captured totally");
        bool widths = true;
        for (std::size_t n = 0; n < s.depth(); ++n) {
            if (n >= sample.base.size() &&
                s.at(n).size() > (std::uint64_t{1} << (n + 1 - sample.base.size())))
                widths = false;
        }
        suite.count(widths && slalom_width_ok(s, pow2), "level widths within bound");
        batch.push_back(s);
        if (batch.size() >= 4) {
            suite.count(slalom_width_ok(merge_slaloms(batch), npow2),
                        "merged widths within bound");
            batch.clear();
        }
    }
    return suite;
}

Suite image_width_suite(const SelftestConfig& cfg) {
    Suite suite;
    suite.name = "image_width";
    Rng rng = Rng(cfg.seed).derive("image_width");
    std::vector<std::uint64_t> corset_values;
    for (std::size_t n = 0; n <= cfg.depth; ++n) {
        std::uint64_t c = 1;
        while ((std::uint64_t{1} << c) < n + 2) ++c;
        corset_values.push_back(std::max<std::uint64_t>(c, 1));
    }
    const WidthProfile corset = WidthProfile::table(corset_values);
    for (std::size_t t = 0; t < std::max<std::size_t>(cfg.trials / 4, 8); ++t) {
        const WordTree tree = gen::random_width_tree(rng, corset, cfg.depth);
        const TreeHom h = gen::random_total_table_hom(rng, Alphabet::finite(2), cfg.depth);
        const WordTree image = hom_image_tree(h, tree);
        const auto source_counts = tree.level_counts();
        const auto image_counts = image.level_counts();
        bool ok = image_counts.size() <= source_counts.size();
        for (std::size_t n = 0; ok && n < image_counts.size(); ++n)
            ok = image_counts[n] <= source_counts[n];
        suite.count(ok, "image level counts within source counts");
        suite.count(tree_width(image, &corset).all_within, "image keeps the width bound");
    }
    return suite;
}

Suite forcing_suite(const SelftestConfig& cfg) {
    Suite suite;
    suite.name = "forcing";
    Rng rng = Rng(cfg.seed).derive("forcing");
    const EventuallyConstantDense A(Alphabet::countable(), 0, cfg.seed + 11);
    const EventuallyConstantDense B(Alphabet::countable(), 0, cfg.seed + 12);
    for (std::size_t t = 0; t < std::max<std::size_t>(cfg.trials / 4, 8); ++t) {
        const Condition p = gen::random_condition(rng, 1 + t % 4);
        Point a = gen::random_point(rng, 4, 5);
        Point b = gen::random_point(rng, 4, 5);
        const Condition q = extend_condition(p, a, b, A, B);
        suite.count(is_condition(q.map()).ok, "extension is a condition");
        suite.count(p.map().submap_of(q.map()), "extension preserves the base");
        suite.count(q.map().contains_domain(a) && q.map().contains_range(b),
                    "extension covers the requested points");
        const Condition r = gen::random_condition(rng, 2);
        suite.count(compatible(p, r) == compatible(r, p), "compatibility is symmetric");
        suite.count(compatible(p, p), "compatibility is reflexive");
    }
    return suite;
}

}  // namespace

Json run_selftest(const SelftestConfig& cfg) {
    const std::vector<Suite> suites{
        metric_core_suite(cfg), hom_suite(cfg),       level_suite(cfg),
        back_and_forth_suite(cfg), parity_suite(cfg), slalom_suite(cfg),
        image_width_suite(cfg), forcing_suite(cfg),
    };
    Json out;
    out["seed"] = cfg.seed;
    out["trials"] = cfg.trials;
    out["depth"] = cfg.depth;
    Json list = Json::array();
    bool all_ok = true;
    for (const Suite& s : suites) {
        all_ok = all_ok && s.violations == 0;
        list.push_back(s.to_json());
    }
    out["suites"] = std::move(list);
    out["all_ok"] = all_ok;
    return out;
}

}  // namespace baire

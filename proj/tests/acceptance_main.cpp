// Acceptance suite: one line per criterion, nonzero exit when any fails.
// The CLI path for the determinism criterion comes as argv[1].

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "baire/back_and_forth.hpp"
#include "baire/counterexamples.hpp"
#include "baire/forcing.hpp"
#include "baire/generate.hpp"
#include "baire/json_io.hpp"

using namespace baire;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(std::string name, double budget_seconds)
        : name_(std::move(name)),
          budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void finish(bool ok, const std::string& detail) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        const bool in_budget = elapsed < budget_;
        const bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("%s %s (%s, %.2fs of %.0fs budget)\n", pass ? "PASS" : "FAIL",
                    name_.c_str(), detail.c_str(), elapsed, budget_);
        std::fflush(stdout);
    }

private:
    std::string name_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<Word> binary_words_to(std::size_t max_len) {
    std::vector<Word> words{{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].size() == max_len) continue;
        for (Letter l = 0; l < 2; ++l) {
            Word c = words[i];
            c.push_back(l);
            words.push_back(std::move(c));
        }
    }
    return words;
}

// 1. Over the binary alphabet, every table hom on words of length <= 3 has
//    injective level restrictions exactly where they are surjective, and is
//    an isometry to depth 3 exactly when every level is injective.
void criterion_surjective_iff_isometry() {
    Criterion crit("criterion-1-level-injective-iff-surjective", 5.0);
    const Alphabet two = Alphabet::finite(2);
    const std::vector<Word> words = binary_words_to(3);
    std::vector<Word> nonroot(words.begin() + 1, words.end());
    std::size_t checked = 0;
    std::size_t violations = 0;
    for (std::uint32_t mask = 0; mask < (1u << 14); ++mask) {
        std::map<Word, Word> entries;
        entries[Word{}] = Word{};
        for (std::size_t i = 0; i < nonroot.size(); ++i) {
            Word parent(nonroot[i].begin(), nonroot[i].end() - 1);
            Word image = entries[parent];
            image.push_back((mask >> i) & 1u);
            entries[nonroot[i]] = std::move(image);
        }
        const TreeHom h = TreeHom::table(two, two, 3, std::move(entries));
        const LevelReport report = level_analysis(h, 3);
        for (const LevelInfo& info : report.levels)
            if (info.injective != info.surjective) ++violations;
        // independent isometry decision: meets preserved among all words
        bool isometry = true;
        for (std::size_t i = 0; i < words.size() && isometry; ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j)
                if (word_meet(h.apply(words[i]), h.apply(words[j])).size() !=
                    word_meet(words[i], words[j]).size()) {
                    isometry = false;
                    break;
                }
        if (report.all_injective != isometry) ++violations;
        ++checked;
    }
    std::ostringstream detail;
    detail << checked << " homs, " << violations << " violations";
    crit.finish(checked == 16384 && violations == 0, detail.str());
}

// 2. Back-and-forth between the eventually-0 and eventually-1 binary points:
//    500 rounds, ten seeds, isometric result covering both enumerations.
void criterion_back_and_forth() {
    Criterion crit("criterion-2-back-and-forth", 10.0);
    const Alphabet two = Alphabet::finite(2);
    std::size_t violations = 0;
    const std::size_t steps = 500;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const EventuallyConstantDense A(two, 0, seed);
        const EventuallyConstantDense B(two, 1, seed * 977 + 1);
        const PartialMap result = bnf_run(A, B, steps);
        if (!check_isometry(result).ok) ++violations;
        if (result.size() < steps + 1 || result.size() > 2 * (steps + 1)) ++violations;
        for (std::size_t i = 0; i < steps; ++i) {
            if (!result.contains_domain(A.enumerate(i))) ++violations;
            if (!result.contains_range(B.enumerate(i))) ++violations;
        }
    }
    std::ostringstream detail;
    detail << "10 seeds x " << steps << " rounds, " << violations << " violations";
    crit.finish(violations == 0, detail.str());
}

// 3. Opposite-parity families over all binary cells of length <= 3 with 50
//    points per cell: the parity invariant holds and no two-point sub-map
//    between within-cell pairs is an isometry.
void criterion_parity_families() {
    Criterion crit("criterion-3-parity-counterexample", 30.0);
    const std::vector<Word> cells = binary_words_to(3);
    const Alphabet two = Alphabet::finite(2);
    const ParityFamily odd = gen_family(ParityKind::Odd, cells, 50, two, 101);
    const ParityFamily even = gen_family(ParityKind::Even, cells, 50, two, 202);
    std::size_t violations = 0;
    if (family_violation(odd)) ++violations;
    if (family_violation(even)) ++violations;
    for (const ParityFamily* fam : {&odd, &even})
        for (const ParityCell& cell : fam->cells)
            for (std::size_t i = 0; i < cell.points.size(); ++i)
                for (std::size_t j = i + 1; j < cell.points.size(); ++j)
                    if (first_diff_parity(cell.points[i], cell.points[j]) != fam->kind)
                        ++violations;
    const NoIsometryCertificate cert = certify_no_isometry(odd, even);
    if (cert.isometric_pairs != 0) ++violations;
    std::ostringstream detail;
    detail << cells.size() << " cells x 50 points, " << cert.pairs_checked
           << " cross pairs, " << cert.isometric_pairs << " isometric, "
           << violations << " violations";
    crit.finish(violations == 0, detail.str());
}

// 4. 1000 random depth-12 homs over bound-2 samples: total capture, level
//    widths within 2^{n+1-|s|}, merged widths within n 2^{n+1}.
void criterion_slalom_bounds() {
    Criterion crit("criterion-4-slalom-bounds", 20.0);
    Rng rng(404);
    const std::size_t depth = 12;
    std::size_t violations = 0;
    std::vector<Slalom> batch;
    std::size_t merges = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const BoundedSample sample = gen::random_bounded_sample(rng, 3, 4, 12, depth);
        std::vector<Word> prefixes;
        prefixes.reserve(sample.points.size());
        for (const Point& x : sample.points) prefixes.push_back(x.prefix(depth));
        const TreeHom h = gen::random_partial_table_hom(rng, prefixes, 24);
        const Slalom s = slalom_from_hom(h, sample, depth);
        for (const Point& x : sample.points) {
            const Word image = h.apply(x.prefix(depth));
            for (std::size_t n = 0; n < depth; ++n)
                if (!s.at(n).count(image[n])) ++violations;
        }
        for (std::size_t n = 0; n < depth; ++n) {
            if (n >= sample.base.size()) {
                if (s.at(n).size() >
                    (std::uint64_t{1} << (n + 1 - sample.base.size())))
                    ++violations;
            }
            if (s.at(n).size() > (std::uint64_t{1} << (n + 1))) ++violations;
        }
        batch.push_back(s);
        if (batch.size() == 16) {
            if (!slalom_width_ok(merge_slaloms(batch),
                                 WidthProfile::n_times_pow_two()))
                ++violations;
            ++merges;
            batch.clear();
        }
    }
    std::ostringstream detail;
    detail << "1000 homs, " << merges << " merges, " << violations << " violations";
    crit.finish(violations == 0, detail.str());
}

// 5. 1000 random trees of corset width max(1, ceil(log2(n+2))) at depth 10
//    under random homs: image level counts never exceed source level counts.
void criterion_image_width() {
    Criterion crit("criterion-5-image-width", 10.0);
    Rng rng(505);
    const std::size_t depth = 10;
    std::vector<std::uint64_t> corset_values;
    for (std::size_t n = 0; n <= depth; ++n) {
        std::uint64_t c = 1;
        while ((std::uint64_t{1} << c) < n + 2) ++c;
        corset_values.push_back(std::max<std::uint64_t>(c, 1));
    }
    const WidthProfile corset = WidthProfile::table(corset_values);
    std::size_t violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const WordTree tree = gen::random_width_tree(rng, corset, depth);
        if (!tree_width(tree, &corset).all_within) ++violations;
        const TreeHom h = gen::random_total_table_hom(rng, Alphabet::finite(2), depth);
        const WordTree image = hom_image_tree(h, tree);
        const auto source_counts = tree.level_counts();
        const auto image_counts = image.level_counts();
        if (image_counts.size() > source_counts.size()) {
            ++violations;
        } else {
            for (std::size_t n = 0; n < image_counts.size(); ++n)
                if (image_counts[n] > source_counts[n]) ++violations;
        }
        if (!tree_width(image, &corset).all_within) ++violations;
    }
    std::ostringstream detail;
    detail << "1000 trees, " << violations << " violations";
    crit.finish(violations == 0, detail.str());
}

// 6. 1000 extensions are valid conditions containing their requests;
//    compatible() agrees with a from-scratch union oracle on 10^4 pairs;
//    exact antichains match exhaustive search on families of <= 15.
void criterion_forcing() {
    Criterion crit("criterion-6-forcing-combinatorics", 30.0);
    Rng rng(606);
    std::size_t violations = 0;

    const EventuallyConstantDense A(Alphabet::countable(), 0, 61);
    const EventuallyConstantDense B(Alphabet::countable(), 0, 62);
    for (int trial = 0; trial < 1000; ++trial) {
        const Condition p = gen::random_condition(rng, 1 + trial % 5);
        const Point a = gen::random_point(rng, 4, 6);
        const Point b = gen::random_point(rng, 4, 6);
        const Condition q = extend_condition(p, a, b, A, B);
        if (!is_condition(q.map()).ok) ++violations;
        if (!p.map().submap_of(q.map())) ++violations;
        if (!q.map().contains_domain(a) || !q.map().contains_range(b)) ++violations;
    }

    // union oracle straight from the expansions
    auto naive_first_diff = [](const Point& x, const Point& y, std::size_t horizon) {
        for (std::size_t i = 0; i < horizon; ++i)
            if (x.at(i) != y.at(i)) return i;
        return horizon;
    };
    auto naive_condition = [&](const PartialMap& m) {
        std::size_t horizon = 2;
        for (const auto& [x, y] : m.pairs())
            horizon = std::max({horizon, x.stem().size() + 1, y.stem().size() + 1});
        const auto& ps = m.pairs();
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                const std::size_t da =
                    naive_first_diff(ps[i].first, ps[j].first, horizon);
                const std::size_t db =
                    naive_first_diff(ps[i].second, ps[j].second, horizon);
                if (db < da) return false;
                if (db == horizon && da < horizon) return false;
            }
        return true;
    };
    for (int trial = 0; trial < 10000; ++trial) {
        const Condition p = gen::random_condition(rng, 1 + trial % 4, 3, 4);
        const Condition q = gen::random_condition(rng, 1 + (trial / 2) % 4, 3, 4);
        if (compatible(p, q) != naive_condition(p.map().merged_with(q.map())))
            ++violations;
    }

    std::size_t antichain_checks = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Condition> family;
        const std::size_t n = 10 + trial % 6;
        for (std::size_t i = 0; i < n; ++i)
            family.push_back(gen::random_condition(rng, 1 + i % 3, 3, 4));
        const AntichainResult result = find_antichain(family);
        if (!result.exact) ++violations;
        std::vector<std::uint32_t> inc(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !compatible(family[i], family[j])) inc[i] |= (1u << j);
        std::size_t best = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool antichain = true;
            for (std::size_t i = 0; i < n && antichain; ++i)
                if ((mask >> i) & 1u) {
                    const std::uint32_t rest = mask & ~(1u << i);
                    if ((rest & inc[i]) != rest) antichain = false;
                }
            if (antichain)
                best = std::max(best,
                                static_cast<std::size_t>(__builtin_popcount(mask)));
        }
        if (result.indices.size() != best) ++violations;
        ++antichain_checks;
    }

    std::ostringstream detail;
    detail << "1000 extensions, 10000 compatibility pairs, " << antichain_checks
           << " antichain families, " << violations << " violations";
    crit.finish(violations == 0, detail.str());
}

// 7. Ultrametric inequality and canonical uniqueness on 10^4 random
//    triples/pairs.
void criterion_metric_core() {
    Criterion crit("criterion-7-metric-core", 2.0);
    Rng rng(707);
    std::size_t violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Point x = gen::random_point(rng, 6, 4);
        const Point y = gen::random_point(rng, 6, 4);
        const Point z = gen::random_point(rng, 6, 4);
        const LogDistance xz = distance(x, z);
        const LogDistance xy = distance(x, y);
        const LogDistance yz = distance(y, z);
        if (xy.is_infinite() && yz.is_infinite()) {
            if (!xz.is_infinite()) ++violations;
        } else if (xz.is_finite()) {
            const std::size_t lower =
                std::min(xy.is_finite() ? xy.value() : SIZE_MAX,
                         yz.is_finite() ? yz.value() : SIZE_MAX);
            if (xz.value() < lower) ++violations;
        }

        // canonical uniqueness from raw representations
        const Word stem_a = gen::random_word(rng, 5, 3);
        const Word stem_b = gen::random_word(rng, 5, 3);
        const Letter ta = static_cast<Letter>(rng.below(3));
        const Letter tb = static_cast<Letter>(rng.below(3));
        auto raw_at = [](const Word& stem, Letter tail, std::size_t i) {
            return i < stem.size() ? stem[i] : tail;
        };
        bool raw_equal = ta == tb;
        for (std::size_t i = 0; i < 7 && raw_equal; ++i)
            raw_equal = raw_at(stem_a, ta, i) == raw_at(stem_b, tb, i);
        if ((Point(stem_a, ta) == Point(stem_b, tb)) != raw_equal) ++violations;
    }
    std::ostringstream detail;
    detail << "10000 triples and pairs, " << violations << " violations";
    crit.finish(violations == 0, detail.str());
}

std::string run_command(const std::string& command, int* exit_code) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return output;
    }
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, got);
    *exit_code = pclose(pipe);
    return output;
}

// 8. Two selftest runs of the CLI with one seed emit identical bytes.
void criterion_determinism(const std::string& cli_path) {
    Criterion crit("criterion-8-selftest-determinism", 60.0);
    if (cli_path.empty()) {
        crit.finish(false, "no CLI path given");
        return;
    }
    const std::string command =
        cli_path + " selftest --seed 42 --trials 60 --depth 6 2>/dev/null";
    int rc1 = 0;
    int rc2 = 0;
    const std::string first = run_command(command, &rc1);
    const std::string second = run_command(command, &rc2);
    const bool ok = rc1 == 0 && rc2 == 0 && !first.empty() && first == second;
    std::ostringstream detail;
    detail << first.size() << " bytes, exit codes " << rc1 << "/" << rc2
           << (first == second ? ", identical" : ", DIFFERENT");
    crit.finish(ok, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";
    criterion_surjective_iff_isometry();
    criterion_back_and_forth();
    criterion_parity_families();
    criterion_slalom_bounds();
    criterion_image_width();
    criterion_forcing();
    criterion_metric_core();
    criterion_determinism(cli_path);
    if (failures == 0) {
        std::printf("ALL CRITERIA PASS\n");
        return 0;
    }
    std::printf("%d CRITERIA FAILED\n", failures);
    return 1;
}

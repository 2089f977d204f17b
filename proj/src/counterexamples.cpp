#include "baire/counterexamples.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "baire/rng.hpp"

namespace baire {

namespace {

bool index_matches(ParityKind kind, std::size_t index) {
    return kind == ParityKind::Odd ? index % 2 == 1 : index % 2 == 0;
}

// admissible nonzero positions in [ |base|, |base| + budget )
std::vector<std::size_t> support_positions(ParityKind kind, const Word& base,
                                           std::size_t budget) {
    std::vector<std::size_t> out;
    for (std::size_t i = base.size(); i < base.size() + budget; ++i)
        if (index_matches(kind, i)) out.push_back(i);
    return out;
}

Point point_from_pattern(const Word& base, const std::vector<std::size_t>& positions,
                         const std::vector<Letter>& letters) {
    std::size_t last = base.size();
    for (std::size_t j = 0; j < positions.size(); ++j)
        if (letters[j] != 0) last = positions[j] + 1;
    Word stem(std::max(base.size(), last), 0);
    std::copy(base.begin(), base.end(), stem.begin());
    for (std::size_t j = 0; j < positions.size(); ++j)
        if (positions[j] < stem.size()) stem[positions[j]] = letters[j];
    return Point(std::move(stem), 0);
}

}  // namespace

std::optional<std::uint64_t> cell_capacity(ParityKind kind, const Word& base,
                                           const Alphabet& alphabet,
                                           std::size_t depth_budget) {
    const std::size_t positions = support_positions(kind, base, depth_budget).size();
    if (!alphabet.is_finite()) {
        if (positions == 0) return std::uint64_t{1};
        return std::nullopt;
    }
    const std::uint64_t k = alphabet.size();
    std::uint64_t capacity = 1;
    for (std::size_t i = 0; i < positions; ++i) {
        if (capacity > (std::uint64_t{1} << 62) / std::max<std::uint64_t>(k, 1))
            return std::nullopt;  // more than anyone will ask for
        capacity *= k;
    }
    return capacity;
}

ParityFamily gen_family(ParityKind kind, const std::vector<Word>& cell_words,
                        std::size_t per_cell, const Alphabet& alphabet,
                        std::uint64_t seed, std::size_t depth_budget) {
    if (per_cell == 0) throw std::invalid_argument("per_cell must be at least 1");
    ParityFamily family;
    family.kind = kind;
    Rng root(seed);
    for (std::size_t ci = 0; ci < cell_words.size(); ++ci) {
        const Word& base = cell_words[ci];
        if (!alphabet.contains(base))
            throw std::invalid_argument("cell word outside the alphabet");
        const auto positions = support_positions(kind, base, depth_budget);
        const auto capacity = cell_capacity(kind, base, alphabet, depth_budget);
        if (capacity && *capacity < per_cell)
            throw std::invalid_argument(
                "cell cannot hold the requested number of distinct points");
        Rng rng = root.derive(ci);
        ParityCell cell;
        cell.base = base;
        std::set<std::vector<Letter>> used;
        std::size_t attempts = 0;
        while (cell.points.size() < per_cell) {
            std::vector<Letter> letters(positions.size(), 0);
            if (attempts++ > 64 * per_cell && capacity) {
                // dense request against a finite pattern space: walk pattern
                // indices sequentially from a random start so completion is
                // guaranteed
                const Letter span = alphabet.is_finite() ? alphabet.size() : Letter{2};
                std::uint64_t idx = rng.below(*capacity);
                for (std::uint64_t probe = 0; probe < *capacity; ++probe) {
                    std::uint64_t v = (idx + probe) % *capacity;
                    for (std::size_t j = 0; j < positions.size(); ++j) {
                        letters[j] = static_cast<Letter>(v % span);
                        v /= span;
                    }
                    if (used.insert(letters).second) break;
                }
            } else {
                // nonzero letters stay small; the span widens with failed
                // attempts so countable-alphabet cells always fill up
                const Letter span =
                    alphabet.is_finite()
                        ? alphabet.size()
                        : static_cast<Letter>(7 + attempts / 8);
                for (std::size_t j = 0; j < positions.size(); ++j)
                    letters[j] = (span > 1 && rng.coin())
                                     ? static_cast<Letter>(1 + rng.below(span - 1))
                                     : 0;
                if (!used.insert(letters).second) continue;
            }
            cell.points.push_back(point_from_pattern(base, positions, letters));
        }
        family.cells.push_back(std::move(cell));
    }
    return family;
}

ParityKind first_diff_parity(const Point& x, const Point& y) {
    const LogDistance d = distance(x, y);
    if (d.is_infinite())
        throw std::invalid_argument("equal points have no disagreement index");
    return d.value() % 2 == 1 ? ParityKind::Odd : ParityKind::Even;
}

std::optional<std::string> family_violation(const ParityFamily& family) {
    for (const ParityCell& cell : family.cells) {
        std::set<Point> seen;
        for (const Point& x : cell.points) {
            if (!x.extends(cell.base)) return "point does not extend its cell word";
            if (x.tail() != 0) return "point is not eventually zero";
            if (!seen.insert(x).second) return "cell repeats a point";
            for (std::size_t i = cell.base.size(); i < x.stem().size(); ++i)
                if (x.stem()[i] != 0 && !index_matches(family.kind, i))
                    return "nonzero letter at an index of the wrong parity";
        }
    }
    return std::nullopt;
}

namespace {

struct CellPairs {
    // disagreement exponent of each within-cell unordered pair, bucketed
    std::map<std::size_t, std::uint64_t> by_exponent;
    std::uint64_t total = 0;
};

CellPairs collect_pairs(const ParityFamily& family) {
    CellPairs out;
    for (const ParityCell& cell : family.cells) {
        for (std::size_t i = 0; i < cell.points.size(); ++i)
            for (std::size_t j = i + 1; j < cell.points.size(); ++j) {
                const LogDistance d = distance(cell.points[i], cell.points[j]);
                if (d.is_infinite()) continue;  // family_violation covers this
                ++out.by_exponent[d.value()];
                ++out.total;
            }
    }
    return out;
}

}  // namespace

NoIsometryCertificate certify_no_isometry(const ParityFamily& src,
                                          const ParityFamily& dst) {
    if (src.kind == dst.kind)
        throw std::invalid_argument("families must have opposite kinds");
    for (const ParityCell& cell : src.cells)
        if (cell.points.size() < 2)
            throw std::invalid_argument("every source cell needs at least two points");

    const CellPairs s = collect_pairs(src);
    const CellPairs d = collect_pairs(dst);

    NoIsometryCertificate cert;
    // each source pair {x,y} against each ordered destination pair (u,v);
    // the two-point map is an isometry exactly when the exponents match
    cert.pairs_checked = s.total * d.total * 2;
    for (const auto& [exp, count] : s.by_exponent) {
        auto it = d.by_exponent.find(exp);
        if (it != d.by_exponent.end()) cert.isometric_pairs += count * it->second * 2;
    }

    if (cert.isometric_pairs > 0) {
        // locate one witness for the report
        for (const ParityCell& sc : src.cells)
            for (std::size_t i = 0; i < sc.points.size() && !cert.witness; ++i)
                for (std::size_t j = i + 1; j < sc.points.size() && !cert.witness; ++j) {
                    const LogDistance ds = distance(sc.points[i], sc.points[j]);
                    for (const ParityCell& dc : dst.cells)
                        for (std::size_t u = 0; u < dc.points.size() && !cert.witness; ++u)
                            for (std::size_t v = u + 1; v < dc.points.size(); ++v) {
                                if (distance(dc.points[u], dc.points[v]) == ds) {
                                    cert.witness = NoIsometryWitness{
                                        sc.base,         dc.base,
                                        sc.points[i],    sc.points[j],
                                        dc.points[u],    dc.points[v]};
                                    break;
                                }
                            }
                }
    }
    return cert;
}

}  // namespace baire

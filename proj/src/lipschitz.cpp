#include "baire/lipschitz.hpp"

#include <algorithm>

namespace baire {

PartialMap::PartialMap(std::vector<std::pair<Point, Point>> pairs) {
    pairs_.reserve(pairs.size());
    for (auto& pr : pairs) {
        bool duplicate = false;
        for (const auto& have : pairs_)
            if (have == pr) {
                duplicate = true;
                break;
            }
        if (!duplicate) pairs_.push_back(std::move(pr));
    }
}

bool PartialMap::contains_domain(const Point& a) const {
    return std::any_of(pairs_.begin(), pairs_.end(),
                       [&](const auto& p) { return p.first == a; });
}

bool PartialMap::contains_range(const Point& b) const {
    return std::any_of(pairs_.begin(), pairs_.end(),
                       [&](const auto& p) { return p.second == b; });
}

std::optional<Point> PartialMap::image_of(const Point& a) const {
    for (const auto& p : pairs_)
        if (p.first == a) return p.second;
    return std::nullopt;
}

bool PartialMap::is_function() const {
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        for (std::size_t j = i + 1; j < pairs_.size(); ++j)
            if (pairs_[i].first == pairs_[j].first) return false;
    return true;
}

bool PartialMap::is_injective() const {
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        for (std::size_t j = i + 1; j < pairs_.size(); ++j)
            if (pairs_[i].second == pairs_[j].second) return false;
    return true;
}

PartialMap PartialMap::extended(Point a, Point b) const {
    PartialMap out = *this;
    std::pair<Point, Point> pr{std::move(a), std::move(b)};
    for (const auto& have : out.pairs_)
        if (have == pr) return out;
    out.pairs_.push_back(std::move(pr));
    return out;
}

PartialMap PartialMap::merged_with(const PartialMap& other) const {
    PartialMap out = *this;
    for (const auto& pr : other.pairs_) {
        bool duplicate = false;
        for (const auto& have : out.pairs_)
            if (have == pr) {
                duplicate = true;
                break;
            }
        if (!duplicate) out.pairs_.push_back(pr);
    }
    return out;
}

bool PartialMap::submap_of(const PartialMap& other) const {
    return std::all_of(pairs_.begin(), pairs_.end(), [&](const auto& pr) {
        return std::find(other.pairs_.begin(), other.pairs_.end(), pr) !=
               other.pairs_.end();
    });
}

namespace {

// Lipschitz failure of the pair against one existing pair, if any.
std::optional<LipschitzWitness> lipschitz_clash(const std::pair<Point, Point>& p,
                                                const std::pair<Point, Point>& q) {
    const LogDistance da = distance(p.first, q.first);
    const LogDistance db = distance(p.second, q.second);
    if (db.is_infinite()) return std::nullopt;           // images equal: fine
    if (da.is_finite() && da.value() <= db.value()) return std::nullopt;
    // arguments agree past the image split; images first differ at db
    return LipschitzWitness{p.first, q.first, db.value()};
}

std::optional<IsometryWitness> isometry_clash(const std::pair<Point, Point>& p,
                                              const std::pair<Point, Point>& q) {
    const LogDistance da = distance(p.first, q.first);
    const LogDistance db = distance(p.second, q.second);
    if (da == db) return std::nullopt;
    return IsometryWitness{p.first, q.first, da, db};
}

}  // namespace

LipschitzVerdict check_lipschitz(const PartialMap& m) {
    const auto& ps = m.pairs();
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (auto w = lipschitz_clash(ps[i], ps[j])) return {false, *w};
    return {true, std::nullopt};
}

LipschitzVerdict check_lipschitz_extension(const PartialMap& m, const Point& a,
                                           const Point& b) {
    const std::pair<Point, Point> fresh{a, b};
    for (const auto& pr : m.pairs())
        if (auto w = lipschitz_clash(fresh, pr)) return {false, *w};
    return {true, std::nullopt};
}

IsometryVerdict check_isometry(const PartialMap& m) {
    const auto& ps = m.pairs();
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (auto w = isometry_clash(ps[i], ps[j])) return {false, *w};
    return {true, std::nullopt};
}

IsometryVerdict check_isometry_extension(const PartialMap& m, const Point& a,
                                         const Point& b) {
    const std::pair<Point, Point> fresh{a, b};
    for (const auto& pr : m.pairs())
        if (auto w = isometry_clash(fresh, pr)) return {false, *w};
    return {true, std::nullopt};
}

TreeHom induced_hom(const PartialMap& m, std::size_t depth, Alphabet in,
                    Alphabet out) {
    if (auto v = check_lipschitz(m); !v.ok)
        throw NotLipschitzError("map is not Lipschitz; induced table would be ill defined");
    std::map<Word, Word> entries;
    entries[Word{}] = Word{};
    for (const auto& [a, b] : m.pairs())
        for (std::size_t j = 1; j <= depth; ++j) entries[a.prefix(j)] = b.prefix(j);
    return TreeHom::table(std::move(in), std::move(out), depth, std::move(entries));
}

std::vector<std::pair<Word, Word>> lift_to_closure(const PartialMap& m,
                                                   const std::vector<Word>& targets) {
    if (auto v = check_lipschitz(m); !v.ok)
        throw NotLipschitzError("map is not Lipschitz; the lift is ill defined");
    std::vector<std::pair<Word, Word>> out;
    out.reserve(targets.size());
    for (const Word& s : targets) {
        const std::pair<Point, Point>* witness = nullptr;
        for (const auto& pr : m.pairs())
            if (pr.first.extends(s)) {
                witness = &pr;
                break;
            }
        if (!witness)
            throw NotInClosureError("no domain point witnesses the target word");
        out.emplace_back(s, witness->second.prefix(s.size()));
    }
    return out;
}

PartialMap inverse_map(const PartialMap& m) {
    std::vector<std::pair<Point, Point>> flipped;
    flipped.reserve(m.size());
    for (const auto& [a, b] : m.pairs()) flipped.emplace_back(b, a);
    return PartialMap(std::move(flipped));
}

}  // namespace baire

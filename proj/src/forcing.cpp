#include "baire/forcing.hpp"

#include <algorithm>
#include <functional>

namespace baire {

ConditionVerdict is_condition(const PartialMap& m) {
    ConditionVerdict verdict;
    if (auto v = check_lipschitz(m); !v.ok) {
        verdict.lipschitz_witness = v.witness;
        return verdict;
    }
    const auto& ps = m.pairs();
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (ps[i].second == ps[j].second) {
                verdict.injectivity_witness = std::make_pair(ps[i].first, ps[j].first);
                return verdict;
            }
    verdict.ok = true;
    return verdict;
}

Condition::Condition(PartialMap map) : map_(std::move(map)) {
    if (auto v = is_condition(map_); !v.ok)
        throw NotConditionError(v.lipschitz_witness
                                    ? "map is not Lipschitz"
                                    : "map is not injective");
}

bool compatible(const Condition& p, const Condition& q) {
    return is_condition(p.map().merged_with(q.map())).ok;
}

IncompatibilityWitness incompatibility_witness(const Condition& p, const Condition& q) {
    const auto v = is_condition(p.map().merged_with(q.map()));
    if (v.ok) throw std::invalid_argument("conditions are compatible");
    IncompatibilityWitness w;
    if (v.lipschitz_witness) {
        w.kind = IncompatibilityWitness::Kind::NotLipschitz;
        w.a = v.lipschitz_witness->a;
        w.a2 = v.lipschitz_witness->a2;
        w.k = v.lipschitz_witness->k;
    } else {
        w.kind = IncompatibilityWitness::Kind::NotInjective;
        w.a = v.injectivity_witness->first;
        w.a2 = v.injectivity_witness->second;
    }
    return w;
}

SeparatingVerdict is_separating(const SeparatingSet& x) {
    for (const auto& [s, t] : x.pairs)
        if (s.size() != t.size())
            return {false, "pair words differ in length"};
    for (std::size_t i = 0; i < x.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < x.pairs.size(); ++j) {
            if (!incomparable(x.pairs[i].first, x.pairs[j].first))
                return {false, "first coordinates are comparable"};
            if (!incomparable(x.pairs[i].second, x.pairs[j].second))
                return {false, "second coordinates are comparable"};
        }
    return {true, ""};
}

bool in_px(const Condition& p, const SeparatingSet& x) {
    if (auto v = is_separating(x); !v.ok)
        throw std::invalid_argument("not a separating set: " + v.reason);
    if (p.size() != x.pairs.size()) return false;
    std::vector<bool> box_used(x.pairs.size(), false);
    for (const auto& [a, b] : p.map().pairs()) {
        // incomparability makes the matching box unique if it exists
        bool boxed = false;
        for (std::size_t i = 0; i < x.pairs.size(); ++i) {
            if (a.extends(x.pairs[i].first) && b.extends(x.pairs[i].second)) {
                if (box_used[i]) return false;  // two pairs in one box
                box_used[i] = true;
                boxed = true;
                break;
            }
        }
        if (!boxed) return false;
    }
    return true;
}

namespace {

// Separating sets boxing p with words of length <= depth_bound are exactly
// the per-pair prefix families {(a_i|l_i, b_i|l_i)} that are separating, so
// the closure quantifier runs over length profiles.
bool for_each_boxing_profile(const Condition& p, std::size_t depth_bound,
                             const std::function<bool(const SeparatingSet&)>& visit) {
    const auto& pairs = p.map().pairs();
    const std::size_t n = pairs.size();
    std::vector<std::size_t> lengths(n, 0);
    while (true) {
        SeparatingSet x;
        x.pairs.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            x.pairs.emplace_back(pairs[i].first.prefix(lengths[i]),
                                 pairs[i].second.prefix(lengths[i]));
        if (is_separating(x).ok) {
            if (!visit(x)) return false;
        }
        // odometer over length profiles
        std::size_t i = n;
        while (i > 0 && lengths[i - 1] == depth_bound) lengths[--i] = 0;
        if (i == 0) break;
        ++lengths[i - 1];
    }
    return true;
}

}  // namespace

bool closure_member(const Condition& p, const std::vector<Condition>& d,
                    std::size_t depth_bound) {
    for (const Condition& q : d)
        if (q.size() != p.size())
            throw std::invalid_argument("closure candidates must match the size of p");
    return for_each_boxing_profile(p, depth_bound, [&](const SeparatingSet& x) {
        return std::any_of(d.begin(), d.end(),
                           [&](const Condition& q) { return in_px(q, x); });
    });
}

namespace {

std::set<Letter> letters_at(const std::vector<Point>& points, std::size_t index) {
    std::set<Letter> out;
    for (const Point& x : points) out.insert(x.at(index));
    return out;
}

std::vector<Point> domain_of(const PartialMap& m) {
    std::vector<Point> out;
    out.reserve(m.size());
    for (const auto& pr : m.pairs()) out.push_back(pr.first);
    return out;
}

std::vector<Point> range_of(const PartialMap& m) {
    std::vector<Point> out;
    out.reserve(m.size());
    for (const auto& pr : m.pairs()) out.push_back(pr.second);
    return out;
}

}  // namespace

Condition extend_condition(const Condition& p, const Point& a, const Point& b,
                           const DenseOracle& A, const DenseOracle& B) {
    PartialMap work = p.map();

    // target side first: some fresh-first-letter source point is sent to b,
    // which is Lipschitz-free because it splits from everything at index 0
    if (!work.contains_range(b)) {
        std::vector<Point> excluded = domain_of(work);
        excluded.push_back(a);
        const std::set<Letter> first_letters = letters_at(domain_of(work), 0);
        if (A.alphabet().is_finite() && first_letters.size() >= A.alphabet().size())
            throw NoFreshLetterError("no fresh first letter for the carrier point");
        const Point c = A.refine_fresh(Word{}, first_letters, excluded);
        work = work.extended(c, b);
    }

    // source side second: a is sent to a target point extending the image of
    // its deepest-agreeing partner, splitting off at a fresh letter
    if (!work.contains_domain(a)) {
        std::size_t deepest = 0;
        const Point* partner_image = nullptr;
        for (const auto& [x, y] : work.pairs()) {
            const LogDistance dist = distance(a, x);
            if (dist.is_infinite())
                throw std::invalid_argument("a is already covered by the domain");
            if (!partner_image || dist.value() > deepest) {
                deepest = dist.value();
                partner_image = &y;
            }
        }
        if (!partner_image)
            throw std::logic_error("extension reached an empty map while placing a");
        const std::set<Letter> used = letters_at(range_of(work), deepest);
        if (B.alphabet().is_finite() && used.size() >= B.alphabet().size())
            throw NoFreshLetterError("no fresh letter at the split index");
        const Point d = B.refine_fresh(partner_image->prefix(deepest), used, {});
        work = work.extended(a, d);
    }

    if (auto v = is_condition(work); !v.ok)
        throw std::logic_error("extension procedure produced an invalid condition");
    return Condition(std::move(work));
}

namespace {

std::size_t exact_max_antichain(const std::vector<std::uint32_t>& incompat,
                                std::uint32_t candidates, std::vector<std::size_t>& best,
                                std::vector<std::size_t>& chosen) {
    if (candidates == 0) {
        if (chosen.size() > best.size()) best = chosen;
        return best.size();
    }
    // bound: even taking every candidate cannot beat the best
    if (chosen.size() + static_cast<std::size_t>(__builtin_popcount(candidates)) <=
        best.size())
        return best.size();
    const std::uint32_t v = static_cast<std::uint32_t>(__builtin_ctz(candidates));
    // branch 1: skip v
    exact_max_antichain(incompat, candidates & ~(1u << v), best, chosen);
    // branch 2: take v, keep only members incompatible with it
    chosen.push_back(v);
    exact_max_antichain(incompat, candidates & ~(1u << v) & incompat[v], best, chosen);
    chosen.pop_back();
    return best.size();
}

}  // namespace

AntichainResult find_antichain(const std::vector<Condition>& conds,
                               std::size_t min_size) {
    const std::size_t n = conds.size();
    AntichainResult result;
    if (n == 0) {
        result.exact = true;
        result.meets_min_size = min_size == 0;
        return result;
    }
    std::vector<std::vector<bool>> inc(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            inc[i][j] = inc[j][i] = !compatible(conds[i], conds[j]);

    if (n <= 20) {
        std::vector<std::uint32_t> masks(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (inc[i][j]) masks[i] |= (1u << j);
        std::vector<std::size_t> best, chosen;
        exact_max_antichain(masks, (1u << n) - 1, best, chosen);
        result.indices = best;
        std::sort(result.indices.begin(), result.indices.end());
        result.exact = true;
    } else {
        // greedy: repeatedly take the condition compatible with the fewest
        // remaining ones, then drop everything compatible with it
        std::vector<bool> alive(n, true);
        while (true) {
            std::size_t pick = n;
            std::size_t best_compat = n + 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (!alive[i]) continue;
                std::size_t compat_count = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[j] && j != i && !inc[i][j]) ++compat_count;
                if (compat_count < best_compat) {
                    best_compat = compat_count;
                    pick = i;
                }
            }
            if (pick == n) break;
            result.indices.push_back(pick);
            alive[pick] = false;
            for (std::size_t j = 0; j < n; ++j)
                if (alive[j] && !inc[pick][j]) alive[j] = false;
        }
        std::sort(result.indices.begin(), result.indices.end());
        result.exact = false;
    }
    result.meets_min_size = result.indices.size() >= min_size;
    return result;
}

}  // namespace baire

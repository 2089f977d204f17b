#include "baire/back_and_forth.hpp"

#include <algorithm>

namespace baire {

namespace {

struct PartnerQuery {
    Word prefix;                  // common image prefix to depth k
    std::set<Letter> forbidden;   // image letters at k of the points realizing k
    std::size_t agreement = 0;    // k
};

// The choice data for extending by `fresh` against the (oriented) pair list:
// sources are the side fresh lives on, images the side the partner must come
// from.
PartnerQuery partner_query(const std::vector<std::pair<Point, Point>>& oriented,
                           const Point& fresh) {
    std::size_t k = 0;
    for (const auto& [src, img] : oriented) {
        const LogDistance d = distance(fresh, src);
        if (d.is_infinite())
            throw std::invalid_argument("point to extend by is already covered");
        k = std::max(k, d.value());
    }
    PartnerQuery q;
    q.agreement = k;
    for (const auto& [src, img] : oriented) {
        if (distance(fresh, src).value() == k) {
            if (q.prefix.empty() && k > 0) q.prefix = img.prefix(k);
            q.forbidden.insert(img.at(k));
        }
    }
    return q;
}

}  // namespace

BackAndForth::BackAndForth(const DenseOracle& A, const DenseOracle& B)
    : A_(A), B_(B) {
    const Point a0 = A_.enumerate(0);
    const Point b0 = B_.enumerate(0);
    current_ = PartialMap({{a0, b0}});
    seen_A_.push_back(a0);
    seen_B_.push_back(b0);
}

void BackAndForth::extend_checked(Point a, Point b, BnfStep::Direction dir,
                                  const Point& scheduled, std::size_t agreement) {
    if (auto v = check_isometry_extension(current_, a, b); !v.ok)
        throw std::logic_error("chosen partner breaks the isometry invariant");
    current_ = current_.extended(a, b);
    transcript_.push_back({dir, scheduled, dir == BnfStep::Direction::Forth ? b : a,
                           agreement});
}

void BackAndForth::forth(const Point& a) {
    if (current_.contains_domain(a))
        throw std::invalid_argument("forth point already in the domain");
    PartnerQuery q = partner_query(current_.pairs(), a);
    if (B_.alphabet().is_finite() && q.forbidden.size() >= B_.alphabet().size())
        throw NoFreshLetterError(
            "every letter is excluded at the split position; the current map "
            "cannot be a partial isometry on dense data");
    std::vector<Point> range_points;
    for (const auto& pr : current_.pairs()) range_points.push_back(pr.second);
    const Point b = B_.refine_fresh(q.prefix, q.forbidden, range_points);
    extend_checked(a, b, BnfStep::Direction::Forth, a, q.agreement);
}

void BackAndForth::back(const Point& b) {
    if (current_.contains_range(b))
        throw std::invalid_argument("back point already in the range");
    std::vector<std::pair<Point, Point>> flipped;
    flipped.reserve(current_.size());
    for (const auto& [x, y] : current_.pairs()) flipped.emplace_back(y, x);
    PartnerQuery q = partner_query(flipped, b);
    if (A_.alphabet().is_finite() && q.forbidden.size() >= A_.alphabet().size())
        throw NoFreshLetterError(
            "every letter is excluded at the split position; the current map "
            "cannot be a partial isometry on dense data");
    std::vector<Point> domain_points;
    for (const auto& pr : current_.pairs()) domain_points.push_back(pr.first);
    const Point a = A_.refine_fresh(q.prefix, q.forbidden, domain_points);
    extend_checked(a, b, BnfStep::Direction::Back, b, q.agreement);
}

void BackAndForth::run_to(std::size_t n) {
    for (std::size_t i = step_ + 1; i <= n; ++i) {
        const Point ai = A_.enumerate(i);
        if (std::find(seen_A_.begin(), seen_A_.end(), ai) != seen_A_.end())
            throw std::invalid_argument("oracle enumeration repeats a point");
        seen_A_.push_back(ai);
        if (!current_.contains_domain(ai)) forth(ai);

        const Point bi = B_.enumerate(i);
        if (std::find(seen_B_.begin(), seen_B_.end(), bi) != seen_B_.end())
            throw std::invalid_argument("oracle enumeration repeats a point");
        seen_B_.push_back(bi);
        if (!current_.contains_range(bi)) back(bi);

        step_ = i;
    }
}

PartialMap bnf_run(const DenseOracle& A, const DenseOracle& B, std::size_t n,
                   std::vector<BnfStep>* transcript) {
    BackAndForth run(A, B);
    run.run_to(n);
    if (transcript) *transcript = run.transcript();
    return run.current();
}

}  // namespace baire

#include "baire/slalom.hpp"

#include <algorithm>

namespace baire {

WidthProfile WidthProfile::pow_two_plus_one() {
    WidthProfile p;
    p.kind_ = Kind::PowTwoPlusOne;
    return p;
}

WidthProfile WidthProfile::n_times_pow_two() {
    WidthProfile p;
    p.kind_ = Kind::NTimesPowTwo;
    return p;
}

WidthProfile WidthProfile::table(std::vector<std::uint64_t> values) {
    WidthProfile p;
    p.kind_ = Kind::Table;
    p.values_ = std::move(values);
    return p;
}

std::uint64_t WidthProfile::at(std::size_t n) const {
    switch (kind_) {
        case Kind::PowTwoPlusOne:
            if (n >= 63) throw std::invalid_argument("width bound overflows at this level");
            return std::uint64_t{1} << (n + 1);
        case Kind::NTimesPowTwo:
            if (n >= 57) throw std::invalid_argument("width bound overflows at this level");
            return static_cast<std::uint64_t>(n) << (n + 1);
        case Kind::Table:
            if (n >= values_.size())
                throw std::out_of_range("width table has no value at this level");
            return values_[n];
    }
    throw std::logic_error("unreachable profile kind");
}

bool WidthProfile::is_corset(std::size_t upto) const {
    std::uint64_t prev = 1;
    for (std::size_t n = 0; n < upto; ++n) {
        const std::uint64_t v = at(n);
        if (v == 0 || v < prev) return false;
        prev = v;
    }
    return true;
}

bool slalom_width_ok(const Slalom& s, const WidthProfile& h) {
    for (std::size_t n = 0; n < s.depth(); ++n)
        if (s.at(n).size() > h.at(n)) return false;
    return true;
}

bool captures(const Slalom& s, const Point& x, CaptureMode mode) {
    const std::size_t depth = s.depth();
    if (mode == CaptureMode::Total) {
        for (std::size_t n = 0; n < depth; ++n)
            if (!s.at(n).count(x.at(n))) return false;
        return true;
    }
    // eventual: captured from some level n0 < depth onward
    if (depth == 0) return false;
    std::size_t n = depth;
    while (n > 0 && s.at(n - 1).count(x.at(n - 1))) --n;
    return n < depth;
}

BoundedSample::BoundedSample(Word base_in, std::vector<Point> points_in, Letter bound_in)
    : base(std::move(base_in)), points(std::move(points_in)), bound(bound_in) {
    if (bound == 0) throw std::invalid_argument("letter bound must be positive");
    for (const Point& x : points) {
        if (!x.extends(base))
            throw std::invalid_argument("sample point does not extend the base word");
        for (std::size_t i = base.size(); i < x.stem().size(); ++i)
            if (x.stem()[i] >= bound)
                throw std::invalid_argument("sample letter at or beyond the bound");
        if (x.tail() >= bound)
            throw std::invalid_argument("sample tail letter at or beyond the bound");
    }
}

Slalom slalom_from_hom(const TreeHom& h, const BoundedSample& sample,
                       std::size_t depth) {
    std::vector<std::set<Letter>> levels(depth);
    for (const Point& x : sample.points) {
        const Word image = h.apply(x.prefix(depth));
        for (std::size_t n = 0; n < depth; ++n) levels[n].insert(image[n]);
    }
    return Slalom(std::move(levels));
}

Slalom merge_slaloms(const std::vector<Slalom>& slaloms) {
    if (slaloms.empty()) return Slalom{};
    const std::size_t depth = slaloms.front().depth();
    for (const Slalom& s : slaloms)
        if (s.depth() != depth)
            throw std::invalid_argument("merged slaloms must share one depth");
    std::vector<std::set<Letter>> levels(depth);
    for (std::size_t n = 0; n < depth; ++n)
        for (std::size_t i = 0; i < std::min<std::size_t>(n, slaloms.size()); ++i)
            levels[n].insert(slaloms[i].at(n).begin(), slaloms[i].at(n).end());
    return Slalom(std::move(levels));
}

TreeWidthReport tree_width(const WordTree& tree, const WidthProfile* bound) {
    TreeWidthReport report;
    report.counts = tree.level_counts();
    if (bound) {
        report.within_bound.reserve(report.counts.size());
        for (std::size_t n = 0; n < report.counts.size(); ++n) {
            const bool ok = report.counts[n] <= bound->at(n);
            report.within_bound.push_back(ok);
            report.all_within = report.all_within && ok;
        }
    }
    return report;
}

WordTree hom_image_tree(const TreeHom& h, const WordTree& tree) {
    WordTree image;
    for (const Word& w : tree.nodes()) image.insert_closed(h.apply(w));
    return image;
}

bool covered_by(const Point& x, const std::vector<WordTree>& trees,
                std::size_t depth) {
    for (const WordTree& t : trees) {
        bool all = true;
        for (std::size_t n = 0; n <= depth && all; ++n) all = t.contains(x.prefix(n));
        if (all) return true;
    }
    return false;
}

}  // namespace baire

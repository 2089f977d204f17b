#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "baire/core.hpp"
#include "baire/hom.hpp"

namespace baire {

/// A finite-depth slalom: one finite letter set per level.
class Slalom {
public:
    Slalom() = default;
    explicit Slalom(std::vector<std::set<Letter>> levels) : levels_(std::move(levels)) {}

    std::size_t depth() const { return levels_.size(); }
    const std::set<Letter>& at(std::size_t n) const { return levels_.at(n); }
    const std::vector<std::set<Letter>>& levels() const { return levels_; }

    friend bool operator==(const Slalom&, const Slalom&) = default;

private:
    std::vector<std::set<Letter>> levels_;
};

/// A per-level cardinality bound. The two closed forms from the capture
/// argument get their own tags; anything else is an explicit table.
class WidthProfile {
public:
    enum class Kind { PowTwoPlusOne, NTimesPowTwo, Table };

    /// h(n) = 2^{n+1}
    static WidthProfile pow_two_plus_one();
    /// h(n) = n * 2^{n+1}
    static WidthProfile n_times_pow_two();
    static WidthProfile table(std::vector<std::uint64_t> values);

    Kind kind() const { return kind_; }
    std::uint64_t at(std::size_t n) const;
    const std::vector<std::uint64_t>& values() const { return values_; }

    /// Positive, nondecreasing on [0, upto); the shape required of a
    /// level-width bound for trees.
    bool is_corset(std::size_t upto) const;

private:
    Kind kind_ = Kind::Table;
    std::vector<std::uint64_t> values_;
};

/// Every level of the slalom within the profile's bound.
bool slalom_width_ok(const Slalom& s, const WidthProfile& h);

enum class CaptureMode { Total, Eventual };

/// Total: x(n) lies in the slalom set at every level below the depth.
/// Eventual: the same from some level n0 < depth onward.
bool captures(const Slalom& s, const Point& x, CaptureMode mode);

/// Points inside [base] whose letters beyond |base| stay below the bound.
struct BoundedSample {
    Word base;
    std::vector<Point> points;
    Letter bound = 2;

    BoundedSample() = default;
    BoundedSample(Word base, std::vector<Point> points, Letter bound = 2);
};

/// Level sets of the images of the sample under h: level n collects the
/// letter at position n of the image of each sample point. Captures every
/// image totally by construction, with level widths at most
/// bound^{n+1-|base|} for n >= |base|.
Slalom slalom_from_hom(const TreeHom& h, const BoundedSample& sample,
                       std::size_t depth);

/// Level n of the merge is the union of levels n of the first n inputs
/// (so level 0 is empty). All inputs must share one depth.
Slalom merge_slaloms(const std::vector<Slalom>& slaloms);

struct TreeWidthReport {
    std::vector<std::size_t> counts;       // nodes per level, 0..height
    std::vector<bool> within_bound;        // counts[n] <= c(n), when checked
    bool all_within = true;
};

/// Per-level node counts; checked against the profile when one is given.
TreeWidthReport tree_width(const WordTree& tree, const WidthProfile* bound = nullptr);

/// Downward closure of the image of every tree node under h. For
/// level-preserving homs the closure adds nothing and each image level is no
/// larger than its source level.
WordTree hom_image_tree(const TreeHom& h, const WordTree& tree);

/// Some tree contains every prefix of x up to the depth (inclusive).
bool covered_by(const Point& x, const std::vector<WordTree>& trees,
                std::size_t depth);

}  // namespace baire

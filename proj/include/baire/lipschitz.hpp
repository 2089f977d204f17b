#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "baire/core.hpp"
#include "baire/hom.hpp"

namespace baire {

/// A finite list of (point, image) pairs. Exact duplicates are collapsed at
/// construction; conflicting assignments to one point are kept and surface as
/// Lipschitz counterwitnesses, which is what makes "the union of two maps is
/// again a map" a checkable statement rather than a constructor error.
class PartialMap {
public:
    PartialMap() = default;
    explicit PartialMap(std::vector<std::pair<Point, Point>> pairs);

    const std::vector<std::pair<Point, Point>>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    bool contains_domain(const Point& a) const;
    bool contains_range(const Point& b) const;
    std::optional<Point> image_of(const Point& a) const;
    /// Distinct first coordinates.
    bool is_function() const;
    /// Distinct second coordinates.
    bool is_injective() const;

    /// Copy with one more pair appended.
    PartialMap extended(Point a, Point b) const;
    /// Union as relations (this first, exact duplicates collapsed).
    PartialMap merged_with(const PartialMap& other) const;
    /// True when every pair of this map occurs in other.
    bool submap_of(const PartialMap& other) const;

    friend bool operator==(const PartialMap&, const PartialMap&) = default;

private:
    std::vector<std::pair<Point, Point>> pairs_;
};

struct LipschitzWitness {
    Point a;
    Point a2;
    /// Least index where the images split while the arguments still agree.
    std::size_t k = 0;
};

struct LipschitzVerdict {
    bool ok = false;
    std::optional<LipschitzWitness> witness;
};

/// Distance between images never exceeds distance between arguments,
/// decided exactly on the eventually constant representations.
LipschitzVerdict check_lipschitz(const PartialMap& m);

/// Check of one extra pair against an already-Lipschitz map.
LipschitzVerdict check_lipschitz_extension(const PartialMap& m, const Point& a,
                                           const Point& b);

struct IsometryWitness {
    Point a;
    Point a2;
    LogDistance domain_distance;
    LogDistance range_distance;
};

struct IsometryVerdict {
    bool ok = false;
    std::optional<IsometryWitness> witness;
};

/// Distances preserved exactly on every pair.
IsometryVerdict check_isometry(const PartialMap& m);

/// Check of one extra pair against an already-isometric map.
IsometryVerdict check_isometry_extension(const PartialMap& m, const Point& a,
                                         const Point& b);

/// The table hom canonically represented by a Lipschitz partial map: every
/// prefix (up to the depth) of a domain point maps to the matching prefix of
/// its image. The table covers exactly the realized prefixes; evaluation
/// elsewhere is an OutOfTableError. Throws NotLipschitzError when the map
/// fails check_lipschitz (the table would be ill defined).
TreeHom induced_hom(const PartialMap& m, std::size_t depth,
                    Alphabet in = Alphabet::countable(),
                    Alphabet out = Alphabet::countable());

/// Values of the unique Lipschitz lift of m on the closure of its domain, at
/// the given target words: the image prefix through any domain point
/// witnessing the target. Requires check_lipschitz(m) ok; a target with no
/// witnessing domain point raises NotInClosureError.
std::vector<std::pair<Word, Word>> lift_to_closure(const PartialMap& m,
                                                   const std::vector<Word>& targets);

/// The inverse relation (pairs flipped).
PartialMap inverse_map(const PartialMap& m);

}  // namespace baire

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baire/lipschitz.hpp"
#include "baire/oracle.hpp"

namespace baire {

struct ConditionVerdict {
    bool ok = false;
    /// Set when the map is not Lipschitz (covers conflicting assignments to
    /// one point, which make the relation non-functional).
    std::optional<LipschitzWitness> lipschitz_witness;
    /// Set when two domain points share an image.
    std::optional<std::pair<Point, Point>> injectivity_witness;
};

/// Finite partial Lipschitz injection check.
ConditionVerdict is_condition(const PartialMap& m);

/// A validated finite partial Lipschitz injection.
class Condition {
public:
    Condition() = default;
    /// Throws NotConditionError when validation fails.
    explicit Condition(PartialMap map);

    const PartialMap& map() const { return map_; }
    std::size_t size() const { return map_.size(); }

    friend bool operator==(const Condition&, const Condition&) = default;

private:
    PartialMap map_;
};

/// Two conditions are compatible when their union (as relations) is again a
/// condition. Conflicting assignments to one point make the union
/// non-functional, hence incompatible.
bool compatible(const Condition& p, const Condition& q);

struct IncompatibilityWitness {
    enum class Kind { NotLipschitz, NotInjective };
    Kind kind = Kind::NotLipschitz;
    Point a;
    Point a2;
    /// Image split index for the Lipschitz case.
    std::optional<std::size_t> k;
};

/// Why the union of two incompatible conditions fails.
IncompatibilityWitness incompatibility_witness(const Condition& p, const Condition& q);

/// A finite family of equal-length word pairs, pairwise incomparable in each
/// coordinate: a product of disjoint boxes [s] x [t].
struct SeparatingSet {
    std::vector<std::pair<Word, Word>> pairs;
};

struct SeparatingVerdict {
    bool ok = false;
    std::string reason;  // empty when ok
};

SeparatingVerdict is_separating(const SeparatingSet& x);

/// The condition is boxed by the separating set: sizes match and the pairs of
/// p land bijectively in the boxes of x (each pair of p inside its own box
/// [s] x [t], no box shared). Requires is_separating(x).
bool in_px(const Condition& p, const SeparatingSet& x);

/// Depth-bounded closure membership: every separating set with words of
/// length at most depth_bound that boxes p also boxes some member of d.
/// Every such separating set is made of prefixes of p's pairs, so the
/// quantifier runs over the finitely many per-pair prefix-length profiles.
/// All members of d must have the size of p.
bool closure_member(const Condition& p, const std::vector<Condition>& d,
                    std::size_t depth_bound);

/// Extension of p by the requested source point a and target point b, by the
/// two-step procedure: first a source point c with globally fresh first
/// letter is mapped onto b, then a is mapped onto a target point d that
/// splits off from the deepest-agreeing image at a fresh letter. Points
/// already covered are skipped. Oracle exhaustion propagates in finite-sample
/// mode.
Condition extend_condition(const Condition& p, const Point& a, const Point& b,
                           const DenseOracle& A, const DenseOracle& B);

struct AntichainResult {
    std::vector<std::size_t> indices;  // positions into the input family
    bool exact = false;                // exhaustive search (families up to 20)
    bool meets_min_size = false;
};

/// Largest pairwise-incompatible subfamily: exact for up to 20 conditions,
/// greedy beyond. The result records whether it reaches min_size.
AntichainResult find_antichain(const std::vector<Condition>& conds,
                               std::size_t min_size = 1);

}  // namespace baire

#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "baire/core.hpp"
#include "baire/rng.hpp"

namespace baire {

/// Access to a countable dense (or finite sample) point set through an
/// injective enumeration plus refinement queries. Implementations may cache;
/// access is sequential, not concurrent.
class DenseOracle {
public:
    virtual ~DenseOracle() = default;

    virtual const Alphabet& alphabet() const = 0;

    /// i-th point of the set. Injective. Finite samples throw
    /// OracleExhaustedError past their size.
    virtual Point enumerate(std::size_t i) const = 0;

    /// Some point of the set extending s and avoiding exclude.
    virtual Point refine(const Word& s, const std::vector<Point>& exclude) const = 0;

    /// Some point extending s whose letter at position |s| avoids the
    /// forbidden set, again avoiding exclude.
    virtual Point refine_fresh(const Word& s, const std::set<Letter>& forbidden,
                               const std::vector<Point>& exclude) const = 0;
};

/// The canonical countable dense set: every point that is eventually the
/// constant tail letter. Enumeration is deterministic; a nonzero seed
/// shuffles it blockwise (still injective and onto the same set), which gives
/// reproducibly different runs per seed. Fresh letters are chosen minimal.
class EventuallyConstantDense final : public DenseOracle {
public:
    EventuallyConstantDense(Alphabet alphabet, Letter tail, std::uint64_t seed = 0);

    const Alphabet& alphabet() const override { return alphabet_; }
    Letter tail() const { return tail_; }
    std::uint64_t seed() const { return seed_; }

    Point enumerate(std::size_t i) const override;
    Point refine(const Word& s, const std::vector<Point>& exclude) const override;
    Point refine_fresh(const Word& s, const std::set<Letter>& forbidden,
                       const std::vector<Point>& exclude) const override;

private:
    const Word& canonical_stem(std::size_t i) const;
    void grow_stems(std::size_t upto) const;

    Alphabet alphabet_;
    Letter tail_;
    std::uint64_t seed_;
    mutable std::vector<Word> stems_;        // canonical stems, base order
    mutable std::size_t next_weight_ = 0;    // countable-alphabet generator state
    mutable std::size_t next_length_ = 0;    // finite-alphabet generator state
};

/// A finite point list standing in for a dense set. Queries scan the list in
/// order and throw OracleExhaustedError when nothing matches; this is how
/// non-extendability shows up at finite scale.
class FiniteSampleOracle final : public DenseOracle {
public:
    FiniteSampleOracle(Alphabet alphabet, std::vector<Point> points);

    const Alphabet& alphabet() const override { return alphabet_; }
    const std::vector<Point>& points() const { return points_; }

    Point enumerate(std::size_t i) const override;
    Point refine(const Word& s, const std::vector<Point>& exclude) const override;
    Point refine_fresh(const Word& s, const std::set<Letter>& forbidden,
                       const std::vector<Point>& exclude) const override;

private:
    Alphabet alphabet_;
    std::vector<Point> points_;
};

}  // namespace baire

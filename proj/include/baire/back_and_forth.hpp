#pragma once

#include <vector>

#include "baire/lipschitz.hpp"
#include "baire/oracle.hpp"

namespace baire {

/// One extension step of a run: which side was scheduled, the partner chosen
/// for it, and the agreement depth the choice had to respect.
struct BnfStep {
    enum class Direction { Forth, Back };
    Direction direction = Direction::Forth;
    Point scheduled;
    Point partner;
    std::size_t agreement = 0;
};

/// Stepwise construction of a partial isometry between two countable dense
/// sets. Starting from the first enumerated pair, each forth step adds a
/// scheduled source point a: with k the maximal agreement of a with the
/// current domain, the partner must extend the common image prefix to depth
/// exactly k, its letter at k differing from the image letter of every domain
/// point realizing k. Back steps mirror this through the inverse map. The
/// state stays an isometry after every step.
class BackAndForth {
public:
    /// Seeds the map with (first of A, first of B).
    BackAndForth(const DenseOracle& A, const DenseOracle& B);

    const PartialMap& current() const { return current_; }
    std::size_t step() const { return step_; }
    const std::vector<BnfStep>& transcript() const { return transcript_; }

    /// Adds a to the domain. a must not be in the domain already.
    void forth(const Point& a);
    /// Adds b to the range. b must not be in the range already.
    void back(const Point& b);

    /// Runs steps 1..n: forth on the n-th enumerated point of A, back on the
    /// n-th of B, skipping points the map already covers. Detects
    /// non-injective enumerations.
    void run_to(std::size_t n);

private:
    void extend_checked(Point a, Point b, BnfStep::Direction dir,
                        const Point& scheduled, std::size_t agreement);

    const DenseOracle& A_;
    const DenseOracle& B_;
    PartialMap current_;
    std::size_t step_ = 0;
    std::vector<BnfStep> transcript_;
    std::vector<Point> seen_A_;
    std::vector<Point> seen_B_;
};

/// Full run: the partial isometry covering the first n+1 enumerated points of
/// both oracles (size between n+1 and 2(n+1)). The transcript, when
/// requested, records every extension step.
PartialMap bnf_run(const DenseOracle& A, const DenseOracle& B, std::size_t n,
                   std::vector<BnfStep>* transcript = nullptr);

}  // namespace baire

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baire/core.hpp"
#include "baire/lipschitz.hpp"

namespace baire {

enum class ParityKind { Odd, Even };

/// A finite list of points inside the basic open [base], each nonzero beyond
/// |base| only at indices of the family's parity.
struct ParityCell {
    Word base;
    std::vector<Point> points;
};

/// Families of cells whose support parity forces every within-cell pair of
/// points to first differ at an index of that same parity. Two families of
/// opposite kinds admit no two-point sub-isometry between within-cell pairs.
struct ParityFamily {
    ParityKind kind = ParityKind::Odd;
    std::vector<ParityCell> cells;
};

/// Number of distinct admissible points in the cell over the given alphabet
/// within the stem budget; unbounded (nullopt) for a countable alphabet with
/// at least one admissible position.
std::optional<std::uint64_t> cell_capacity(ParityKind kind, const Word& base,
                                           const Alphabet& alphabet,
                                           std::size_t depth_budget);

/// Deterministic-in-seed family over the given cell words: per_cell distinct
/// eventually-zero points per cell, each obeying the parity constraint, with
/// nonzero support inside [|base|, |base| + depth_budget). Throws
/// std::invalid_argument when a cell cannot hold per_cell distinct points.
ParityFamily gen_family(ParityKind kind, const std::vector<Word>& cell_words,
                        std::size_t per_cell, const Alphabet& alphabet,
                        std::uint64_t seed, std::size_t depth_budget = 20);

/// Parity of the first disagreement index of two distinct points.
ParityKind first_diff_parity(const Point& x, const Point& y);

/// First violation of the family's parity/extension/distinctness invariants,
/// as text; nullopt when the family is valid.
std::optional<std::string> family_violation(const ParityFamily& family);

struct NoIsometryWitness {
    Word src_cell;
    Word dst_cell;
    Point x;
    Point y;
    Point u;
    Point v;
};

struct NoIsometryCertificate {
    std::uint64_t pairs_checked = 0;
    std::uint64_t isometric_pairs = 0;
    std::optional<NoIsometryWitness> witness;
};

/// Exhaustive tally over every within-cell pair {x, y} of the source family
/// against every ordered within-cell pair (u, v) of the destination family of
/// whether the two-point map {x -> u, y -> v} is an isometry, i.e. whether
/// the two disagreement exponents coincide. Opposite parities force the
/// count to zero; a nonzero count comes with a witness. Requires families of
/// opposite kinds and at least two points per source cell.
NoIsometryCertificate certify_no_isometry(const ParityFamily& src,
                                          const ParityFamily& dst);

}  // namespace baire

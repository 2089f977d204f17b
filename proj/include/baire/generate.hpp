#pragma once

#include "baire/core.hpp"
#include "baire/forcing.hpp"
#include "baire/hom.hpp"
#include "baire/rng.hpp"
#include "baire/slalom.hpp"

namespace baire::gen {

Word random_word(Rng& rng, std::size_t max_len, Letter letter_span);

Point random_point(Rng& rng, std::size_t max_stem, Letter letter_span);

/// Total table hom on all words up to the depth over one finite alphabet:
/// each node extends its parent's image by an independently random letter.
TreeHom random_total_table_hom(Rng& rng, const Alphabet& alphabet, std::size_t depth);

/// Partial table hom over the downward closure of the given words, images
/// drawn letterwise below the span.
TreeHom random_partial_table_hom(Rng& rng, const std::vector<Word>& domain,
                                 Letter letter_span);

/// Sample of distinct points extending a random base word of length at most
/// base_max_len, letters beyond the base below the bound, stems within the
/// depth.
BoundedSample random_bounded_sample(Rng& rng, std::size_t base_max_len,
                                    Letter base_letter_span, std::size_t count,
                                    std::size_t depth, Letter bound = 2);

/// Random binary tree of the given depth honoring the width bound per level,
/// with at least one full-depth path.
WordTree random_width_tree(Rng& rng, const WidthProfile& bound, std::size_t depth);

/// Random finite partial Lipschitz injection of the requested size, built by
/// repeatedly attaching a fresh source point to an image that splits off the
/// deepest-agreeing existing image at an unused letter.
Condition random_condition(Rng& rng, std::size_t size, std::size_t max_stem = 4,
                           Letter letter_span = 6);

}  // namespace baire::gen

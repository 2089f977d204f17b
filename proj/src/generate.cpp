#include "baire/generate.hpp"

#include <algorithm>
#include <set>

namespace baire::gen {

Word random_word(Rng& rng, std::size_t max_len, Letter letter_span) {
    const std::size_t len = static_cast<std::size_t>(rng.below(max_len + 1));
    Word w(len);
    for (auto& l : w) l = static_cast<Letter>(rng.below(letter_span));
    return w;
}

Point random_point(Rng& rng, std::size_t max_stem, Letter letter_span) {
    return Point(random_word(rng, max_stem, letter_span),
                 static_cast<Letter>(rng.below(letter_span)));
}

TreeHom random_total_table_hom(Rng& rng, const Alphabet& alphabet, std::size_t depth) {
    const Letter k = alphabet.size();
    std::map<Word, Word> entries;
    entries[Word{}] = Word{};
    std::vector<Word> frontier{Word{}};
    for (std::size_t level = 0; level < depth; ++level) {
        std::vector<Word> next;
        next.reserve(frontier.size() * k);
        for (const Word& w : frontier) {
            const Word& image = entries[w];
            for (Letter l = 0; l < k; ++l) {
                Word child = w;
                child.push_back(l);
                Word child_image = image;
                child_image.push_back(static_cast<Letter>(rng.below(k)));
                entries[child] = std::move(child_image);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return TreeHom::table(alphabet, alphabet, depth, std::move(entries));
}

TreeHom random_partial_table_hom(Rng& rng, const std::vector<Word>& domain,
                                 Letter letter_span) {
    WordTree closed = tree_from_words(domain);
    std::map<Word, Word> entries;
    std::size_t depth = 0;
    for (const Word& w : closed.nodes()) {
        depth = std::max(depth, w.size());
        if (w.empty()) {
            entries[w] = Word{};
            continue;
        }
        Word parent(w.begin(), w.end() - 1);
        Word image = entries[parent];  // parents precede children in set order
        image.push_back(static_cast<Letter>(rng.below(letter_span)));
        entries[w] = std::move(image);
    }
    if (entries.empty()) entries[Word{}] = Word{};
    return TreeHom::table(Alphabet::countable(), Alphabet::countable(), depth,
                          std::move(entries));
}

BoundedSample random_bounded_sample(Rng& rng, std::size_t base_max_len,
                                    Letter base_letter_span, std::size_t count,
                                    std::size_t depth, Letter bound) {
    Word base = random_word(rng, std::min(base_max_len, depth), base_letter_span);
    std::set<Point> points;
    std::size_t attempts = 0;
    while (points.size() < count && attempts++ < 64 * count + 64) {
        Word stem = base;
        const std::size_t extra = static_cast<std::size_t>(
            rng.below(depth - base.size() + 1));
        for (std::size_t i = 0; i < extra; ++i)
            stem.push_back(static_cast<Letter>(rng.below(bound)));
        points.insert(Point(std::move(stem), static_cast<Letter>(rng.below(bound))));
    }
    return BoundedSample(std::move(base),
                         std::vector<Point>(points.begin(), points.end()), bound);
}

WordTree random_width_tree(Rng& rng, const WidthProfile& bound, std::size_t depth) {
    WordTree tree;
    tree.insert_closed(Word{});
    std::vector<Word> level{Word{}};
    for (std::size_t n = 0; n < depth; ++n) {
        std::vector<Word> candidates;
        candidates.reserve(level.size() * 2);
        for (const Word& w : level)
            for (Letter l = 0; l < 2; ++l) {
                Word child = w;
                child.push_back(l);
                candidates.push_back(std::move(child));
            }
        rng.shuffle(candidates);
        const std::uint64_t cap = bound.at(n + 1);
        std::vector<Word> next;
        // keep a child of the first survivor so the tree reaches full depth
        Word forced = level.front();
        forced.push_back(static_cast<Letter>(rng.below(2)));
        next.push_back(forced);
        for (const Word& c : candidates) {
            if (next.size() >= cap) break;
            if (c != forced && (rng.below(3) != 0)) next.push_back(c);
        }
        for (const Word& c : next) tree.insert_closed(c);
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return tree;
}

Condition random_condition(Rng& rng, std::size_t size, std::size_t max_stem,
                           Letter letter_span) {
    PartialMap map;
    std::size_t attempts = 0;
    while (map.size() < size && attempts++ < 128 * size + 128) {
        const Point a = random_point(rng, max_stem, letter_span);
        if (map.contains_domain(a)) continue;
        Point b;
        if (map.empty()) {
            b = random_point(rng, max_stem, letter_span);
        } else {
            // deepest agreement of a with the existing domain
            std::size_t deepest = 0;
            const Point* partner = nullptr;
            for (const auto& [x, y] : map.pairs()) {
                const std::size_t e = distance(a, x).value();
                if (!partner || e > deepest) {
                    deepest = e;
                    partner = &y;
                }
            }
            // split off the partner image at a letter unused there
            std::set<Letter> used;
            for (const auto& [x, y] : map.pairs()) used.insert(y.at(deepest));
            Letter fresh = 0;
            while (used.count(fresh)) ++fresh;
            Word stem = partner->prefix(deepest);
            stem.push_back(fresh);
            const std::size_t junk = static_cast<std::size_t>(rng.below(3));
            for (std::size_t i = 0; i < junk; ++i)
                stem.push_back(static_cast<Letter>(rng.below(letter_span)));
            b = Point(std::move(stem), static_cast<Letter>(rng.below(letter_span)));
            if (map.contains_range(b)) continue;
        }
        if (map.empty() && map.contains_range(b)) continue;
        const PartialMap candidate = map.extended(a, b);
        if (is_condition(candidate).ok) map = candidate;
    }
    return Condition(map);
}

}  // namespace baire::gen

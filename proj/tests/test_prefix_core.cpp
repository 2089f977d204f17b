#include "doctest.h"

#include <algorithm>

#include "baire/core.hpp"
#include "baire/generate.hpp"
#include "baire/rng.hpp"

using namespace baire;

namespace {

// reference pruning: repeatedly drop maximal words that stop short of the
// tree's height, then read off one level
std::vector<Word> prune_and_enumerate(const WordTree& tree, std::size_t n) {
    std::set<Word> nodes = tree.nodes();
    if (nodes.empty()) return {};
    std::size_t height = 0;
    for (const Word& w : nodes) height = std::max(height, w.size());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Word> drop;
        for (const Word& w : nodes) {
            if (w.size() == height) continue;
            bool has_child = false;
            for (const Word& u : nodes)
                if (u.size() == w.size() + 1 && is_prefix(w, u)) has_child = true;
            if (!has_child) drop.push_back(w);
        }
        for (const Word& w : drop) {
            nodes.erase(w);
            changed = true;
        }
    }
    std::vector<Word> out;
    for (const Word& w : nodes)
        if (w.size() == n) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("word_meet returns the longest common prefix") {
    CHECK(word_meet({0, 1, 2}, {0, 1, 5}) == Word{0, 1});
    CHECK(word_meet({3}, {4}) == Word{});
    CHECK(word_meet({0, 1}, {0, 1, 7}) == Word{0, 1});
}

TEST_CASE("distance finds the first disagreement index") {
    CHECK(distance(Point({0, 0, 1}, 0), Point({0, 0, 2}, 0)) == LogDistance::exponent(2));
    CHECK(distance(Point({}, 0), Point({}, 0)) == LogDistance::infinite());
    CHECK(distance(Point({5}, 0), Point({}, 0)) == LogDistance::exponent(0));
}

TEST_CASE("points canonicalize stems ending in the tail") {
    CHECK(Point({0, 0}, 0) == Point({}, 0));
    CHECK(Point({1, 0, 0}, 0) == Point({1}, 0));
    CHECK(Point({1, 0}, 0).stem() == Word{1});
    CHECK(Point({0, 1}, 1) == Point({0}, 1));
}

TEST_CASE("in_basic_open checks initial segments of the expansion") {
    CHECK(in_basic_open({}, Point({4, 4}, 7)));
    CHECK(in_basic_open({0, 0}, Point({0}, 0)));
    CHECK_FALSE(in_basic_open({1}, Point({0}, 0)));
}

TEST_CASE("tree_from_words takes the downward closure") {
    const WordTree t = tree_from_words({{0, 1}});
    CHECK(t.size() == 3);
    CHECK(t.contains({}));
    CHECK(t.contains({0}));
    CHECK(t.contains({0, 1}));

    CHECK(tree_from_words({}).empty());

    const WordTree pair = tree_from_words({{0}, {1}});
    CHECK(pair.size() == 3);
}

TEST_CASE("tree_from_words is downward closed and idempotent") {
    Rng rng(2024);
    for (int t = 0; t < 50; ++t) {
        std::vector<Word> ws;
        for (int i = 0; i < 6; ++i) ws.push_back(gen::random_word(rng, 5, 3));
        const WordTree tree = tree_from_words(ws);
        for (const Word& w : tree.nodes())
            for (std::size_t k = 0; k < w.size(); ++k)
                CHECK(tree.contains(Word(w.begin(), w.begin() + k)));
        std::vector<Word> again(tree.nodes().begin(), tree.nodes().end());
        CHECK(tree_from_words(again) == tree);
    }
}

TEST_CASE("branches_to_depth prunes dead ends short of the height") {
    CHECK(branches_to_depth(tree_from_words({{0, 1}}), 2) ==
          std::vector<Word>{{0, 1}});

    std::vector<Word> full;
    for (Letter a = 0; a < 2; ++a)
        for (Letter b = 0; b < 2; ++b)
            for (Letter c = 0; c < 2; ++c) full.push_back({a, b, c});
    CHECK(branches_to_depth(tree_from_words(full), 2).size() == 4);

    CHECK(branches_to_depth(tree_from_words({{0, 1}, {0}}), 1) ==
          std::vector<Word>{{0}});

    // a dead end at the requested level is dropped
    CHECK(branches_to_depth(tree_from_words({{0, 1}, {1}}), 1) ==
          std::vector<Word>{{0}});
}

TEST_CASE("branches_to_depth matches the prune-and-enumerate reference") {
    Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        std::vector<Word> ws;
        for (int i = 0; i < 5; ++i) ws.push_back(gen::random_word(rng, 4, 2));
        const WordTree tree = tree_from_words(ws);
        for (std::size_t n = 0; n <= 5; ++n)
            CHECK(branches_to_depth(tree, n) == prune_and_enumerate(tree, n));
    }
}

TEST_CASE("the metric is an ultrametric") {
    Rng rng(7);
    for (int t = 0; t < 2000; ++t) {
        const Point x = gen::random_point(rng, 6, 3);
        const Point y = gen::random_point(rng, 6, 3);
        const Point z = gen::random_point(rng, 6, 3);
        const LogDistance xz = distance(x, z);
        const LogDistance xy = distance(x, y);
        const LogDistance yz = distance(y, z);
        if (xy.is_infinite() && yz.is_infinite()) {
            CHECK(xz.is_infinite());
        } else if (xz.is_finite()) {
            const std::size_t lower = std::min(
                xy.is_finite() ? xy.value() : SIZE_MAX,
                yz.is_finite() ? yz.value() : SIZE_MAX);
            CHECK(xz.value() >= lower);
        }
    }
}

TEST_CASE("distance exponent equals the meet length of expansions") {
    Rng rng(8);
    for (int t = 0; t < 500; ++t) {
        const Point x = gen::random_point(rng, 5, 3);
        const Point y = gen::random_point(rng, 5, 3);
        const LogDistance d = distance(x, y);
        if (d.is_finite()) {
            const std::size_t k = d.value();
            CHECK(word_meet(x.prefix(k + 1), y.prefix(k + 1)).size() == k);
        } else {
            const std::size_t horizon = 8;
            CHECK(x.prefix(horizon) == y.prefix(horizon));
        }
    }
}

TEST_CASE("canonical form is unique") {
    Rng rng(9);
    for (int t = 0; t < 2000; ++t) {
        // raw, possibly non-canonical representations
        const Word stem_x = gen::random_word(rng, 4, 2);
        const Word stem_y = gen::random_word(rng, 4, 2);
        const Letter tx = static_cast<Letter>(rng.below(2));
        const Letter ty = static_cast<Letter>(rng.below(2));
        const Point x(stem_x, tx);
        const Point y(stem_y, ty);
        // expansion equality computed from the raw data, not the points
        auto raw_at = [](const Word& stem, Letter tail, std::size_t i) {
            return i < stem.size() ? stem[i] : tail;
        };
        bool expansions_equal = tx == ty;
        for (std::size_t i = 0; i < 6 && expansions_equal; ++i)
            expansions_equal = raw_at(stem_x, tx, i) == raw_at(stem_y, ty, i);
        CHECK((x == y) == expansions_equal);
    }
}

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "baire/errors.hpp"

namespace baire {

using Letter = std::uint32_t;

/// A finite word over some alphabet. The empty word is allowed.
using Word = std::vector<Letter>;

/// Symbol set for a sequence space: the letters 0..k-1, or all of the
/// nonnegative integers.
class Alphabet {
public:
    static Alphabet finite(std::uint32_t size);
    static Alphabet countable() { return Alphabet{}; }

    bool is_finite() const { return size_.has_value(); }
    /// Number of letters; only meaningful for finite alphabets.
    std::uint32_t size() const;
    bool contains(Letter l) const { return !size_ || l < *size_; }
    bool contains(const Word& w) const;
    /// Every letter of *this is a letter of other.
    bool subset_of(const Alphabet& other) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    Alphabet() = default;
    std::optional<std::uint32_t> size_;
};

/// True when u is an initial segment of v (u == v included).
bool is_prefix(const Word& u, const Word& v);

/// Neither word is a prefix of the other.
bool incomparable(const Word& u, const Word& v);

/// Longest common prefix of u and v.
Word word_meet(const Word& u, const Word& v);

/// An eventually constant element of the sequence space: the stem followed by
/// the tail letter repeated forever. The constructor enforces the canonical
/// form (the stem never ends in the tail letter), so structural equality is
/// equality of the underlying infinite sequences.
class Point {
public:
    Point() = default;
    Point(Word stem, Letter tail);

    const Word& stem() const { return stem_; }
    Letter tail() const { return tail_; }

    /// Letter of the expansion at position i.
    Letter at(std::size_t i) const { return i < stem_.size() ? stem_[i] : tail_; }
    /// The first n letters of the expansion.
    Word prefix(std::size_t n) const;
    /// True when w is an initial segment of the expansion.
    bool extends(const Word& w) const;

    friend bool operator==(const Point&, const Point&) = default;
    friend std::strong_ordering operator<=>(const Point&, const Point&) = default;

private:
    Word stem_;
    Letter tail_ = 0;
};

/// Distance 2^{-k} kept as the exponent k, the first index where the two
/// expansions disagree. Equal points get the infinite value. Never a float.
class LogDistance {
public:
    static LogDistance infinite() { return LogDistance{}; }
    static LogDistance exponent(std::size_t k) {
        LogDistance d;
        d.k_ = k;
        return d;
    }

    bool is_infinite() const { return !k_.has_value(); }
    bool is_finite() const { return k_.has_value(); }
    /// The exponent; only valid when finite.
    std::size_t value() const;
    /// Agreement to depth k at least (infinite agrees with everything).
    bool at_least(std::size_t k) const { return !k_ || *k_ >= k; }
    /// The exponent as an optional, infinite mapping to nullopt.
    std::optional<std::size_t> finite_value() const { return k_; }

    friend bool operator==(const LogDistance&, const LogDistance&) = default;

private:
    std::optional<std::size_t> k_;
};

/// The ultrametric on eventually constant points, decided exactly.
LogDistance distance(const Point& x, const Point& y);

/// Membership of x in the basic open [s].
bool in_basic_open(const Word& s, const Point& x);

/// A finite downward-closed set of words. Nonempty trees contain the
/// empty word.
class WordTree {
public:
    WordTree() = default;

    bool contains(const Word& w) const { return nodes_.count(w) != 0; }
    bool empty() const { return nodes_.empty(); }
    std::size_t size() const { return nodes_.size(); }
    /// Greatest word length present; 0 for the empty tree.
    std::size_t height() const;
    /// All members of length n, in lexicographic order.
    std::vector<Word> level(std::size_t n) const;
    /// Number of members at each length 0..height().
    std::vector<std::size_t> level_counts() const;
    const std::set<Word>& nodes() const { return nodes_; }

    /// Inserts w together with all its prefixes.
    void insert_closed(const Word& w);

    friend bool operator==(const WordTree&, const WordTree&) = default;

private:
    std::set<Word> nodes_;
};

/// Downward closure of a set of words.
WordTree tree_from_words(const std::vector<Word>& ws);

/// Level-n words of T that lie on a path through T of full height, i.e. the
/// n-th level after pruning away dead ends that stop short of the deepest
/// level. Empty when n exceeds the height.
std::vector<Word> branches_to_depth(const WordTree& tree, std::size_t n);

}  // namespace baire

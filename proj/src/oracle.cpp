#include "baire/oracle.hpp"

#include <algorithm>

namespace baire {

namespace {

bool contains_point(const std::vector<Point>& ps, const Point& x) {
    return std::find(ps.begin(), ps.end(), x) != ps.end();
}

// words of the given length and letter sum, lexicographic
void words_with_sum(std::size_t len, std::uint64_t sum, Word& prefix,
                    std::vector<Word>& out) {
    if (len == 0) {
        if (sum == 0) out.push_back(prefix);
        return;
    }
    if (len == 1) {
        prefix.push_back(static_cast<Letter>(sum));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::uint64_t l = 0; l <= sum; ++l) {
        prefix.push_back(static_cast<Letter>(l));
        words_with_sum(len - 1, sum - l, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

EventuallyConstantDense::EventuallyConstantDense(Alphabet alphabet, Letter tail,
                                                 std::uint64_t seed)
    : alphabet_(std::move(alphabet)), tail_(tail), seed_(seed) {
    if (!alphabet_.contains(tail_))
        throw std::invalid_argument("tail letter outside the alphabet");
    stems_.push_back(Word{});  // the constant point comes first
    next_weight_ = 1;
    next_length_ = 1;
}

void EventuallyConstantDense::grow_stems(std::size_t upto) const {
    if (alphabet_.is_finite() && alphabet_.size() == 1) return;  // one-point space
    while (stems_.size() <= upto) {
        if (alphabet_.is_finite()) {
            // all words of the next length whose last letter is not the tail
            const Letter k = alphabet_.size();
            const std::size_t len = next_length_++;
            Word w(len, 0);
            while (true) {
                if (w.back() != tail_) stems_.push_back(w);
                std::size_t i = len;
                while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
                if (i == 0) break;
                ++w[i - 1];
            }
        } else {
            // all words with length + letter-sum equal to the next weight;
            // each weight class is finite, and every word shows up once
            const std::uint64_t weight = next_weight_++;
            std::vector<Word> batch;
            Word prefix;
            for (std::size_t len = 1; len <= weight; ++len)
                words_with_sum(len, weight - len, prefix, batch);
            for (Word& w : batch)
                if (w.back() != tail_) stems_.push_back(std::move(w));
        }
    }
}

const Word& EventuallyConstantDense::canonical_stem(std::size_t i) const {
    grow_stems(i);
    if (i >= stems_.size())
        throw OracleExhaustedError("the one-point space has a single element");
    return stems_[i];
}

Point EventuallyConstantDense::enumerate(std::size_t i) const {
    std::size_t index = i;
    if (seed_ != 0 && !(alphabet_.is_finite() && alphabet_.size() == 1)) {
        // permute each block of 64 consecutive indices
        constexpr std::size_t block = 64;
        const std::size_t base = (i / block) * block;
        std::vector<std::size_t> perm(block);
        for (std::size_t j = 0; j < block; ++j) perm[j] = base + j;
        Rng rng = Rng(seed_).derive(base);
        rng.shuffle(perm);
        index = perm[i % block];
    }
    return Point(canonical_stem(index), tail_);
}

Point EventuallyConstantDense::refine(const Word& s,
                                      const std::vector<Point>& exclude) const {
    if (!alphabet_.contains(s))
        throw std::invalid_argument("refinement word outside the alphabet");
    for (std::size_t j = 0;; ++j) {
        Word stem = s;
        const Word& suffix = canonical_stem(j);
        stem.insert(stem.end(), suffix.begin(), suffix.end());
        Point candidate(std::move(stem), tail_);
        if (!contains_point(exclude, candidate)) return candidate;
    }
}

Point EventuallyConstantDense::refine_fresh(const Word& s,
                                            const std::set<Letter>& forbidden,
                                            const std::vector<Point>& exclude) const {
    std::optional<Letter> fresh;
    if (alphabet_.is_finite()) {
        for (Letter l = 0; l < alphabet_.size(); ++l)
            if (!forbidden.count(l)) {
                fresh = l;
                break;
            }
    } else {
        Letter l = 0;
        while (forbidden.count(l)) ++l;
        fresh = l;
    }
    if (!fresh)
        throw OracleExhaustedError("every letter of the alphabet is forbidden");
    Word extended = s;
    extended.push_back(*fresh);
    return refine(extended, exclude);
}

FiniteSampleOracle::FiniteSampleOracle(Alphabet alphabet, std::vector<Point> points)
    : alphabet_(std::move(alphabet)), points_(std::move(points)) {
    for (const Point& x : points_)
        if (!alphabet_.contains(x.stem()) || !alphabet_.contains(x.tail()))
            throw std::invalid_argument("sample point outside the alphabet");
}

Point FiniteSampleOracle::enumerate(std::size_t i) const {
    if (i >= points_.size())
        throw OracleExhaustedError("finite sample has no further points");
    return points_[i];
}

Point FiniteSampleOracle::refine(const Word& s,
                                 const std::vector<Point>& exclude) const {
    for (const Point& x : points_)
        if (x.extends(s) && !contains_point(exclude, x)) return x;
    throw OracleExhaustedError("finite sample has no point in the requested open");
}

Point FiniteSampleOracle::refine_fresh(const Word& s,
                                       const std::set<Letter>& forbidden,
                                       const std::vector<Point>& exclude) const {
    for (const Point& x : points_)
        if (x.extends(s) && !forbidden.count(x.at(s.size())) &&
            !contains_point(exclude, x))
            return x;
    throw OracleExhaustedError("finite sample has no point with a fresh letter");
}

}  // namespace baire

#include "baire/core.hpp"

#include <algorithm>

namespace baire {

Alphabet Alphabet::finite(std::uint32_t size) {
    if (size == 0) throw std::invalid_argument("alphabet must have at least one letter");
    Alphabet a;
    a.size_ = size;
    return a;
}

std::uint32_t Alphabet::size() const {
    if (!size_) throw std::logic_error("countable alphabet has no size");
    return *size_;
}

bool Alphabet::contains(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [&](Letter l) { return contains(l); });
}

bool Alphabet::subset_of(const Alphabet& other) const {
    if (!other.size_) return true;
    return size_ && *size_ <= *other.size_;
}

bool is_prefix(const Word& u, const Word& v) {
    return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

bool incomparable(const Word& u, const Word& v) {
    return !is_prefix(u, v) && !is_prefix(v, u);
}

Word word_meet(const Word& u, const Word& v) {
    std::size_t n = std::min(u.size(), v.size());
    std::size_t k = 0;
    while (k < n && u[k] == v[k]) ++k;
    return Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
}

Point::Point(Word stem, Letter tail) : stem_(std::move(stem)), tail_(tail) {
    while (!stem_.empty() && stem_.back() == tail_) stem_.pop_back();
}

Word Point::prefix(std::size_t n) const {
    Word w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.push_back(at(i));
    return w;
}

bool Point::extends(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != at(i)) return false;
    return true;
}

std::size_t LogDistance::value() const {
    if (!k_) throw std::logic_error("infinite log-distance has no exponent");
    return *k_;
}

LogDistance distance(const Point& x, const Point& y) {
    const std::size_t m = std::max(x.stem().size(), y.stem().size());
    for (std::size_t i = 0; i < m; ++i)
        if (x.at(i) != y.at(i)) return LogDistance::exponent(i);
    // beyond every stem both expansions are constant
    if (x.tail() != y.tail()) return LogDistance::exponent(m);
    return LogDistance::infinite();
}

bool in_basic_open(const Word& s, const Point& x) { return x.extends(s); }

std::size_t WordTree::height() const {
    std::size_t h = 0;
    for (const Word& w : nodes_) h = std::max(h, w.size());
    return h;
}

std::vector<Word> WordTree::level(std::size_t n) const {
    std::vector<Word> out;
    for (const Word& w : nodes_)
        if (w.size() == n) out.push_back(w);
    return out;
}

std::vector<std::size_t> WordTree::level_counts() const {
    if (nodes_.empty()) return {};
    std::vector<std::size_t> counts(height() + 1, 0);
    for (const Word& w : nodes_) ++counts[w.size()];
    return counts;
}

void WordTree::insert_closed(const Word& w) {
    Word p;
    p.reserve(w.size());
    nodes_.insert(p);
    for (Letter l : w) {
        p.push_back(l);
        nodes_.insert(p);
    }
}

WordTree tree_from_words(const std::vector<Word>& ws) {
    WordTree t;
    for (const Word& w : ws) t.insert_closed(w);
    return t;
}

std::vector<Word> branches_to_depth(const WordTree& tree, std::size_t n) {
    std::vector<Word> out;
    if (tree.empty()) return out;
    const std::size_t h = tree.height();
    if (n > h) return out;
    for (const Word& w : tree.level(n)) {
        bool reaches_top = false;
        for (const Word& u : tree.level(h)) {
            if (is_prefix(w, u)) {
                reaches_top = true;
                break;
            }
        }
        if (reaches_top) out.push_back(w);
    }
    return out;
}

}  // namespace baire

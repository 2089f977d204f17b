#include "baire/hom.hpp"

#include <algorithm>
#include <string>

namespace baire {

namespace {

std::string word_text(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + "]";
}

}  // namespace

TreeHom TreeHom::table(Alphabet in, Alphabet out, std::size_t depth,
                       std::map<Word, Word> entries) {
    for (const auto& [key, image] : entries) {
        if (key.size() > depth)
            throw std::invalid_argument("table entry longer than table depth");
        if (!in.contains(key) || !out.contains(image))
            throw AlphabetMismatchError("table entry uses letters outside its alphabet");
        if (image.size() != key.size())
            throw std::invalid_argument("table image length differs from key length");
        if (!key.empty()) {
            Word parent(key.begin(), key.end() - 1);
            auto it = entries.find(parent);
            if (it == entries.end())
                throw std::invalid_argument("table entries are not downward closed at " +
                                            word_text(key));
            if (!is_prefix(it->second, image))
                throw std::invalid_argument("table images are not order preserving at " +
                                            word_text(key));
        }
    }
    if (!entries.empty() && entries.find(Word{}) == entries.end())
        throw std::invalid_argument("nonempty table lacks the empty word");
    TreeHom h(Kind::Table, std::move(in), std::move(out));
    h.form_ = TableForm{depth, std::move(entries)};
    return h;
}

TreeHom TreeHom::identity(Alphabet a) {
    TreeHom h(Kind::Identity, a, a);
    h.form_ = IdentityForm{};
    return h;
}

TreeHom TreeHom::parity(Alphabet in) {
    TreeHom h(Kind::Parity, std::move(in), Alphabet::finite(2));
    h.form_ = ParityForm{};
    return h;
}

TreeHom TreeHom::prepend(Alphabet a, Word prefix) {
    if (!a.contains(prefix))
        throw AlphabetMismatchError("prepend prefix uses letters outside the alphabet");
    TreeHom h(Kind::Prepend, a, a);
    h.form_ = PrependForm{std::move(prefix)};
    return h;
}

TreeHom TreeHom::relabel(Alphabet in, Alphabet out,
                         std::vector<std::map<Letter, Letter>> maps) {
    if (!in.subset_of(out))
        throw AlphabetMismatchError(
            "relabel passes unmapped letters through; input must embed in output");
    for (const auto& m : maps)
        for (const auto& [from, to] : m)
            if (!in.contains(from) || !out.contains(to))
                throw AlphabetMismatchError("relabel map uses letters outside its alphabet");
    TreeHom h(Kind::Relabel, std::move(in), std::move(out));
    h.form_ = RelabelForm{std::move(maps)};
    return h;
}

TreeHom TreeHom::compose(TreeHom outer, TreeHom inner) {
    if (!inner.alphabet_out().subset_of(outer.alphabet_in()))
        throw AlphabetMismatchError(
            "inner output alphabet does not embed in outer input alphabet");
    TreeHom h(Kind::Compose, inner.alphabet_in(), outer.alphabet_out());
    h.form_ = ComposeForm{std::make_shared<const TreeHom>(std::move(outer)),
                          std::make_shared<const TreeHom>(std::move(inner))};
    return h;
}

std::size_t TreeHom::level_shift() const {
    switch (kind_) {
        case Kind::Prepend:
            return std::get<PrependForm>(form_).prefix.size();
        case Kind::Compose: {
            const auto& c = std::get<ComposeForm>(form_);
            return c.outer->level_shift() + c.inner->level_shift();
        }
        default:
            return 0;
    }
}

Word TreeHom::apply(const Word& s) const {
    if (!in_.contains(s))
        throw AlphabetMismatchError("word uses letters outside the input alphabet");
    switch (kind_) {
        case Kind::Identity:
            return s;
        case Kind::Parity: {
            Word out(s.size());
            std::transform(s.begin(), s.end(), out.begin(),
                           [](Letter l) { return l % 2; });
            return out;
        }
        case Kind::Prepend: {
            const Word& p = std::get<PrependForm>(form_).prefix;
            Word out;
            out.reserve(p.size() + s.size());
            out.insert(out.end(), p.begin(), p.end());
            out.insert(out.end(), s.begin(), s.end());
            return out;
        }
        case Kind::Relabel: {
            const auto& maps = std::get<RelabelForm>(form_).maps;
            Word out(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                Letter l = s[i];
                if (i < maps.size()) {
                    auto it = maps[i].find(l);
                    if (it != maps[i].end()) l = it->second;
                }
                out[i] = l;
            }
            return out;
        }
        case Kind::Table: {
            const auto& t = std::get<TableForm>(form_);
            if (s.size() > t.depth)
                throw OutOfTableError("word " + word_text(s) + " exceeds table depth");
            auto it = t.entries.find(s);
            if (it == t.entries.end())
                throw OutOfTableError("word " + word_text(s) + " is not in the table");
            return it->second;
        }
        case Kind::Compose: {
            const auto& c = std::get<ComposeForm>(form_);
            return c.outer->apply(c.inner->apply(s));
        }
    }
    throw std::logic_error("unreachable hom kind");
}

Point TreeHom::apply_point(const Point& x) const {
    switch (kind_) {
        case Kind::Identity:
            return x;
        case Kind::Parity:
            return Point(apply(x.stem()), x.tail() % 2);
        case Kind::Prepend: {
            const Word& p = std::get<PrependForm>(form_).prefix;
            Word stem;
            stem.reserve(p.size() + x.stem().size());
            stem.insert(stem.end(), p.begin(), p.end());
            stem.insert(stem.end(), x.stem().begin(), x.stem().end());
            return Point(std::move(stem), x.tail());
        }
        case Kind::Relabel: {
            const auto& maps = std::get<RelabelForm>(form_).maps;
            // positions past the map list pass letters through, so the stem
            // only needs to cover the explicit maps
            std::size_t n = std::max(x.stem().size(), maps.size());
            return Point(apply(x.prefix(n)), x.tail());
        }
        case Kind::Compose: {
            const auto& c = std::get<ComposeForm>(form_);
            return c.outer->apply_point(c.inner->apply_point(x));
        }
        case Kind::Table:
            throw std::invalid_argument("a finite table does not determine a point image");
    }
    throw std::logic_error("unreachable hom kind");
}

std::size_t TreeHom::table_depth() const {
    return std::get<TableForm>(form_).depth;
}

const std::map<Word, Word>& TreeHom::table_entries() const {
    return std::get<TableForm>(form_).entries;
}

const Word& TreeHom::prepend_prefix() const {
    return std::get<PrependForm>(form_).prefix;
}

const std::vector<std::map<Letter, Letter>>& TreeHom::relabel_maps() const {
    return std::get<RelabelForm>(form_).maps;
}

const TreeHom& TreeHom::outer() const { return *std::get<ComposeForm>(form_).outer; }

const TreeHom& TreeHom::inner() const { return *std::get<ComposeForm>(form_).inner; }

Word apply_hom(const TreeHom& h, const Word& s) { return h.apply(s); }

TreeHom compose_homs(const TreeHom& outer, const TreeHom& inner) {
    return TreeHom::compose(outer, inner);
}

namespace {

// all words of the given length, lexicographic odometer order
std::vector<Word> all_words(const Alphabet& a, std::size_t len) {
    std::vector<Word> out;
    Word w(len, 0);
    const Letter k = a.size();
    while (true) {
        out.push_back(w);
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
    }
    return out;
}

}  // namespace

LevelReport level_analysis(const TreeHom& h, std::size_t depth) {
    if (!h.alphabet_in().is_finite() || !h.alphabet_out().is_finite())
        throw std::invalid_argument("level analysis requires finite alphabets");
    if (h.level_shift() != 0)
        throw std::invalid_argument("level analysis requires a level-preserving hom");
    const std::uint64_t in_size = h.alphabet_in().size();
    const std::uint64_t out_size = h.alphabet_out().size();
    std::uint64_t level_words = 1;
    LevelReport report;
    report.all_injective = true;
    report.all_surjective = true;
    for (std::size_t j = 0; j <= depth; ++j) {
        if (j > 0) {
            if (level_words > (1u << 24) / in_size)
                throw std::invalid_argument("level analysis depth too large to enumerate");
            level_words *= in_size;
        }
        std::set<Word> images;
        bool injective = true;
        for (const Word& w : all_words(h.alphabet_in(), j))
            if (!images.insert(h.apply(w)).second) injective = false;
        std::uint64_t target = 1;
        for (std::size_t i = 0; i < j; ++i) target *= out_size;
        const bool surjective = images.size() == target;
        report.levels.push_back({j, injective, surjective});
        report.all_injective = report.all_injective && injective;
        report.all_surjective = report.all_surjective && surjective;
    }
    return report;
}

}  // namespace baire

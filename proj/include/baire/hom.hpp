#pragma once

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "baire/core.hpp"

namespace baire {

/// A level- and order-preserving map on finite words, the combinatorial form
/// of a Lipschitz function on the sequence space. Kept as a closed combinator
/// algebra plus finite tables so homs can be serialized, enumerated
/// exhaustively, and analysed level by level.
///
/// The prepend combinator maps a word w to s^w and therefore shifts levels
/// upward by |s|; level_shift() reports the total shift (0 for everything
/// else). Image lengths always equal input length plus the shift.
class TreeHom {
public:
    enum class Kind { Identity, Parity, Prepend, Relabel, Table, Compose };

    /// Table entries must form a downward-closed set of input words with
    /// order- and level-preserving images. Totality up to the depth is not
    /// required; evaluating a missing entry raises OutOfTableError.
    static TreeHom table(Alphabet in, Alphabet out, std::size_t depth,
                         std::map<Word, Word> entries);
    static TreeHom identity(Alphabet a);
    /// Letters reduced mod 2; output alphabet is the binary one.
    static TreeHom parity(Alphabet in);
    /// w |-> prefix^w.
    static TreeHom prepend(Alphabet a, Word prefix);
    /// Position i relabels its letter through maps[i] (letters absent from a
    /// map, and every position past the list, pass through unchanged).
    static TreeHom relabel(Alphabet in, Alphabet out,
                           std::vector<std::map<Letter, Letter>> maps);
    static TreeHom compose(TreeHom outer, TreeHom inner);

    Kind kind() const { return kind_; }
    const Alphabet& alphabet_in() const { return in_; }
    const Alphabet& alphabet_out() const { return out_; }
    /// Amount by which image length exceeds input length.
    std::size_t level_shift() const;

    /// Image of s. Throws OutOfTableError off a partial table or beyond the
    /// table depth; AlphabetMismatchError for letters outside the input
    /// alphabet.
    Word apply(const Word& s) const;

    /// Image of an eventually constant point, for the combinators that
    /// preserve eventual constancy (everything except tables).
    Point apply_point(const Point& x) const;

    // structural accessors (serialization, analysis)
    std::size_t table_depth() const;
    const std::map<Word, Word>& table_entries() const;
    const Word& prepend_prefix() const;
    const std::vector<std::map<Letter, Letter>>& relabel_maps() const;
    const TreeHom& outer() const;
    const TreeHom& inner() const;

private:
    struct TableForm {
        std::size_t depth;
        std::map<Word, Word> entries;
    };
    struct PrependForm {
        Word prefix;
    };
    struct RelabelForm {
        std::vector<std::map<Letter, Letter>> maps;
    };
    struct ComposeForm {
        std::shared_ptr<const TreeHom> outer;
        std::shared_ptr<const TreeHom> inner;
    };
    struct IdentityForm {};
    struct ParityForm {};

    TreeHom(Kind k, Alphabet in, Alphabet out)
        : kind_(k), in_(std::move(in)), out_(std::move(out)) {}

    Kind kind_;
    Alphabet in_;
    Alphabet out_;
    std::variant<IdentityForm, ParityForm, PrependForm, RelabelForm, TableForm,
                 ComposeForm>
        form_;
};

Word apply_hom(const TreeHom& h, const Word& s);

/// Compose node; apply distributes as outer after inner. The inner output
/// alphabet must embed into the outer input alphabet.
TreeHom compose_homs(const TreeHom& outer, const TreeHom& inner);

struct LevelInfo {
    std::size_t level = 0;
    bool injective = false;
    bool surjective = false;
};

struct LevelReport {
    std::vector<LevelInfo> levels;
    bool all_injective = false;
    bool all_surjective = false;
};

/// Injectivity/surjectivity of the restriction of h to each level j <= depth.
/// Requires finite input and output alphabets and a hom total to the depth.
LevelReport level_analysis(const TreeHom& h, std::size_t depth);

}  // namespace baire

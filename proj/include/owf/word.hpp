// word.hpp -- finite words over small alphabets and the primitive
// repetition predicates (overlap, square) with witness-producing variants.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>
#include <iosfwd>

namespace owf {

using Letter = std::uint8_t;

// A finite word over {0,1} (binary) or {0,1,2} (ternary). Immutable after
// construction. The alphabet size travels with the value so binary-only
// operations can reject ternary input instead of silently misbehaving.
// Equality is letter-by-letter; the alphabet tag does not participate.
class Word {
  public:
    Word() = default;  // empty binary word

    Word(std::vector<Letter> letters, int alphabet_size);

    // Parses an ASCII string over '0','1','2'. The one-argument form infers
    // the alphabet: ternary if a '2' occurs, binary otherwise. Any other
    // character raises std::invalid_argument naming the offending position.
    static Word parse(std::string_view text);
    static Word parse(std::string_view text, int alphabet_size);

    int alphabet_size() const { return alphabet_size_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    std::span<const Letter> letters() const { return letters_; }

    std::string str() const;

    Word subword(std::size_t pos, std::size_t count) const;
    Word prefix(std::size_t count) const { return subword(0, count); }
    Word suffix(std::size_t count) const { return subword(size() - count, count); }

    bool starts_with(const Word& p) const;
    bool ends_with(const Word& s) const;

    Word appended(Letter a) const;
    Word prepended(Letter a) const;
    Word rotated_left(std::size_t r) const;

    friend Word operator+(const Word& lhs, const Word& rhs);

    friend bool operator==(const Word& lhs, const Word& rhs) {
        return lhs.letters_ == rhs.letters_;
    }
    // Plain lexicographic order on letters (a proper prefix sorts first).
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
        return lhs.letters_ <=> rhs.letters_;
    }

  private:
    std::vector<Letter> letters_;
    int alphabet_size_ = 2;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Canonical enumeration order used throughout: shorter first, then
// lexicographic.
struct LengthLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Locates a factor axaxa: host[start+i] == host[start+i+period] for all
// 0 <= i <= period, and start + 2*period < |host|. period = |ax| >= 1, so
// aaa is reported as period 1.
struct OverlapWitness {
    std::size_t start = 0;
    std::size_t period = 0;
    friend bool operator==(const OverlapWitness&, const OverlapWitness&) = default;
};

// Locates a factor xx with nonempty root:
// host[start..start+root_length) == host[start+root_length..start+2*root_length).
struct SquareWitness {
    std::size_t start = 0;
    std::size_t root_length = 0;
    friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

// Naive all-positions scan; this is the reference semantics every faster
// checker in the toolkit must agree with. The returned witness is canonical:
// smallest start, ties broken by smallest period.
std::optional<OverlapWitness> find_overlap(const Word& w);
bool is_overlap_free(const Word& w);

// The root x when w = xx, absent otherwise.
std::optional<Word> square_root(const Word& w);

// Smallest start, then smallest root.
std::optional<SquareWitness> find_square(const Word& w);
bool is_squarefree(const Word& w);

// Letterwise 0 <-> 1. Rejects non-binary input. Involution.
Word complement(const Word& w);

// All rotations of w, duplicates collapsed.
std::set<Word> conjugates(const Word& w);

}  // namespace owf

// packed_word.hpp -- binary words of length <= 64 packed one letter per bit,
// with O(1) window tests for repetitions.
//
// The search engines and exhaustive sweeps run on this representation; the
// naive scan in word.hpp stays the reference semantics and the two are
// cross-checked exhaustively in the tests.

#pragma once

#include <cstdint>
#include <optional>

#include "owf/word.hpp"

namespace owf {

// Low `bits` bits set; tolerates bits == 64.
constexpr std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

// Bit i holds the letter at position i. Bits above `len` are always zero;
// the window tests below rely on that.
struct PackedWord {
    std::uint64_t bits = 0;
    int len = 0;

    static constexpr int kMaxLen = 64;

    // Requires a binary word of size <= 64.
    static PackedWord from_word(const Word& w);
    Word to_word() const;

    int letter(int i) const { return static_cast<int>((bits >> i) & 1u); }

    PackedWord appended(int a) const {
        return {bits | (std::uint64_t(a) << len), len + 1};
    }

    // Requires len + rhs.len <= 64.
    PackedWord concat(PackedWord rhs) const {
        if (rhs.len == 0) return *this;
        return {bits | (rhs.bits << len), len + rhs.len};
    }

    friend bool operator==(const PackedWord&, const PackedWord&) = default;
};

// Same canonical witness as find_overlap: smallest start, then smallest
// period. Each (start, period) window test is a single XOR + mask.
std::optional<OverlapWitness> packed_find_overlap(PackedWord w);
bool packed_has_overlap(PackedWord w);

// True iff some overlap ends exactly at position `end`. Appending a letter
// can only create overlaps ending at the new last position, so extending a
// known-overlap-free word needs just packed_overlap_ending_at(w, len-1).
bool packed_overlap_ending_at(PackedWord w, int end);
bool packed_overlap_ending_at_last(PackedWord w);

bool packed_is_square(PackedWord w);
bool packed_has_square(PackedWord w);

// 0 -> 01, 1 -> 10; requires len <= 32.
PackedWord packed_mu(PackedWord w);

std::optional<PackedWord> packed_mu_preimage(PackedWord w);

PackedWord packed_complement(PackedWord w);

// Lexicographic from position 0; a proper prefix sorts first.
bool packed_lex_less(PackedWord a, PackedWord b);

// Shorter first, then lexicographic -- matches LengthLexLess on words.
bool packed_length_lex_less(PackedWord a, PackedWord b);

}  // namespace owf

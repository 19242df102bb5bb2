// factorization.hpp -- the u * mu(y) * v factorization of overlap-free
// binary words, one-letter extendability flags, the finite a*x^2*b = mu(y)
// equation solver, the end-block obstruction sweep, and square-decomposition
// search within a fixed word.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "owf/word.hpp"

namespace owf {

// w == u + mu(y) + v with u, v drawn from {eps, 0, 1, 00, 11} and y
// overlap-free. Unique once |w| >= 7; short words can have several.
struct RSFactorization {
    Word u;
    Word y;
    Word v;
    friend bool operator==(const RSFactorization&, const RSFactorization&) = default;
};

// All valid factorizations of an overlap-free binary word, found by trying
// the 25 (u, v) end pairs, stripping them, and testing the remainder with
// mu_preimage. Never empty. Throws std::invalid_argument when the input
// contains an overlap (the witness is named in the message).
std::vector<RSFactorization> rs_factorize(const Word& w);

// left == 1 iff some letter a makes a+w overlap-free; right symmetric.
struct ExtensionFlags {
    int left = 0;
    int right = 0;
    friend bool operator==(const ExtensionFlags&, const ExtensionFlags&) = default;
};

// Direct four-way test on a binary word.
ExtensionFlags extension_flags(const Word& w);

// All binary x with 1 <= |x| <= root_bound admitting letters a, b such that
// a x x b is a mu-image with overlap-free preimage. For root_bound >= 3 the
// answer is exactly {0, 1, 010, 101}; no even-length x ever qualifies.
std::set<Word> solve_lemma4(int root_bound);

struct Lemma5Report {
    int min_len = 0;
    int max_len = 0;
    std::uint64_t words_checked = 0;
    std::uint64_t left_cases = 0;    // factorizations with u == aa
    std::uint64_t right_cases = 0;   // factorizations with v == aa
    std::uint64_t prefix_claims = 0; // y-begins-with-aba checks performed
    std::vector<Word> counterexamples;  // sorted, must stay empty
    bool pass() const { return counterexamples.empty(); }
};

// Exhaustively over every overlap-free binary word with
// min_len <= |w| <= max_len: a doubled-letter u forces left flag 0, a
// doubled-letter v forces right flag 0, and when u == aa the stripped y
// begins with complement(a) a complement(a). Requires 16 <= min_len <= max_len.
Lemma5Report check_lemma5(int min_len, int max_len);

// An ordered list of nonempty roots x1..xk; concatenating xi*xi over i
// reproduces the host word.
struct SquareDecomposition {
    std::vector<Word> roots;
    friend bool operator==(const SquareDecomposition&, const SquareDecomposition&) = default;
};

// All ways to write w as a concatenation of at most max_k nonempty squares,
// by cut-point recursion left to right; output is lexicographic in cut
// positions. The empty word has the single empty decomposition.
std::vector<SquareDecomposition> square_decompositions(const Word& w, int max_k);

}  // namespace owf

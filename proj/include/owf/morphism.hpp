// morphism.hpp -- the Thue-Morse morphism, its iterates and inverse on
// images, and the letter-doubling morphism on arbitrary alphabets.

#pragma once

#include <optional>

#include "owf/word.hpp"

namespace owf {

// 0 -> 01, 1 -> 10. Binary input only. |mu(w)| = 2|w|; block i of the image
// is w[i], complement(w[i]).
Word mu(const Word& w);

// i-fold iteration, i >= 0; mu_power(w, 0) == w.
Word mu_power(const Word& w, int iterations);

// Inverse of mu on images: returns y with mu(y) == w when every length-2
// block of w at an even position is 01 or 10, absent otherwise.
std::optional<Word> mu_preimage(const Word& w);

// a -> aa on any alphabet. |doubling(w)| = 2|w|.
Word doubling(const Word& w);

}  // namespace owf

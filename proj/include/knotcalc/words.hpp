#pragma once

#include <string>
#include <vector>

#include "knotcalc/errors.hpp"

namespace knotcalc {

// Free-group word: letter g in 1..rank is a generator, -g its inverse.
// Zero is never a letter.
using Word = std::vector<int>;

// Cancels adjacent inverse pairs until none remain.
Word reduce(const Word& w);

Word inverse_word(const Word& w);

// Reduces, then strips matching first/last letters; the result is a
// cyclically reduced representative of the conjugacy class.
Word cyclic_reduce(const Word& w);

// Lexicographically least rotation of cyclic_reduce(w); equal canonical
// forms characterize conjugacy in a free group.
Word canonical_cyclic(const Word& w);

// reduce(by . w . by^-1)
Word conjugate(const Word& w, const Word& by);

int max_generator(const Word& w);

// "abA" -> [1, 2, -1]; lowercase = generator, uppercase = inverse.
// FormatError on non-letter input; AlphabetMismatch when a letter exceeds
// rank (rank <= 0 disables the check).
Word parse_word(const std::string& text, int rank = 0);

std::string word_to_string(const Word& w);

}  // namespace knotcalc

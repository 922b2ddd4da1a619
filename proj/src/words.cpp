#include "knotcalc/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace knotcalc {

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word out = reduce(w);
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(lo),
              out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word canonical_cyclic(const Word& w) {
  Word cyc = cyclic_reduce(w);
  if (cyc.size() < 2) return cyc;
  Word best = cyc;
  Word rot = cyc;
  for (std::size_t i = 1; i < cyc.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

Word conjugate(const Word& w, const Word& by) {
  Word out = by;
  out.insert(out.end(), w.begin(), w.end());
  Word inv = inverse_word(by);
  out.insert(out.end(), inv.begin(), inv.end());
  return reduce(out);
}

int max_generator(const Word& w) {
  int top = 0;
  for (int letter : w) top = std::max(top, std::abs(letter));
  return top;
}

Word parse_word(const std::string& text, int rank) {
  Word out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    int letter;
    if (std::islower(c)) {
      letter = static_cast<int>(c - 'a') + 1;
    } else if (std::isupper(c)) {
      letter = -(static_cast<int>(c - 'A') + 1);
    } else {
      throw DomainError(Errc::FormatError,
                        std::string("word letter must be a-z or A-Z, got '") +
                            text[i] + "'",
                        i);
    }
    if (rank > 0 && std::abs(letter) > rank) {
      throw DomainError(Errc::AlphabetMismatch,
                        std::string("generator '") + text[i] +
                            "' exceeds rank " + std::to_string(rank),
                        i);
    }
    out.push_back(letter);
  }
  return out;
}

std::string word_to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (int letter : w) {
    int g = std::abs(letter);
    if (g < 1 || g > 26) {
      throw DomainError(Errc::FormatError,
                        "generator index " + std::to_string(g) +
                            " not printable as a letter");
    }
    out.push_back(letter > 0 ? static_cast<char>('a' + g - 1)
                             : static_cast<char>('A' + g - 1));
  }
  return out;
}

}  // namespace knotcalc

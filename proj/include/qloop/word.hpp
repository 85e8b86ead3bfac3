#pragma once

// Words in the loop generators and finite linear combinations of them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qloop/scalars.hpp"

namespace qloop {

// One generator e_{color, k} (or f_{color, k} on the negative side; the sign
// lives with the element, not the letter).
struct Letter {
  int color = 0;
  int k = 0;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Letter order: a higher loop exponent makes a letter smaller; ties break by
// color, lower color smaller.
bool letter_less(const Letter& a, const Letter& b);
// Lexicographic extension with a proper prefix smaller than the whole word.
bool word_less(const Word& a, const Word& b);
int word_compare(const Word& a, const Word& b);  // -1, 0, +1

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return word_less(a, b);
  }
};

// Letters of each color; throws InputError on colors outside 0..ncolors-1.
std::vector<int> word_dimension(const Word& w, int ncolors);
long word_weight(const Word& w);  // sum of exponents

std::string word_str(const Word& w);  // "0:1,2:-3" using numeric colors

class FreeElem {
 public:
  using Map = std::map<Word, QRat, WordLess>;

  FreeElem() = default;
  static FreeElem single(const Word& w, const QRat& c = QRat(1));

  bool is_zero() const { return t_.empty(); }
  size_t nterms() const { return t_.size(); }
  const Map& terms() const { return t_; }
  void add(const Word& w, const QRat& c);

  FreeElem operator-() const;
  FreeElem operator+(const FreeElem& o) const;
  FreeElem operator-(const FreeElem& o) const;
  FreeElem& operator+=(const FreeElem& o);
  FreeElem& operator-=(const FreeElem& o);
  // Concatenation product of the free algebra.
  FreeElem operator*(const FreeElem& o) const;
  FreeElem scaled(const QRat& c) const;
  bool operator==(const FreeElem& o) const { return t_ == o.t_; }
  bool operator!=(const FreeElem& o) const { return !(*this == o); }

  // Common dimension vector of all words; nullopt for mixed dimensions.
  std::optional<std::vector<int>> dimension(int ncolors) const;

  std::string str() const;

 private:
  Map t_;
};

}  // namespace qloop

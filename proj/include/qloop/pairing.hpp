#pragma once

// The bialgebra pairing between the free half and the shuffle half, computed
// as an iterated constant term, together with the leading-word
// correspondence that makes the pairing triangular.

#include <vector>

#include "qloop/cartan.hpp"
#include "qloop/multipoly.hpp"
#include "qloop/shuffle.hpp"
#include "qloop/word.hpp"

namespace qloop {

// One rational kernel num/den in the two variables {big, small}.  The
// integrand carries the reciprocal den/num, expanded as a power series in
// small/big: the contour puts |big| outside |small|, so num must have a
// monomial free of the small variable to lead the expansion.
struct CTFactor {
  MLaurent num, den;
  VarId big, small;
};

// A constant-term extraction problem.  vars lists the contour order,
// outermost (largest) variable first; the value is
// numerator * prod(den_f / num_f) over the factors, every reciprocal
// expanded toward later variables.
struct CTProblem {
  std::vector<VarId> vars;
  MLaurent numerator;
  std::vector<CTFactor> factors;
};

// Coefficient of the trivial monomial in the expansion of P.  The truncation
// order is derived from the exponents of the numerator (suffix sums along
// the contour order), and a recomputation one order higher guards the
// derivation; `extra` widens the derived order so callers can observe the
// stability directly.  Throws InputError on problems violating the contour
// conventions above, MathError if widening ever changed the value.
QRat constant_term(const CTProblem& P, int extra = 0);

// <x, R>: pairing of a positive free element against a negative shuffle
// element, one constant term per word of x, extended bilinearly.  Degree
// mismatches contribute zero.  Throws InputError when R is not a valid
// negative-half element for C or a word of x uses an unknown color.
QRat pair_UV(const CartanMatrix& C, const FreeElem& x, const ShufElem& R);

// <R, y>: the mirror pairing of a positive shuffle element against a
// negative free element, expanded on the opposite contour.
QRat pair_VU(const CartanMatrix& C, const ShufElem& R, const FreeElem& y);

// Pairing of the two loop halves: (q^{-1}-q)^{-|n|} <x, image of y>, where
// the image is the negative shuffle realization of y and |n| the letter
// count.  Both inputs must be dimension-homogeneous.
QRat pair_UU(const CartanMatrix& C, const FreeElem& x, const FreeElem& y);

// The largest word, over all monomials of the cleared form of R and all
// orderings of each monomial's slots, under the pairing's triangularity.
// Throws InputError on zero or positive-half input.
Word leading_word(const ShufElem& R);

// The symmetrized monomial whose leading word is w; inverse to leading_word
// on monomial inputs.  w must be non-increasing.
ShufElem associated_polynomial(int ncolors, const Word& w);

}  // namespace qloop

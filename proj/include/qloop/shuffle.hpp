#pragma once

// The big shuffle algebras: symmetric rational functions with prescribed
// denominators, the shuffle product, wheel membership, and the geometric
// variant obtained by the kernel change of the Omega twist.

#include <optional>

#include "qloop/word.hpp"
#include "qloop/zigzag.hpp"

namespace qloop {

// Value = numerator / prod_{colors i<j} prod_{a<=n_i, b<=n_j} (z_ia - z_jb),
// numerator symmetric in the slots of each color.
struct ShufElem {
  int sgn = +1;  // +1 or -1 picks the positive or negative half
  std::vector<int> n;
  MLaurent num;
  bool operator==(const ShufElem& o) const {
    return sgn == o.sgn && n == o.n && num == o.num;
  }
};

ShufElem shuf_zero(int sgn, int ncolors);
ShufElem shuf_unit(int sgn, int ncolors);
// z_{color,1}^kexp at dimension epsilon_color.
ShufElem shuf_generator(int sgn, int ncolors, int color, int kexp);

long total_size(const std::vector<int>& n);
bool is_symmetric(const ShufElem& R);

ShufElem shuffle_mul(const CartanMatrix& C, const ShufElem& A,
                     const ShufElem& B);

// Algebra map sending each length-n word to the shuffle product of its
// letters' generators.  All words must share one dimension vector.
ShufElem upsilon(const CartanMatrix& C, const FreeElem& x, int sgn);

// z -> z^{-1}, an isomorphism onto the opposite-sign algebra.
ShufElem invert_variables(const ShufElem& R);

struct WheelWitness {
  DistZigZag Z;
  int required = 0;
  int got = 0;
};
struct WheelReport {
  bool ok = true;
  std::optional<WheelWitness> witness;
};

// Specialize both rows of Z into powers of q times x resp. y and check
// divisibility of the numerator by (x - y)^required.
bool wheel_general(const CartanMatrix& C, const ShufElem& R,
                   const GeneralZigZag& Z);
// All distinguished zig-zags fitting the dimension vector, every vertex pair.
WheelReport wheel_member(const CartanMatrix& C, const ShufElem& R);

// Geometric side: one symmetric Laurent polynomial (the monomial denominators
// of the kernel are folded in as negative exponents).
struct GeomElem {
  std::vector<int> n;
  MLaurent p;
  bool operator==(const GeomElem& o) const { return n == o.n && p == o.p; }
};

// Multiply a positive-half element through by the geometric correction
// product; always lands in Laurent polynomials.
GeomElem omega(const CartanMatrix& C, const ShufElem& R);

GeomElem shuffle_mul_geom(const CartanMatrix& C, const GeomElem& A,
                          const GeomElem& B);
GeomElem upsilon_geom(const CartanMatrix& C, const FreeElem& x);

struct GeomWheelWitness {
  GeneralZigZag Z;
  int required = 0;
  int got = 0;
};
struct GeomWheelReport {
  bool ok = true;
  std::optional<GeomWheelWitness> witness;
};

bool wheel_general_geom(const CartanMatrix& C, const GeomElem& R,
                        const GeneralZigZag& Z);
// All general shapes with nonzero geometric count fitting the dimensions.
GeomWheelReport wheel_member_geom(const CartanMatrix& C, const GeomElem& R);

// Test-harness knob: corrupts the sign inside the trigonometric kernel used
// by shuffle_mul so that downstream vanishing checks must fail.  Never set
// outside the verification suite's mutation check.
void set_kernel_mutation(bool on);

}  // namespace qloop

#pragma once

// Symmetric Cartan matrices and the two-variable zeta kernels attached to
// ordered vertex pairs, in trigonometric and geometric form.

#include <string>
#include <vector>

#include "qloop/multipoly.hpp"

namespace qloop {

// Vertices carry names; their order in the list fixes the total order used
// everywhere (products, denominators, kernels).
class CartanMatrix {
 public:
  CartanMatrix() = default;
  CartanMatrix(std::vector<std::string> names,
               std::vector<std::vector<int>> d);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const;
  int index(const std::string& name) const;  // throws InputError if unknown
  int d(int i, int j) const;
  const std::vector<std::vector<int>>& matrix() const { return d_; }
  const std::vector<std::string>& names() const { return names_; }

  // Symmetry, diagonal 2, non-positive off-diagonal, distinct names.
  // Throws InputError describing the first violation.
  void validate() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> d_;
};

// A ratio num/den of Laurent polynomials in the abstract variables a, b,
// homogeneous of matching degrees; instantiated at concrete variables later.
struct ZetaPair {
  MLaurent num;
  MLaurent den;
};

// Trigonometric kernel for the ordered pair (i, j):
// (a - q^{-d_ij} b)/(a - b).
ZetaPair zeta(const CartanMatrix& C, int i, int j);

// Geometric kernel; depends on the relative order of i and j.  Coincides
// with the trigonometric one on the diagonal.
ZetaPair zeta_geom(const CartanMatrix& C, int i, int j);

// The multiplicative factor with zeta_geom = zeta * zeta_correction.
ZetaPair zeta_correction(const CartanMatrix& C, int i, int j);

// Substitute (a, b) -> (va, vb).
ZetaPair instantiate(const ZetaPair& z, VarId va, VarId vb);

}  // namespace qloop

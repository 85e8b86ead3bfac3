#include "qloop/cartan.hpp"

#include <algorithm>
#include <set>

namespace qloop {

CartanMatrix::CartanMatrix(std::vector<std::string> names,
                           std::vector<std::vector<int>> d)
    : names_(std::move(names)), d_(std::move(d)) {}

const std::string& CartanMatrix::name(int i) const {
  if (i < 0 || i >= size()) throw InputError("vertex index out of range");
  return names_[i];
}

int CartanMatrix::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw InputError("unknown vertex name: " + name);
}

int CartanMatrix::d(int i, int j) const {
  if (i < 0 || i >= size() || j < 0 || j >= size())
    throw InputError("vertex index out of range");
  return d_[i][j];
}

void CartanMatrix::validate() const {
  int n = size();
  if (n == 0) throw InputError("empty vertex set");
  if (static_cast<int>(d_.size()) != n)
    throw InputError("matrix row count does not match the vertex count");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(d_[i].size()) != n)
      throw InputError("row " + names_[i] + " has the wrong length");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (static_cast<int>(seen.size()) != n)
    throw InputError("duplicate vertex names");
  for (int i = 0; i < n; ++i) {
    if (d_[i][i] != 2)
      throw InputError("diagonal entry at vertex " + names_[i] +
                       " must be 2");
    for (int j = 0; j < n; ++j) {
      if (d_[i][j] != d_[j][i])
        throw InputError("matrix is not symmetric at (" + names_[i] + "," +
                         names_[j] + ")");
      if (i != j && d_[i][j] > 0)
        throw InputError("off-diagonal entry at (" + names_[i] + "," +
                         names_[j] + ") must be nonpositive");
    }
  }
}

namespace {

const MLaurent& A() {
  static const MLaurent a = MLaurent::var(avar());
  return a;
}
const MLaurent& B() {
  static const MLaurent b = MLaurent::var(bvar());
  return b;
}

}  // namespace

ZetaPair zeta(const CartanMatrix& C, int i, int j) {
  int d = C.d(i, j);
  return {A() - B().scaled(QRat::q_power(-d)), A() - B()};
}

ZetaPair zeta_geom(const CartanMatrix& C, int i, int j) {
  int d = C.d(i, j);
  if (i == j) return zeta(C, i, j);
  ZetaPair out;
  // Off the diagonal the kernel is the trigonometric one times the
  // correction; since the trigonometric kernel reduces to 1 when d = 0, the
  // geometric kernel must equal the correction there ((b-a)/b resp.
  // (a-b)/a), or the map multiplying by all corrections would fail to
  // intertwine the two products.  For d <= -1 this agrees with the usual
  // closed form below.
  if (d == 0) {
    if (i < j) return {B() - A(), MLaurent::var(bvar())};
    return {A() - B(), MLaurent::var(avar())};
  }
  if (i < j) {
    out.num = MLaurent::constant(QRat::q_power(-d));
    for (int c = 0; c <= -d - 1; ++c)
      out.num *= B() - A().scaled(QRat::q_power(2 * c + d));
    out.den = MLaurent::var(bvar(), -d);
  } else {
    out.num = MLaurent::constant(QRat(1));
    for (int c = 1; c <= -d; ++c)
      out.num *= A() - B().scaled(QRat::q_power(2 * c + d));
    out.den = MLaurent::var(avar(), -d);
  }
  return out;
}

ZetaPair zeta_correction(const CartanMatrix& C, int i, int j) {
  int d = C.d(i, j);
  ZetaPair out{MLaurent::constant(QRat(1)), MLaurent::constant(QRat(1))};
  if (i == j) return out;
  if (i < j) {
    out.num = B() - A();
    for (int c = 1; c <= -d - 1; ++c)
      out.num *= B() - A().scaled(QRat::q_power(2 * c + d));
    out.den = MLaurent::var(bvar(), std::max(1, -d));
  } else {
    out.num = A() - B();
    for (int c = 1; c <= -d - 1; ++c)
      out.num *= A() - B().scaled(QRat::q_power(2 * c + d));
    out.den = MLaurent::var(avar(), std::max(1, -d));
  }
  return out;
}

ZetaPair instantiate(const ZetaPair& z, VarId va, VarId vb) {
  std::map<VarId, VarId> ren{{avar(), va}, {bvar(), vb}};
  return {rename_vars(z.num, ren), rename_vars(z.den, ren)};
}

}  // namespace qloop

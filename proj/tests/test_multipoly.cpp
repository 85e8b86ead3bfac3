#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qloop/multipoly.hpp"

using namespace qloop;

namespace {

MLaurent Z(int color, int slot, int exp = 1) {
  return MLaurent::var(zvar(color, slot), exp);
}

const QRat one(1);

}  // namespace

TEST_CASE("monomial arithmetic") {
  Monomial m = Monomial::from_pairs({{zvar(0, 2), 3}, {zvar(0, 1), -1}});
  CHECK(m.exponent(zvar(0, 1)) == -1);
  CHECK(m.exponent(zvar(0, 2)) == 3);
  CHECK(m.exponent(zvar(1, 1)) == 0);
  CHECK(m.total_degree() == 2);
  CHECK(m * m.inverse() == Monomial());
  CHECK(m.pow(2).exponent(zvar(0, 2)) == 6);
  CHECK(Monomial::from_pairs({{xvar(), 0}}).is_one());
}

TEST_CASE("graded lex order") {
  Monomial a = Monomial::var(zvar(0, 1), 2);
  Monomial b = Monomial::from_pairs({{zvar(0, 1), 1}, {zvar(0, 2), 1}});
  Monomial c = Monomial::var(zvar(0, 2), 2);
  // same degree: z1^2 > z1 z2 > z2^2
  CHECK(monomial_graded_lex_less(b, a));
  CHECK(monomial_graded_lex_less(c, b));
  // degree dominates
  CHECK(monomial_graded_lex_less(a, Monomial::var(zvar(0, 2), 3)));
  MLaurent p = Z(0, 2, 2) + Z(0, 1, 2) + Z(0, 1).mul_monomial(
      Monomial::var(zvar(0, 2)));
  auto st = p.sorted_terms();
  REQUIRE(st.size() == 3);
  CHECK(st[0].first == a);
  CHECK(st[1].first == b);
  CHECK(st[2].first == c);
}

TEST_CASE("ring operations") {
  MLaurent p = (Z(0, 1) - Z(0, 2)) * (Z(0, 1) + Z(0, 2));
  CHECK(p == Z(0, 1, 2) - Z(0, 2, 2));
  CHECK((Z(0, 1) * Z(0, 1, -1)) == MLaurent::constant(one));
  CHECK((p - p).is_zero());
  CHECK(p.scaled(QRat(3)).coefficient(Monomial::var(zvar(0, 1), 2)) ==
        QRat(3));
  long deg = 0;
  CHECK(p.is_homogeneous(&deg));
  CHECK(deg == 2);
  CHECK_FALSE((p + Z(0, 1)).is_homogeneous());
  CHECK(Z(0, 1, -2).min_exponent(zvar(0, 1)) == -2);
  CHECK(p.max_exponent(zvar(0, 2)) == 2);
}

TEST_CASE("simultaneous renaming") {
  MLaurent p = Z(0, 1, 2) * Z(0, 2);  // z1^2 z2
  std::map<VarId, VarId> swap{{zvar(0, 1), zvar(0, 2)},
                              {zvar(0, 2), zvar(0, 1)}};
  CHECK(rename_vars(p, swap) == Z(0, 2, 2) * Z(0, 1));
  CHECK(rename_vars(rename_vars(p, swap), swap) == p);
}

TEST_CASE("symmetrization") {
  MLaurent p = Z(0, 1, 2) * Z(0, 2);
  MLaurent s = symmetrize(p, {2});
  CHECK(s == Z(0, 1, 2) * Z(0, 2) + Z(0, 2, 2) * Z(0, 1));
  // symmetrizing a symmetric element multiplies by prod n_i!
  CHECK(symmetrize(s, {2}) == s.scaled(QRat(2)));
  CHECK(symmetrize_serial(p, {2}) == s);

  // two colors
  MLaurent m = Z(0, 1) * Z(1, 1, -1);
  CHECK(symmetrize(m, {1, 1}) == m);
  MLaurent m2 = Z(0, 1) * Z(1, 1);
  CHECK(symmetrize(m2, {2, 1}) == (Z(0, 1) + Z(0, 2)) * Z(1, 1));

  CHECK_THROWS_AS(symmetrize(Z(0, 3), {2}), InputError);
  CHECK_THROWS_AS(symmetrize(Z(2, 1), {1, 1}), InputError);
}

TEST_CASE("exact division") {
  MLaurent d = Z(0, 1) - Z(0, 2);
  MLaurent q3 = Z(0, 1, 2) + Z(0, 1) * Z(0, 2) + Z(0, 2, 2);
  CHECK(exact_div(q3 * d, d) == q3);
  CHECK(exact_div(d, d) == MLaurent::constant(one));

  auto [quot, rem] = try_exact_div(Z(0, 1, 2) + Z(0, 2), d);
  CHECK_FALSE(rem.is_zero());
  CHECK(quot * d + rem == Z(0, 1, 2) + Z(0, 2));
  CHECK_THROWS_AS(exact_div(Z(0, 1, 2) + Z(0, 2), d), MathError);

  // Laurent dividend
  MLaurent lp = d.mul_monomial(Monomial::var(zvar(0, 1), -1));
  CHECK(exact_div(lp, d) == MLaurent::var(zvar(0, 1), -1));
}

TEST_CASE("binomial fast-path division") {
  QRat c = QRat::q_power(-2);
  MLaurent d = Z(0, 1) - Z(0, 2).scaled(c);
  MLaurent p = (Z(0, 1) + Z(0, 2)) * d * d;
  auto q = exact_div_binomial(p, zvar(0, 1), c, zvar(0, 2));
  REQUIRE(q.has_value());
  CHECK(*q == (Z(0, 1) + Z(0, 2)) * d);
  CHECK(exact_div(p, d) == *q);
  CHECK_FALSE(
      exact_div_binomial(Z(0, 1) + Z(0, 2), zvar(0, 1), c, zvar(0, 2))
          .has_value());
  // Laurent case with an uninvolved variable
  MLaurent lp = d.mul_monomial(
      Monomial::from_pairs({{zvar(0, 1), -2}, {zvar(1, 1), 1}}));
  auto q2 = exact_div_binomial(lp, zvar(0, 1), c, zvar(0, 2));
  REQUIRE(q2.has_value());
  CHECK(*q2 == MLaurent::monomial(Monomial::from_pairs(
      {{zvar(0, 1), -2}, {zvar(1, 1), 1}})));
}

TEST_CASE("divisibility order in x - y") {
  MLaurent x = MLaurent::var(xvar());
  MLaurent y = MLaurent::var(yvar());
  CHECK(divisibility_order((x - y) * (x - y) * (x + y)) == 2);
  CHECK(divisibility_order(x + y) == 0);
  CHECK(divisibility_order(MLaurent()) == kInfiniteOrder);
  CHECK(divisibility_order((x - y) * Z(0, 1)) == 1);
  CHECK(divisibility_order((x - y).mul_monomial(
            Monomial::var(xvar(), -1))) == 1);
}

TEST_CASE("scaled substitution and evaluation") {
  // z_{0,2} -> q^2 * x:  z_{0,2}^3 becomes q^6 x^3
  MLaurent p = Z(0, 2, 3);
  std::map<VarId, std::pair<VarId, QRat>> sub{
      {zvar(0, 2), {xvar(), QRat::q_power(2)}}};
  CHECK(substitute_scaled(p, sub) ==
        MLaurent::var(xvar(), 3).scaled(QRat::q_power(6)));
  // negative exponents pick up inverse scale
  CHECK(substitute_scaled(Z(0, 2, -1), sub) ==
        MLaurent::var(xvar(), -1).scaled(QRat::q_power(-2)));
  // partial: other variables untouched
  CHECK(substitute_scaled(Z(1, 1) * Z(0, 2), sub) ==
        Z(1, 1) * MLaurent::var(xvar()).scaled(QRat::q_power(2)));

  std::map<VarId, QRat> full{{zvar(0, 1), QRat::q_power(1)},
                             {zvar(0, 2), QRat(2)}};
  CHECK(evaluate(Z(0, 1) * Z(0, 2) + Z(0, 2), full) ==
        QRat::q_power(1) * QRat(2) + QRat(2));
  CHECK_THROWS_AS(evaluate(Z(1, 1), full), InputError);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "syang/rewrite.hpp"
#include "syang/series.hpp"

using namespace syang;

namespace {

SSeries scalar_series(std::initializer_list<Scalar> cs) {
  SSeries s(int(cs.size()) - 1, Scalar(0));
  int r = 0;
  for (const Scalar& c : cs) s[r++] = c;
  return s;
}

ESeries t_series(const AlgebraParams& P, int i, int j) {
  // t_ij(u) truncated at the algebra's level bound: delta + sum_r t_ij^{(r)} u^{-r}.
  ESeries s(P.N, Element::zero(P));
  s[0] = i == j ? Element::unit(P) : Element::zero(P);
  for (int r = 1; r <= P.N; ++r) s[r] = Element::generator(P, i, j, r);
  return s;
}

}  // namespace

TEST_CASE("scalar series inversion is two-sided and matches the geometric series") {
  SSeries s = scalar_series({1, 1, 0, 0, 0, 0});
  SSeries b = series_invert(s);
  for (int r = 0; r <= 5; ++r) CHECK(b[r] == Scalar(r % 2 ? -1 : 1));
  CHECK(b * s == SSeries::constant(5, Scalar(1)));
  CHECK(s * b == SSeries::constant(5, Scalar(1)));

  SSeries q = scalar_series({1, Scalar(2), Scalar(-1, 3), Scalar(5), Scalar(0), Scalar(7, 2)});
  CHECK(series_invert(q) * q == SSeries::constant(5, Scalar(1)));
  CHECK(q * series_invert(q) == SSeries::constant(5, Scalar(1)));

  CHECK_THROWS_AS(series_invert(scalar_series({2, 1})), std::invalid_argument);
}

TEST_CASE("series shift re-expands u^{-r} around infinity") {
  // 1/(u+c) = sum_k (-1)^k c^k u^{-1-k}.
  SSeries inv_u = scalar_series({0, 1, 0, 0, 0, 0, 0});
  Scalar c(3);
  SSeries sh = series_shift(inv_u, c);
  CHECK(sh[0] == 0);
  for (int t = 1; t <= 6; ++t) {
    Scalar expect = pow_scalar(c, t - 1);
    if ((t - 1) % 2) expect = -expect;
    CHECK(sh[t] == expect);
  }

  // 1/(u+c)^2 = sum_k (-1)^k (k+1) c^k u^{-2-k}.
  SSeries inv_u2 = scalar_series({0, 0, 1, 0, 0, 0, 0});
  SSeries sh2 = series_shift(inv_u2, c);
  CHECK(sh2[1] == 0);
  for (int t = 2; t <= 6; ++t) {
    Scalar expect = Scalar(t - 1) * pow_scalar(c, t - 2);
    if (t % 2) expect = -expect;
    CHECK(sh2[t] == expect);
  }

  SECTION("shift is a homomorphism and invertible") {
    std::mt19937_64 rng(2024);
    auto rnd = [&] {
      SSeries s(6, Scalar(0));
      for (int r = 0; r <= 6; ++r)
        s[r] = Scalar(int(rng() % 19) - 9, 1 + int(rng() % 4));
      return s;
    };
    for (int trial = 0; trial < 20; ++trial) {
      SSeries a = rnd(), b = rnd();
      Scalar c2(int(rng() % 7) - 3, 1 + int(rng() % 3));
      CHECK(series_shift(a * b, c2) == series_shift(a, c2) * series_shift(b, c2));
      CHECK(series_shift(series_shift(a, c2), -c2) == a);
    }
  }
}

TEST_CASE("factorial root solves a(u) = atilde(u)...atilde(u-K+1)") {
  SECTION("K=2 closed form at order 2") {
    // atilde_2 = (a_2 - a_1^2/4 - a_1/2) / 2.
    SSeries a = scalar_series({1, 2, 5});
    SSeries r = factorial_root(a, 2);
    CHECK(r[1] == 1);
    CHECK(r[2] == Scalar(3, 2));
    Scalar a1(2), a2(5);
    CHECK(r[2] == (a2 - a1 * a1 / 4 - a1 / 2) / 2);
  }

  SECTION("round trip for random series and K in 1..3") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
      int K = 1 + int(rng() % 3);
      SSeries root(5, Scalar(0));
      root[0] = 1;
      for (int r = 1; r <= 5; ++r) root[r] = Scalar(int(rng() % 15) - 7, 1 + int(rng() % 3));
      SSeries prod = root;
      for (int k = 1; k < K; ++k) prod = prod * series_shift(root, Scalar(-k));
      SSeries rec = factorial_root(prod, K);
      CHECK(rec == root);
    }
  }

  SECTION("input validation") {
    CHECK_THROWS_AS(factorial_root(scalar_series({2, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(factorial_root(scalar_series({1, 1}), 0), std::invalid_argument);
  }
}

TEST_CASE("series over the algebra invert exactly") {
  AlgebraParams P{1, 1, 2};
  ESeries t11 = t_series(P, 1, 1);
  ESeries b = series_invert(t11);

  Element g1 = Element::generator(P, 1, 1, 1);
  Element g2 = Element::generator(P, 1, 1, 2);
  CHECK(b[0] == Element::unit(P));
  CHECK(b[1] == -g1);
  CHECK(b[2] == g1 * g1 - g2);

  CHECK((b * t11) == ESeries::constant(2, Element::unit(P)));
  CHECK((t11 * b) == ESeries::constant(2, Element::unit(P)));

  ESeries t12 = t_series(P, 1, 2);
  CHECK_THROWS_AS(series_invert(t12), std::invalid_argument);
}

TEST_CASE("factorial root over commuting algebra coefficients") {
  AlgebraParams P{1, 1, 3};
  Rewriter rw(P);
  std::function<bool(const Element&, const Element&)> commute =
      [&](const Element& x, const Element& y) {
        return rw.reduce(super_commutator(x, y)).is_zero();
      };

  Element g = Element::generator(P, 1, 1, 1);
  ESeries root(3, Element::zero(P));
  root[0] = Element::unit(P);
  root[1] = g;
  root[2] = g * g * Scalar(1, 2);
  root[3] = Element::unit(P) * Scalar(5) - g;

  ESeries prod = root * series_shift(root, Scalar(-1));
  ESeries rec = factorial_root(prod, 2, commute);
  CHECK(rec == root);

  SECTION("non-commuting coefficients are rejected") {
    ESeries bad(2, Element::zero(P));
    bad[0] = Element::unit(P);
    bad[1] = Element::generator(P, 1, 2, 1);
    bad[2] = Element::generator(P, 2, 1, 1);
    CHECK_THROWS_AS(factorial_root(bad, 2, commute), std::invalid_argument);
  }
}

TEST_CASE("biseries window arithmetic") {
  AlgebraParams P{1, 1, 3};
  ESeries t11 = t_series(P, 1, 1);
  ESeries t12 = t_series(P, 1, 2);

  BiSeries<Element> A = BiSeries<Element>::from_u(t11, P.N);
  BiSeries<Element> B = BiSeries<Element>::from_v(t12, P.N);
  CHECK(A.valid_u() == P.N);
  CHECK(A.valid_v() == P.N);

  BiSeries<Element> X = A * B;
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s) CHECK(X.at(r, s) == t11[r] * t12[s]);

  SECTION("(u-v) multiplication shifts indices and shrinks validity") {
    BiSeries<Element> Y = X.mul_u_minus_v();
    CHECK(Y.valid_u() == 2);
    CHECK(Y.valid_v() == 2);
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s <= 2; ++s)
        CHECK(Y.at(r, s) == t11[r + 1] * t12[s] - t11[r] * t12[s + 1]);
  }

  SECTION("embeddings multiply against each other in either order") {
    BiSeries<Element> Z = B * A;
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s) CHECK(Z.at(r, s) == t12[s] * t11[r]);
  }
}

TEST_CASE("series bounds and construction errors") {
  CHECK_THROWS_AS(SSeries(-1, Scalar(0)), std::invalid_argument);
  SSeries s = scalar_series({1, 2});
  CHECK_THROWS_AS(s[5], std::out_of_range);
  CHECK_THROWS_AS(s[-1], std::out_of_range);
  BiSeries<Scalar> b(1, 1, Scalar(0));
  CHECK_THROWS_AS(b.at(2, 0), std::out_of_range);
}

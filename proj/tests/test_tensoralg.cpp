#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "syang/tensoralg.hpp"

using namespace syang;

namespace {

UEAElement E(const AlgebraParams& p, int slot, int i, int j) {
  return UEAElement::generator(p, slot, i, j);
}

}  // namespace

TEST_CASE("gl(1|1) bracket oracles in the enveloping algebra") {
  AlgebraParams p{1, 1, 1};
  UEAReducer red(p);

  // [E_11, E_12] = E_12 and the odd anticommutator {E_12, E_21} = E_11 + E_22.
  CHECK(red.bracket(pack_uea(1, 1, 1), pack_uea(1, 1, 2)) == E(p, 1, 1, 2));
  CHECK(red.bracket(pack_uea(1, 1, 2), pack_uea(1, 2, 1)) == E(p, 1, 1, 1) + E(p, 1, 2, 2));
  CHECK(red.bracket(pack_uea(1, 2, 1), pack_uea(1, 1, 2)) == E(p, 1, 1, 1) + E(p, 1, 2, 2));
  CHECK(red.bracket(pack_uea(1, 1, 2), pack_uea(1, 1, 2)).is_zero());
  CHECK(red.bracket(pack_uea(1, 1, 2), pack_uea(2, 2, 1)).is_zero());

  SECTION("normal ordering") {
    CHECK(red.reduce(E(p, 1, 1, 2) * E(p, 1, 1, 1)) ==
          E(p, 1, 1, 1) * E(p, 1, 1, 2) - E(p, 1, 1, 2));
    CHECK(red.reduce(E(p, 1, 1, 2) * E(p, 1, 1, 2)).is_zero());
    // cross-slot odd symbols anticommute with no correction term
    CHECK(red.reduce(E(p, 2, 1, 2) * E(p, 1, 1, 2)) == -(E(p, 1, 1, 2) * E(p, 2, 1, 2)));
    CHECK(red.reduce(E(p, 2, 1, 1) * E(p, 1, 2, 2)) == E(p, 1, 2, 2) * E(p, 2, 1, 1));
  }
}

TEST_CASE("the rewriting agrees with the bracket on random symbol pairs") {
  AlgebraParams p{2, 1, 1};
  UEAReducer red(p);
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 80; ++trial) {
    int slot_a = 1 + int(rng() % 2), slot_b = 1 + int(rng() % 2);
    UCode a = pack_uea(slot_a, 1 + int(rng() % 3), 1 + int(rng() % 3));
    UCode b = pack_uea(slot_b, 1 + int(rng() % 3), 1 + int(rng() % 3));
    UEAElement xa = UEAElement::from_sorted(p, {{UWord{a}, Scalar(1)}});
    UEAElement xb = UEAElement::from_sorted(p, {{UWord{b}, Scalar(1)}});
    Scalar sgn = (red.sym_parity(a) & red.sym_parity(b)) ? Scalar(-1) : Scalar(1);
    UEAElement lhs = xa * xb - sgn * (xb * xa) - red.bracket(a, b);
    INFO(uea_str(a) << " " << uea_str(b));
    CHECK(red.reduce(lhs).is_zero());
  }
}

TEST_CASE("uea reduction is idempotent and linear") {
  AlgebraParams p{1, 1, 1};
  UEAReducer red(p);
  std::mt19937_64 rng(11);
  auto rnd_word = [&](int len) {
    UEAElement e = UEAElement::unit(p);
    for (int k = 0; k < len; ++k)
      e *= E(p, 1 + int(rng() % 2), 1 + int(rng() % 2), 1 + int(rng() % 2));
    return e;
  };
  for (int trial = 0; trial < 40; ++trial) {
    UEAElement x = rnd_word(1 + int(rng() % 4)) - Scalar(2) * rnd_word(1 + int(rng() % 3));
    UEAElement y = rnd_word(1 + int(rng() % 3));
    UEAElement rx = red.reduce(x);
    CHECK(red.reduce(rx) == rx);
    CHECK(red.reduce(x + y) == rx + red.reduce(y));
    CHECK(red.reduce(red.reduce(x) * red.reduce(y)) == red.reduce(x * y));
  }
}

TEST_CASE("tensor multiplication uses the Koszul sign") {
  AlgebraParams p{1, 1, 2};
  Word odd{pack_gen(1, 2, 1)};
  Word even{pack_gen(1, 1, 1)};
  Word empty;

  auto T2 = [&](Word a, Word b, Scalar c = Scalar(1)) {
    return NTensorElement::pure(p, {std::move(a), std::move(b)}, c);
  };

  // (1 (x) v)(w (x) 1) = (-1)^{p(v)p(w)} w (x) v
  CHECK(T2(empty, odd) * T2(odd, empty) == T2(odd, odd, Scalar(-1)));
  CHECK(T2(empty, odd) * T2(even, empty) == T2(even, odd));
  CHECK(T2(empty, even) * T2(odd, empty) == T2(odd, even));

  SECTION("associativity on random three-factor products") {
    std::mt19937_64 rng(7);
    auto rnd = [&]() {
      auto rnd_word = [&](int len) {
        Word w;
        for (int k = 0; k < len; ++k)
          w.push_back(pack_gen(1 + int(rng() % 2), 1 + int(rng() % 2), 1 + int(rng() % 2)));
        return w;
      };
      NTensorElement e = NTensorElement::zero(p, 2);
      for (int t = 0; t < 2; ++t)
        e += NTensorElement::pure(p, {rnd_word(int(rng() % 3)), rnd_word(int(rng() % 3))},
                                  Scalar(int(rng() % 5) - 2));
      return e;
    };
    for (int trial = 0; trial < 30; ++trial) {
      NTensorElement a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("slotwise reduction reaches per-slot normal form") {
  AlgebraParams p{1, 1, 2};
  Rewriter rw(p);
  Word w{pack_gen(1, 2, 1), pack_gen(2, 1, 1)};  // t_12 t_21, not normal
  NTensorElement x = NTensorElement::pure(p, {w, Word{}});
  NTensorElement red = x.reduced(rw);

  Element target = rw.reduce(Element::monomial(p, w));
  NTensorElement expect = NTensorElement::zero(p, 2);
  for (const auto& [wr, cr] : target.terms())
    expect += NTensorElement::pure(p, {wr, Word{}}, cr);
  CHECK(red == expect);

  SECTION("a relation placed in one slot reduces to zero") {
    Element rel = Element::monomial(p, w) - rw.reduce(Element::monomial(p, w));
    NTensorElement z = NTensorElement::zero(p, 2);
    for (const auto& [wr, cr] : rel.terms())
      z += NTensorElement::pure(p, {wr, Word{}}, cr);
    CHECK(z.reduced(rw).is_zero());
  }
}

TEST_CASE("tensor element input validation") {
  AlgebraParams p{1, 1, 1};
  CHECK_THROWS_AS(NTensorElement(p, 0), std::invalid_argument);
  NTensorElement a = NTensorElement::unit(p, 2);
  NTensorElement b = NTensorElement::unit(p, 3);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(UEAElement::generator(p, 0, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(UEAElement::generator(p, 1, 3, 1), std::out_of_range);

  AlgebraParams q{2, 1, 1};
  UEAElement ea = UEAElement::generator(p, 1, 1, 1);
  UEAElement eb = UEAElement::generator(q, 1, 1, 1);
  CHECK_THROWS_AS(ea * eb, std::invalid_argument);
}

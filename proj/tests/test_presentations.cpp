#include "syang/presentations.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace syang;

namespace {

Element gen(const AlgebraParams& p, int i, int j, int r) { return Element::generator(p, i, j, r); }

bool homogeneous_of_parity(const AlgebraParams& p, const Element& x, int parity) {
  for (const auto& [w, c] : x.terms())
    if (word_parity_in(p, w) != parity) return false;
  return true;
}

}  // namespace

TEST_CASE("cartan matrix of the distinguished root system") {
  CartanMatrix c21 = cartan_matrix({2, 1, 1});
  REQUIRE(c21.size == 2);
  CHECK(c21.a == std::vector<std::vector<int>>{{2, -1}, {-1, 0}});

  CartanMatrix c12 = cartan_matrix({1, 2, 1});
  CHECK(c12.a == std::vector<std::vector<int>>{{0, 1}, {1, -2}});

  CartanMatrix c22 = cartan_matrix({2, 2, 1});
  CHECK(c22.a == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 0, 1}, {0, 1, -2}});

  CartanMatrix c20 = cartan_matrix({2, 0, 1});
  CHECK(c20.a == std::vector<std::vector<int>>{{2}});

  CHECK_THROWS_AS(cartan_matrix({1, 0, 1}), std::invalid_argument);
}

TEST_CASE("stukopin generators realize the shifted gauss series") {
  AlgebraParams p{2, 1, 3};
  GaussData g = gauss_decompose(p);
  StukopinData st = stukopin_data(g);

  // x_1^+(u) = f_1(u + 1/2): node 1 is even and m - i = 1.
  CHECK((st.x_series(+1, 1) - series_shift(g.ff(2, 1), Scalar(1, 2))).is_zero());
  // Node 2 is even with m - i = 0: no shift at all.
  CHECK((st.x_series(+1, 2) - g.ff(3, 2)).is_zero());
  CHECK((st.h_series(2) - g.ddp(2) * g.dd(3)).is_zero());

  // Constant terms: h_i(u) = 1 + O(u^{-1}), x_i(u) = O(u^{-1}).
  for (int i = 1; i <= 2; ++i) {
    CHECK(st.h_series(i)[0] == Element::unit(p));
    CHECK(st.x_series(+1, i)[0].is_zero());
    CHECK(st.x_series(-1, i)[0].is_zero());
  }

  // The shift leaves the u^{-1} coefficient alone, so x_{i,0}^+ = f_i^{(1)}
  // and h_{1,0} = d_2^{(1)} - d_1^{(1)} = t_22^{(1)} - t_11^{(1)}.
  CHECK(st.xgen(+1, 1, 0) == g.ff(2, 1)[1]);
  CHECK(st.xgen(+1, 2, 0) == g.ff(3, 2)[1]);
  CHECK(st.hgen(1, 0) == gen(p, 2, 2, 1) - gen(p, 1, 1, 1));

  // x^- carries the sign (-1)^{p(i)}, nontrivial only for nodes i > m.
  AlgebraParams p11{1, 1, 2};
  GaussData g11 = gauss_decompose(p11);
  StukopinData st11 = stukopin_data(g11);
  CHECK(st11.xgen(-1, 1, 0) == g11.ee(1, 2)[1]);
  CHECK(st11.xgen(+1, 1, 0) == g11.ff(2, 1)[1]);
  AlgebraParams p12{1, 2, 2};
  GaussData g12 = gauss_decompose(p12);
  StukopinData st12 = stukopin_data(g12);
  CHECK(st12.xgen(-1, 2, 0) == g12.ee(2, 3)[1] * Scalar(-1));
  CHECK((st12.x_series(-1, 2) + series_shift(g12.ee(2, 3), Scalar(1, 2))).is_zero());

  CHECK_THROWS_AS(st.hgen(1, 3), std::out_of_range);
  CHECK_THROWS_AS(st.hgen(3, 0), std::out_of_range);
  CHECK_THROWS_AS(stukopin_data(gauss_decompose({1, 0, 2})), std::invalid_argument);
}

TEST_CASE("drinfeld generator enumeration carries parity and realizations") {
  AlgebraParams p{2, 1, 2};
  StukopinData st = stukopin_data(gauss_decompose(p));
  std::vector<DrinfeldGenerator> gens = stukopin_generators(p);
  REQUIRE(gens.size() == 3u * 2u * 2u);
  for (const DrinfeldGenerator& dg : gens) {
    CHECK(dg.odd == (dg.kind != 'h' && dg.i == p.m));
    CHECK(homogeneous_of_parity(p, dg.realization, dg.odd ? 1 : 0));
    if (dg.kind == 'h') CHECK(dg.realization == st.hgen(dg.i, dg.s));
    if (dg.kind == '+') CHECK(dg.realization == st.xgen(+1, dg.i, dg.s));
    if (dg.kind == '-') CHECK(dg.realization == st.xgen(-1, dg.i, dg.s));
  }
}

TEST_CASE("root vectors follow the nested bracket rule") {
  AlgebraParams p{2, 1, 3};
  StukopinData st = stukopin_data(gauss_decompose(p));
  Rewriter rw(p);

  // A single simple root is the generator itself.
  CHECK(root_vector(st, +1, {1}, {2}) == st.xgen(+1, 1, 2));
  CHECK(root_vector(st, -1, {2}, {0}) == st.xgen(-1, 2, 0));

  // Both orders of the run {1,2} are admissible and nonzero.
  Element a = root_vector(st, +1, {1, 2}, {0, 0});
  Element b = root_vector(st, +1, {2, 1}, {0, 0});
  CHECK_FALSE(rw.reduce(a).is_zero());
  CHECK_FALSE(rw.reduce(b).is_zero());

  // Decompositions that revisit or skip a node give the zero root vector.
  CHECK_THROWS_AS(root_vector(st, +1, {1, 1}, {0, 0}), std::invalid_argument);
  AlgebraParams p22{2, 2, 2};
  StukopinData st22 = stukopin_data(gauss_decompose(p22));
  CHECK_THROWS_AS(root_vector(st22, +1, {1, 3}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(root_vector(st22, -1, {1, 2, 1}, {0, 0, 0}), std::invalid_argument);

  CHECK_THROWS_AS(root_vector(st, +2, {1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(root_vector(st, +1, {1, 2}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(root_vector(st, +1, {3}, {0}), std::out_of_range);
}

TEST_CASE("root vector level decompositions agree up to lower deg2") {
  AlgebraParams p{2, 1, 3};
  StukopinData st = stukopin_data(gauss_decompose(p));
  Rewriter rw(p);
  Element canonical = root_vector(st, +1, {1, 2}, {0, 1});
  Element shifted = root_vector(st, +1, {1, 2}, {1, 0});
  Element diff = rw.reduce(canonical - shifted);
  CHECK(residual_within_bound(diff, 0));
  CHECK_FALSE(diff.is_zero());

  RelationReport rep = suite_root_vectors(p, 0.2);
  INFO("total instances: " << rep.total);
  CHECK(rep.total > 0);
  CHECK(rep.passed());
}

TEST_CASE("gauss coefficient recursion holds with the parity sign") {
  AlgebraParams p{2, 1, 3};
  GaussData g = gauss_decompose(p);
  Rewriter rw(p);

  // e_{13}^{(r)} = [e_1^{(r)}, e_2^{(1)}] and f_{31}^{(r)} = [f_2^{(1)}, f_1^{(r)}]:
  // the sign (-1)^{p(2)} is +1, but the f bracket reverses to
  // f_{31}^{(r)} = -[f_1^{(r)}, f_2^{(1)}] because the factors supercommute evenly.
  for (int r = 1; r <= 2; ++r) {
    CHECK(rw.reduce(g.ee(1, 3)[r] -
                    super_commutator(g.ee(1, 2)[r], g.ee(2, 3)[1])).is_zero());
    CHECK(rw.reduce(g.ff(3, 1)[r] -
                    super_commutator(g.ff(3, 2)[1], g.ff(2, 1)[r])).is_zero());
    CHECK(rw.reduce(g.ff(3, 1)[r] +
                    super_commutator(g.ff(2, 1)[r], g.ff(3, 2)[1])).is_zero());
  }

  RelationReport rep = gauss_coefficient_recursion_check(p, 0.5);
  CHECK(rep.total == 6);
  CHECK(rep.passed());
  CHECK(rep.kappa_checked > 0);

  RelationReport rep22 = gauss_coefficient_recursion_check({2, 2, 2}, 0.2);
  CHECK(rep22.total == 2 * 2 * 3);
  CHECK(rep22.passed());

  CHECK_THROWS_AS(gauss_coefficient_recursion_check({1, 1, 3}, 0.2), std::invalid_argument);
}

TEST_CASE("lemma 5.1 series relations hold for gl(2|1)") {
  RelationReport rep = suite_lemma_5_1(2);
  INFO("total instances: " << rep.total);
  CHECK(rep.total > 0);
  CHECK(rep.kappa_checked > 0);
  if (!rep.failures.empty()) {
    const RelationFailure& f = rep.failures.front();
    INFO("first failure: " << f.family);
    for (int i : f.indices) INFO("index " << i);
  }
  CHECK(rep.passed());
}

TEST_CASE("theorem 2 presentation holds and fixes the convolution bound") {
  RelationReport rep = suite_theorem_2(3);
  INFO("total instances: " << rep.total);
  CHECK(rep.total > 0);
  CHECK(rep.passed());

  bool saw_dual_note = false;
  for (const std::string& note : rep.notes)
    if (note.find("dual-convention") != std::string::npos) saw_dual_note = true;
  CHECK(saw_dual_note);

  // The convolution in [d_i^{(r)}, e_j^{(s)}] needs the t = 0 term: at
  // (i, j, r, s) = (1, 1, 2, 1) only the sum from t = 0 reduces to zero.
  AlgebraParams p{2, 1, 3};
  GaussData g = gauss_decompose(p);
  Rewriter rw(p);
  Element lhs = super_commutator(g.dd(1)[2], g.ee(1, 2)[1]);
  Element from_t0 = g.dd(1)[0] * g.ee(1, 2)[2] + g.dd(1)[1] * g.ee(1, 2)[1];
  Element from_t1 = g.dd(1)[1] * g.ee(1, 2)[1];
  CHECK(rw.reduce(lhs - from_t0).is_zero());
  CHECK_FALSE(rw.reduce(lhs - from_t1).is_zero());
}

TEST_CASE("lemma 6 series relations hold across parities") {
  for (AlgebraParams p : {AlgebraParams{1, 2, 2}, AlgebraParams{2, 0, 2}}) {
    RelationReport rep = suite_lemma_6(p, 0.2);
    INFO("gl(" << p.m << "|" << p.n << ")");
    CHECK(rep.total > 0);
    CHECK(rep.passed());
  }
  // The quartic relation needs m > 1 and n > 1.
  RelationReport rep22 = suite_lemma_6({2, 2, 2}, 0.1);
  bool saw_quartic = false;
  // instances are not exposed by the report; presence is checked directly
  GaussData g22 = gauss_decompose({2, 2, 2});
  saw_quartic = !instances_quartic(g22).empty();
  CHECK(saw_quartic);
  CHECK(rep22.passed());
}

TEST_CASE("theorem 3 presentation holds and settles the odd-node sign") {
  AlgebraParams p{1, 2, 2};
  GaussData g = gauss_decompose(p);
  Rewriter rw(p);

  // At j = m the stated adjacent relation and the sign the series bracket
  // implies differ; only the series sign -(-1)^{p(j+1)} = +1 reduces to zero.
  Element lhs = super_commutator(g.ee(1, 2)[1], g.ee(2, 3)[2]) -
                super_commutator(g.ee(1, 2)[2], g.ee(2, 3)[1]);
  Element body = g.ee(1, 2)[1] * g.ee(2, 3)[1];
  bool printed_holds = rw.reduce(lhs - body * Scalar(-1)).is_zero();
  bool derived_holds = rw.reduce(lhs - body).is_zero();
  CHECK_FALSE(printed_holds);
  CHECK(derived_holds);

  RelationReport rep = suite_theorem_3(p, 0.2);
  INFO("total instances: " << rep.total);
  if (!rep.failures.empty()) {
    const RelationFailure& f = rep.failures.front();
    INFO("first failure: " << f.family);
  }
  CHECK(rep.total > 0);
  CHECK(rep.passed());
  bool flagged = false;
  for (const std::string& note : rep.notes)
    if (note.find("only the alternate convention") != std::string::npos) flagged = true;
  CHECK(flagged);

  RelationReport rep22 = suite_theorem_3({2, 2, 2}, 0.1);
  CHECK(rep22.passed());
  RelationReport rep20 = suite_theorem_3({2, 0, 3}, 0.2);
  CHECK(rep20.passed());
}

TEST_CASE("proposition 8.1 relations hold over the stukopin generators") {
  RelationReport rep11 = suite_proposition_8_1({1, 1, 3}, 0.3);
  INFO("gl(1|1) total: " << rep11.total);
  CHECK(rep11.total > 0);
  CHECK(rep11.passed());

  RelationReport rep21 = suite_proposition_8_1({2, 1, 3}, 0.2);
  INFO("gl(2|1) total: " << rep21.total);
  if (!rep21.failures.empty()) {
    const RelationFailure& f = rep21.failures.front();
    INFO("first failure: " << f.family << " levels "
                           << (f.levels.empty() ? -1 : f.levels.front()));
  }
  CHECK(rep21.total > 0);
  CHECK(rep21.passed());

  // Spot checks: [x_{1,0}^+, x_{1,0}^-] = h_{1,0} and [h_{1,0}, x_{2,0}^+] = -x_{2,0}^+
  // in gl(2|1), where a_{12} = -1.
  AlgebraParams p{2, 1, 3};
  StukopinData st = stukopin_data(gauss_decompose(p));
  Rewriter rw(p);
  CHECK(rw.reduce(super_commutator(st.xgen(+1, 1, 0), st.xgen(-1, 1, 0)) -
                  st.hgen(1, 0)).is_zero());
  CHECK(rw.reduce(super_commutator(st.hgen(1, 0), st.xgen(+1, 2, 0)) +
                  st.xgen(+1, 2, 0)).is_zero());
}

TEST_CASE("verification is deterministic across thread counts") {
  RelationReport one = suite_lemma_5_1(2, 0.0, 1);
  RelationReport two = suite_lemma_5_1(2, 0.0, 2);
  CHECK(one.total == two.total);
  CHECK(one.failures.size() == two.failures.size());
  CHECK(one.notes == two.notes);
  CHECK(one.passed());
  CHECK(two.passed());
}

TEST_CASE("kappa recheck independently flags a wrong relation") {
  AlgebraParams p{1, 1, 2};
  RelationReport rep;
  rep.suite = "synthetic";
  rep.params = p;
  std::vector<RelationInstance> bogus;
  {
    RelationInstance inst;
    inst.family = "bogus";
    inst.indices = {1, 2};
    inst.levels = {1};
    inst.lhs = gen(p, 1, 2, 1);
    inst.rhs = Element::zero(p);
    bogus.push_back(inst);
  }
  verify_instances(bogus, rep);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures.front().family == "bogus");
  kappa_recheck(bogus, rep, 1.0);
  CHECK(rep.kappa_checked == 1);
  REQUIRE(rep.kappa_failures.size() == 1);

  // deg2-bounded instances are filtration statements and are never sampled.
  RelationReport rep2;
  rep2.suite = "synthetic";
  rep2.params = p;
  std::vector<RelationInstance> bounded = bogus;
  bounded.front().deg2_bound = 5;
  kappa_recheck(bounded, rep2, 1.0);
  CHECK(rep2.kappa_checked == 0);
  CHECK(rep2.kappa_failures.empty());
}

TEST_CASE("normal monomial counts agree between generator families") {
  // Y(gl_{1|1}) has two even and two odd generator series either way:
  // t_{11}, t_{22}, t_{12}, t_{21} versus d_1, d_2, e_1, f_1, with
  // deg1(x^{(r)}) = r.  Count monomials of deg1 <= 3 in the d/e/f model by
  // dynamic programming and compare with the engine's enumerated basis.
  const int D = 3;
  std::vector<long long> count(std::size_t(D) + 1, 0);
  count[0] = 1;
  for (int fam = 0; fam < 2; ++fam)  // even families: unlimited multiplicity
    for (int r = 1; r <= D; ++r)
      for (int d = r; d <= D; ++d) count[std::size_t(d)] += count[std::size_t(d - r)];
  for (int fam = 0; fam < 2; ++fam)  // odd families: each level at most once
    for (int r = 1; r <= D; ++r)
      for (int d = D; d >= r; --d) count[std::size_t(d)] += count[std::size_t(d - r)];
  long long defe = 0;
  for (long long c : count) defe += c;

  Rewriter rw(AlgebraParams{1, 1, 3});
  long long engine = static_cast<long long>(rw.pbw_basis(D).size());
  INFO("d/e/f model: " << defe << ", enumerated basis: " << engine);
  CHECK(defe == engine);
}

TEST_CASE("suite dispatcher routes names and rejects mismatches") {
  RelationReport rep = run_suite("lemma6", {1, 1, 2}, 0.2);
  CHECK(rep.suite == "lemma6");
  CHECK(rep.passed());
  CHECK_THROWS_AS(run_suite("lemma5.1", {1, 2, 2}, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nonsense", {1, 1, 2}, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("gauss-recursion", {1, 1, 2}, 0.2), std::invalid_argument);
}

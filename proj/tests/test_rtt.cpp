#include <catch2/catch_amalgamated.hpp>

#include "syang/rtt.hpp"

using namespace syang;

namespace {

bool operator_equal(const RTTOperator& A, const RTTOperator& B) {
  int K = A.size();
  for (int i = 1; i <= K; ++i)
    for (int j = 1; j <= K; ++j)
      for (int k = 1; k <= K; ++k)
        for (int l = 1; l <= K; ++l) {
          const BiSeries<Element>& a = A.at(i, j, k, l);
          const BiSeries<Element>& b = B.at(i, j, k, l);
          for (int r = 0; r <= std::min(a.ru(), b.ru()); ++r)
            for (int s = 0; s <= std::min(a.rv(), b.rv()); ++s)
              if (!(a.at(r, s) == b.at(r, s))) return false;
        }
  return true;
}

RTTOperator identity_op(const AlgebraParams& p, int Ru, int Rv) {
  RTTOperator out(p, Ru, Rv);
  for (int i = 1; i <= p.size(); ++i)
    for (int k = 1; k <= p.size(); ++k) out.at(i, i, k, k).at(0, 0) = Element::unit(p);
  return out;
}

}  // namespace

TEST_CASE("the super permutation squares to the identity") {
  for (AlgebraParams p : {AlgebraParams{1, 1, 2}, AlgebraParams{2, 1, 2},
                          AlgebraParams{1, 2, 2}, AlgebraParams{2, 2, 1}}) {
    RTTOperator P = RTTOperator::P12(p, 1, 1);
    CHECK(operator_equal(P * P, identity_op(p, 1, 1)));
  }
}

TEST_CASE("permutation conjugation swaps the tensor legs") {
  // P (a (x) E_ij (x) E_kl) P = +- a (x) E_kl (x) E_ij; squaring gives identity,
  // checked above, so here verify P T1 P has T1's series moved to the second leg.
  AlgebraParams p{1, 1, 2};
  RTTOperator t1 = RTTOperator::T1(p, p.N);
  RTTOperator ptp = RTTOperator::P12(p, p.N, p.N) * t1 * RTTOperator::P12(p, p.N, p.N);
  // the conjugated operator must act as identity (x) M(u) for some M: components
  // with i != j vanish
  int K = p.size();
  for (int i = 1; i <= K; ++i)
    for (int j = 1; j <= K; ++j)
      for (int k = 1; k <= K; ++k)
        for (int l = 1; l <= K; ++l)
          if (i != j) CHECK(ptp.at(i, j, k, l).is_zero());
}

TEST_CASE("the RTT residual needs the defining relations") {
  // T1 T2 != T2 T1 as free operators: the cleared relation is not an identity
  // of the free algebra, so rtt_check passing means the relations were used.
  AlgebraParams p{1, 1, 2};
  RTTOperator t1 = RTTOperator::T1(p, p.N);
  RTTOperator t2 = RTTOperator::T2(p, p.N);
  RTTOperator diff = t1 * t2 - t2 * t1;
  bool some_nonzero = false;
  int K = p.size();
  for (int i = 1; i <= K && !some_nonzero; ++i)
    for (int j = 1; j <= K && !some_nonzero; ++j)
      for (int k = 1; k <= K && !some_nonzero; ++k)
        for (int l = 1; l <= K && !some_nonzero; ++l)
          if (!diff.at(i, j, k, l).is_zero()) some_nonzero = true;
  CHECK(some_nonzero);
}

TEST_CASE("cleared RTT relation holds coefficientwise") {
  for (AlgebraParams p : {AlgebraParams{1, 1, 2}, AlgebraParams{2, 1, 2},
                          AlgebraParams{1, 2, 2}}) {
    Rewriter rw(p);
    std::vector<RTTFailure> fails = rtt_check(rw);
    INFO(p.gl_name() << " N=" << p.N << ", " << fails.size() << " failing coefficients");
    if (!fails.empty()) {
      const RTTFailure& f = fails.front();
      INFO("first: component (" << f.component[0] << "," << f.component[1] << ","
                                << f.component[2] << "," << f.component[3] << ") u^-"
                                << f.ru << " v^-" << f.rv << ": " << f.residual.str());
    }
    CHECK(fails.empty());
  }
}

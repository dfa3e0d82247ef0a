#pragma once

#include "syang/tmatrix.hpp"

#include <array>
#include <vector>

namespace syang {

// Operators in Y(gl_{m|n})[[u^{-1}, v^{-1}]] (x) End C^{m|n} (x) End C^{m|n},
// stored as dense components c[i][j][k][l] on the basis E_ij (x) E_kl with
// full tensor coefficients; the epsilon_ij twist of the matrix identification
// is baked into the components at construction.
class RTTOperator {
 public:
  RTTOperator(const AlgebraParams& p, int Ru, int Rv)
      : p_(p), K_(p.size()),
        comp_(std::size_t(K_) * K_ * K_ * K_, BiSeries<Element>(Ru, Rv, Element::zero(p))) {}

  const AlgebraParams& params() const { return p_; }
  int size() const { return K_; }

  BiSeries<Element>& at(int i, int j, int k, int l) { return comp_[idx(i, j, k, l)]; }
  const BiSeries<Element>& at(int i, int j, int k, int l) const {
    return comp_[idx(i, j, k, l)];
  }

  // T_1(u) = sum_{i,j,k} eps_ij t_ij(u) (x) E_ij (x) E_kk.
  static RTTOperator T1(const AlgebraParams& p, int Rv) {
    EMat T = t_matrix(p);
    RTTOperator out(p, p.N, Rv);
    for (int i = 1; i <= p.size(); ++i)
      for (int j = 1; j <= p.size(); ++j) {
        BiSeries<Element> entry = BiSeries<Element>::from_u(T[i - 1][j - 1], Rv);
        if (twist_sign(p, i, j) < 0)
          entry = BiSeries<Element>(p.N, Rv, Element::zero(p)) - entry;
        for (int k = 1; k <= p.size(); ++k) out.at(i, j, k, k) = entry;
      }
    return out;
  }

  // T_2(v) = sum_{k,l,i} eps_kl t_kl(v) (x) E_ii (x) E_kl.
  static RTTOperator T2(const AlgebraParams& p, int Ru) {
    EMat T = t_matrix(p);
    RTTOperator out(p, Ru, p.N);
    for (int k = 1; k <= p.size(); ++k)
      for (int l = 1; l <= p.size(); ++l) {
        BiSeries<Element> entry = BiSeries<Element>::from_v(T[k - 1][l - 1], Ru);
        if (twist_sign(p, k, l) < 0)
          entry = BiSeries<Element>(Ru, p.N, Element::zero(p)) - entry;
        for (int i = 1; i <= p.size(); ++i) out.at(i, i, k, l) = entry;
      }
    return out;
  }

  // P_12 = sum_{i,j} E_ij (x) E_ji (-1)^{pa(j)}, constant in u and v.
  static RTTOperator P12(const AlgebraParams& p, int Ru, int Rv) {
    RTTOperator out(p, Ru, Rv);
    for (int i = 1; i <= p.size(); ++i)
      for (int j = 1; j <= p.size(); ++j) {
        Element c = Element::unit(p);
        if (p.parity(j)) c = -c;
        out.at(i, j, j, i).at(0, 0) = c;
      }
    return out;
  }

  // (a (x) E_ij (x) E_kl)(b (x) E_pq (x) E_rs) =
  //   (-1)^{p(b)(pi+pj+pk+pl) + (pk+pl)(pp+pq)} d_jp d_lr (ab (x) E_iq (x) E_ks)
  friend RTTOperator operator*(const RTTOperator& X, const RTTOperator& Y) {
    const AlgebraParams& p = X.p_;
    int K = X.K_;
    const BiSeries<Element>& probeX = X.comp_[0];
    const BiSeries<Element>& probeY = Y.comp_[0];
    RTTOperator Z(p, std::min(probeX.ru(), probeY.ru()), std::min(probeX.rv(), probeY.rv()));
    for (int i = 1; i <= K; ++i)
      for (int q = 1; q <= K; ++q)
        for (int k = 1; k <= K; ++k)
          for (int s = 1; s <= K; ++s) {
            BiSeries<Element>& acc = Z.at(i, q, k, s);
            for (int j = 1; j <= K; ++j)
              for (int r = 1; r <= K; ++r) {
                const BiSeries<Element>& a = X.at(i, j, k, r);
                if (a.is_zero()) continue;
                const BiSeries<Element>& b = Y.at(j, q, r, s);
                if (b.is_zero()) continue;
                int px = p.parity(i) ^ p.parity(j) ^ p.parity(k) ^ p.parity(r);
                int fixed = (p.parity(k) ^ p.parity(r)) & (p.parity(j) ^ p.parity(q));
                BiSeries<Element> bt = b;
                if (px || fixed) {
                  for (int ru = 0; ru <= bt.ru(); ++ru)
                    for (int rv = 0; rv <= bt.rv(); ++rv) {
                      Element& e = bt.at(ru, rv);
                      if (e.is_zero()) continue;
                      if (px) e = negate_odd(p, e, fixed);
                      else if (fixed)
                        e = -e;
                    }
                }
                acc = acc + a * bt;
              }
          }
    return Z;
  }

  RTTOperator mul_u_minus_v() const {
    RTTOperator out = *this;
    for (auto& c : out.comp_) c = c.mul_u_minus_v();
    return out;
  }

  friend RTTOperator operator-(const RTTOperator& a, const RTTOperator& b) {
    RTTOperator out(a.p_, std::min(a.comp_[0].ru(), b.comp_[0].ru()),
                    std::min(a.comp_[0].rv(), b.comp_[0].rv()));
    for (std::size_t t = 0; t < out.comp_.size(); ++t) out.comp_[t] = a.comp_[t] - b.comp_[t];
    return out;
  }

 private:
  // Negate the odd-parity terms (and additionally everything when flip_all).
  static Element negate_odd(const AlgebraParams& p, const Element& e, int flip_all) {
    std::vector<Element::Term> out;
    out.reserve(e.terms().size());
    for (const auto& [w, c] : e.terms()) {
      int par = word_parity_in(p, w) ^ flip_all;
      out.push_back({w, par ? -c : c});
    }
    return Element::from_sorted(AlgebraParams{p.m, p.n, 1}, std::move(out));
  }

  std::size_t idx(int i, int j, int k, int l) const {
    if (i < 1 || i > K_ || j < 1 || j > K_ || k < 1 || k > K_ || l < 1 || l > K_)
      throw std::out_of_range("RTTOperator: component index outside 1..K");
    return ((std::size_t(i - 1) * K_ + (j - 1)) * K_ + (k - 1)) * K_ + (l - 1);
  }

  AlgebraParams p_;
  int K_;
  std::vector<BiSeries<Element>> comp_;
};

// One nonzero residual coefficient of the cleared RTT relation.
struct RTTFailure {
  std::array<int, 4> component;  // (i, j, k, l) on basis E_ij (x) E_kl
  int ru, rv;                    // powers u^{-ru} v^{-rv}
  Element residual;
};

// Residuals of [(u-v) - P] T1 T2 - T2 T1 [(u-v) - P], reduced coefficientwise
// on the exactness window. Empty result means the defining relations hold.
inline std::vector<RTTFailure> rtt_check(const Rewriter& rw, long long* counted = nullptr) {
  const AlgebraParams& p = rw.params();
  int N = p.N;
  RTTOperator t1 = RTTOperator::T1(p, N);
  RTTOperator t2 = RTTOperator::T2(p, N);
  RTTOperator P = RTTOperator::P12(p, N, N);

  RTTOperator t1t2 = t1 * t2;
  RTTOperator t2t1 = t2 * t1;
  RTTOperator lhs = t1t2.mul_u_minus_v() - P * t1t2;
  RTTOperator rhs = t2t1.mul_u_minus_v() - t2t1 * P;
  RTTOperator res = lhs - rhs;

  std::vector<RTTFailure> fails;
  int K = p.size();
  for (int i = 1; i <= K; ++i)
    for (int j = 1; j <= K; ++j)
      for (int k = 1; k <= K; ++k)
        for (int l = 1; l <= K; ++l) {
          const BiSeries<Element>& b = res.at(i, j, k, l);
          int wu = std::min(b.valid_u(), b.ru());
          int wv = std::min(b.valid_v(), b.rv());
          for (int ru = 0; ru <= wu; ++ru)
            for (int rv = 0; rv <= wv; ++rv) {
              if (counted) ++*counted;
              Element red = rw.reduce(b.at(ru, rv));
              if (!red.is_zero())
                fails.push_back({{i, j, k, l}, ru, rv, std::move(red)});
            }
        }
  return fails;
}

}  // namespace syang

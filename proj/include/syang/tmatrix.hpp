#pragma once

#include "syang/rewrite.hpp"
#include "syang/series.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace syang {

// Matrices of truncated series over the algebra, 0-indexed storage but all
// public entry points speak 1-based row/column indices like the generators.
using EMat = std::vector<std::vector<ESeries>>;

// Sign epsilon_ij attached to the elementary matrix E_ij when T is written as
// an operator sum t_ij(u) (x) E_ij eps_ij. Entry storage stays plain; this
// sign only enters at tensor boundaries (RTT checks).
inline int twist_sign(const AlgebraParams& p, int i, int j) {
  return (p.parity(j) & (p.parity(i) ^ 1)) ? -1 : 1;
}

// The generating matrix T(u) = [t_ij(u)], each entry truncated at p.N.
inline EMat t_matrix(const AlgebraParams& p) {
  int K = p.size();
  EMat T(K, std::vector<ESeries>(K, ESeries(p.N, Element::zero(p))));
  for (int i = 1; i <= K; ++i)
    for (int j = 1; j <= K; ++j) {
      ESeries& s = T[i - 1][j - 1];
      if (i == j) s[0] = Element::unit(p);
      for (int r = 1; r <= p.N; ++r) s[r] = Element::generator(p, i, j, r);
    }
  return T;
}

inline EMat mat_mul(const EMat& A, const EMat& B) {
  std::size_t n = A.size(), k = B.size(), m = B[0].size();
  if (A[0].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
  EMat C(n, std::vector<ESeries>(m, ESeries(A[0][0].order(), A[0][0].zero_proto())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ESeries acc = A[i][0] * B[0][j];
      for (std::size_t s = 1; s < k; ++s) acc += A[i][s] * B[s][j];
      C[i][j] = acc;
    }
  return C;
}

inline EMat mat_sub(const EMat& A, const EMat& B) {
  EMat C = A;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) C[i][j] = A[i][j] - B[i][j];
  return C;
}

inline EMat mat_identity(const AlgebraParams& p, int K, int N) {
  EMat I(K, std::vector<ESeries>(K, ESeries(N, Element::zero(p))));
  for (int i = 0; i < K; ++i) I[i][i][0] = Element::unit(p);
  return I;
}

inline bool mat_equal(const EMat& A, const EMat& B) {
  if (A.size() != B.size()) return false;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != B[i].size()) return false;
    for (std::size_t j = 0; j < A[i].size(); ++j)
      if (!(A[i][j] == B[i][j])) return false;
  }
  return true;
}

// Inverse of a series with invertible scalar constant term c: factor out c
// and run the unit-constant Neumann recursion.
inline ESeries eseries_invert(const ESeries& s) {
  std::optional<Scalar> c = s[0].as_scalar();
  if (!c) throw std::invalid_argument("eseries_invert: constant term is not scalar");
  if (*c == 0) throw std::invalid_argument("eseries_invert: constant term is zero");
  if (*c == 1) return series_invert(s);
  Scalar ic = Scalar(1) / *c;
  return series_invert(s * ic) * ic;
}

// Coefficientwise rewrite of a series to PBW normal form.
inline ESeries reduce_series(const Rewriter& rw, const ESeries& s) {
  ESeries out = s;
  for (int r = 0; r <= out.order(); ++r) out[r] = rw.reduce(out[r]);
  return out;
}

// Neumann inversion of a series matrix whose constant term is an invertible
// scalar matrix: A = C + Y gives A^{-1} = (sum_k (-C^{-1} Y)^k) C^{-1}.
inline EMat mat_invert(const EMat& A) {
  std::size_t K = A.size();
  if (K == 0 || A[0].size() != K) throw std::invalid_argument("mat_invert: need a square matrix");
  int N = A[0][0].order();
  const Element zero = CoeffOps<Element>::zero_like(A[0][0].zero_proto());
  AlgebraParams p{zero.m(), zero.n(), 1};

  // Extract and invert the scalar constant matrix by Gauss-Jordan.
  std::vector<std::vector<Scalar>> C(K, std::vector<Scalar>(K));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) {
      std::optional<Scalar> c = A[i][j][0].as_scalar();
      if (!c) throw std::invalid_argument("mat_invert: constant term is not a scalar matrix");
      C[i][j] = *c;
    }
  std::vector<std::vector<Scalar>> Ci(K, std::vector<Scalar>(K, Scalar(0)));
  for (std::size_t i = 0; i < K; ++i) Ci[i][i] = 1;
  for (std::size_t col = 0; col < K; ++col) {
    std::size_t piv = col;
    while (piv < K && C[piv][col] == 0) ++piv;
    if (piv == K) throw std::invalid_argument("mat_invert: constant term matrix is singular");
    std::swap(C[piv], C[col]);
    std::swap(Ci[piv], Ci[col]);
    Scalar d = C[col][col];
    for (std::size_t j = 0; j < K; ++j) {
      C[col][j] /= d;
      Ci[col][j] /= d;
    }
    for (std::size_t r = 0; r < K; ++r) {
      if (r == col || C[r][col] == 0) continue;
      Scalar f = C[r][col];
      for (std::size_t j = 0; j < K; ++j) {
        C[r][j] -= f * C[col][j];
        Ci[r][j] -= f * Ci[col][j];
      }
    }
  }

  // Z = -C^{-1} Y where Y is the strictly positive-order part of A.
  EMat Z(K, std::vector<ESeries>(K, ESeries(N, zero)));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      for (int r = 1; r <= N; ++r) {
        Element acc = zero;
        for (std::size_t s = 0; s < K; ++s)
          if (Ci[i][s] != 0) acc += A[s][j][r] * Ci[i][s];
        Z[i][j][r] = -acc;
      }

  EMat S = mat_identity(p, int(K), N);
  EMat term = Z;
  for (int k = 1; k <= N; ++k) {
    for (std::size_t i = 0; i < K; ++i)
      for (std::size_t j = 0; j < K; ++j) S[i][j] += term[i][j];
    if (k < N) term = mat_mul(term, Z);
  }
  // Right-multiply by the scalar C^{-1}.
  EMat out(K, std::vector<ESeries>(K, ESeries(N, zero)));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) {
      ESeries acc(N, zero);
      for (std::size_t s = 0; s < K; ++s)
        if (Ci[s][j] != 0) acc += S[i][s] * Ci[s][j];
      out[i][j] = acc;
    }
  return out;
}

// Quasideterminant |A|_{ab} = ((A^{-1})_{ba})^{-1}, defined when the (b,a)
// entry of the inverse has invertible scalar constant term. 1-based indices.
inline ESeries quasideterminant(const EMat& A, int a, int b) {
  int K = int(A.size());
  if (a < 1 || a > K || b < 1 || b > K)
    throw std::out_of_range("quasideterminant: index outside matrix");
  EMat inv = mat_invert(A);
  return eseries_invert(inv[b - 1][a - 1]);
}

// Gauss decomposition T = F D E with F lower unitriangular, D diagonal,
// E upper unitriangular, computed by successive Schur complements:
//   d_i = S_ii,  e_ij = d_i^{-1} S_ij,  f_ji = S_ji d_i^{-1},
//   S_kl -= S_ki d_i^{-1} S_il for k, l > i.
struct GaussData {
  AlgebraParams params;
  std::vector<ESeries> d;                   // [i], 1-based, d_i(u)
  std::vector<ESeries> dp;                  // d_i(u)^{-1}
  std::map<std::pair<int, int>, ESeries> e; // keys (i, j), i < j
  std::map<std::pair<int, int>, ESeries> f; // keys (j, i), j > i

  const ESeries& dd(int i) const { return d.at(std::size_t(i)); }
  const ESeries& ddp(int i) const { return dp.at(std::size_t(i)); }
  const ESeries& ee(int i, int j) const { return e.at({i, j}); }
  const ESeries& ff(int j, int i) const { return f.at({j, i}); }
};

inline GaussData gauss_decompose(const AlgebraParams& p) {
  p.validate();
  int K = p.size();
  EMat S = t_matrix(p);
  GaussData g{p, {}, {}, {}, {}};
  g.d.assign(std::size_t(K) + 1, ESeries(p.N, Element::zero(p)));
  g.dp = g.d;
  for (int i = 1; i <= K; ++i) {
    g.d[i] = S[i - 1][i - 1];
    g.dp[i] = series_invert(g.d[i]);
    for (int j = i + 1; j <= K; ++j) {
      g.e.emplace(std::make_pair(i, j), g.dp[i] * S[i - 1][j - 1]);
      g.f.emplace(std::make_pair(j, i), S[j - 1][i - 1] * g.dp[i]);
    }
    for (int k = i + 1; k <= K; ++k)
      for (int l = i + 1; l <= K; ++l)
        S[k - 1][l - 1] -= S[k - 1][i - 1] * (g.dp[i] * S[i - 1][l - 1]);
  }
  return g;
}

inline EMat gauss_F(const GaussData& g) {
  int K = g.params.size();
  EMat F = mat_identity(g.params, K, g.params.N);
  for (const auto& [key, s] : g.f) F[key.first - 1][key.second - 1] = s;
  return F;
}

inline EMat gauss_D(const GaussData& g) {
  int K = g.params.size();
  EMat D(K, std::vector<ESeries>(K, ESeries(g.params.N, Element::zero(g.params))));
  for (int i = 1; i <= K; ++i) D[i - 1][i - 1] = g.d[i];
  return D;
}

inline EMat gauss_E(const GaussData& g) {
  int K = g.params.size();
  EMat E = mat_identity(g.params, K, g.params.N);
  for (const auto& [key, s] : g.e) E[key.first - 1][key.second - 1] = s;
  return E;
}

// e'_ij(u) = sum over chains i = i_0 < i_1 < ... < i_s = j of
// (-1)^s e_{i_0 i_1}(u) ... e_{i_{s-1} i_s}(u); the entries of E^{-1}.
inline ESeries primed_e(const GaussData& g, int i, int j) {
  if (!(i < j)) throw std::invalid_argument("primed_e: need i < j");
  ESeries total(g.params.N, Element::zero(g.params));
  std::vector<int> chain{i};
  auto dfs = [&](auto&& self, int node, const ESeries& prefix, int sign) -> void {
    for (int next = node + 1; next <= j; ++next) {
      ESeries piece = prefix * g.ee(node, next);
      if (next == j) {
        total = sign < 0 ? total - piece : total + piece;
      } else {
        self(self, next, piece, -sign);
      }
    }
  };
  dfs(dfs, i, ESeries::constant(g.params.N, Element::unit(g.params)), -1);
  return total;
}

// f'_ji(u): entries of F^{-1}, mirrored chains j = j_0 > j_1 > ... > j_s = i.
inline ESeries primed_f(const GaussData& g, int j, int i) {
  if (!(j > i)) throw std::invalid_argument("primed_f: need j > i");
  ESeries total(g.params.N, Element::zero(g.params));
  auto dfs = [&](auto&& self, int node, const ESeries& prefix, int sign) -> void {
    for (int next = node - 1; next >= i; --next) {
      ESeries piece = prefix * g.ff(node, next);
      if (next == i) {
        total = sign < 0 ? total - piece : total + piece;
      } else {
        self(self, next, piece, -sign);
      }
    }
  };
  dfs(dfs, j, ESeries::constant(g.params.N, Element::unit(g.params)), -1);
  return total;
}

// Coefficientwise super-commutator [x(u), y(v)] as a two-variable window.
inline BiSeries<Element> bi_commutator(const ESeries& x, const ESeries& y) {
  BiSeries<Element> out(x.order(), y.order(), CoeffOps<Element>::zero_like(x.zero_proto()));
  for (int r = 0; r <= x.order(); ++r)
    for (int s = 0; s <= y.order(); ++s) out.at(r, s) = super_commutator(x[r], y[s]);
  return out;
}

// Residual of the mixed relation
//   (u-v) [t_ij(u), t'_kl(v)] =
//     (-1)^{pi pj + pi pk + pj pk} ( d_kj sum_s t_is(u) t'_sl(v)
//                                  - d_il sum_s t'_ks(v) t_sj(u) ),
// reduced coefficientwise; exact inside the returned validity window.
inline BiSeries<Element> eq5_residual(Rewriter& rw, const EMat& T, const EMat& Tp, int i,
                                      int j, int k, int l) {
  const AlgebraParams& p = rw.params();
  int K = p.size(), N = p.N;

  BiSeries<Element> lhs = bi_commutator(T[i - 1][j - 1], Tp[k - 1][l - 1]).mul_u_minus_v();

  BiSeries<Element> rhs(N, N, Element::zero(p));
  int sgn = ((p.parity(i) & p.parity(j)) ^ (p.parity(i) & p.parity(k)) ^
             (p.parity(j) & p.parity(k)))
                ? -1
                : 1;
  if (k == j)
    for (int s = 1; s <= K; ++s)
      rhs = rhs + BiSeries<Element>::from_u(T[i - 1][s - 1], N) *
                      BiSeries<Element>::from_v(Tp[s - 1][l - 1], N);
  if (i == l)
    for (int s = 1; s <= K; ++s)
      rhs = rhs - BiSeries<Element>::from_v(Tp[k - 1][s - 1], N) *
                      BiSeries<Element>::from_u(T[s - 1][j - 1], N);
  if (sgn < 0) rhs = BiSeries<Element>(N, N, Element::zero(p)) - rhs;

  BiSeries<Element> res = lhs - rhs;
  for (int r = 0; r <= std::min(res.valid_u(), res.ru()); ++r)
    for (int s = 0; s <= std::min(res.valid_v(), res.rv()); ++s)
      res.at(r, s) = rw.reduce(res.at(r, s));
  return res;
}

inline BiSeries<Element> eq5_residual(Rewriter& rw, int i, int j, int k, int l) {
  EMat T = t_matrix(rw.params());
  EMat Tp = mat_invert(T);
  return eq5_residual(rw, T, Tp, i, j, k, l);
}

inline bool biseries_zero_on_window(const BiSeries<Element>& b) {
  for (int r = 0; r <= std::min(b.valid_u(), b.ru()); ++r)
    for (int s = 0; s <= std::min(b.valid_v(), b.rv()); ++s)
      if (!b.at(r, s).is_zero()) return false;
  return true;
}

}  // namespace syang

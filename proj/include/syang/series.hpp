#pragma once

#include "syang/element.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace syang {

// Hooks letting series code build ring constants that match an existing
// coefficient (Element needs its algebra tag carried over).
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Scalar> {
  static Scalar zero_like(const Scalar&) { return Scalar(0); }
  static Scalar one_like(const Scalar&) { return Scalar(1); }
  static bool is_zero(const Scalar& c) { return c == 0; }
};

template <>
struct CoeffOps<Element> {
  static Element zero_like(const Element& e) { return Element::zero(e.params()); }
  static Element one_like(const Element& e) { return Element::unit(e.params()); }
  static bool is_zero(const Element& e) { return e.is_zero(); }
};

// Truncated series sum_{r=0}^{N} c_r u^{-r} over an exact coefficient ring.
// All arithmetic is exact; products truncate to the smaller order.
template <class C>
class USeries {
 public:
  USeries(int N, const C& zero) : N_(N), c_(std::size_t(N) + 1, zero) {
    if (N < 0) throw std::invalid_argument("USeries: negative truncation order");
  }

  static USeries constant(int N, const C& value) {
    USeries s(N, CoeffOps<C>::zero_like(value));
    s.c_[0] = value;
    return s;
  }

  int order() const { return N_; }

  const C& operator[](int r) const {
    check(r);
    return c_[std::size_t(r)];
  }
  C& operator[](int r) {
    check(r);
    return c_[std::size_t(r)];
  }

  bool is_zero() const {
    for (const C& c : c_)
      if (!CoeffOps<C>::is_zero(c)) return false;
    return true;
  }

  const C& zero_proto() const { return c_[0]; }  // any slot works as a prototype

  USeries truncated(int M) const {
    USeries out(M, CoeffOps<C>::zero_like(c_[0]));
    for (int r = 0; r <= std::min(M, N_); ++r) out.c_[r] = c_[r];
    return out;
  }

  friend USeries operator+(const USeries& a, const USeries& b) {
    int N = std::min(a.N_, b.N_);
    USeries out(N, CoeffOps<C>::zero_like(a.c_[0]));
    for (int r = 0; r <= N; ++r) out.c_[r] = a.c_[r] + b.c_[r];
    return out;
  }

  friend USeries operator-(const USeries& a, const USeries& b) {
    int N = std::min(a.N_, b.N_);
    USeries out(N, CoeffOps<C>::zero_like(a.c_[0]));
    for (int r = 0; r <= N; ++r) out.c_[r] = a.c_[r] - b.c_[r];
    return out;
  }

  USeries operator-() const {
    USeries out = *this;
    for (C& c : out.c_) c = -c;
    return out;
  }

  friend USeries operator*(const USeries& a, const USeries& b) {
    int N = std::min(a.N_, b.N_);
    USeries out(N, CoeffOps<C>::zero_like(a.c_[0]));
    for (int r = 0; r <= N; ++r)
      for (int p = 0; p <= r; ++p) out.c_[r] += a.c_[p] * b.c_[r - p];
    return out;
  }

  USeries& operator+=(const USeries& o) { return *this = *this + o; }
  USeries& operator-=(const USeries& o) { return *this = *this - o; }
  USeries& operator*=(const USeries& o) { return *this = *this * o; }

  friend USeries operator*(const USeries& a, const Scalar& s) {
    USeries out = a;
    for (C& c : out.c_) c = c * s;
    return out;
  }
  friend USeries operator*(const Scalar& s, const USeries& a) { return a * s; }

  // Left/right multiplication by a bare coefficient (order matters over Element).
  USeries left_mul(const C& x) const {
    USeries out = *this;
    for (C& c : out.c_) c = x * c;
    return out;
  }
  USeries right_mul(const C& x) const {
    USeries out = *this;
    for (C& c : out.c_) c = c * x;
    return out;
  }

  friend bool operator==(const USeries& a, const USeries& b) {
    return a.N_ == b.N_ && a.c_ == b.c_;
  }

 private:
  void check(int r) const {
    if (r < 0 || r > N_)
      throw std::out_of_range("USeries: coefficient index " + std::to_string(r) +
                              " outside 0.." + std::to_string(N_));
  }

  int N_;
  std::vector<C> c_;
};

// Two-sided inverse of a series with unit constant term (Neumann recursion).
template <class C>
USeries<C> series_invert(const USeries<C>& s) {
  const C one = CoeffOps<C>::one_like(s.zero_proto());
  if (!(s[0] == one))
    throw std::invalid_argument("series_invert: constant term is not the unit");
  USeries<C> b(s.order(), CoeffOps<C>::zero_like(s.zero_proto()));
  b[0] = one;
  for (int r = 1; r <= s.order(); ++r) {
    C acc = CoeffOps<C>::zero_like(s.zero_proto());
    for (int k = 1; k <= r; ++k) acc += s[k] * b[r - k];
    b[r] = -acc;
  }
  return b;
}

// s(u + c), re-expanded around u = infinity:
// u^{-r} -> sum_k (-1)^k C(r+k-1, k) c^k u^{-r-k}.
template <class C>
USeries<C> series_shift(const USeries<C>& s, const Scalar& c) {
  USeries<C> out(s.order(), CoeffOps<C>::zero_like(s.zero_proto()));
  out[0] = s[0];
  for (int r = 1; r <= s.order(); ++r) {
    for (int t = r; t <= s.order(); ++t) {
      int k = t - r;
      Scalar coef = Scalar(binomial(t - 1, k)) * pow_scalar(c, k);
      if (k & 1) coef = -coef;
      if (coef != 0) out[t] += s[r] * coef;
    }
  }
  return out;
}

// Unique atilde with a(u) = atilde(u) atilde(u-1) ... atilde(u-K+1), solved
// coefficientwise (each step divides by K). Coefficients must commute pairwise;
// pass a checker to enforce that for noncommutative coefficient rings.
template <class C>
USeries<C> factorial_root(const USeries<C>& a, int K,
                          const std::function<bool(const C&, const C&)>& commute = {}) {
  const C one = CoeffOps<C>::one_like(a.zero_proto());
  if (K < 1) throw std::invalid_argument("factorial_root: need K >= 1");
  if (!(a[0] == one))
    throw std::invalid_argument("factorial_root: constant term is not the unit");
  if (commute) {
    for (int r = 1; r <= a.order(); ++r)
      for (int s = r + 1; s <= a.order(); ++s)
        if (!commute(a[r], a[s]))
          throw std::invalid_argument("factorial_root: coefficients at levels " +
                                      std::to_string(r) + "," + std::to_string(s) +
                                      " do not commute");
  }
  USeries<C> root(a.order(), CoeffOps<C>::zero_like(a.zero_proto()));
  root[0] = one;
  Scalar invK(1, K);
  for (int r = 1; r <= a.order(); ++r) {
    USeries<C> prod = root.truncated(r);
    USeries<C> base = root.truncated(r);
    for (int k = 1; k < K; ++k) prod = prod * series_shift(base, Scalar(-k));
    C correction = a[r] - prod[r];
    root[r] = correction * invK;
  }
  return root;
}

// Exact rectangular window of a two-variable expansion
// sum c_{r,s} u^{-r} v^{-s}, 0 <= r <= Ru, 0 <= s <= Rv. Entries are exact
// only inside the validity window (valid_u, valid_v); operations shrink it.
template <class C>
class BiSeries {
 public:
  BiSeries(int Ru, int Rv, const C& zero)
      : Ru_(Ru), Rv_(Rv), vu_(Ru), vv_(Rv),
        c_(std::size_t(Ru + 1) * std::size_t(Rv + 1), zero) {
    if (Ru < 0 || Rv < 0) throw std::invalid_argument("BiSeries: negative order");
  }

  static BiSeries from_u(const USeries<C>& s, int Rv) {
    BiSeries out(s.order(), Rv, CoeffOps<C>::zero_like(s.zero_proto()));
    for (int r = 0; r <= s.order(); ++r) out.at(r, 0) = s[r];
    return out;  // exact for every v power: validity = full storage
  }

  static BiSeries from_v(const USeries<C>& s, int Ru) {
    BiSeries out(Ru, s.order(), CoeffOps<C>::zero_like(s.zero_proto()));
    for (int s0 = 0; s0 <= s.order(); ++s0) out.at(0, s0) = s[s0];
    return out;
  }

  int ru() const { return Ru_; }
  int rv() const { return Rv_; }
  int valid_u() const { return vu_; }
  int valid_v() const { return vv_; }
  void restrict_validity(int vu, int vv) {
    vu_ = std::min(vu_, vu);
    vv_ = std::min(vv_, vv);
  }

  C& at(int r, int s) { return c_[idx(r, s)]; }
  const C& at(int r, int s) const { return c_[idx(r, s)]; }

  bool is_zero() const {
    for (const C& c : c_)
      if (!CoeffOps<C>::is_zero(c)) return false;
    return true;
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries out(std::min(a.Ru_, b.Ru_), std::min(a.Rv_, b.Rv_),
                 CoeffOps<C>::zero_like(a.c_[0]));
    out.vu_ = std::min(a.vu_, b.vu_);
    out.vv_ = std::min(a.vv_, b.vv_);
    for (int r = 0; r <= out.Ru_; ++r)
      for (int s = 0; s <= out.Rv_; ++s) out.at(r, s) = a.at(r, s) + b.at(r, s);
    return out;
  }

  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    BiSeries out(std::min(a.Ru_, b.Ru_), std::min(a.Rv_, b.Rv_),
                 CoeffOps<C>::zero_like(a.c_[0]));
    out.vu_ = std::min(a.vu_, b.vu_);
    out.vv_ = std::min(a.vv_, b.vv_);
    for (int r = 0; r <= out.Ru_; ++r)
      for (int s = 0; s <= out.Rv_; ++s) out.at(r, s) = a.at(r, s) - b.at(r, s);
    return out;
  }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries out(std::min(a.Ru_, b.Ru_), std::min(a.Rv_, b.Rv_),
                 CoeffOps<C>::zero_like(a.c_[0]));
    out.vu_ = std::min(a.vu_, b.vu_);
    out.vv_ = std::min(a.vv_, b.vv_);
    for (int r = 0; r <= out.Ru_; ++r)
      for (int s = 0; s <= out.Rv_; ++s) {
        C acc = CoeffOps<C>::zero_like(a.c_[0]);
        for (int p = 0; p <= r; ++p)
          for (int q = 0; q <= s; ++q) acc += a.at(p, q) * b.at(r - p, s - q);
        out.at(r, s) = acc;
      }
    return out;
  }

  // Multiplication by (u - v); validity shrinks by one in each variable.
  BiSeries mul_u_minus_v() const {
    BiSeries out(Ru_, Rv_, CoeffOps<C>::zero_like(c_[0]));
    for (int r = 0; r <= Ru_; ++r)
      for (int s = 0; s <= Rv_; ++s) {
        C acc = CoeffOps<C>::zero_like(c_[0]);
        if (r + 1 <= Ru_) acc += at(r + 1, s);
        if (s + 1 <= Rv_) acc -= at(r, s + 1);
        out.at(r, s) = acc;
      }
    out.vu_ = std::min(vu_, Ru_) - 1;
    out.vv_ = std::min(vv_, Rv_) - 1;
    return out;
  }

 private:
  std::size_t idx(int r, int s) const {
    if (r < 0 || r > Ru_ || s < 0 || s > Rv_)
      throw std::out_of_range("BiSeries: index (" + std::to_string(r) + "," +
                              std::to_string(s) + ") outside storage");
    return std::size_t(r) * std::size_t(Rv_ + 1) + std::size_t(s);
  }

  int Ru_, Rv_;
  int vu_, vv_;
  std::vector<C> c_;
};

using SSeries = USeries<Scalar>;
using ESeries = USeries<Element>;

}  // namespace syang

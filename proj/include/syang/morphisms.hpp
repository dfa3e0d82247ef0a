#pragma once

#include "syang/tensoralg.hpp"
#include "syang/tmatrix.hpp"

#include <utility>
#include <vector>

namespace syang {

// Extend a generator-image table to the whole algebra multiplicatively.
template <class F>
Element map_words(const AlgebraParams& target, const Element& x, F&& image) {
  Element out = Element::zero(target);
  for (const auto& [w, c] : x.terms()) {
    Element prod = Element::unit(target);
    for (GenCode g : w) prod = prod * image(gen_i(g), gen_j(g), gen_r(g));
    out += prod * c;
  }
  return out;
}

// --- Hopf structure ---------------------------------------------------------

// Delta^{(l)}(t_ij^{(r)}): sum over compositions r = p_1 + ... + p_l and index
// chains i = k_0, ..., k_l = j of t_{k_0 k_1}^{(p_1)} (x) ... (x) t_{k_{l-1} k_l}^{(p_l)},
// with t^{(0)} = delta (an empty slot).
inline NTensorElement coproduct_gen(const AlgebraParams& p, int i, int j, int r, int l = 2) {
  p.validate();
  int K = p.size();
  NTensorElement out = NTensorElement::zero(p, l);
  std::vector<NTensorElement::Term> acc;
  NTensorElement::Tuple tup;
  tup.resize(std::size_t(l));
  auto dfs = [&](auto&& self, int slot, int k, int rem) -> void {
    if (slot == l) {
      if (rem == 0 && k == j) acc.push_back({tup, Scalar(1)});
      return;
    }
    // empty slot: level 0 forces the chain index to stay put
    self(self, slot + 1, k, rem);
    for (int lev = 1; lev <= rem; ++lev)
      for (int next = 1; next <= K; ++next) {
        tup[std::size_t(slot)] = Word{pack_gen(k, next, lev)};
        self(self, slot + 1, next, rem - lev);
        tup[std::size_t(slot)].clear();
      }
  };
  dfs(dfs, 0, i, r);
  for (auto& t : acc) out += NTensorElement::pure(p, std::move(t.first), t.second);
  return out;
}

inline NTensorElement coproduct(const AlgebraParams& p, const Element& x, int l = 2) {
  NTensorElement out = NTensorElement::zero(p, l);
  for (const auto& [w, c] : x.terms()) {
    NTensorElement prod = NTensorElement::unit(p, l);
    for (GenCode g : w) prod *= coproduct_gen(p, gen_i(g), gen_j(g), gen_r(g), l);
    out += prod * c;
  }
  return out;
}

inline Scalar counit(const Element& x) {
  for (const auto& [w, c] : x.terms())
    if (w.empty()) return c;
  return Scalar(0);
}

// Apply Delta inside one slot (1-based), turning an l-tensor into an (l+1)-tensor.
inline NTensorElement delta_in_slot(const AlgebraParams& p, const NTensorElement& x, int slot) {
  if (slot < 1 || slot > x.slots())
    throw std::out_of_range("delta_in_slot: slot outside 1..l");
  NTensorElement out = NTensorElement::zero(p, x.slots() + 1);
  for (const auto& [tup, c] : x.terms()) {
    NTensorElement mid = NTensorElement::unit(p, 2);
    for (GenCode g : tup[std::size_t(slot - 1)])
      mid *= coproduct_gen(p, gen_i(g), gen_j(g), gen_r(g), 2);
    for (const auto& [pair, cm] : mid.terms()) {
      NTensorElement::Tuple big;
      big.reserve(std::size_t(x.slots()) + 1);
      for (int s = 0; s < slot - 1; ++s) big.push_back(tup[std::size_t(s)]);
      big.push_back(pair[0]);
      big.push_back(pair[1]);
      for (int s = slot; s < x.slots(); ++s) big.push_back(tup[std::size_t(s)]);
      out += NTensorElement::pure(p, std::move(big), c * cm);
    }
  }
  return out;
}

// tau(v (x) w) = (-1)^{p(v) p(w)} w (x) v on two-slot tensors.
inline NTensorElement tensor_swap(const NTensorElement& x) {
  if (x.slots() != 2) throw std::invalid_argument("tensor_swap: need exactly two slots");
  NTensorElement out = NTensorElement::zero(x.params(), 2);
  for (const auto& [tup, c] : x.terms()) {
    int sgn = word_parity_in(x.params(), tup[0]) & word_parity_in(x.params(), tup[1]);
    out += NTensorElement::pure(x.params(), {tup[1], tup[0]}, sgn ? -c : c);
  }
  return out;
}

// --- evaluation to U(gl_{m|n}) and back --------------------------------------

// pi: t_ij^{(1)} -> (-1)^{pa(i)} E_ij, higher levels -> 0. Slot 1 symbols.
inline UEAElement pi_eval(const AlgebraParams& p, const Element& x) {
  UEAElement out = UEAElement::zero(p);
  for (const auto& [w, c] : x.terms()) {
    bool dead = false;
    for (GenCode g : w)
      if (gen_r(g) != 1) {
        dead = true;
        break;
      }
    if (dead) continue;
    UWord uw;
    int sgn = 0;
    for (GenCode g : w) {
      uw.push_back(pack_uea(1, gen_i(g), gen_j(g)));
      sgn ^= p.parity(gen_i(g));
    }
    out += UEAElement::from_sorted(p, {{std::move(uw), sgn ? -c : c}});
  }
  return out;
}

// iota: E_ij -> (-1)^{pa(i)} t_ij^{(1)}; accepts single-slot UEA elements.
inline Element iota(const AlgebraParams& p, const UEAElement& x) {
  Element out = Element::zero(p);
  for (const auto& [uw, c] : x.terms()) {
    Word w;
    int sgn = 0;
    for (UCode u : uw) {
      if (uea_slot(u) != 1)
        throw std::invalid_argument("iota: element has symbols outside slot 1");
      w.push_back(pack_gen(uea_i(u), uea_j(u), 1));
      sgn ^= p.parity(uea_i(u));
    }
    out += Element::monomial(p, std::move(w), sgn ? -c : c);
  }
  return out;
}

// kappa_l(t_ij^{(r)}) = sum_{1<=s_1<...<s_r<=l} sum_{i_1..i_{r-1}}
//   E_{i i_1}^{[s_1]} ... E_{i_{r-1} j}^{[s_r]} (-1)^{pa(i)+pa(i_1)+...+pa(i_{r-1})};
// empty sum (r > l) gives zero.
inline UEAElement kappa_gen(const AlgebraParams& p, int i, int j, int r, int l) {
  p.validate();
  int K = p.size();
  UEAElement out = UEAElement::zero(p);
  std::vector<UEAElement::Term> acc;
  UWord word(std::size_t(r), UCode(0));
  auto dfs = [&](auto&& self, int step, int prev_slot, int prev_idx, int sgn) -> void {
    if (step == r) {
      acc.push_back({word, sgn ? Scalar(-1) : Scalar(1)});
      return;
    }
    bool last = step == r - 1;
    for (int s = prev_slot + 1; s <= l - (r - 1 - step); ++s) {
      if (last) {
        word[std::size_t(step)] = pack_uea(s, prev_idx, j);
        self(self, step + 1, s, j, sgn);
      } else {
        for (int nxt = 1; nxt <= K; ++nxt) {
          word[std::size_t(step)] = pack_uea(s, prev_idx, nxt);
          self(self, step + 1, s, nxt, sgn ^ p.parity(nxt));
        }
      }
    }
  };
  if (r >= 1 && r <= l) dfs(dfs, 0, 0, i, p.parity(i));
  out += UEAElement::from_sorted(p, UEAElement::canonicalize(std::move(acc)));
  return out;
}

inline UEAElement kappa(const AlgebraParams& p, const Element& x, int l) {
  UEAElement out = UEAElement::zero(p);
  for (const auto& [w, c] : x.terms()) {
    UEAElement prod = UEAElement::unit(p);
    for (GenCode g : w) prod *= kappa_gen(p, gen_i(g), gen_j(g), gen_r(g), l);
    out += prod * c;
  }
  return out;
}

// The defining route (pi (x) ... (x) pi) composed with Delta^{(l)}.
inline UEAElement kappa_via_coproduct(const AlgebraParams& p, const Element& x, int l) {
  NTensorElement dl = coproduct(p, x, l);
  UEAElement out = UEAElement::zero(p);
  for (const auto& [tup, c] : dl.terms()) {
    UWord uw;
    int sgn = 0;
    bool dead = false;
    for (int s = 1; s <= l && !dead; ++s)
      for (GenCode g : tup[std::size_t(s - 1)]) {
        if (gen_r(g) != 1) {
          dead = true;
          break;
        }
        uw.push_back(pack_uea(s, gen_i(g), gen_j(g)));
        sgn ^= p.parity(gen_i(g));
      }
    if (dead) continue;
    out += UEAElement::from_sorted(p, {{std::move(uw), sgn ? -c : c}});
  }
  return out;
}

// --- T-inverse based maps -----------------------------------------------------

// Coefficients t'_ij^{(r)} of T(u)^{-1}, shared by the antipode, omega and zeta.
class InverseTable {
 public:
  explicit InverseTable(const AlgebraParams& p) : p_(p), tp_(mat_invert(t_matrix(p))) {}

  const AlgebraParams& params() const { return p_; }

  const Element& image(int i, int j, int r) const {
    int K = p_.size();
    if (i < 1 || i > K || j < 1 || j > K)
      throw std::out_of_range("InverseTable: index outside 1.." + std::to_string(K));
    return tp_[std::size_t(i) - 1][std::size_t(j) - 1][r];
  }

  const ESeries& series(int i, int j) const {
    return tp_[std::size_t(i) - 1][std::size_t(j) - 1];
  }

 private:
  AlgebraParams p_;
  EMat tp_;
};

// Antipode S: t_ij^{(r)} -> t'_ij^{(r)}, extended as a super-anti-homomorphism:
// S(g_1 ... g_k) = (-1)^{#{odd pairs}} S(g_k) ... S(g_1).
inline Element antipode(const InverseTable& tbl, const Element& x) {
  const AlgebraParams& p = tbl.params();
  Element out = Element::zero(p);
  for (const auto& [w, c] : x.terms()) {
    int odd = 0;
    for (GenCode g : w) odd += p.parity(gen_i(g)) ^ p.parity(gen_j(g));
    int sgn = (odd * (odd - 1) / 2) & 1;
    Element prod = Element::unit(p);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      prod = prod * tbl.image(gen_i(*it), gen_j(*it), gen_r(*it));
    out += prod * (sgn ? -c : c);
  }
  return out;
}

// m(S (x) id)Delta(x) or m(id (x) S)Delta(x); equals counit(x) * 1 by the
// antipode axiom.
inline Element antipode_convolution(const InverseTable& tbl, const Element& x, bool s_first) {
  const AlgebraParams& p = tbl.params();
  NTensorElement d = coproduct(p, x, 2);
  Element out = Element::zero(p);
  for (const auto& [tup, c] : d.terms()) {
    Element a = Element::monomial(p, tup[0]);
    Element b = Element::monomial(p, tup[1]);
    out += (s_first ? antipode(tbl, a) * b : a * antipode(tbl, b)) * c;
  }
  return out;
}

// Right-hand side of Delta(t'_ij(u)) = sum_k t'_kj(u) (x) t'_ik(u)
// (-1)^{(pa(i)+pa(k))(pa(j)+pa(k))}, at coefficient level r.
inline NTensorElement coproduct_twist_rhs(const InverseTable& tbl, int i, int j, int r) {
  const AlgebraParams& p = tbl.params();
  NTensorElement out = NTensorElement::zero(p, 2);
  for (int k = 1; k <= p.size(); ++k) {
    int sgn = (p.parity(i) ^ p.parity(k)) & (p.parity(j) ^ p.parity(k));
    for (int q = 0; q <= r; ++q) {
      const Element& left = tbl.image(k, j, q);
      const Element& right = tbl.image(i, k, r - q);
      for (const auto& [wl, cl] : left.terms())
        for (const auto& [wr, cr] : right.terms()) {
          Scalar c = cl * cr;
          if (sgn) c = -c;
          out += NTensorElement::pure(p, {wl, wr}, c);
        }
    }
  }
  return out;
}

// omega: T(u) -> T(-u)^{-1}, i.e. t_ij^{(r)} -> (-1)^r t'_ij^{(r)}.
inline Element omega(const InverseTable& tbl, const Element& x) {
  return map_words(tbl.params(), x, [&](int i, int j, int r) {
    Element e = tbl.image(i, j, r);
    if (r & 1) e = -e;
    return e;
  });
}

// rho: Y(gl_{m|n}) -> Y(gl_{n|m}), t_ij^{(r)} -> (-1)^r t_{i'j'}^{(r)} with
// i' = m+n+1-i.
inline Element rho(const AlgebraParams& src, const Element& x) {
  AlgebraParams tgt{src.n, src.m, src.N};
  int K = src.size();
  return map_words(tgt, x, [&](int i, int j, int r) {
    Element e = Element::generator(tgt, K + 1 - i, K + 1 - j, r);
    if (r & 1) e = -e;
    return e;
  });
}

// zeta = rho . omega : Y(gl_{m|n}) -> Y(gl_{n|m}); satisfies
// zeta(t_ij(u)) = t'_{i'j'}(u) on the nose.
inline Element zeta(const InverseTable& src_table, const Element& x) {
  return rho(src_table.params(), omega(src_table, x));
}

// psi_k = omega_{m+k|n} . phi_k . omega_{m|n} : Y(gl_{m|n}) -> Y(gl_{m+k|n}),
// phi_k the index shift t_ij^{(r)} -> t_{i+k, j+k}^{(r)}.
class PsiMap {
 public:
  PsiMap(const AlgebraParams& src, int k)
      : src_(src), k_(checked(k)), tgt_{src.m + k, src.n, src.N}, inv_src_(src),
        inv_tgt_(tgt_) {}

  const AlgebraParams& target() const { return tgt_; }

  Element apply(const Element& x) const {
    Element w = omega(inv_src_, x);
    Element shifted = map_words(tgt_, w, [&](int i, int j, int r) {
      return Element::generator(tgt_, i + k_, j + k_, r);
    });
    return omega(inv_tgt_, shifted);
  }

 private:
  static int checked(int k) {
    if (k < 0) throw std::invalid_argument("PsiMap: need k >= 0");
    return k;
  }

  AlgebraParams src_;
  int k_;
  AlgebraParams tgt_;
  InverseTable inv_src_;
  InverseTable inv_tgt_;
};

// mu_f: t_ij(u) -> f(u) t_ij(u) for a scalar series f with f_0 = 1:
// t_ij^{(r)} -> f_r delta_ij + sum_{p=0}^{r-1} f_p t_ij^{(r-p)}.
inline Element mu_f(const AlgebraParams& p, const SSeries& f, const Element& x) {
  if (f[0] != 1) throw std::invalid_argument("mu_f: series must have constant term 1");
  return map_words(p, x, [&](int i, int j, int r) {
    if (r > f.order())
      throw std::out_of_range("mu_f: series order " + std::to_string(f.order()) +
                              " too small for level " + std::to_string(r));
    Element img = Element::zero(p);
    if (i == j) img += Element::scalar_elem(p, f[r]);
    for (int q = 0; q < r; ++q)
      if (f[q] != 0) img += Element::generator(p, i, j, r - q) * f[q];
    return img;
  });
}

}  // namespace syang

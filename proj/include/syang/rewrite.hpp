#pragma once

#include "syang/element.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace syang {

// Which out-of-order adjacent pair a rewriting step picks first. Confluence of
// the two choices is a tested property, not an assumption.
enum class Strategy { leftmost, rightmost };

// Total order on generators used for normal forms: class-major with
// F (i > j) before D (i = j) before E (i < j), then lexicographic on (i, j, r).
struct GeneratorOrder {
  static std::uint64_t key(GenCode g) {
    int i = gen_i(g), j = gen_j(g);
    std::uint64_t cls = i > j ? 0 : (i == j ? 1 : 2);
    return (cls << 32) | std::uint64_t(g);
  }
  static bool less(GenCode a, GenCode b) { return key(a) < key(b); }
};

// PBW rewriting engine for Y(gl_{m|n}). A monomial is normal when its factors
// are non-decreasing in GeneratorOrder and no odd generator repeats. One step:
//   ab   -> (-1)^{p(a)p(b)} ba + [a, b]        (a > b in order)
//   aa   -> 1/2 [a, a]                          (a odd)
// with [.,.] the defining-relation commutator; corrections strictly drop deg1,
// swaps drop the inversion count, so rewriting terminates.
//
// Memo tables are per-instance and unsynchronized: share one Rewriter per
// thread. reduce() is pure in its observable behavior.
class Rewriter {
 public:
  explicit Rewriter(const AlgebraParams& p, Strategy s = Strategy::leftmost)
      : p_(p), strat_(s) {
    p_.validate();
  }

  const AlgebraParams& params() const { return p_; }
  Strategy strategy() const { return strat_; }

  // [t_ij^(r), t_kl^(s)] expanded per the defining relation, t^(0) = delta.
  const Element& defining_commutator(int i, int j, int r, int k, int l, int s) const {
    std::uint64_t key = (std::uint64_t(pack_gen(i, j, r)) << 32) | pack_gen(k, l, s);
    if (auto it = comm_.find(key); it != comm_.end()) return it->second;
    return comm_.emplace(key, build_commutator(i, j, r, k, l, s)).first->second;
  }

  Element reduce(const Element& e) const {
    if (!e.is_zero() && (e.m() != p_.m || e.n() != p_.n))
      throw std::invalid_argument("reduce: element belongs to a different gl(m|n)");
    std::vector<Element::Term> acc;
    for (const auto& [w, c] : e.terms()) {
      const Element& nf = nf_word(w);
      for (const auto& [nw, nc] : nf.terms()) acc.push_back({nw, c * nc});
    }
    return Element::from_sorted(p_, Element::canonicalize(std::move(acc)));
  }

  bool is_normal_word(const Word& w) const { return find_bad(w) < 0; }

  bool is_normal(const Element& e) const {
    for (const auto& [w, c] : e.terms())
      if (!is_normal_word(w)) return false;
    return true;
  }

  // All normal monomials with deg1 <= max_deg1, unit first, ordered by
  // (deg1, length, generator-order-lexicographic).
  std::vector<Element> pbw_basis(int max_deg1) const {
    if (max_deg1 < 0) throw std::invalid_argument("pbw_basis: negative bound");
    std::vector<GenCode> gens;
    int sz = p_.size();
    for (int i = 1; i <= sz; ++i)
      for (int j = 1; j <= sz; ++j)
        for (int r = 1; r <= max_deg1; ++r) gens.push_back(pack_gen(i, j, r));
    std::sort(gens.begin(), gens.end(),
              [](GenCode a, GenCode b) { return GeneratorOrder::less(a, b); });
    std::vector<Word> words;
    Word cur;
    enumerate(gens, 0, max_deg1, cur, words);
    std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
      int da = word_deg1(a), db = word_deg1(b);
      if (da != db) return da < db;
      if (a.size() != b.size()) return a.size() < b.size();
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return GeneratorOrder::less(a[k], b[k]);
      return false;
    });
    std::vector<Element> out;
    out.reserve(words.size());
    for (Word& w : words) out.push_back(Element::monomial(p_, std::move(w)));
    return out;
  }

  int gen_parity(GenCode g) const { return p_.gen_parity(gen_i(g), gen_j(g)); }

 private:
  Element build_commutator(int i, int j, int r, int k, int l, int s) const {
    int sz = p_.size();
    auto rng = [&](int x) { return x >= 1 && x <= sz; };
    if (!rng(i) || !rng(j) || !rng(k) || !rng(l))
      throw std::out_of_range("defining_commutator: index outside 1.." + std::to_string(sz));
    if (r < 1 || s < 1) throw std::out_of_range("defining_commutator: levels must be >= 1");
    int se = (p_.parity(i) & p_.parity(j)) ^ (p_.parity(i) & p_.parity(k)) ^
             (p_.parity(j) & p_.parity(k));
    Scalar sgn = se ? -1 : 1;
    std::vector<Element::Term> acc;
    int top = std::min(r, s) - 1;
    for (int p = 0; p <= top; ++p) {
      int lo = p, hi = r + s - 1 - p;
      if (lo == 0) {
        if (k == j) acc.push_back({Word{pack_gen(i, l, hi)}, sgn});
        if (i == l) acc.push_back({Word{pack_gen(k, j, hi)}, -sgn});
      } else {
        acc.push_back({Word{pack_gen(k, j, lo), pack_gen(i, l, hi)}, sgn});
        acc.push_back({Word{pack_gen(k, j, hi), pack_gen(i, l, lo)}, -sgn});
      }
    }
    return Element::from_sorted(p_, Element::canonicalize(std::move(acc)));
  }

  bool bad_pair(GenCode a, GenCode b) const {
    if (a == b) return gen_parity(a) != 0;
    return GeneratorOrder::less(b, a);
  }

  int find_bad(const Word& w) const {
    if (w.size() < 2) return -1;
    if (strat_ == Strategy::leftmost) {
      for (int p = 0; p + 1 < int(w.size()); ++p)
        if (bad_pair(w[p], w[p + 1])) return p;
    } else {
      for (int p = int(w.size()) - 2; p >= 0; --p)
        if (bad_pair(w[p], w[p + 1])) return p;
    }
    return -1;
  }

  const Element& nf_word(const Word& w) const {
    if (auto it = nf_.find(w); it != nf_.end()) return it->second;
    Element result;
    int pos = find_bad(w);
    if (pos < 0) {
      result = Element::from_sorted(p_, {{w, Scalar(1)}});
    } else {
      GenCode a = w[pos], b = w[pos + 1];
      Element local;
      if (a == b) {
        local = defining_commutator(gen_i(a), gen_j(a), gen_r(a), gen_i(a), gen_j(a),
                                    gen_r(a)) *
                Scalar(1, 2);
      } else {
        Scalar swap_sgn = (gen_parity(a) & gen_parity(b)) ? -1 : 1;
        local = Element::from_sorted(p_, {{Word{b, a}, swap_sgn}}) +
                defining_commutator(gen_i(a), gen_j(a), gen_r(a), gen_i(b), gen_j(b),
                                    gen_r(b));
      }
      std::vector<Element::Term> acc;
      for (const auto& [lw, c] : local.terms()) {
        Word full;
        full.reserve(w.size() - 2 + lw.size());
        full.assign(w.begin(), w.begin() + pos);
        full.insert(full.end(), lw.begin(), lw.end());
        full.insert(full.end(), w.begin() + pos + 2, w.end());
        for (const auto& [nw, nc] : nf_word(full).terms()) acc.push_back({nw, c * nc});
      }
      result = Element::from_sorted(p_, Element::canonicalize(std::move(acc)));
    }
    return nf_.emplace(w, std::move(result)).first->second;
  }

  void enumerate(const std::vector<GenCode>& gens, std::size_t from, int budget, Word& cur,
                 std::vector<Word>& out) const {
    out.push_back(cur);
    for (std::size_t k = from; k < gens.size(); ++k) {
      GenCode g = gens[k];
      if (gen_r(g) > budget) continue;
      if (!cur.empty() && cur.back() == g && gen_parity(g)) continue;  // no odd squares
      cur.push_back(g);
      enumerate(gens, k, budget - gen_r(g), cur, out);
      cur.pop_back();
    }
  }

  AlgebraParams p_;
  Strategy strat_;
  mutable std::unordered_map<std::uint64_t, Element> comm_;
  mutable std::unordered_map<Word, Element, WordHash> nf_;
};

// det X_l for the section-2 interpolation matrix: row k (0-based) holds the
// degree-k elementary symmetric sums of c_1..c_l omitting the column's c_j.
// Postcondition (checked): det = prod_{i<j} (c_i - c_j).
inline Scalar vandermonde_det(const std::vector<Scalar>& c) {
  std::size_t l = c.size();
  if (l < 1) throw std::invalid_argument("vandermonde_det: need l >= 1");
  std::vector<std::vector<Scalar>> x(l, std::vector<Scalar>(l, 0));
  for (std::size_t col = 0; col < l; ++col) {
    std::vector<Scalar> e(l, 0);
    e[0] = 1;
    std::size_t used = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (i == col) continue;
      ++used;
      for (std::size_t k = std::min(used, l - 1); k >= 1; --k) e[k] += c[i] * e[k - 1];
    }
    for (std::size_t k = 0; k < l; ++k) x[k][col] = e[k];
  }
  Scalar det = 1;
  for (std::size_t piv = 0; piv < l; ++piv) {
    std::size_t row = piv;
    while (row < l && x[row][piv] == 0) ++row;
    if (row == l) {
      det = 0;
      break;
    }
    if (row != piv) {
      std::swap(x[row], x[piv]);
      det = -det;
    }
    det *= x[piv][piv];
    for (std::size_t rr = piv + 1; rr < l; ++rr) {
      if (x[rr][piv] == 0) continue;
      Scalar f = x[rr][piv] / x[piv][piv];
      for (std::size_t cc = piv; cc < l; ++cc) x[rr][cc] -= f * x[piv][cc];
    }
  }
  Scalar prod = 1;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) prod *= (c[i] - c[j]);
  if (det != prod)
    throw std::logic_error("vandermonde_det: determinant does not match the product form");
  return det;
}

}  // namespace syang

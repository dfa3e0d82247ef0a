#pragma once

#include "syang/rewrite.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace syang {

// --- U(gl_{m|n})^{(x) l} as a PBW-rewritten algebra ------------------------
//
// Symbols E_ij^{[s]} are packed as (slot << 16) | (i << 8) | j, so numeric
// order on codes is lexicographic on (slot, i, j); that order is also the
// normal-form order. Symbols in different slots supercommute outright.

using UCode = std::uint32_t;

constexpr UCode pack_uea(int slot, int i, int j) {
  return (UCode(slot) << 16) | (UCode(i) << 8) | UCode(j);
}
constexpr int uea_slot(UCode c) { return int(c >> 16); }
constexpr int uea_i(UCode c) { return int((c >> 8) & 0xffu); }
constexpr int uea_j(UCode c) { return int(c & 0xffu); }

using UWord = boost::container::small_vector<UCode, 8>;

inline int uword_cmp(const UWord& a, const UWord& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  return 0;
}

inline std::string uea_str(UCode c) {
  return "E[" + std::to_string(uea_slot(c)) + ";" + std::to_string(uea_i(c)) + "," +
         std::to_string(uea_j(c)) + "]";
}

class UEAElement {
 public:
  using Term = std::pair<UWord, Scalar>;

  UEAElement() = default;
  explicit UEAElement(const AlgebraParams& p) : m_(p.m), n_(p.n) {}

  static UEAElement zero(const AlgebraParams& p) { return UEAElement(p); }

  static UEAElement unit(const AlgebraParams& p) {
    UEAElement e(p);
    e.t_.push_back({UWord{}, Scalar(1)});
    return e;
  }

  static UEAElement generator(const AlgebraParams& p, int slot, int i, int j) {
    int sz = p.size();
    if (i < 1 || i > sz || j < 1 || j > sz || slot < 1 || slot > 0xffff)
      throw std::out_of_range("UEA generator E[" + std::to_string(slot) + ";" +
                              std::to_string(i) + "," + std::to_string(j) + "] out of range");
    UEAElement e(p);
    e.t_.push_back({UWord{pack_uea(slot, i, j)}, Scalar(1)});
    return e;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  int sym_parity(UCode c) const {
    return (uea_i(c) <= m_ ? 0 : 1) ^ (uea_j(c) <= m_ ? 0 : 1);
  }
  int word_parity(const UWord& w) const {
    int p = 0;
    for (UCode c : w) p ^= sym_parity(c);
    return p;
  }

  UEAElement& operator+=(const UEAElement& o) {
    merge_tag(o);
    std::vector<Term> acc = t_;
    acc.insert(acc.end(), o.t_.begin(), o.t_.end());
    t_ = canonicalize(std::move(acc));
    return *this;
  }
  UEAElement& operator-=(const UEAElement& o) { return *this += -o; }

  UEAElement operator-() const {
    UEAElement e = *this;
    for (Term& t : e.t_) t.second = -t.second;
    return e;
  }

  UEAElement& operator*=(const Scalar& c) {
    if (c == 0) t_.clear();
    else
      for (Term& t : t_) t.second *= c;
    return *this;
  }

  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const Scalar& c) { return a *= c; }
  friend UEAElement operator*(const Scalar& c, UEAElement a) { return a *= c; }

  friend UEAElement operator*(const UEAElement& a, const UEAElement& b) {
    a.require_same_tag(b);
    UEAElement r(AlgebraParams{a.m_, a.n_, 1});
    std::vector<Term> acc;
    acc.reserve(a.t_.size() * b.t_.size());
    for (const Term& ta : a.t_)
      for (const Term& tb : b.t_) {
        UWord w = ta.first;
        w.insert(w.end(), tb.first.begin(), tb.first.end());
        acc.push_back({std::move(w), ta.second * tb.second});
      }
    r.t_ = canonicalize(std::move(acc));
    return r;
  }
  UEAElement& operator*=(const UEAElement& o) { return *this = *this * o; }

  friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.t_ == b.t_; }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : t_) {
      bool neg = t.second < 0;
      Scalar mag = neg ? Scalar(-t.second) : t.second;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string w;
      for (std::size_t k = 0; k < t.first.size(); ++k) {
        if (k) w += "*";
        w += uea_str(t.first[k]);
      }
      if (w.empty()) out += scalar_str(mag);
      else if (mag == 1) out += w;
      else out += scalar_str(mag) + "*" + w;
    }
    return out;
  }

  static std::vector<Term> canonicalize(std::vector<Term> v) {
    std::sort(v.begin(), v.end(),
              [](const Term& x, const Term& y) { return uword_cmp(x.first, y.first) < 0; });
    std::vector<Term> out;
    out.reserve(v.size());
    for (Term& t : v) {
      if (!out.empty() && uword_cmp(out.back().first, t.first) == 0)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    return out;
  }

  static UEAElement from_sorted(const AlgebraParams& p, std::vector<Term> v) {
    UEAElement e(p);
    e.t_ = std::move(v);
    return e;
  }

 private:
  void require_same_tag(const UEAElement& o) const {
    if (m_ != o.m_ || n_ != o.n_)
      throw std::invalid_argument("UEAElement: mixing algebras gl(" + std::to_string(m_) +
                                  "|" + std::to_string(n_) + ") and gl(" +
                                  std::to_string(o.m_) + "|" + std::to_string(o.n_) + ")");
  }
  void merge_tag(const UEAElement& o) {
    if (t_.empty() && m_ == 0 && n_ == 0) {
      m_ = o.m_;
      n_ = o.n_;
      return;
    }
    if (o.t_.empty() && o.m_ == 0 && o.n_ == 0) return;
    require_same_tag(o);
  }

  int m_ = 0, n_ = 0;
  std::vector<Term> t_;
};

// PBW normal form in U(gl_{m|n})^{(x) l}: words non-decreasing in the packed
// code, odd symbols never repeated. Same-slot symbols obey
//   [E_ij, E_kl] = d_kj E_il - (-1)^{(pi+pj)(pk+pl)} d_il E_kj;
// cross-slot symbols supercommute.
class UEAReducer {
 public:
  explicit UEAReducer(const AlgebraParams& p) : p_(p) { p_.validate(); }

  const AlgebraParams& params() const { return p_; }

  UEAElement reduce(const UEAElement& x) const {
    if (!x.is_zero() && (x.m() != p_.m || x.n() != p_.n))
      throw std::invalid_argument("UEAReducer: element belongs to a different algebra");
    std::vector<UEAElement::Term> acc;
    for (const auto& [w, c] : x.terms()) {
      const UEAElement& nf = nf_word(w);
      for (const auto& [wn, cn] : nf.terms()) acc.push_back({wn, cn * c});
    }
    return UEAElement::from_sorted(p_, UEAElement::canonicalize(std::move(acc)));
  }

  // Super-bracket of two symbols; zero across slots.
  UEAElement bracket(UCode a, UCode b) const {
    UEAElement out = UEAElement::zero(p_);
    if (uea_slot(a) != uea_slot(b)) return out;
    int s = uea_slot(a);
    int i = uea_i(a), j = uea_j(a), k = uea_i(b), l = uea_j(b);
    std::vector<UEAElement::Term> acc;
    if (k == j) acc.push_back({UWord{pack_uea(s, i, l)}, Scalar(1)});
    if (i == l) {
      Scalar c = (sym_parity(a) & sym_parity(b)) ? Scalar(1) : Scalar(-1);
      acc.push_back({UWord{pack_uea(s, k, j)}, c});
    }
    return UEAElement::from_sorted(p_, UEAElement::canonicalize(std::move(acc)));
  }

  int sym_parity(UCode c) const {
    return (uea_i(c) <= p_.m ? 0 : 1) ^ (uea_j(c) <= p_.m ? 0 : 1);
  }

 private:
  struct WordHashU {
    std::size_t operator()(const UWord& w) const {
      std::size_t h = 1469598103934665603ull;
      for (UCode c : w) {
        h ^= c;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  struct WordEqU {
    bool operator()(const UWord& a, const UWord& b) const { return uword_cmp(a, b) == 0; }
  };

  const UEAElement& nf_word(const UWord& w) const {
    auto it = nf_.find(w);
    if (it != nf_.end()) return it->second;

    std::size_t bad = w.size();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      UCode a = w[k], b = w[k + 1];
      if (a > b || (a == b && sym_parity(a))) {
        bad = k;
        break;
      }
    }
    if (bad == w.size()) {
      UEAElement nf = UEAElement::from_sorted(p_, {{w, Scalar(1)}});
      return nf_.emplace(w, std::move(nf)).first->second;
    }

    UCode a = w[bad], b = w[bad + 1];
    UWord prefix(w.begin(), w.begin() + bad);
    UWord suffix(w.begin() + bad + 2, w.end());
    UEAElement mid;
    if (a == b) {
      // odd square: aa = [a,a]/2, and the bracket vanishes for odd symbols
      mid = bracket(a, a) * Scalar(1, 2);
    } else {
      UEAElement swapped = UEAElement::from_sorted(p_, {{UWord{b, a}, Scalar(1)}});
      Scalar sgn = (sym_parity(a) & sym_parity(b)) ? Scalar(-1) : Scalar(1);
      mid = swapped * sgn + bracket(a, b);
    }

    std::vector<UEAElement::Term> acc;
    for (const auto& [wm, cm] : mid.terms()) {
      UWord full = prefix;
      full.insert(full.end(), wm.begin(), wm.end());
      full.insert(full.end(), suffix.begin(), suffix.end());
      const UEAElement& sub = nf_word(full);
      for (const auto& [wn, cn] : sub.terms()) acc.push_back({wn, cn * cm});
    }
    UEAElement nf = UEAElement::from_sorted(p_, UEAElement::canonicalize(std::move(acc)));
    return nf_.emplace(w, std::move(nf)).first->second;
  }

  AlgebraParams p_;
  mutable std::unordered_map<UWord, UEAElement, WordHashU, WordEqU> nf_;
};

// --- Y(gl_{m|n})^{(x) l} elements -------------------------------------------
//
// Terms are l-tuples of generator words with a scalar; multiplication uses the
// Koszul rule (v_1 (x) ... (x) v_l)(w_1 (x) ... (x) w_l) =
// (-1)^{sum_{a<b} p(w_a) p(v_b)} (v_1 w_1 (x) ... (x) v_l w_l).

class NTensorElement {
 public:
  using Tuple = std::vector<Word>;
  using Term = std::pair<Tuple, Scalar>;

  NTensorElement(const AlgebraParams& p, int slots) : p_(p), slots_(slots) {
    if (slots < 1) throw std::invalid_argument("NTensorElement: need at least one slot");
  }

  static NTensorElement zero(const AlgebraParams& p, int slots) {
    return NTensorElement(p, slots);
  }
  static NTensorElement unit(const AlgebraParams& p, int slots) {
    NTensorElement e(p, slots);
    e.t_.push_back({Tuple(std::size_t(slots)), Scalar(1)});
    return e;
  }
  static NTensorElement pure(const AlgebraParams& p, Tuple tup, const Scalar& c = Scalar(1)) {
    NTensorElement e(p, int(tup.size()));
    if (c != 0) e.t_.push_back({std::move(tup), c});
    return e;
  }

  const AlgebraParams& params() const { return p_; }
  int slots() const { return slots_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  int tuple_parity(const Tuple& t) const {
    int par = 0;
    for (const Word& w : t) par ^= word_parity_in(p_, w);
    return par;
  }

  NTensorElement& operator+=(const NTensorElement& o) {
    require_same(o);
    std::vector<Term> acc = t_;
    acc.insert(acc.end(), o.t_.begin(), o.t_.end());
    t_ = canonicalize(std::move(acc));
    return *this;
  }
  NTensorElement& operator-=(const NTensorElement& o) { return *this += -o; }

  NTensorElement operator-() const {
    NTensorElement e = *this;
    for (Term& t : e.t_) t.second = -t.second;
    return e;
  }

  NTensorElement& operator*=(const Scalar& c) {
    if (c == 0) t_.clear();
    else
      for (Term& t : t_) t.second *= c;
    return *this;
  }

  friend NTensorElement operator+(NTensorElement a, const NTensorElement& b) { return a += b; }
  friend NTensorElement operator-(NTensorElement a, const NTensorElement& b) { return a -= b; }
  friend NTensorElement operator*(NTensorElement a, const Scalar& c) { return a *= c; }
  friend NTensorElement operator*(const Scalar& c, NTensorElement a) { return a *= c; }

  friend NTensorElement operator*(const NTensorElement& a, const NTensorElement& b) {
    a.require_same(b);
    NTensorElement r(a.p_, a.slots_);
    std::vector<Term> acc;
    acc.reserve(a.t_.size() * b.t_.size());
    for (const Term& ta : a.t_)
      for (const Term& tb : b.t_) {
        int sgn = 0;
        for (int x = 0; x < a.slots_; ++x)
          for (int y = x + 1; y < a.slots_; ++y)
            sgn ^= word_parity_in(a.p_, tb.first[x]) & word_parity_in(a.p_, ta.first[y]);
        Tuple tup(std::size_t(a.slots_));
        for (int s = 0; s < a.slots_; ++s) {
          tup[s] = ta.first[s];
          tup[s].insert(tup[s].end(), tb.first[s].begin(), tb.first[s].end());
        }
        Scalar prod = ta.second * tb.second;
        if (sgn) prod = -prod;
        acc.push_back({std::move(tup), std::move(prod)});
      }
    r.t_ = canonicalize(std::move(acc));
    return r;
  }
  NTensorElement& operator*=(const NTensorElement& o) { return *this = *this * o; }

  friend bool operator==(const NTensorElement& a, const NTensorElement& b) {
    return a.slots_ == b.slots_ && a.t_ == b.t_;
  }

  // Slotwise PBW reduction; equality of results is equality mod relations.
  NTensorElement reduced(const Rewriter& rw) const {
    NTensorElement out(p_, slots_);
    std::vector<Term> acc;
    for (const Term& t : t_) {
      std::vector<Term> partial{{Tuple(std::size_t(slots_)), t.second}};
      for (int s = 0; s < slots_; ++s) {
        Element red = rw.reduce(Element::monomial(p_, t.first[std::size_t(s)]));
        std::vector<Term> next;
        next.reserve(partial.size() * red.terms().size());
        for (const Term& pt : partial)
          for (const auto& [wr, cr] : red.terms()) {
            Tuple tup = pt.first;
            tup[std::size_t(s)] = wr;
            next.push_back({std::move(tup), pt.second * cr});
          }
        partial = std::move(next);
      }
      acc.insert(acc.end(), partial.begin(), partial.end());
    }
    out.t_ = canonicalize(std::move(acc));
    return out;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : t_) {
      bool neg = t.second < 0;
      Scalar mag = neg ? Scalar(-t.second) : t.second;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string body;
      for (int s = 0; s < slots_; ++s) {
        if (s) body += " (x) ";
        const Word& w = t.first[std::size_t(s)];
        if (w.empty()) body += "1";
        else
          for (std::size_t k = 0; k < w.size(); ++k)
            body += (k ? "*" : "") + gen_str(w[k]);
      }
      if (mag == 1) out += body;
      else out += scalar_str(mag) + "*(" + body + ")";
    }
    return out;
  }

  static int tuple_cmp(const Tuple& a, const Tuple& b) {
    for (std::size_t s = 0; s < a.size(); ++s)
      if (int c = word_cmp(a[s], b[s]); c != 0) return c;
    return 0;
  }

  static std::vector<Term> canonicalize(std::vector<Term> v) {
    std::sort(v.begin(), v.end(),
              [](const Term& x, const Term& y) { return tuple_cmp(x.first, y.first) < 0; });
    std::vector<Term> out;
    out.reserve(v.size());
    for (Term& t : v) {
      if (!out.empty() && tuple_cmp(out.back().first, t.first) == 0)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    return out;
  }

 private:
  void require_same(const NTensorElement& o) const {
    if (!p_.same_algebra(o.p_) || slots_ != o.slots_)
      throw std::invalid_argument("NTensorElement: slot count or algebra mismatch");
  }

  AlgebraParams p_;
  int slots_;
  std::vector<Term> t_;
};

}  // namespace syang

#pragma once

#include "syang/params.hpp"
#include "syang/scalar.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syang {

// Generator t_ij^(r) packed as (i << 24) | (j << 16) | r.
// Numeric order on codes equals lexicographic order on (i, j, r).
using GenCode = std::uint32_t;

constexpr GenCode pack_gen(int i, int j, int r) {
  return (GenCode(i) << 24) | (GenCode(j) << 16) | GenCode(r);
}
constexpr int gen_i(GenCode g) { return int(g >> 24); }
constexpr int gen_j(GenCode g) { return int((g >> 16) & 0xffu); }
constexpr int gen_r(GenCode g) { return int(g & 0xffffu); }

// A monomial is a word of generator codes; the empty word is the unit.
using Word = boost::container::small_vector<GenCode, 8>;

inline int word_deg1(const Word& w) {
  int d = 0;
  for (GenCode g : w) d += gen_r(g);
  return d;
}
inline int word_deg2(const Word& w) { return word_deg1(w) - int(w.size()); }

inline int word_parity_in(const AlgebraParams& p, const Word& w) {
  int par = 0;
  for (GenCode g : w) par ^= p.parity(gen_i(g)) ^ p.parity(gen_j(g));
  return par;
}

// Canonical storage order on monomials: length first, then lexicographic on codes.
inline int word_cmp(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  return 0;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (GenCode g : w) {
      h ^= g;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

inline std::string gen_str(GenCode g) {
  return "t[" + std::to_string(gen_i(g)) + "," + std::to_string(gen_j(g)) + "," +
         std::to_string(gen_r(g)) + "]";
}

// Finite Q-linear combination of monomials in the free algebra on the t_ij^(r),
// tagged by its gl(m|n). Terms are kept sorted in canonical order with no zero
// coefficients, so equality is structural. No relation is ever applied here.
class Element {
 public:
  using Term = std::pair<Word, Scalar>;

  Element() = default;  // zero of an unspecified algebra; usable once assigned
  explicit Element(const AlgebraParams& p) : m_(p.m), n_(p.n) {}

  static Element zero(const AlgebraParams& p) { return Element(p); }

  static Element scalar_elem(const AlgebraParams& p, const Scalar& c) {
    Element e(p);
    if (c != 0) e.t_.push_back({Word{}, c});
    return e;
  }

  static Element unit(const AlgebraParams& p) { return scalar_elem(p, 1); }

  static Element generator(const AlgebraParams& p, int i, int j, int r) {
    check_coords(p, i, j, r);
    Element e(p);
    e.t_.push_back({Word{pack_gen(i, j, r)}, 1});
    return e;
  }

  static Element monomial(const AlgebraParams& p, Word w, const Scalar& c = 1) {
    for (GenCode g : w) check_coords(p, gen_i(g), gen_j(g), gen_r(g));
    Element e(p);
    if (c != 0) e.t_.push_back({std::move(w), c});
    return e;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  AlgebraParams params(int N = 1) const { return AlgebraParams{m_, n_, N}; }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }

  int word_parity(const Word& w) const {
    int p = 0;
    for (GenCode g : w) p ^= gen_parity_tag(gen_i(g)) ^ gen_parity_tag(gen_j(g));
    return p;
  }

  // Parity when every term agrees; nullopt for mixed or zero elements.
  std::optional<int> homogeneous_parity() const {
    if (t_.empty()) return std::nullopt;
    int p = word_parity(t_.front().first);
    for (const Term& t : t_)
      if (word_parity(t.first) != p) return std::nullopt;
    return p;
  }

  // Max filtration degrees over stored monomials; -1 for the zero element.
  int deg1() const {
    int d = -1;
    for (const Term& t : t_) d = std::max(d, word_deg1(t.first));
    return d;
  }
  int deg2() const {
    int d = -1;
    for (const Term& t : t_) d = std::max(d, word_deg2(t.first));
    return d;
  }

  Element operator-() const {
    Element r = *this;
    for (Term& t : r.t_) t.second = -t.second;
    return r;
  }

  Element& operator+=(const Element& o) {
    merge_tag(o);
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    std::size_t a = 0, b = 0;
    while (a < t_.size() || b < o.t_.size()) {
      int c;
      if (a == t_.size()) c = 1;
      else if (b == o.t_.size()) c = -1;
      else c = word_cmp(t_[a].first, o.t_[b].first);
      if (c < 0) out.push_back(std::move(t_[a++]));
      else if (c > 0) out.push_back(o.t_[b++]);
      else {
        Scalar s = t_[a].second + o.t_[b].second;
        if (s != 0) out.push_back({std::move(t_[a].first), std::move(s)});
        ++a, ++b;
      }
    }
    t_ = std::move(out);
    return *this;
  }

  Element& operator-=(const Element& o) { return *this += -o; }

  Element& operator*=(const Scalar& c) {
    if (c == 0) t_.clear();
    else
      for (Term& t : t_) t.second *= c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }

  // Free product: concatenation of words, no relation, no sign.
  friend Element operator*(const Element& a, const Element& b) {
    a.require_same_tag(b, "operator*");
    Element r(AlgebraParams{a.m_, a.n_, 1});
    std::vector<Term> acc;
    acc.reserve(a.t_.size() * b.t_.size());
    for (const Term& ta : a.t_)
      for (const Term& tb : b.t_) {
        Word w = ta.first;
        w.insert(w.end(), tb.first.begin(), tb.first.end());
        acc.push_back({std::move(w), ta.second * tb.second});
      }
    r.t_ = canonicalize(std::move(acc));
    return r;
  }

  Element& operator*=(const Element& o) { return *this = *this * o; }

  friend bool operator==(const Element& a, const Element& b) {
    if (!a.t_.empty() && !b.t_.empty()) a.require_same_tag(b, "operator==");
    return a.t_ == b.t_;
  }

  // Canonical text: terms in storage order, e.g. "1 - 2/3*t[1,2,1] + t[2,1,1]*t[1,2,2]".
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
      std::string wordpart;
      for (std::size_t k = 0; k < t.first.size(); ++k) {
        if (k) wordpart += "*";
        wordpart += gen_str(t.first[k]);
      }
      if (wordpart.empty()) out += scalar_str(mag);
      else if (mag == 1) out += wordpart;
      else out += scalar_str(mag) + "*" + wordpart;
    }
    return out;
  }

  // The scalar c when this element is c * 1, nullopt otherwise.
  std::optional<Scalar> as_scalar() const {
    if (t_.empty()) return Scalar(0);
    if (t_.size() == 1 && t_[0].first.empty()) return t_[0].second;
    return std::nullopt;
  }

  static std::vector<Term> canonicalize(std::vector<Term> v) {
    std::sort(v.begin(), v.end(),
              [](const Term& x, const Term& y) { return word_cmp(x.first, y.first) < 0; });
    std::vector<Term> out;
    out.reserve(v.size());
    for (Term& t : v) {
      if (!out.empty() && word_cmp(out.back().first, t.first) == 0)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    return out;
  }

  // Internal: adopt terms already in canonical order (used by the rewriting core).
  static Element from_sorted(const AlgebraParams& p, std::vector<Term> v) {
    Element e(p);
    e.t_ = std::move(v);
    return e;
  }

 private:
  static void check_coords(const AlgebraParams& p, int i, int j, int r) {
    int sz = p.size();
    if (i < 1 || i > sz || j < 1 || j > sz)
      throw std::out_of_range("generator t[" + std::to_string(i) + "," + std::to_string(j) +
                              "," + std::to_string(r) + "]: index outside 1.." +
                              std::to_string(sz));
    if (r < 1 || r > 0xffff)
      throw std::out_of_range("generator level " + std::to_string(r) + " outside 1..65535");
  }

  int gen_parity_tag(int i) const { return i <= m_ ? 0 : 1; }

  void require_same_tag(const Element& o, const char* op) const {
    if (m_ != o.m_ || n_ != o.n_)
      throw std::invalid_argument(std::string(op) + ": mixing gl(" + std::to_string(m_) + "|" +
                                  std::to_string(n_) + ") with gl(" + std::to_string(o.m_) +
                                  "|" + std::to_string(o.n_) + ") elements");
  }

  void merge_tag(const Element& o) {
    if (t_.empty() && m_ == 0 && n_ == 0) {
      m_ = o.m_;
      n_ = o.n_;
    }
    if (o.t_.empty() && o.m_ == 0 && o.n_ == 0) return;
    require_same_tag(o, "operator+");
  }

  int m_ = 0, n_ = 0;
  std::vector<Term> t_;
};

// Super-commutator [a, b] = ab - (-1)^{p(a)p(b)} ba, extended bilinearly by
// splitting both sides into homogeneous monomial pieces.
inline Element super_commutator(const Element& a, const Element& b) {
  AlgebraParams p{a.is_zero() ? b.m() : a.m(), a.is_zero() ? b.n() : a.n(), 1};
  std::vector<Element::Term> acc;
  acc.reserve(2 * a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      Word ab = ta.first;
      ab.insert(ab.end(), tb.first.begin(), tb.first.end());
      Word ba = tb.first;
      ba.insert(ba.end(), ta.first.begin(), ta.first.end());
      Scalar c = ta.second * tb.second;
      acc.push_back({std::move(ab), c});
      int sign = (a.word_parity(ta.first) & b.word_parity(tb.first)) ? 1 : 0;
      acc.push_back({std::move(ba), sign ? c : -c});
    }
  if (!a.is_zero() && !b.is_zero() && (a.m() != b.m() || a.n() != b.n()))
    throw std::invalid_argument("super_commutator: mixed algebra tags");
  return Element::from_sorted(p, Element::canonicalize(std::move(acc)));
}

// Anticommutator ab + ba (used by the Drinfeld-presentation relation suite).
inline Element anticommutator(const Element& a, const Element& b) { return a * b + b * a; }

}  // namespace syang

#pragma once

#include "syang/element.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace syang {

// Canonical interchange text: terms in storage order, "-" folded into the
// separator, coefficient omitted when it is +-1 on a nonempty word.
// Examples: "0", "1/2", "t[1,2,1]*t[2,1,1] - 2*t[1,1,2]".
inline std::string element_to_text(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    Scalar a = c;
    bool neg = a < 0;
    if (neg) a = Scalar(-a);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool unit_coeff = a == 1 && !w.empty();
    if (!unit_coeff) out += scalar_str(a);
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k > 0 || !unit_coeff) out += "*";
      out += gen_str(w[k]);
    }
  }
  return out;
}

namespace detail {

// Hand-rolled recursive descent; kept tiny so diagnostics can cite byte offsets.
class ElementParser {
 public:
  ElementParser(const AlgebraParams& p, std::string_view s) : p_(p), s_(s) {}

  Element parse() {
    Element acc = Element::zero(p_);
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    bool neg = take_sign();
    acc += term(neg);
    skip_ws();
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      acc += term(c == '-');
      skip_ws();
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool take_sign() {
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      bool neg = s_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int small_int() {
    std::size_t at = pos_;
    Integer v = integer();
    if (v > 1000000) {
      pos_ = at;
      fail("index too large");
    }
    return int(v);
  }

  Scalar rational() {
    Integer num = integer();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t at = pos_;
      Integer den = integer();
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      return Scalar(num, den);
    }
    return Scalar(num);
  }

  GenCode generator() {
    expect('t');
    expect('[');
    skip_ws();
    int i = small_int();
    comma();
    int j = small_int();
    comma();
    int r = small_int();
    skip_ws();
    expect(']');
    int K = p_.size();
    if (i < 1 || i > K || j < 1 || j > K)
      fail("generator index outside 1.." + std::to_string(K));
    if (r < 1) fail("generator level must be >= 1");
    return pack_gen(i, j, r);
  }

  void comma() {
    skip_ws();
    expect(',');
    skip_ws();
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Element term(bool neg) {
    Scalar coeff = 1;
    Word w;
    bool any = false;
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coeff *= rational();
        any = true;
      } else if (pos_ < s_.size() && s_[pos_] == 't') {
        w.push_back(generator());
        any = true;
      } else {
        fail(any ? "expected a factor after '*'" : "expected a term");
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (neg) coeff = Scalar(-coeff);
    return Element::monomial(p_, std::move(w), coeff);
  }

  const AlgebraParams& p_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the canonical interchange format back into an Element over p.
// Throws std::invalid_argument citing the byte position of the defect.
inline Element parse_element(const AlgebraParams& p, std::string_view text) {
  return detail::ElementParser(p, text).parse();
}

}  // namespace syang

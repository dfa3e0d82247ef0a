#pragma once

#include <stdexcept>
#include <string>

namespace syang {

// Sizing of gl_{m|n} plus the series truncation order N.
// Row/column indices run 1..m+n; pbar(i) = 0 for i <= m and 1 for i > m.
struct AlgebraParams {
  int m = 1;
  int n = 1;
  int N = 1;

  int size() const { return m + n; }

  void validate() const {
    if (m < 0 || n < 0 || m + n < 1)
      throw std::invalid_argument("AlgebraParams: need m, n >= 0 and m + n >= 1");
    if (N < 1) throw std::invalid_argument("AlgebraParams: need N >= 1");
  }

  int parity(int i) const {
    if (i < 1 || i > m + n)
      throw std::out_of_range("parity: index " + std::to_string(i) + " outside 1.." +
                              std::to_string(m + n));
    return i <= m ? 0 : 1;
  }

  // Parity of the generator t_ij^(r), independent of r.
  int gen_parity(int i, int j) const { return (parity(i) + parity(j)) & 1; }

  bool same_algebra(const AlgebraParams& o) const { return m == o.m && n == o.n; }

  std::string gl_name() const {
    return "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  }
};

}  // namespace syang

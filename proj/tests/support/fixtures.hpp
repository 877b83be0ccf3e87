#pragma once

#include <string>
#include <vector>

#include "lft/transducer.hpp"

namespace lft::testing {

inline Lft make_lft(std::vector<std::string> a, std::vector<std::string> b,
                    std::vector<std::string> c, std::vector<std::string> d) {
  return Lft(BitMatrix::from_rows(a), BitMatrix::from_rows(b), BitMatrix::from_rows(c),
             BitMatrix::from_rows(d));
}

// y_t = x_(t-1): one state bit holding the previous input.
inline Lft unit_delay() { return make_lft({"0"}, {"1"}, {"1"}, {"0"}); }

// y_t = x_t with one idle state bit.
inline Lft identity_lft(std::size_t l, std::size_t n = 1) {
  return Lft(BitMatrix(n, n), BitMatrix(n, l), BitMatrix(l, n), BitMatrix::identity(l));
}

inline Lft zero_output(std::size_t l, std::size_t m, std::size_t n) {
  return Lft(BitMatrix(n, n), BitMatrix(n, l), BitMatrix(m, n), BitMatrix(m, l));
}

inline BitMatrix column(const std::string& bits) {
  std::vector<std::string> rows;
  for (char ch : bits) rows.emplace_back(1, ch);
  return BitMatrix::from_rows(rows);
}

}  // namespace lft::testing

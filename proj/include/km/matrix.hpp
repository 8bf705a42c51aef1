#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "km/checked.hpp"

namespace km {

/// Dense square integer matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  std::span<const std::int64_t> data() const { return data_; }

  std::vector<std::int64_t> column(int c) const {
    std::vector<std::int64_t> v(n_);
    for (int r = 0; r < n_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const {
    std::vector<std::int64_t> out(n_, 0);
    for (int r = 0; r < n_; ++r) {
      std::int64_t acc = 0;
      for (int c = 0; c < n_; ++c)
        if (v[c] != 0) acc = checked::add(acc, checked::mul((*this)(r, c), v[c]));
      out[r] = acc;
    }
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const std::int64_t aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < a.n_; ++j)
          if (b(k, j) != 0) out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
      }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : data_) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  int n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Determinant by fraction-free (Bareiss) elimination; exact over the integers.
inline std::int64_t determinant(SquareMatrix m) {
  const int n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(m(i, j)) * m(k, k) -
                             static_cast<__int128>(m(i, k)) * m(k, j);
        m(i, j) = checked::narrow(num / prev);
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace km

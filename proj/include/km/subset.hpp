#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "km/error.hpp"

namespace km {

inline constexpr int kMaxRank = 32;

/// A set of generator indices (0-based) stored as a bitmask over I.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset full(int rank) {
    return Subset(rank >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << rank) - 1));
  }
  static constexpr Subset single(int i) { return Subset(std::uint32_t{1} << i); }
  static Subset of(std::initializer_list<int> indices) {
    Subset s;
    for (int i : indices) s = s.with(i);
    return s;
  }
  static Subset of(const std::vector<int>& indices) {
    Subset s;
    for (int i : indices) s = s.with(i);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  constexpr Subset with(int i) const { return Subset(bits_ | (std::uint32_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(std::uint32_t{1} << i)); }
  /// Smallest index, or -1 when empty.
  constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  constexpr int last() const { return bits_ == 0 ? -1 : 31 - std::countl_zero(bits_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;

  /// Deterministic listing order: by size, then by sorted index list.
  friend bool operator<(Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  }

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of `universe`, in increasing bitmask order.
inline std::vector<Subset> all_subsets(Subset universe) {
  std::vector<Subset> out;
  std::uint32_t u = universe.bits();
  std::uint32_t s = 0;
  do {
    out.emplace_back(s);
    s = (s - u) & u;
  } while (s != 0);
  return out;
}

/// Human-readable 1-based form, e.g. "{1,3}".
inline std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace km

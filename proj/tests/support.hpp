#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "km/gcm.hpp"
#include "km/io.hpp"

namespace support {

// Tag of the km::Error thrown by f, or "" if nothing is thrown.
template <class F>
std::string error_tag(F&& f) {
  try {
    f();
  } catch (const km::Error& e) {
    return e.tag();
  }
  return "";
}

inline km::CartanMatrix gcm(const km::IntRows& rows) { return km::CartanMatrix::validate(rows); }

inline std::filesystem::path catalog_dir() { return KM_CATALOG_DIR; }
inline std::filesystem::path golden_dir() { return KM_GOLDEN_DIR; }

inline km::CartanMatrix catalog(const std::string& name) {
  return km::io::load((catalog_dir() / name).string()).matrix;
}

inline std::vector<std::filesystem::path> catalog_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(catalog_dir())) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Named matrices shared across suites.
inline km::CartanMatrix a2() { return gcm({{2, -1}, {-1, 2}}); }
inline km::CartanMatrix a3() { return gcm({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}); }
inline km::CartanMatrix b2() { return gcm({{2, -2}, {-1, 2}}); }
inline km::CartanMatrix g2() { return gcm({{2, -3}, {-1, 2}}); }
inline km::CartanMatrix affine_a1() { return gcm({{2, -2}, {-2, 2}}); }
inline km::CartanMatrix affine_a2() { return gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }
inline km::CartanMatrix mixed() { return gcm({{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}); }
inline km::CartanMatrix block() { return gcm({{2, -2, 0}, {-2, 2, 0}, {0, 0, 2}}); }

// Random GCM of the given rank: each unordered pair is zero with probability
// p_zero, otherwise both entries are drawn from {-1,...,-max_entry}.
inline km::CartanMatrix random_gcm(std::mt19937& rng, int rank, int max_entry, double p_zero) {
  km::IntRows rows(rank, std::vector<std::int64_t>(rank, 0));
  std::uniform_int_distribution<int> entry(1, max_entry);
  std::bernoulli_distribution zero(p_zero);
  for (int i = 0; i < rank; ++i) {
    rows[i][i] = 2;
    for (int j = i + 1; j < rank; ++j) {
      if (zero(rng)) continue;
      rows[i][j] = -entry(rng);
      rows[j][i] = -entry(rng);
    }
  }
  return km::CartanMatrix::validate(rows);
}

// Every GCM of the given rank whose off-diagonal entries lie in {0,-1,...,-max_entry}.
inline std::vector<km::CartanMatrix> all_gcms(int rank, int max_entry) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) pairs.emplace_back(i, j);
  std::vector<std::pair<int, int>> choices{{0, 0}};
  for (int x = 1; x <= max_entry; ++x)
    for (int y = 1; y <= max_entry; ++y) choices.emplace_back(x, y);
  std::vector<km::CartanMatrix> out;
  std::vector<std::size_t> pick(pairs.size(), 0);
  while (true) {
    km::IntRows rows(rank, std::vector<std::int64_t>(rank, 0));
    for (int i = 0; i < rank; ++i) rows[i][i] = 2;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      rows[pairs[p].first][pairs[p].second] = -choices[pick[p]].first;
      rows[pairs[p].second][pairs[p].first] = -choices[pick[p]].second;
    }
    out.push_back(km::CartanMatrix::validate(rows));
    std::size_t p = 0;
    while (p < pick.size() && ++pick[p] == choices.size()) pick[p++] = 0;
    if (p == pick.size()) break;
  }
  return out;
}

}  // namespace support

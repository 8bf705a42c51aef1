#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "km/error.hpp"
#include "km/weyl.hpp"

namespace km {

/// root = element(alpha_index)
struct RootWitness {
  WeylElement element;
  int index = 0;
};

class RealRoot {
 public:
  /// Builds a root from its coordinates; enforces the sign dichotomy and, when
  /// a witness is supplied, that it reproduces the coordinates.
  static RealRoot from_coords(std::vector<std::int64_t> coords, std::optional<RootWitness> witness = std::nullopt) {
    RealRoot r;
    r.sign_ = root_sign(coords);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      r.height_ = checked::add(r.height_, coords[i]);
      if (coords[i] != 0) r.support_ = r.support_.with(static_cast<int>(i));
    }
    if (witness) {
      std::vector<std::int64_t> basis(coords.size(), 0);
      basis.at(witness->index) = 1;
      if (witness->element.apply(basis) != coords)
        throw Error(Errc::VerificationFailed, "root witness does not reproduce the coordinates");
    }
    r.coords_ = std::move(coords);
    r.witness_ = std::move(witness);
    return r;
  }

  const std::vector<std::int64_t>& coords() const { return coords_; }
  RootSign sign() const { return sign_; }
  std::int64_t height() const { return height_; }
  Subset support() const { return support_; }
  const std::optional<RootWitness>& witness() const { return witness_; }

  friend bool operator==(const RealRoot& a, const RealRoot& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<std::int64_t> coords_;
  RootSign sign_ = RootSign::Positive;
  std::int64_t height_ = 0;
  Subset support_;
  std::optional<RootWitness> witness_;
};

/// Listing order of roots: by height, then coordinates in decreasing
/// lexicographic order (so alpha_1 precedes alpha_2).
inline bool root_order(const RealRoot& a, const RealRoot& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.coords() > b.coords();
}

/// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i with <beta, alpha_i^vee> = sum_j a_ij beta_j.
inline std::vector<std::int64_t> reflect(const CartanMatrix& a, int i, std::span<const std::int64_t> beta) {
  std::int64_t pairing = 0;
  for (int j = 0; j < a.rank(); ++j)
    if (beta[j] != 0) pairing = checked::add(pairing, checked::mul(a(i, j), beta[j]));
  std::vector<std::int64_t> out(beta.begin(), beta.end());
  out[i] = checked::sub(out[i], pairing);
  return out;
}

/// Positive real roots of height <= max_height. Breadth-first from the simple
/// roots, applying simple reflections and keeping only positive images within
/// the height bound; every positive real root is reached through a chain of
/// increasing heights, so the pruning loses nothing. Each root keeps the
/// witness of its first discovery.
inline std::vector<RealRoot> enumerate_positive_real_roots(const WeylGroup& group, std::int64_t max_height,
                                                           const Budget& budget = {}) {
  if (max_height < 1) throw Error(Errc::InvalidArgument, "height bound must be at least 1");
  const CartanMatrix& a = group.cartan();
  const int n = a.rank();
  std::map<std::vector<std::int64_t>, RootWitness> found;
  std::deque<std::vector<std::int64_t>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> simple(n, 0);
    simple[i] = 1;
    found.emplace(simple, RootWitness{group.identity(), i});
    queue.push_back(std::move(simple));
  }
  while (!queue.empty()) {
    const std::vector<std::int64_t> beta = std::move(queue.front());
    queue.pop_front();
    const RootWitness& from = found.at(beta);
    for (int i = 0; i < n; ++i) {
      std::vector<std::int64_t> image = reflect(a, i, beta);
      if (image == beta || root_sign(image) == RootSign::Negative) continue;
      std::int64_t h = 0;
      for (std::int64_t x : image) h = checked::add(h, x);
      if (h > max_height || found.contains(image)) continue;
      found.emplace(image, RootWitness{group.left_multiply(i, from.element), from.index});
      budget.check(found.size(), "root enumeration");
      queue.push_back(std::move(image));
    }
  }
  std::vector<RealRoot> out;
  out.reserve(found.size());
  for (auto& [coords, witness] : found) out.push_back(RealRoot::from_coords(coords, witness));
  std::sort(out.begin(), out.end(), root_order);
  return out;
}

struct RootSplit {
  std::vector<RealRoot> in_subset;   // support within J
  std::vector<RealRoot> off_subset;  // the rest
};

inline RootSplit split_by_subset(const std::vector<RealRoot>& roots, Subset j) {
  RootSplit out;
  for (const RealRoot& r : roots) (r.support().subset_of(j) ? out.in_subset : out.off_subset).push_back(r);
  return out;
}

/// r_alpha = w s_i w^{-1} for alpha = w(alpha_i).
inline WeylElement reflection_of_root(const WeylGroup& group, const RealRoot& root) {
  if (!root.witness()) throw Error(Errc::MissingWitness, "root carries no orbit witness");
  const RootWitness& w = *root.witness();
  WeylElement r = group.right_multiply(w.element, w.index) * group.inverse(w.element);
  if (r.apply(root.coords()) != [&] {
        std::vector<std::int64_t> neg(root.coords());
        for (auto& x : neg) x = -x;
        return neg;
      }())
    throw Error(Errc::VerificationFailed, "reflection does not negate its root");
  return r;
}

struct PeriodicRoot {
  RealRoot root;
  int period = 0;
};

/// For each root, the least 1 <= n <= bound with w^n(alpha) = alpha, if any.
inline std::vector<PeriodicRoot> periodic_roots(const WeylElement& w, const std::vector<RealRoot>& roots,
                                                int bound) {
  if (bound < 1) throw Error(Errc::InvalidArgument, "power bound must be at least 1");
  std::vector<PeriodicRoot> out;
  for (const RealRoot& r : roots) {
    std::vector<std::int64_t> v = r.coords();
    for (int n = 1; n <= bound; ++n) {
      v = w.apply(v);
      root_sign(v);
      if (v == r.coords()) {
        out.push_back({r, n});
        break;
      }
    }
  }
  return out;
}

}  // namespace km

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "km/coxeter.hpp"
#include "km/error.hpp"
#include "km/gcm.hpp"
#include "km/matrix.hpp"
#include "km/subset.hpp"

namespace km {

/// Element cap handed to every enumeration. Exceeding it throws
/// `Errc::BudgetExceeded`.
struct Budget {
  std::size_t max_elements = 1'000'000;

  void check(std::size_t count, const char* what) const {
    if (count > max_elements)
      throw Error(Errc::BudgetExceeded, std::string(what) + " exceeded the element budget of " +
                                            std::to_string(max_elements));
  }
};

/// An element of the Weyl group, represented by its action on the root
/// lattice: column j holds the simple-root coordinates of w(alpha_j). The
/// representation is faithful, so equality is matrix equality.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(SquareMatrix m) : matrix_(std::move(m)) {}

  static WeylElement identity(int rank) { return WeylElement(SquareMatrix::identity(rank)); }

  const SquareMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.size(); }
  bool is_identity() const { return matrix_ == SquareMatrix::identity(rank()); }

  /// Image of a vector given in simple-root coordinates.
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const { return matrix_.apply(v); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return WeylElement(a.matrix_ * b.matrix_);
  }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  SquareMatrix matrix_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.matrix().hash(); }
};

enum class TieBreak { SmallestIndex, LargestIndex };

/// Result of `element_order`: a finite order, or nullopt for infinite.
struct ElementOrder {
  std::optional<std::uint64_t> finite;
  bool infinite() const { return !finite.has_value(); }
};

enum class RootSign { Positive, Negative };

/// Sign of a real-root coordinate vector; throws if the coordinates are mixed,
/// which would mean the representation is broken.
inline RootSign root_sign(std::span<const std::int64_t> v) {
  bool pos = false;
  bool neg = false;
  for (std::int64_t x : v) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (pos == neg) throw Error(Errc::VerificationFailed, "sign dichotomy violated by a real-root image");
  return pos ? RootSign::Positive : RootSign::Negative;
}

class WeylGroup {
 public:
  explicit WeylGroup(CartanMatrix a) : cartan_(std::move(a)), diagram_(coxeter_matrix(cartan_)) {
    const int n = cartan_.rank();
    for (int i = 0; i < n; ++i) {
      SquareMatrix s = SquareMatrix::identity(n);
      // s_i(alpha_j) = alpha_j - a_ij alpha_i
      for (int j = 0; j < n; ++j) s(i, j) = checked::sub(s(i, j), cartan_(i, j));
      generators_.emplace_back(std::move(s));
    }
    std::uint64_t best = 1;
    const Nerve spherical = nerve(diagram_);
    for (Subset k : spherical.simplices()) best = std::max(best, finite_group_order(diagram_, k).order);
    max_spherical_order_ = best;
  }

  const CartanMatrix& cartan() const { return cartan_; }
  const CoxeterDiagram& diagram() const { return diagram_; }
  int rank() const { return cartan_.rank(); }
  /// B*: the largest order of a finite standard parabolic subgroup.
  std::uint64_t max_spherical_order() const { return max_spherical_order_; }

  WeylElement identity() const { return WeylElement::identity(rank()); }

  const WeylElement& generator(int i) const {
    check_index(i);
    return generators_[i];
  }

  WeylElement multiply(const WeylElement& u, const WeylElement& v) const { return u * v; }

  /// w * s_i, computed column-wise: column j becomes col_j(w) - a_ij col_i(w).
  WeylElement right_multiply(const WeylElement& w, int i) const {
    check_index(i);
    SquareMatrix m = w.matrix();
    const int n = rank();
    for (int j = 0; j < n; ++j) {
      const std::int64_t c = cartan_(i, j);
      if (j == i || c == 0) continue;
      for (int r = 0; r < n; ++r) m(r, j) = checked::sub(m(r, j), checked::mul(c, w.matrix()(r, i)));
    }
    for (int r = 0; r < n; ++r) m(r, i) = checked::sub(0, w.matrix()(r, i));
    return WeylElement(std::move(m));
  }

  /// s_i * w.
  WeylElement left_multiply(int i, const WeylElement& w) const { return generator(i) * w; }

  WeylElement from_word(std::span<const int> word) const {
    WeylElement w = identity();
    for (int i : word) w = right_multiply(w, i);
    return w;
  }

  WeylElement inverse(const WeylElement& w) const {
    std::vector<int> word = canonical_word(w);
    std::reverse(word.begin(), word.end());
    return from_word(word);
  }

  /// True iff l(w s_i) < l(w), i.e. w(alpha_i) is a negative root.
  bool is_right_descent(const WeylElement& w, int i) const {
    check_index(i);
    return root_sign(w.matrix().column(i)) == RootSign::Negative;
  }

  /// Reduced word by descent peeling: repeatedly take the preferred right
  /// descent i, make it the last letter, and replace w by w s_i.
  std::vector<int> canonical_word(const WeylElement& w, TieBreak tie = TieBreak::SmallestIndex) const {
    std::vector<int> word;
    WeylElement cur = w;
    while (true) {
      int descent = -1;
      for (int k = 0; k < rank(); ++k) {
        const int i = tie == TieBreak::SmallestIndex ? k : rank() - 1 - k;
        if (is_right_descent(cur, i)) {
          descent = i;
          break;
        }
      }
      if (descent < 0) break;
      word.push_back(descent);
      cur = right_multiply(cur, descent);
    }
    if (!cur.is_identity()) throw Error(Errc::VerificationFailed, "element without descent is not the identity");
    std::reverse(word.begin(), word.end());
    return word;
  }

  std::size_t length(const WeylElement& w) const { return canonical_word(w).size(); }

  Subset support(const WeylElement& w) const {
    Subset s;
    for (int i : canonical_word(w)) s = s.with(i);
    return s;
  }

  /// Longest element of the spherical W_K by greedy ascent.
  WeylElement longest_element(Subset k) const {
    if (!k.subset_of(diagram_.all())) throw Error(Errc::IndexOutOfRange, "subset exceeds the index set");
    const GroupOrder g = finite_group_order(diagram_, k);
    WeylElement w = identity();
    for (std::uint64_t steps = 0;; ++steps) {
      if (steps > g.order) throw Error(Errc::VerificationFailed, "greedy ascent did not terminate");
      int ascent = -1;
      for (int i : k.indices())
        if (!is_right_descent(w, i)) {
          ascent = i;
          break;
        }
      if (ascent < 0) break;
      w = right_multiply(w, ascent);
    }
    return w;
  }

  /// Finite order if some power w^n with n <= B* is the identity, else
  /// infinite (torsion lies in conjugates of spherical parabolics). Powers are
  /// tracked modulo a large prime, so the search itself cannot overflow; a
  /// power that is the identity modulo the prime is confirmed exactly.
  ElementOrder element_order(const WeylElement& w) const {
    const int n = rank();
    constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
    auto reduce = [&](const SquareMatrix& m) {
      std::vector<std::uint64_t> out(static_cast<std::size_t>(n) * n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          const std::int64_t x = m(r, c) % static_cast<std::int64_t>(kPrime);
          out[static_cast<std::size_t>(r) * n + c] = static_cast<std::uint64_t>(x < 0 ? x + static_cast<std::int64_t>(kPrime) : x);
        }
      return out;
    };
    const std::vector<std::uint64_t> base = reduce(w.matrix());
    const std::vector<std::uint64_t> unit = reduce(SquareMatrix::identity(n));
    std::vector<std::uint64_t> power = base;
    std::vector<std::uint64_t> next(power.size());
    for (std::uint64_t k = 1; k <= max_spherical_order_; ++k) {
      if (power == unit && power_of(w, k).is_identity()) return {k};
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          unsigned __int128 acc = 0;
          for (int t = 0; t < n; ++t)
            acc = (acc + static_cast<unsigned __int128>(power[static_cast<std::size_t>(r) * n + t]) *
                             base[static_cast<std::size_t>(t) * n + c]) %
                  kPrime;
          next[static_cast<std::size_t>(r) * n + c] = static_cast<std::uint64_t>(acc);
        }
      std::swap(power, next);
    }
    return {};
  }

  WeylElement power_of(const WeylElement& w, std::uint64_t exponent) const {
    WeylElement result = identity();
    WeylElement base = w;
    while (exponent > 0) {
      if (exponent & 1u) result = result * base;
      exponent >>= 1;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  /// Bounded certificate: l(w^n) = n l(w) for every 2 <= n <= bound.
  bool is_straight(const WeylElement& w, int bound) const {
    if (bound < 2) throw Error(Errc::InvalidArgument, "straightness bound must be at least 2");
    const std::size_t len = length(w);
    WeylElement p = w;
    for (int n = 2; n <= bound; ++n) {
      p = p * w;
      if (length(p) != static_cast<std::size_t>(n) * len) return false;
    }
    return true;
  }

  /// All elements of length <= radius in W_within, in breadth-first order
  /// (by length; ties in discovery order via right multiplication by
  /// generators in increasing index order).
  std::vector<WeylElement> enumerate_ball(std::size_t radius, const Budget& budget = {},
                                          std::optional<Subset> within = std::nullopt) const {
    const std::vector<int> gens = within.value_or(diagram_.all()).indices();
    std::vector<WeylElement> out{identity()};
    std::unordered_set<WeylElement, WeylElementHash> seen{identity()};
    std::size_t begin = 0;
    for (std::size_t len = 0; len < radius; ++len) {
      const std::size_t end = out.size();
      for (std::size_t idx = begin; idx < end; ++idx)
        for (int i : gens) {
          if (is_right_descent(out[idx], i)) continue;
          WeylElement next = right_multiply(out[idx], i);
          if (seen.insert(next).second) {
            out.push_back(std::move(next));
            budget.check(out.size(), "ball enumeration");
          }
        }
      if (out.size() == end) break;
      begin = end;
    }
    return out;
  }

  /// Sorts elements length-lexicographically by canonical word.
  void sort_length_lex(std::vector<WeylElement>& elements) const {
    std::vector<std::pair<std::vector<int>, WeylElement>> keyed;
    keyed.reserve(elements.size());
    for (auto& e : elements) keyed.emplace_back(canonical_word(e), std::move(e));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });
    elements.clear();
    for (auto& [word, e] : keyed) elements.push_back(std::move(e));
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= rank())
      throw Error(Errc::IndexOutOfRange, "IndexOutOfRange(" + std::to_string(i + 1) + ")",
                  "generator index out of range 1.." + std::to_string(rank()));
  }

  CartanMatrix cartan_;
  CoxeterDiagram diagram_;
  std::vector<WeylElement> generators_;
  std::uint64_t max_spherical_order_ = 1;
};

}  // namespace km

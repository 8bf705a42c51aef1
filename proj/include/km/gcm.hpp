#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "km/error.hpp"
#include "km/matrix.hpp"
#include "km/subset.hpp"

namespace km {

using IntRows = std::vector<std::vector<std::int64_t>>;

/// A validated generalised Cartan matrix. Immutable once constructed; the
/// only way to obtain one is through `validate`.
class CartanMatrix {
 public:
  /// Checks the GCM axioms in order: shape, diagonal, then off-diagonal pairs
  /// in row-major order (sign before zero pattern). Throws `Error` naming the
  /// first violation with 1-based positions.
  static CartanMatrix validate(const IntRows& raw, std::vector<std::string> labels = {}) {
    const std::size_t n = raw.size();
    if (n == 0) throw Error(Errc::NotSquare, "matrix is empty");
    if (n > static_cast<std::size_t>(kMaxRank))
      throw Error(Errc::InvalidArgument, "rank " + std::to_string(n) + " exceeds the supported maximum of " +
                                             std::to_string(kMaxRank));
    for (std::size_t i = 0; i < n; ++i)
      if (raw[i].size() != n)
        throw Error(Errc::NotSquare, "row " + std::to_string(i + 1) + " has " + std::to_string(raw[i].size()) +
                                         " entries, expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      if (raw[i][i] != 2)
        throw Error(Errc::DiagonalNotTwo, "DiagonalNotTwo(" + std::to_string(i + 1) + ")",
                    "diagonal entry a_" + std::to_string(i + 1) + std::to_string(i + 1) + " is " +
                        std::to_string(raw[i][i]) + ", expected 2");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::string pos = std::to_string(i + 1) + "," + std::to_string(j + 1);
        if (raw[i][j] > 0)
          throw Error(Errc::PositiveOffDiagonal, "PositiveOffDiagonal(" + pos + ")",
                      "off-diagonal entry at (" + pos + ") is " + std::to_string(raw[i][j]) + ", must be <= 0");
        if ((raw[i][j] == 0) != (raw[j][i] == 0))
          throw Error(Errc::ZeroAsymmetry, "ZeroAsymmetry(" + pos + ")",
                      "entries (" + pos + ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                          ") must be both zero or both nonzero");
      }
    if (labels.empty()) {
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    } else if (labels.size() != n) {
      throw Error(Errc::InvalidArgument,
                  "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
    }
    CartanMatrix a;
    a.rank_ = static_cast<int>(n);
    a.entries_ = SquareMatrix(a.rank_);
    for (int i = 0; i < a.rank_; ++i)
      for (int j = 0; j < a.rank_; ++j) a.entries_(i, j) = raw[i][j];
    a.labels_ = std::move(labels);
    return a;
  }

  int rank() const { return rank_; }
  std::int64_t operator()(int i, int j) const { return entries_(i, j); }
  const SquareMatrix& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }

  IntRows rows() const {
    IntRows out(rank_, std::vector<std::int64_t>(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) out[i][j] = entries_(i, j);
    return out;
  }

  /// Principal submatrix A_J, indexed by the elements of J in increasing order.
  CartanMatrix restrict(Subset j) const {
    const std::vector<int> idx = j.indices();
    IntRows raw(idx.size(), std::vector<std::int64_t>(idx.size()));
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      labels.push_back(labels_[idx[r]]);
      for (std::size_t c = 0; c < idx.size(); ++c) raw[r][c] = entries_(idx[r], idx[c]);
    }
    return validate(raw, std::move(labels));
  }

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.entries_ == b.entries_ && a.labels_ == b.labels_;
  }

 private:
  CartanMatrix() = default;

  int rank_ = 0;
  SquareMatrix entries_;
  std::vector<std::string> labels_;
};

enum class GcmType { Finite, Affine, Indefinite };

constexpr std::string_view to_string(GcmType t) {
  switch (t) {
    case GcmType::Finite: return "Finite";
    case GcmType::Affine: return "Affine";
    case GcmType::Indefinite: return "Indefinite";
  }
  return "?";
}

struct ComponentType {
  Subset component;
  GcmType type;
};

struct TypeVerdict {
  std::vector<ComponentType> components;  // ordered by smallest index
  bool indecomposable = false;

  bool finite() const {
    return std::all_of(components.begin(), components.end(),
                       [](const ComponentType& c) { return c.type == GcmType::Finite; });
  }
};

struct GcmScalars {
  std::int64_t max_off_diagonal = 0;  // M_A
  bool two_spherical = true;
};

/// Connected components of the graph on I with an edge {i,j} iff a_ij != 0,
/// ordered by smallest member.
inline std::vector<Subset> components(const CartanMatrix& a) {
  const int n = a.rank();
  std::vector<Subset> out;
  Subset seen;
  for (int start = 0; start < n; ++start) {
    if (seen.contains(start)) continue;
    Subset comp = Subset::single(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (w != v && a(v, w) != 0 && !comp.contains(w)) {
          comp = comp.with(w);
          stack.push_back(w);
        }
    }
    seen = seen | comp;
    out.push_back(comp);
  }
  return out;
}

inline std::int64_t principal_minor(const CartanMatrix& a, Subset j) {
  const std::vector<int> idx = j.indices();
  SquareMatrix m(static_cast<int>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(static_cast<int>(r), static_cast<int>(c)) = a(idx[r], idx[c]);
  return determinant(m);
}

/// Type of an indecomposable component C from its principal minors:
/// Finite iff all are positive, Affine iff det(A_C) = 0 and all proper ones are
/// positive, Indefinite otherwise.
inline GcmType classify_component(const CartanMatrix& a, Subset c) {
  for (Subset t : all_subsets(c)) {
    if (t.empty() || t == c) continue;
    if (principal_minor(a, t) <= 0) return GcmType::Indefinite;
  }
  const std::int64_t det = principal_minor(a, c);
  if (det > 0) return GcmType::Finite;
  if (det == 0) return GcmType::Affine;
  return GcmType::Indefinite;
}

inline TypeVerdict classify_type(const CartanMatrix& a) {
  TypeVerdict v;
  for (Subset c : components(a)) v.components.push_back({c, classify_component(a, c)});
  v.indecomposable = v.components.size() == 1;
  return v;
}

inline GcmScalars scalars(const CartanMatrix& a) {
  GcmScalars s;
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) {
      if (i == j) continue;
      s.max_off_diagonal = std::max(s.max_off_diagonal, -a(i, j));
      if (checked::mul(a(i, j), a(j, i)) > 3) s.two_spherical = false;
    }
  return s;
}

}  // namespace km

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "km/checked.hpp"
#include "km/error.hpp"
#include "km/gcm.hpp"
#include "km/subset.hpp"

namespace km {

/// Order value standing for m_ij = infinity. Chosen as the largest int so that
/// comparisons such as `m >= 3` and `m < kInfinity` read naturally.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// m_ij from the product a_ij * a_ji: 0 -> 2, 1 -> 3, 2 -> 4, 3 -> 6, >= 4 -> infinity.
constexpr int coxeter_order_from_product(std::int64_t product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return kInfinity;
  }
}

inline std::string order_to_string(int m) { return m == kInfinity ? "inf" : std::to_string(m); }

class CoxeterDiagram {
 public:
  /// Accepts any symmetric Coxeter matrix (m_ii = 1, m_ij >= 2 or kInfinity).
  static CoxeterDiagram from_orders(const std::vector<std::vector<int>>& orders) {
    const int n = static_cast<int>(orders.size());
    if (n == 0 || n > kMaxRank) throw Error(Errc::InvalidArgument, "Coxeter matrix rank out of range");
    CoxeterDiagram d;
    d.rank_ = n;
    d.m_.assign(static_cast<std::size_t>(n) * n, 1);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(orders[i].size()) != n) throw Error(Errc::NotSquare, "Coxeter matrix is not square");
      for (int j = 0; j < n; ++j) {
        const int m = orders[i][j];
        if (i == j ? m != 1 : m < 2)
          throw Error(Errc::InvalidArgument, "invalid Coxeter order at (" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ")");
        if (orders[j][i] != m) throw Error(Errc::InvalidArgument, "Coxeter matrix is not symmetric");
        d.m_[static_cast<std::size_t>(i) * n + j] = m;
      }
    }
    return d;
  }

  int rank() const { return rank_; }
  int order(int i, int j) const { return m_[static_cast<std::size_t>(i) * rank_ + j]; }
  /// Edge of the Coxeter diagram Gamma_S (m_ij >= 3, including infinity).
  bool diagram_edge(int i, int j) const { return i != j && order(i, j) >= 3; }
  /// Edge of the finite graph Gamma_f (m_ij finite).
  bool finite_edge(int i, int j) const { return i != j && order(i, j) != kInfinity; }
  Subset all() const { return Subset::full(rank_); }

  std::vector<std::vector<int>> orders() const {
    std::vector<std::vector<int>> out(rank_, std::vector<int>(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) out[i][j] = order(i, j);
    return out;
  }

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

 private:
  int rank_ = 0;
  std::vector<int> m_;
};

inline CoxeterDiagram coxeter_matrix(const CartanMatrix& a) {
  const int n = a.rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = coxeter_order_from_product(checked::mul(a(i, j), a(j, i)));
  return CoxeterDiagram::from_orders(m);
}

/// Gamma_S-components of J, ordered by smallest member.
inline std::vector<Subset> diagram_components(const CoxeterDiagram& d, Subset j) {
  std::vector<Subset> out;
  Subset rest = j;
  while (!rest.empty()) {
    const int start = rest.first();
    Subset comp = Subset::single(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : (j - comp).indices())
        if (d.diagram_edge(v, w)) {
          comp = comp.with(w);
          stack.push_back(w);
        }
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

// -- finite (spherical) classification ---------------------------------------

enum class FiniteFamily { A, B, D, E, F, H, I };

/// Type of an irreducible finite Coxeter group. Rank-2 groups are named A2, B2,
/// G2 or I2(m); `dihedral_order` holds m for the I family only.
struct FiniteType {
  FiniteFamily family = FiniteFamily::A;
  int rank = 1;
  int dihedral_order = 0;

  std::string name() const {
    switch (family) {
      case FiniteFamily::A: return "A" + std::to_string(rank);
      case FiniteFamily::B: return "B" + std::to_string(rank);
      case FiniteFamily::D: return "D" + std::to_string(rank);
      case FiniteFamily::E: return "E" + std::to_string(rank);
      case FiniteFamily::F: return "F4";
      case FiniteFamily::H: return "H" + std::to_string(rank);
      case FiniteFamily::I:
        return dihedral_order == 6 ? "G2" : "I2(" + std::to_string(dihedral_order) + ")";
    }
    return "?";
  }

  std::uint64_t group_order() const {
    auto factorial = [](int k) {
      std::uint64_t f = 1;
      for (int i = 2; i <= k; ++i) f = checked::mul(f, static_cast<std::uint64_t>(i));
      return f;
    };
    auto pow2 = [](int k) {
      std::uint64_t p = 1;
      for (int i = 0; i < k; ++i) p = checked::mul(p, std::uint64_t{2});
      return p;
    };
    const int n = rank;
    switch (family) {
      case FiniteFamily::A: return factorial(n + 1);
      case FiniteFamily::B: return checked::mul(pow2(n), factorial(n));
      case FiniteFamily::D: return checked::mul(pow2(n - 1), factorial(n));
      case FiniteFamily::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
      case FiniteFamily::F: return 1152;
      case FiniteFamily::H: return n == 3 ? 120 : 14400;
      case FiniteFamily::I: return 2 * static_cast<std::uint64_t>(dihedral_order);
    }
    return 0;
  }

  std::uint64_t positive_roots() const {
    const auto n = static_cast<std::uint64_t>(rank);
    switch (family) {
      case FiniteFamily::A: return n * (n + 1) / 2;
      case FiniteFamily::B: return n * n;
      case FiniteFamily::D: return n * (n - 1);
      case FiniteFamily::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
      case FiniteFamily::F: return 24;
      case FiniteFamily::H: return n == 3 ? 15 : 60;
      case FiniteFamily::I: return static_cast<std::uint64_t>(dihedral_order);
    }
    return 0;
  }
};

/// Matches a Gamma_S-connected set C against the list of irreducible finite
/// Coxeter diagrams. Returns nullopt when C is not spherical.
inline std::optional<FiniteType> classify_finite_component(const CoxeterDiagram& d, Subset c) {
  const std::vector<int> v = c.indices();
  const int n = static_cast<int>(v.size());
  if (n == 0) return std::nullopt;
  if (n == 1) return FiniteType{FiniteFamily::A, 1, 0};

  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (d.diagram_edge(v[a], v[b])) {
        if (d.order(v[a], v[b]) == kInfinity) return std::nullopt;
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edges;
      }
  if (edges != n - 1) return std::nullopt;  // connected, so a tree iff |E| = n - 1
  auto label = [&](int a, int b) { return d.order(v[a], v[b]); };

  if (n == 2) {
    const int m = label(0, 1);
    if (m == 3) return FiniteType{FiniteFamily::A, 2, 0};
    if (m == 4) return FiniteType{FiniteFamily::B, 2, 0};
    return FiniteType{FiniteFamily::I, 2, m};
  }

  int branch = -1;
  for (int a = 0; a < n; ++a) {
    if (adj[a].size() > 3) return std::nullopt;
    if (adj[a].size() == 3) {
      if (branch >= 0) return std::nullopt;
      branch = a;
    }
  }

  if (branch < 0) {
    // A path: walk it from one end and record the edge labels in order.
    int start = 0;
    while (adj[start].size() != 1) ++start;
    std::vector<int> labels;
    int prev = -1;
    int cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      labels.push_back(label(cur, next));
      prev = cur;
      cur = next;
    }
    std::vector<int> special;
    for (int k = 0; k < static_cast<int>(labels.size()); ++k)
      if (labels[k] != 3) special.push_back(k);
    if (special.empty()) return FiniteType{FiniteFamily::A, n, 0};
    if (special.size() != 1) return std::nullopt;
    const int pos = special.front();
    const int m = labels[pos];
    const bool at_end = pos == 0 || pos == static_cast<int>(labels.size()) - 1;
    if (m == 4 && at_end) return FiniteType{FiniteFamily::B, n, 0};
    if (m == 4 && n == 4) return FiniteType{FiniteFamily::F, 4, 0};
    if (m == 5 && at_end && (n == 3 || n == 4)) return FiniteType{FiniteFamily::H, n, 0};
    return std::nullopt;
  }

  // One branch vertex of degree 3: all labels must be 3, arms (p <= q <= r).
  for (int a = 0; a < n; ++a)
    for (int b : adj[a])
      if (label(a, b) != 3) return std::nullopt;
  std::vector<int> arms;
  for (int first : adj[branch]) {
    int len = 1;
    int prev = branch;
    int cur = first;
    while (adj[cur].size() == 2) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return FiniteType{FiniteFamily::D, n, 0};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return FiniteType{FiniteFamily::E, n, 0};
  return std::nullopt;
}

inline bool is_spherical(const CoxeterDiagram& d, Subset j) {
  for (Subset c : diagram_components(d, j))
    if (!classify_finite_component(d, c)) return false;
  return true;
}

struct Decomposition {
  Subset set;
  std::vector<Subset> components;
  Subset spherical_part;
  Subset essential_part;
  Subset perp;
};

/// J^perp: generators commuting with every element of J (m_ij = 2).
inline Subset perp(const CoxeterDiagram& d, Subset j) {
  Subset out;
  for (int i = 0; i < d.rank(); ++i) {
    bool ok = true;
    for (int k : j.indices())
      if (d.order(i, k) != 2) {
        ok = false;
        break;
      }
    if (ok) out = out.with(i);
  }
  return out;
}

inline Decomposition decompose(const CoxeterDiagram& d, Subset j) {
  Decomposition out;
  out.set = j;
  out.components = diagram_components(d, j);
  for (Subset c : out.components) {
    if (classify_finite_component(d, c))
      out.spherical_part = out.spherical_part | c;
    else
      out.essential_part = out.essential_part | c;
  }
  out.perp = perp(d, j);
  return out;
}

inline Subset essential_part(const CoxeterDiagram& d, Subset j) { return decompose(d, j).essential_part; }
inline bool is_essential(const CoxeterDiagram& d, Subset j) { return essential_part(d, j) == j; }

struct GroupOrder {
  std::uint64_t order = 1;
  std::uint64_t positive_roots = 0;
  std::vector<FiniteType> types;  // one per Gamma_S-component

  std::string type_name() const {
    if (types.empty()) return "trivial";
    std::string out;
    for (const FiniteType& t : types) out += (out.empty() ? "" : "x") + t.name();
    return out;
  }
};

/// |W_J| and the number of reflections of W_J, from the classification tables.
inline GroupOrder finite_group_order(const CoxeterDiagram& d, Subset j) {
  GroupOrder g;
  for (Subset c : diagram_components(d, j)) {
    const auto t = classify_finite_component(d, c);
    if (!t) throw Error(Errc::NotSpherical, "NotSpherical(" + to_string(j) + ")", "subset is not spherical");
    g.order = checked::mul(g.order, t->group_order());
    g.positive_roots += t->positive_roots();
    g.types.push_back(*t);
  }
  return g;
}

// -- nerve and strong connectivity --------------------------------------------

/// The nerve: all nonempty spherical subsets, listed by size then index order.
class Nerve {
 public:
  Nerve(int rank, std::vector<Subset> simplices) : rank_(rank), simplices_(std::move(simplices)) {
    std::sort(simplices_.begin(), simplices_.end());
  }

  int rank() const { return rank_; }
  const std::vector<Subset>& simplices() const& { return simplices_; }
  std::vector<Subset> simplices() && { return std::move(simplices_); }
  bool contains(Subset s) const { return std::binary_search(simplices_.begin(), simplices_.end(), s); }
  int dimension() const { return simplices_.empty() ? -1 : simplices_.back().size() - 1; }

  /// Codimension-one face relation (face, coface).
  std::vector<std::pair<Subset, Subset>> cover_relations() const {
    std::vector<std::pair<Subset, Subset>> out;
    for (Subset s : simplices_) {
      if (s.size() < 2) continue;
      for (int i : s.indices()) out.emplace_back(s.without(i), s);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      if (x.second == y.second) return x.first < y.first;
      return x.second < y.second;
    });
    return out;
  }

 private:
  int rank_;
  std::vector<Subset> simplices_;
};

/// Enumerates spherical subsets by extension with larger indices only; a
/// non-spherical set is never extended since sphericity is closed under subsets.
inline Nerve nerve(const CoxeterDiagram& d) {
  std::vector<Subset> found;
  std::vector<Subset> frontier;
  for (int i = 0; i < d.rank(); ++i) frontier.push_back(Subset::single(i));
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset s : frontier) {
      found.push_back(s);
      for (int i = s.last() + 1; i < d.rank(); ++i) {
        const Subset t = s.with(i);
        if (is_spherical(d, t)) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return Nerve(d.rank(), std::move(found));
}

namespace detail {

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Connectivity of a vertex set given an edge predicate. The empty set counts
/// as disconnected.
template <class Joined>
bool connected(int rank, Subset vertices, Joined&& joined) {
  if (vertices.empty()) return false;
  std::vector<int> parent(rank);
  std::iota(parent.begin(), parent.end(), 0);
  joined([&](int a, int b) { parent[find_root(parent, a)] = find_root(parent, b); });
  const int root = find_root(parent, vertices.first());
  for (int v : vertices.indices())
    if (find_root(parent, v) != root) return false;
  return true;
}

}  // namespace detail

/// Removing a closed simplex sigma from |N| leaves a space that retracts onto
/// the full subcomplex on the remaining vertices; connectivity of that
/// subcomplex is decided by merging the vertices of every simplex inside it.
inline bool strongly_connected_nerve(const Nerve& n) {
  const Subset all = Subset::full(n.rank());
  std::vector<Subset> removals{Subset{}};
  removals.insert(removals.end(), n.simplices().begin(), n.simplices().end());
  for (Subset removed : removals) {
    const Subset rest = all - removed;
    const bool ok = detail::connected(n.rank(), rest, [&](auto&& unite) {
      for (Subset s : n.simplices()) {
        if (!s.subset_of(rest)) continue;
        const int anchor = s.first();
        for (int v : s.indices()) unite(anchor, v);
      }
    });
    if (!ok) return false;
  }
  return true;
}

/// First spherical J (in listing order, J = {} first) such that Gamma_f
/// restricted to I \ J is disconnected; nullopt when Gamma_f is strongly
/// connected. An empty result subset means Gamma_f itself is disconnected.
inline std::optional<Subset> graph_disconnecting_set(const CoxeterDiagram& d) {
  const Subset all = d.all();
  std::vector<Subset> candidates;
  for (Subset j : all_subsets(all))
    if (is_spherical(d, j)) candidates.push_back(j);
  std::sort(candidates.begin(), candidates.end());
  for (Subset j : candidates) {
    const Subset rest = all - j;
    const bool ok = detail::connected(d.rank(), rest, [&](auto&& unite) {
      for (int a : rest.indices())
        for (int b : rest.indices())
          if (a < b && d.finite_edge(a, b)) unite(a, b);
    });
    if (!ok) return j;
  }
  return std::nullopt;
}

inline bool strongly_connected_graph(const CoxeterDiagram& d) { return !graph_disconnecting_set(d).has_value(); }

}  // namespace km

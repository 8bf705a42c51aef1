#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "km/coxeter.hpp"
#include "km/error.hpp"
#include "km/roots.hpp"
#include "km/weyl.hpp"

namespace km {

/// "{a,b}" using display labels.
inline std::string labelled(const CartanMatrix& a, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    out += (first ? "" : ",") + a.labels()[i];
    first = false;
  }
  return out + "}";
}

// -- essential poset ------------------------------------------------------------

struct PosetElement {
  Subset set;
  std::string class_label;     // [W_J]
  std::string representative;  // P_J
};

/// Essential subsets of I ordered by inclusion; order-isomorphic to the
/// standard parabolics modulo finite index via J -> [W_J].
struct EssentialPoset {
  std::vector<PosetElement> elements;                   // listing order of Subset
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (smaller, larger) indices
  std::size_t bottom = 0;                               // always the empty set
  std::size_t top = 0;                                  // I^infinity, which contains every essential subset

  std::size_t index_of(Subset s) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i].set == s) return i;
    throw Error(Errc::InvalidArgument, "subset is not essential");
  }
};

inline EssentialPoset essential_poset(const CartanMatrix& a) {
  const CoxeterDiagram d = coxeter_matrix(a);
  EssentialPoset p;
  std::vector<Subset> sets;
  for (Subset j : all_subsets(d.all()))
    if (is_essential(d, j)) sets.push_back(j);
  std::sort(sets.begin(), sets.end());
  for (Subset j : sets) p.elements.push_back({j, "[W_" + labelled(a, j) + "]", "P_" + labelled(a, j)});
  for (std::size_t x = 0; x < sets.size(); ++x)
    for (std::size_t y = 0; y < sets.size(); ++y) {
      if (x == y || !sets[x].subset_of(sets[y])) continue;
      bool covered = true;
      for (std::size_t z = 0; z < sets.size() && covered; ++z)
        if (z != x && z != y && sets[x].subset_of(sets[z]) && sets[z].subset_of(sets[y])) covered = false;
      if (covered) p.hasse.emplace_back(x, y);
    }
  std::sort(p.hasse.begin(), p.hasse.end());
  p.bottom = 0;
  p.top = p.index_of(essential_part(d, d.all()));
  return p;
}

enum class Comparison { Less, Equal, Greater, Incomparable };

constexpr std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "Less";
    case Comparison::Equal: return "Equal";
    case Comparison::Greater: return "Greater";
    case Comparison::Incomparable: return "Incomparable";
  }
  return "?";
}

/// [W_J] vs [W_J'] modulo finite index: compares J^inf with J'^inf.
inline Comparison virtual_order_compare(const CoxeterDiagram& d, Subset j, Subset k) {
  const Subset ej = essential_part(d, j);
  const Subset ek = essential_part(d, k);
  if (ej == ek) return Comparison::Equal;
  if (ej.subset_of(ek)) return Comparison::Less;
  if (ek.subset_of(ej)) return Comparison::Greater;
  return Comparison::Incomparable;
}

// -- Deodhar moves and standard conjugacy ------------------------------------------

struct DeodharMove {
  Subset from;
  int s = 0;
  Subset component;  // K: Gamma_S-component of from + {s} containing s
  WeylElement nu;    // w_{K \ {s}} w_K
  Subset to;         // nu^{-1} from nu
};

/// Index k with w^{-1} s_j w = s_k, or -1.
inline int conjugate_generator(const WeylGroup& group, const WeylElement& w, const WeylElement& w_inv, int j) {
  const WeylElement c = w_inv * group.generator(j) * w;
  for (int k = 0; k < group.rank(); ++k)
    if (c == group.generator(k)) return k;
  return -1;
}

/// w^{-1} J w as a subset of S, or nullopt if some generator leaves S.
inline std::optional<Subset> conjugate_subset(const WeylGroup& group, const WeylElement& w, Subset j) {
  const WeylElement w_inv = group.inverse(w);
  Subset out;
  for (int i : j.indices()) {
    const int k = conjugate_generator(group, w, w_inv, i);
    if (k < 0) return std::nullopt;
    out = out.with(k);
  }
  return out;
}

inline DeodharMove deodhar_move(const WeylGroup& group, Subset from, int s) {
  const CoxeterDiagram& d = group.diagram();
  if (s < 0 || s >= group.rank())
    throw Error(Errc::IndexOutOfRange, "IndexOutOfRange(" + std::to_string(s + 1) + ")", "generator out of range");
  if (from.contains(s)) throw Error(Errc::InvalidArgument, "move generator must lie outside the subset");
  DeodharMove m;
  m.from = from;
  m.s = s;
  for (Subset c : diagram_components(d, from.with(s)))
    if (c.contains(s)) m.component = c;
  if (!is_spherical(d, m.component))
    throw Error(Errc::ComponentNotSpherical, "ComponentNotSpherical(" + to_string(m.component) + ")",
                "the component of the enlarged set containing the move generator is not spherical");
  m.nu = group.longest_element(m.component.without(s)) * group.longest_element(m.component);
  const auto to = conjugate_subset(group, m.nu, from);
  if (!to || to->size() != from.size())
    throw Error(Errc::VerificationFailed, "Deodhar move does not conjugate the subset into S");
  m.to = *to;
  return m;
}

struct ConjugacyResult {
  bool conjugate = false;
  WeylElement witness;              // w with w^{-1} J w = J'
  std::vector<DeodharMove> chain;   // empty when J = J' or not conjugate
  std::size_t explored = 0;         // subsets reached in the move graph
};

/// All moves available from `from`, in increasing order of the move generator.
inline std::vector<DeodharMove> available_moves(const WeylGroup& group, Subset from) {
  std::vector<DeodharMove> out;
  const CoxeterDiagram& d = group.diagram();
  for (int s : (d.all() - from).indices()) {
    Subset k;
    for (Subset c : diagram_components(d, from.with(s)))
      if (c.contains(s)) k = c;
    if (is_spherical(d, k)) out.push_back(deodhar_move(group, from, s));
  }
  return out;
}

/// Breadth-first search over the elementary-move graph starting at J.
/// NotConjugate means the move graph from J was exhausted without reaching J'.
inline ConjugacyResult standard_conjugacy(const WeylGroup& group, Subset j, Subset target) {
  ConjugacyResult res;
  res.witness = group.identity();
  std::map<std::uint32_t, std::optional<DeodharMove>> parent;
  parent.emplace(j.bits(), std::nullopt);
  std::deque<Subset> queue{j};
  while (!queue.empty()) {
    const Subset cur = queue.front();
    queue.pop_front();
    if (cur == target) break;
    for (DeodharMove& m : available_moves(group, cur)) {
      if (parent.contains(m.to.bits())) continue;
      queue.push_back(m.to);
      parent.emplace(m.to.bits(), std::move(m));
    }
  }
  res.explored = parent.size();
  if (!parent.contains(target.bits())) return res;
  for (Subset cur = target; cur != j;) {
    const DeodharMove& m = *parent.at(cur.bits());
    res.chain.push_back(m);
    cur = m.from;
  }
  std::reverse(res.chain.begin(), res.chain.end());
  for (const DeodharMove& m : res.chain) res.witness = res.witness * m.nu;
  const auto check = conjugate_subset(group, res.witness, j);
  if (!check || *check != target) throw Error(Errc::VerificationFailed, "conjugacy witness failed verification");
  res.conjugate = true;
  return res;
}

struct NormalizerFactorization {
  Subset essential;
  Subset perp;
};

/// N_W(W_J) = W_J x W_{J^perp} and C_W(W_J) = W_{J^perp} for essential J.
inline NormalizerFactorization normalizer_factorization(const CoxeterDiagram& d, Subset j) {
  if (!is_essential(d, j))
    throw Error(Errc::NotEssential, "NotEssential(" + to_string(j) + ")", "subset is not essential");
  return {j, perp(d, j)};
}

// -- parabolic closure and J-regular elements ---------------------------------------

struct ClosureCertificate {
  WeylElement conjugator;  // v
  WeylElement conjugate;   // v^{-1} w v
  Subset support;          // J = supp(v^{-1} w v), so w lies in v W_J v^{-1}
  std::size_t searched = 0;
};

/// Bounded search for a small parabolic containing w: over the ball of the
/// given radius (restricted to W_within if set) in length-lexicographic order,
/// minimises (|J^inf|, |J|) for J = supp(v^{-1} w v); the first minimiser wins.
inline ClosureCertificate parabolic_closure_search(const WeylGroup& group, const WeylElement& w, std::size_t depth,
                                                   const Budget& budget = {},
                                                   std::optional<Subset> within = std::nullopt) {
  std::vector<WeylElement> ball = group.enumerate_ball(depth, budget, within);
  group.sort_length_lex(ball);
  std::optional<ClosureCertificate> best;
  std::pair<int, int> best_key;
  for (const WeylElement& v : ball) {
    WeylElement u = group.inverse(v) * w * v;
    const Subset supp = group.support(u);
    const std::pair<int, int> key{essential_part(group.diagram(), supp).size(), supp.size()};
    if (!best || key < best_key) {
      best = ClosureCertificate{v, std::move(u), supp, 0};
      best_key = key;
    }
  }
  best->searched = ball.size();
  return *best;
}

struct JRegularCertificate {
  WeylElement element;
  std::vector<int> word;
  ElementOrder order;
  bool straight = false;
  ClosureCertificate closure;
  std::vector<PeriodicRoot> periodic;  // empty for an accepted candidate
  std::size_t roots_checked = 0;
  std::size_t candidates_examined = 0;
};

struct JRegularBounds {
  std::size_t max_length = 2;
  int power_bound = 10;  // N
  std::int64_t max_height = 11;  // H
  std::size_t depth = 2;
};

/// Scans W_J up to the length bound in length-lexicographic order and returns
/// the first element passing every bounded check: infinite order, straightness
/// up to N, closure search inside W_J yielding full support J, and no root of
/// Delta^re+(J) up to height H fixed by a power w^n with n <= N. Returns nullopt
/// when the scan is exhausted.
inline std::optional<JRegularCertificate> find_j_regular(const WeylGroup& group, Subset j, const JRegularBounds& b,
                                                         const Budget& budget = {}) {
  const CoxeterDiagram& d = group.diagram();
  if (j.empty() || !is_essential(d, j))
    throw Error(Errc::NotEssential, "NotEssential(" + to_string(j) + ")", "J-regular search needs a nonempty essential subset");
  const std::vector<RealRoot> roots =
      split_by_subset(enumerate_positive_real_roots(group, b.max_height, budget), j).in_subset;
  std::vector<WeylElement> candidates = group.enumerate_ball(b.max_length, budget, j);
  group.sort_length_lex(candidates);
  std::size_t examined = 0;
  for (const WeylElement& w : candidates) {
    if (w.is_identity()) continue;
    ++examined;
    const ElementOrder order = group.element_order(w);
    if (!order.infinite()) continue;
    if (!group.is_straight(w, b.power_bound)) continue;
    ClosureCertificate closure = parabolic_closure_search(group, w, b.depth, budget, j);
    if (closure.support != j) continue;
    std::vector<PeriodicRoot> periodic = periodic_roots(w, roots, b.power_bound);
    if (!periodic.empty()) continue;
    return JRegularCertificate{w, group.canonical_word(w), order, true, std::move(closure), {}, roots.size(), examined};
  }
  return std::nullopt;
}

}  // namespace km

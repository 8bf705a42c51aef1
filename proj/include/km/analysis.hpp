#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "km/coxeter.hpp"
#include "km/gcm.hpp"
#include "km/parabolics.hpp"

namespace km {

// -- ends ----------------------------------------------------------------------------

struct EndsVerdict {
  bool weyl_infinite = false;
  bool one_ended = false;
  bool graph_strongly_connected = false;
  bool nerve_strongly_connected = false;
  bool nerve_agreement = false;
  /// Spherical J whose removal disconnects Gamma_f (empty set: Gamma_f itself
  /// is disconnected). Unset when Gamma_f is strongly connected.
  std::optional<Subset> disconnecting_set;
  std::string witness;
};

inline EndsVerdict ends_verdict(const CartanMatrix& a) {
  const CoxeterDiagram d = coxeter_matrix(a);
  EndsVerdict v;
  v.weyl_infinite = !classify_type(a).finite();
  v.disconnecting_set = graph_disconnecting_set(d);
  v.graph_strongly_connected = !v.disconnecting_set.has_value();
  v.nerve_strongly_connected = strongly_connected_nerve(nerve(d));
  v.nerve_agreement = v.graph_strongly_connected == v.nerve_strongly_connected;
  v.one_ended = v.weyl_infinite && v.graph_strongly_connected;
  if (!v.weyl_infinite)
    v.witness = "Weyl group is finite";
  else if (!v.disconnecting_set)
    v.witness = "Gamma_f strongly connected";
  else if (v.disconnecting_set->empty())
    v.witness = "Gamma_f disconnected";
  else
    v.witness = "removing spherical " + labelled(a, *v.disconnecting_set) + " disconnects Gamma_f";
  return v;
}

// -- local indecomposability ------------------------------------------------------------

struct PrimePower {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  int exponent = 0;
};

/// Factors q = p^e by trial division.
inline PrimePower parse_prime_power(std::uint64_t q) {
  const Error bad(Errc::NotPrimePower, "NotPrimePower(" + std::to_string(q) + ")", "field size must be a prime power");
  if (q < 2) throw bad;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  PrimePower out{q, p, 0};
  for (std::uint64_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw bad;
    ++out.exponent;
  }
  return out;
}

enum class Criterion { CriterionI, CriterionII, FiniteType };

constexpr std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::CriterionI: return "CriterionI";
    case Criterion::CriterionII: return "CriterionII";
    case Criterion::FiniteType: return "FiniteType";
  }
  return "?";
}

struct HypothesisChecklist {
  bool indecomposable = false;
  bool finite_type = false;
  bool one_ended = false;
  bool p_exceeds_max_entry = false;  // p > M_A
  bool two_spherical = false;
  bool q_bound = false;              // M_A <= 1, or M_A = 2 and q >= 3, or M_A = 3 and q >= 4
};

namespace reason {
inline constexpr const char* kNotIndecomposable = "not_indecomposable";
inline constexpr const char* kNotOneEnded = "not_one_ended";
inline constexpr const char* kCharacteristicTooSmall = "p_not_greater_than_M_A";
inline constexpr const char* kNotTwoSpherical = "not_two_spherical";
inline constexpr const char* kFieldTooSmall = "q_bound_not_met";
}  // namespace reason

struct IndecomposabilityVerdict {
  PrimePower field;
  std::int64_t max_off_diagonal = 0;
  bool applicable = false;
  std::optional<Criterion> criterion;  // set: locally indecomposable by this criterion
  std::vector<std::string> reasons;    // set when inconclusive
  HypothesisChecklist checklist;

  bool locally_indecomposable() const { return criterion.has_value(); }
};

inline IndecomposabilityVerdict indecomposability_verdict(const CartanMatrix& a, std::uint64_t q) {
  IndecomposabilityVerdict v;
  v.field = parse_prime_power(q);
  const TypeVerdict type = classify_type(a);
  const GcmScalars sc = scalars(a);
  const EndsVerdict ends = ends_verdict(a);
  v.max_off_diagonal = sc.max_off_diagonal;

  HypothesisChecklist& h = v.checklist;
  h.indecomposable = type.indecomposable;
  h.finite_type = type.finite();
  h.one_ended = ends.one_ended;
  h.p_exceeds_max_entry = static_cast<std::int64_t>(v.field.p) > sc.max_off_diagonal;
  h.two_spherical = sc.two_spherical;
  const std::int64_t m = sc.max_off_diagonal;
  h.q_bound = m <= 1 || (m == 2 && q >= 3) || (m == 3 && q >= 4);
  v.applicable = h.indecomposable;

  if (h.indecomposable) {
    if (h.finite_type)
      v.criterion = Criterion::FiniteType;
    else if (h.one_ended && h.p_exceeds_max_entry)
      v.criterion = Criterion::CriterionI;
    else if (h.two_spherical && h.q_bound)
      v.criterion = Criterion::CriterionII;
  }
  if (!v.criterion) {
    if (!h.indecomposable) v.reasons.push_back(reason::kNotIndecomposable);
    if (!h.one_ended) v.reasons.push_back(reason::kNotOneEnded);
    if (!h.p_exceeds_max_entry) v.reasons.push_back(reason::kCharacteristicTooSmall);
    if (!h.two_spherical) v.reasons.push_back(reason::kNotTwoSpherical);
    if (!h.q_bound) v.reasons.push_back(reason::kFieldTooSmall);
  }
  return v;
}

// -- open subgroups and locally normal subgroups -------------------------------------------

struct OpenSubgroupClass {
  Subset set;
  std::string representative;
  std::string class_label;
  std::string description;
};

struct OpenSubgroupReport {
  EssentialPoset poset;
  std::vector<OpenSubgroupClass> classes;  // parallel to poset.elements
  std::vector<std::string> semantics;
};

inline OpenSubgroupReport open_subgroup_report(const CartanMatrix& a) {
  OpenSubgroupReport r;
  r.poset = essential_poset(a);
  for (std::size_t i = 0; i < r.poset.elements.size(); ++i) {
    const PosetElement& e = r.poset.elements[i];
    std::string description;
    if (i == r.poset.bottom)
      description = "compact open subgroups";
    else if (i == r.poset.top)
      description = "open subgroups of finite index in G";
    else
      description = "open subgroups commensurate with a conjugate of " + e.representative;
    if (i == r.poset.bottom && i == r.poset.top) description = "compact open subgroups (G itself is compact)";
    r.classes.push_back({e.set, e.representative, e.class_label, std::move(description)});
  }
  r.semantics = {
      "lambda(P_J) = [W_J] for every J; the class of P_J is that of P_{J^inf}",
      "lambda(H) = lambda(K) iff some conjugate gHg^-1 is commensurate with K",
      "lambda(H) < lambda(K) iff some conjugate gHg^-1 is commensurate with an infinite-index subgroup of K",
  };
  return r;
}

struct SandwichRecord {
  Subset essential;   // J, nonempty and essential
  Subset spherical;   // J', spherical, inside J^perp
  std::string statement;
  std::string refined;
};

struct StructureReport {
  OpenSubgroupReport open_subgroups;
  std::vector<SandwichRecord> sandwiches;
  bool compact_or_open = true;
  std::vector<Subset> obstructions;  // nonempty essential J with J^perp not spherical
  std::vector<std::string> symbols;
};

inline StructureReport locally_normal_report(const CartanMatrix& a) {
  const CoxeterDiagram d = coxeter_matrix(a);
  StructureReport r;
  r.open_subgroups = open_subgroup_report(a);
  for (const PosetElement& e : r.open_subgroups.poset.elements) {
    const Subset j = e.set;
    if (j.empty()) continue;
    const Subset jp = perp(d, j);
    if (!is_spherical(d, jp)) {
      r.compact_or_open = false;
      r.obstructions.push_back(j);
    }
    std::vector<Subset> sph;
    for (Subset k : all_subsets(jp))
      if (is_spherical(d, k)) sph.push_back(k);
    std::sort(sph.begin(), sph.end());
    for (Subset k : sph) {
      const std::string p = "P_" + labelled(a, j | k);
      r.sandwiches.push_back({j, k, "Res(" + p + ") <= gHg^-1 <= " + p,
                              "L+_" + labelled(a, j) + " U_" + labelled(a, j | jp) + " <= closure((" + p +
                                  ")^dagger) <= gHg^-1 <= " + p});
    }
  }
  r.symbols = {"Res(P): intersection of the open normal subgroups of P",
               "G^dagger: Tits core of G",
               "L+_J: subgroup of the Levi factor of P_J generated by its root groups",
               "U_{J u J^perp}: unipotent radical of P_{J u J^perp}"};
  return r;
}

}  // namespace km

#pragma once

// JSON and DOT rendering of library results. Sets and words are emitted as
// arrays of 1-based generator indices; Coxeter orders use "inf" for infinity.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "km/analysis.hpp"
#include "km/coxeter.hpp"
#include "km/gcm.hpp"
#include "km/parabolics.hpp"
#include "km/roots.hpp"
#include "km/weyl.hpp"

namespace km::report {

using Json = nlohmann::ordered_json;

inline Json set_json(Subset s) {
  Json j = Json::array();
  for (int i : s.indices()) j.push_back(i + 1);
  return j;
}

inline Json word_json(const std::vector<int>& word) {
  Json j = Json::array();
  for (int i : word) j.push_back(i + 1);
  return j;
}

inline Json order_json(int m) { return m == kInfinity ? Json("inf") : Json(m); }

inline Json matrix_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json element_order_json(const ElementOrder& o) {
  return o.infinite() ? Json("infinite") : Json(*o.finite);
}

inline Json classify_json(const CartanMatrix& a) {
  const TypeVerdict t = classify_type(a);
  const GcmScalars s = scalars(a);
  Json comps = Json::array();
  for (const ComponentType& c : t.components)
    comps.push_back(Json{{"set", set_json(c.component)}, {"type", std::string(to_string(c.type))}});
  return Json{{"components", std::move(comps)},
              {"indecomposable", t.indecomposable},
              {"finite", t.finite()},
              {"M_A", s.max_off_diagonal},
              {"two_spherical", s.two_spherical}};
}

inline Json coxeter_json(const CoxeterDiagram& d) {
  Json orders = Json::array();
  Json diagram_edges = Json::array();
  Json finite_edges = Json::array();
  for (int i = 0; i < d.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < d.rank(); ++j) row.push_back(order_json(d.order(i, j)));
    orders.push_back(std::move(row));
    for (int j = i + 1; j < d.rank(); ++j) {
      if (d.diagram_edge(i, j)) diagram_edges.push_back(Json::array({i + 1, j + 1, order_json(d.order(i, j))}));
      if (d.finite_edge(i, j)) finite_edges.push_back(Json::array({i + 1, j + 1}));
    }
  }
  return Json{{"orders", std::move(orders)},
              {"diagram_edges", std::move(diagram_edges)},
              {"finite_graph_edges", std::move(finite_edges)}};
}

inline Json decompose_json(const CoxeterDiagram& d, Subset j) {
  const Decomposition dec = decompose(d, j);
  Json comps = Json::array();
  for (Subset c : dec.components) {
    const auto t = classify_finite_component(d, c);
    comps.push_back(Json{{"set", set_json(c)}, {"spherical", t.has_value()}, {"type", t ? Json(t->name()) : Json()}});
  }
  Json out{{"set", set_json(j)},
           {"components", std::move(comps)},
           {"spherical_part", set_json(dec.spherical_part)},
           {"essential_part", set_json(dec.essential_part)},
           {"perp", set_json(dec.perp)},
           {"spherical", dec.essential_part.empty()},
           {"essential", dec.essential_part == j}};
  if (dec.essential_part.empty()) {
    const GroupOrder g = finite_group_order(d, j);
    out["group_order"] = g.order;
    out["positive_roots"] = g.positive_roots;
    out["type"] = g.type_name();
  }
  return out;
}

inline Json poset_json(const EssentialPoset& p) {
  Json elems = Json::array();
  for (const PosetElement& e : p.elements)
    elems.push_back(Json{{"set", set_json(e.set)}, {"class", e.class_label}, {"representative", e.representative}});
  Json hasse = Json::array();
  for (auto [x, y] : p.hasse) hasse.push_back(Json::array({x, y}));
  return Json{{"elements", std::move(elems)}, {"hasse", std::move(hasse)}, {"bottom", p.bottom}, {"top", p.top}};
}

inline std::string poset_dot(const CartanMatrix& a, const EssentialPoset& p) {
  std::ostringstream out;
  out << "digraph essential_poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    out << "  n" << i << " [label=\"" << labelled(a, p.elements[i].set) << "\"];\n";
  for (auto [x, y] : p.hasse) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

inline Json nerve_json(const Nerve& n) {
  Json simplices = Json::array();
  std::vector<std::size_t> counts(static_cast<std::size_t>(n.dimension() + 1), 0);
  for (Subset s : n.simplices()) {
    simplices.push_back(set_json(s));
    ++counts[s.size() - 1];
  }
  return Json{{"simplices", std::move(simplices)},
              {"dimension", n.dimension()},
              {"counts_by_dimension", counts},
              {"strongly_connected", strongly_connected_nerve(n)}};
}

inline std::string nerve_dot(const CartanMatrix& a, const Nerve& n) {
  std::ostringstream out;
  out << "digraph nerve {\n  rankdir=BT;\n";
  const auto& s = n.simplices();
  for (std::size_t i = 0; i < s.size(); ++i) out << "  n" << i << " [label=\"" << labelled(a, s[i]) << "\"];\n";
  auto index = [&](Subset x) { return std::lower_bound(s.begin(), s.end(), x) - s.begin(); };
  for (auto [face, coface] : n.cover_relations()) out << "  n" << index(face) << " -> n" << index(coface) << ";\n";
  out << "}\n";
  return out.str();
}

inline Json ends_json(const EndsVerdict& v) {
  return Json{{"weyl_infinite", v.weyl_infinite},
              {"one_ended", v.one_ended},
              {"graph_strongly_connected", v.graph_strongly_connected},
              {"nerve_strongly_connected", v.nerve_strongly_connected},
              {"nerve_agreement", v.nerve_agreement},
              {"disconnecting_set", v.disconnecting_set ? set_json(*v.disconnecting_set) : Json()},
              {"witness", v.witness}};
}

inline Json indec_json(const IndecomposabilityVerdict& v) {
  const HypothesisChecklist& h = v.checklist;
  Json out{{"q", v.field.q},
           {"p", v.field.p},
           {"e", v.field.exponent},
           {"M_A", v.max_off_diagonal},
           {"applicable", v.applicable},
           {"outcome", v.locally_indecomposable() ? "LocallyIndecomposable" : "Inconclusive"},
           {"criterion", v.criterion ? Json(std::string(to_string(*v.criterion))) : Json()},
           {"reasons", v.reasons},
           {"hypotheses",
            Json{{"indecomposable", h.indecomposable},
                 {"finite_type", h.finite_type},
                 {"one_ended", h.one_ended},
                 {"p_greater_than_M_A", h.p_exceeds_max_entry},
                 {"two_spherical", h.two_spherical},
                 {"q_bound", h.q_bound}}}};
  std::string statement;
  if (!v.criterion)
    statement = "no sufficient criterion applies; local indecomposability is not decided";
  else if (*v.criterion == Criterion::FiniteType)
    statement = "finite type: G^(1) is finite, hence trivially locally indecomposable";
  else if (*v.criterion == Criterion::CriterionI)
    statement = "G is locally indecomposable: A indecomposable, W_A one-ended, and p > M_A";
  else
    statement = "G is locally indecomposable: A indecomposable and 2-spherical with the field-size bound met";
  out["statement"] = statement;
  return out;
}

inline Json open_subgroups_json(const OpenSubgroupReport& r) {
  Json classes = Json::array();
  for (const OpenSubgroupClass& c : r.classes)
    classes.push_back(Json{{"set", set_json(c.set)},
                           {"class", c.class_label},
                           {"representative", c.representative},
                           {"description", c.description}});
  Json hasse = Json::array();
  for (auto [x, y] : r.poset.hasse) hasse.push_back(Json::array({x, y}));
  return Json{{"class_count", r.classes.size()},
              {"classes", std::move(classes)},
              {"hasse", std::move(hasse)},
              {"semantics", r.semantics}};
}

inline Json structure_json(const StructureReport& r) {
  Json sandwiches = Json::array();
  for (const SandwichRecord& s : r.sandwiches)
    sandwiches.push_back(Json{{"J", set_json(s.essential)},
                              {"J_prime", set_json(s.spherical)},
                              {"statement", s.statement},
                              {"refined", s.refined}});
  Json obstructions = Json::array();
  for (Subset j : r.obstructions) obstructions.push_back(set_json(j));
  return Json{{"open_subgroups", open_subgroups_json(r.open_subgroups)},
              {"sandwiches", std::move(sandwiches)},
              {"compact_or_open", r.compact_or_open},
              {"compact_or_open_obstructions", std::move(obstructions)},
              {"symbols", r.symbols}};
}

inline Json root_json(const WeylGroup& g, const RealRoot& r) {
  Json out{{"coords", r.coords()}, {"height", r.height()}, {"support", set_json(r.support())}};
  if (r.witness())
    out["witness"] = Json{{"word", word_json(g.canonical_word(r.witness()->element))}, {"index", r.witness()->index + 1}};
  return out;
}

inline Json move_json(const WeylGroup& g, const DeodharMove& m) {
  return Json{{"from", set_json(m.from)},
              {"s", m.s + 1},
              {"component", set_json(m.component)},
              {"nu", word_json(g.canonical_word(m.nu))},
              {"to", set_json(m.to)}};
}

inline Json closure_json(const WeylGroup& g, const ClosureCertificate& c) {
  return Json{{"conjugator", word_json(g.canonical_word(c.conjugator))},
              {"conjugate", word_json(g.canonical_word(c.conjugate))},
              {"support", set_json(c.support)},
              {"essential_part", set_json(essential_part(g.diagram(), c.support))},
              {"searched", c.searched}};
}

}  // namespace km::report

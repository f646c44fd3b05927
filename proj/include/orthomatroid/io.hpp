// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "orthomatroid/axioms.hpp"
#include "orthomatroid/components.hpp"
#include "orthomatroid/error.hpp"
#include "orthomatroid/lattice.hpp"
#include "orthomatroid/laws.hpp"
#include "orthomatroid/orthoset.hpp"
#include "orthomatroid/roundtrip.hpp"

namespace orthomatroid {

// Writers use ordered_json so keys appear in a fixed, documented order.
using Json = nlohmann::ordered_json;

/// Indented JSON that keeps arrays of scalars, and arrays of such arrays,
/// on one line: pair lists stay readable in large files.
inline void write_json(std::ostream& out, const Json& j, int indent = 0) {
  auto flat = [](const Json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) {
             return e.is_primitive() ||
                    (e.is_array() && std::all_of(e.begin(), e.end(),
                                                 [](const Json& x) { return x.is_primitive(); }));
           });
  };
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out << pad << Json(key).dump() << ": ";
      write_json(out, value, indent + 2);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad;
      write_json(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << "]";
  } else {
    out << j.dump();
  }
}

inline std::string to_pretty_json(const Json& j) {
  std::ostringstream out;
  write_json(out, j);
  return out.str();
}

inline Json subset_to_json(const SubsetMask& s) { return Json(s.elements()); }

inline Json subset_labels_to_json(const Orthoset& m, const SubsetMask& s) {
  Json out = Json::array();
  s.for_each([&](ElementId x) { out.push_back(m.name(x)); });
  return out;
}

/// {"n": 4, "labels": [...], "orthogonal_pairs": [[0,1],[2,3]]}; labels
/// only when present, pairs as (i < j) ascending.
inline Json orthoset_to_json(const Orthoset& m) {
  Json j;
  j["n"] = m.size();
  if (m.has_labels()) j["labels"] = m.labels();
  Json pairs = Json::array();
  for (const auto& [a, b] : m.pairs()) pairs.push_back({a, b});
  j["orthogonal_pairs"] = std::move(pairs);
  return j;
}

inline Orthoset orthoset_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n")) {
      throw Error(ErrorCode::ParseError, "orthoset needs an object with \"n\"");
    }
    const auto n = j.at("n").get<std::size_t>();
    std::vector<ElementPair> pairs;
    if (j.contains("orthogonal_pairs")) {
      for (const auto& p : j.at("orthogonal_pairs")) {
        if (!p.is_array() || p.size() != 2) {
          throw Error(ErrorCode::ParseError, "each orthogonal pair must be [i, j]");
        }
        pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Orthoset::create(n, pairs, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline Orthoset parse_orthoset(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return orthoset_from_json(j);
}

/// {"axiom":"exchange","holds":false,"witness":{"F":[],"x":0,"y":2}}; a
/// labelled orthoset adds the same fields under witness.labels.
inline Json verdict_to_json(const AxiomVerdict& v, const Orthoset* m = nullptr) {
  Json j;
  j["axiom"] = to_string(v.axiom);
  j["holds"] = v.holds;
  if (v.witness) {
    const auto& w = *v.witness;
    Json wj;
    wj["F"] = subset_to_json(w.F);
    wj["x"] = w.x;
    if (w.y) wj["y"] = *w.y;
    if (w.basis) wj["basis"] = subset_to_json(*w.basis);
    if (m != nullptr && m->has_labels()) {
      Json lj;
      lj["F"] = subset_labels_to_json(*m, w.F);
      lj["x"] = m->name(w.x);
      if (w.y) lj["y"] = m->name(*w.y);
      if (w.basis) lj["basis"] = subset_labels_to_json(*m, *w.basis);
      wj["labels"] = std::move(lj);
    }
    j["witness"] = std::move(wj);
  }
  return j;
}

inline Json law_report_to_json(const LawReport& r) {
  Json j;
  j["law"] = to_string(r.law);
  j["holds"] = r.holds;
  j["checked_count"] = r.checked_count;
  j["exhaustive"] = r.exhaustive;
  if (r.witness) {
    Json wj;
    Json sets = Json::array();
    for (const auto& s : r.witness->subsets) sets.push_back(subset_to_json(s));
    wj["subsets"] = std::move(sets);
    wj["elements"] = r.witness->elements;
    j["witness"] = std::move(wj);
  }
  return j;
}

inline Json lattice_verdict_to_json(const OrthoLattice& l, const LatticeVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (!v.holds) {
    j["witness"] = v.witness;
    Json names = Json::array();
    for (NodeId w : v.witness) names.push_back(l.name(w));
    j["witness_names"] = std::move(names);
    if (v.element) j["element"] = *v.element;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline Json propsys_to_json(const OrthoLattice& l, const PropSysReport& r) {
  Json j;
  j["complete"] = lattice_verdict_to_json(l, r.complete);
  j["ortholattice"] = lattice_verdict_to_json(l, r.ortholattice);
  j["orthomodular"] = lattice_verdict_to_json(l, r.orthomodular);
  j["atomistic"] = lattice_verdict_to_json(l, r.atomistic);
  j["atom_covering"] = lattice_verdict_to_json(l, r.atom_covering);
  j["is_propositional_system"] = r.is_propositional_system;
  return j;
}

/// Nodes (sorted element lists for L(M), names otherwise), names, ortho map,
/// Hasse edges, atoms, bottom and top. Loadable by lattice_from_json.
inline Json lattice_to_json(const OrthoLattice& l) {
  Json j;
  Json nodes = Json::array();
  Json names = Json::array();
  for (NodeId i = 0; i < l.size(); ++i) {
    if (l.origin() == OrthoLattice::Origin::Orthoset) {
      nodes.push_back(subset_to_json(l.closed_set(i)));
    } else {
      nodes.push_back(l.name(i));
    }
    names.push_back(l.name(i));
  }
  j["nodes"] = std::move(nodes);
  j["names"] = std::move(names);
  Json ortho = Json::array();
  for (NodeId i = 0; i < l.size(); ++i) ortho.push_back(l.ortho(i));
  j["ortho"] = std::move(ortho);
  Json hasse = Json::array();
  for (const auto& [a, b] : l.hasse_edges()) hasse.push_back({a, b});
  j["hasse"] = std::move(hasse);
  j["atoms"] = l.atoms();
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  return j;
}

/// {"nodes": [...], "leq_pairs": [[i,j],...], "ortho": [k,...]}. String
/// nodes name themselves, other values are named by their JSON text.
/// "hasse" edges are accepted in place of, or in addition to, "leq_pairs".
inline OrthoLattice lattice_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("ortho")) {
      throw Error(ErrorCode::ParseError, "lattice needs \"nodes\" and \"ortho\"");
    }
    std::vector<std::string> names;
    const bool named = j.contains("names") && j.at("names").size() == j.at("nodes").size();
    for (std::size_t i = 0; i < j.at("nodes").size(); ++i) {
      const auto& node = j.at("nodes")[i];
      if (named) {
        names.push_back(j.at("names")[i].get<std::string>());
      } else {
        names.push_back(node.is_string() ? node.get<std::string>() : node.dump());
      }
    }
    std::vector<std::pair<NodeId, NodeId>> leq;
    for (const char* key : {"leq_pairs", "hasse"}) {
      if (!j.contains(key)) continue;
      for (const auto& p : j.at(key)) {
        if (!p.is_array() || p.size() != 2) {
          throw Error(ErrorCode::ParseError, std::string(key) + " entries must be [i, j]");
        }
        leq.emplace_back(p[0].get<NodeId>(), p[1].get<NodeId>());
      }
    }
    auto ortho = j.at("ortho").get<std::vector<NodeId>>();
    return OrthoLattice::from_order(std::move(names), leq, std::move(ortho));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline bool looks_like_lattice(const nlohmann::json& j) {
  return j.is_object() && j.contains("nodes") && j.contains("ortho");
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Hasse diagram, bottom at the bottom. Atoms are filled; each ortho pair
/// {P, P^⊥} with P ≠ P^⊥ is joined by a dashed, non-ranking edge.
inline std::string lattice_to_dot(const OrthoLattice& l) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"Helvetica\"];\n";
  std::vector<bool> is_atom(l.size(), false);
  for (NodeId a : l.atoms()) is_atom[a] = true;
  for (NodeId i = 0; i < l.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(l.name(i)) << "\"";
    if (is_atom[i]) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (const auto& [a, b] : l.hasse_edges()) {
    out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  }
  for (NodeId i = 0; i < l.size(); ++i) {
    const NodeId o = l.ortho(i);
    if (i < o) {
      out << "  n" << i << " -> n" << o
          << " [style=dashed, color=gray, dir=none, constraint=false, label=\"ortho\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

inline Json partition_to_json(const Orthoset& m, const ComponentPartition& p,
                              const std::vector<std::size_t>& ranks) {
  Json j;
  Json blocks = Json::array();
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    Json bj;
    bj["elements"] = subset_to_json(p.blocks[b]);
    if (m.has_labels()) bj["labels"] = subset_labels_to_json(m, p.blocks[b]);
    bj["size"] = p.blocks[b].count();
    if (b < ranks.size()) bj["rank"] = ranks[b];
    blocks.push_back(std::move(bj));
  }
  j["components"] = p.blocks.size();
  j["blocks"] = std::move(blocks);
  j["index"] = p.index;
  return j;
}

}  // namespace orthomatroid

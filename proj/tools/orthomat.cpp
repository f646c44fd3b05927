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

// orthomat: command-line front end for the orthomatroid library.
//
// Exit codes: 0 success / property holds, 1 a checked property fails,
// 2 usage or input error.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orthomatroid/orthomatroid.hpp"

namespace om = orthomatroid;

namespace {

enum class Format { Json, Dot, Text };

struct RunConfig {
  std::uint64_t exhaustive_limit = om::kDefaultExhaustiveLimit;
  std::size_t node_budget = om::kDefaultNodeBudget;
  std::optional<Format> format;
  std::uint64_t seed = om::kDefaultSeed;
  bool drop_isotropic = false;
};

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

int exit_code_for(om::ErrorCode code) {
  switch (code) {
    case om::ErrorCode::NotOrthomatroid:
    case om::ErrorCode::NotSimple:
    case om::ErrorCode::NotPropositionalSystem:
    case om::ErrorCode::NotTransitive:
      return kExitFails;
    default:
      return kExitUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw om::Error(om::ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw om::Error(om::ErrorCode::ParseError, path + ": " + e.what());
  }
}

om::Orthoset load_orthoset(const std::string& path) {
  return om::orthoset_from_json(read_json(path));
}

/// "0,2,a1" -> subset; numbers are indices, anything else must be a label.
om::SubsetMask parse_subset(const om::Orthoset& m, const std::string& text) {
  om::SubsetMask s(m.size());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    if (std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      s.insert(std::stoull(item));
      continue;
    }
    const auto& labels = m.labels();
    const auto it = std::find(labels.begin(), labels.end(), item);
    if (it == labels.end()) {
      throw om::Error(om::ErrorCode::ParseError, "unknown element '" + item + "'");
    }
    s.insert(static_cast<om::ElementId>(it - labels.begin()));
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string element_text(const om::Orthoset& m, om::ElementId x) {
  std::string s = std::to_string(x);
  if (m.has_labels()) s += " (" + m.name(x) + ")";
  return s;
}

std::string subset_text(const om::Orthoset& m, const om::SubsetMask& f) {
  std::string s = f.to_string();
  if (m.has_labels()) s += " (" + om::format_subset(m, f) + ")";
  return s;
}

std::string verdict_text(const om::Orthoset& m, const om::AxiomVerdict& v) {
  std::string s = std::string(om::to_string(v.axiom)) + ": ";
  if (v.holds) {
    return s + "holds (" + std::to_string(v.closed_sets_checked) + " closed sets checked)";
  }
  const auto& w = *v.witness;
  s += "FAILS; F = " + subset_text(m, w.F) + ", x = " + element_text(m, w.x);
  if (w.y) s += ", y = " + element_text(m, *w.y);
  if (w.basis) s += ", maximal orthoindependent J = " + subset_text(m, *w.basis);
  return s;
}

void emit_json(const om::Json& j) { std::cout << om::to_pretty_json(j) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_check(const RunConfig& cfg, const std::string& path) {
  const om::Orthoset m = load_orthoset(path);
  const auto closed = om::enumerate_closed_sets(m, cfg.node_budget);
  const auto relation = om::check_relation_laws(m);
  const auto exchange = om::check_exchange(m, closed);
  const auto straightening = om::check_straightening(m, closed);
  const auto orthobasis = om::check_orthobasis_axiom(m, closed);
  const bool orthomatroid = exchange.holds && straightening.holds;
  const bool simple = om::is_simple(m);

  std::optional<std::size_t> rank;
  std::optional<om::PropSysReport> propsys;
  std::optional<om::OrthoLattice> lattice;
  std::optional<bool> irreducible;
  if (orthomatroid) {
    const auto certified = om::Orthomatroid::certify(m, cfg.node_budget);
    rank = om::rank(certified, m.ground_set()).value;
    lattice = om::build_lattice(m, cfg.node_budget);
    propsys = om::is_propositional_system(*lattice, &m);
    if (simple) irreducible = om::is_irreducible(certified);
  }

  if (cfg.format.value_or(Format::Text) == Format::Json) {
    om::Json j;
    om::Json validity;
    validity["valid"] = om::all_hold(relation);
    validity["n"] = m.size();
    validity["orthogonal_pairs"] = m.pairs().size();
    j["orthoset"] = std::move(validity);
    j["closed_sets"] = closed.size();
    j["exchange"] = om::verdict_to_json(exchange, &m);
    j["straightening"] = om::verdict_to_json(straightening, &m);
    j["orthobasis"] = om::verdict_to_json(orthobasis, &m);
    j["orthomatroid"] = orthomatroid;
    j["simple"] = simple;
    if (rank) j["rank"] = *rank;
    if (irreducible) j["irreducible"] = *irreducible;
    if (propsys) j["propositional_system"] = om::propsys_to_json(*lattice, *propsys);
    emit_json(j);
  } else {
    std::cout << "orthoset: " << (om::all_hold(relation) ? "valid" : "INVALID") << " (n = "
              << m.size() << ", " << m.pairs().size() << " orthogonal pairs, " << closed.size()
              << " closed sets)\n";
    std::cout << verdict_text(m, exchange) << "\n";
    std::cout << verdict_text(m, straightening) << "\n";
    std::cout << verdict_text(m, orthobasis) << "\n";
    if (propsys) {
      std::cout << "propositional system: " << yes_no(propsys->is_propositional_system);
      if (!propsys->is_propositional_system) std::cout << " (" << propsys->first_failure() << " fails)";
      std::cout << "\n";
    }
    std::cout << "orthomatroid: " << yes_no(orthomatroid) << "; simple: " << yes_no(simple);
    if (rank) std::cout << "; rank: " << *rank;
    if (orthomatroid) {
      std::cout << "; irreducible: " << (irreducible ? yes_no(*irreducible) : "n/a (simplify first)");
    }
    std::cout << "\n";
  }
  return orthomatroid ? kExitHolds : kExitFails;
}

int cmd_laws(const RunConfig& cfg, const std::string& path) {
  const om::Orthoset m = load_orthoset(path);
  om::LawCheckOptions options;
  options.exhaustive_limit = cfg.exhaustive_limit;
  options.seed = cfg.seed;
  std::vector<om::LawReport> reports = om::check_relation_laws(m);
  for (auto& r : om::check_galois(m, options)) reports.push_back(std::move(r));
  for (auto& r : om::check_closure_laws(m, options)) reports.push_back(std::move(r));
  if (cfg.format.value_or(Format::Text) == Format::Json) {
    om::Json j = om::Json::array();
    for (const auto& r : reports) j.push_back(om::law_report_to_json(r));
    emit_json(j);
  } else {
    for (const auto& r : reports) {
      std::cout << om::to_string(r.law) << ": " << (r.holds ? "holds" : "FAILS") << " ("
                << r.checked_count << (r.exhaustive ? " exhaustive" : " sampled") << ")";
      if (r.witness) {
        for (const auto& s : r.witness->subsets) std::cout << " " << subset_text(m, s);
        for (auto x : r.witness->elements) std::cout << " " << element_text(m, x);
      }
      std::cout << "\n";
    }
  }
  return om::all_hold(reports) ? kExitHolds : kExitFails;
}

void print_lattice_text(const om::OrthoLattice& l) {
  std::cout << l.size() << " nodes, " << l.atoms().size() << " atoms, height " << l.height()
            << "\n";
  for (om::NodeId i = 0; i < l.size(); ++i) {
    std::cout << "n" << i << " " << l.name(i) << " ortho=n" << l.ortho(i) << " covers=[";
    for (std::size_t k = 0; k < l.covers(i).size(); ++k) {
      std::cout << (k ? "," : "") << "n" << l.covers(i)[k];
    }
    std::cout << "]\n";
  }
}

om::OrthoLattice load_lattice(const RunConfig& cfg, const std::string& path) {
  const auto j = read_json(path);
  if (om::looks_like_lattice(j)) return om::lattice_from_json(j);
  return om::build_lattice(om::orthoset_from_json(j), cfg.node_budget);
}

int cmd_lattice(const RunConfig& cfg, const std::string& path) {
  const om::OrthoLattice l = load_lattice(cfg, path);
  switch (cfg.format.value_or(Format::Json)) {
    case Format::Json: emit_json(om::lattice_to_json(l)); break;
    case Format::Dot: std::cout << om::lattice_to_dot(l); break;
    case Format::Text: print_lattice_text(l); break;
  }
  return kExitHolds;
}

int cmd_propsys(const RunConfig& cfg, const std::string& path) {
  const om::OrthoLattice l = load_lattice(cfg, path);
  const auto report = om::is_propositional_system(l);
  if (cfg.format.value_or(Format::Text) == Format::Json) {
    emit_json(om::propsys_to_json(l, report));
  } else {
    auto line = [&](const char* name, const om::LatticeVerdict& v) {
      std::cout << name << ": " << (v.holds ? "holds" : "FAILS");
      if (!v.holds) {
        std::cout << "; witness";
        for (auto w : v.witness) std::cout << " " << l.name(w);
        if (v.element) std::cout << " element " << *v.element;
      }
      if (!v.note.empty()) std::cout << " (" << v.note << ")";
      std::cout << "\n";
    };
    line("complete", report.complete);
    line("ortholattice", report.ortholattice);
    line("orthomodular", report.orthomodular);
    line("atomistic", report.atomistic);
    line("atom_covering", report.atom_covering);
    std::cout << "propositional system: " << yes_no(report.is_propositional_system) << "\n";
  }
  return report.is_propositional_system ? kExitHolds : kExitFails;
}

int cmd_basis(const RunConfig& cfg, const std::string& path, const std::string& span_text,
              const std::string& start_text) {
  const om::Orthoset m = load_orthoset(path);
  const auto span = parse_subset(m, span_text);
  const auto start = parse_subset(m, start_text);
  const auto certified = om::Orthomatroid::certify(m, cfg.node_budget);
  const om::Orthobasis b = om::complete_orthobasis(certified, span, start);
  if (cfg.format.value_or(Format::Text) == Format::Json) {
    om::Json j;
    j["basis"] = om::subset_to_json(b.elements);
    j["spans"] = om::subset_to_json(b.spans.mask());
    if (m.has_labels()) j["labels"] = om::subset_labels_to_json(m, b.elements);
    emit_json(j);
  } else {
    std::cout << "B = " << b.elements.to_string() << "\n";
    if (m.has_labels()) std::cout << "labels: " << om::format_subset(m, b.elements) << "\n";
    std::cout << "spans: " << subset_text(m, b.spans.mask()) << "\n";
  }
  return kExitHolds;
}

int cmd_rank(const RunConfig& cfg, const std::string& path, const std::optional<std::string>& span_text) {
  const om::Orthoset m = load_orthoset(path);
  const auto span = span_text ? parse_subset(m, *span_text) : m.ground_set();
  const auto r = om::rank(om::Orthomatroid::certify(m, cfg.node_budget), span);
  if (cfg.format.value_or(Format::Text) == Format::Json) {
    om::Json j;
    j["span"] = om::subset_to_json(span);
    j["rank"] = r.value;
    emit_json(j);
  } else {
    std::cout << "rank: " << r.value << "\n";
  }
  return kExitHolds;
}

int cmd_components(const RunConfig& cfg, const std::string& path) {
  const om::Orthoset m = load_orthoset(path);
  if (!om::is_simple(m)) {
    throw om::Error(om::ErrorCode::NotSimple, "orthoset is not simple; run `simplify` first");
  }
  const auto certified = om::Orthomatroid::certify(m, cfg.node_budget);
  const auto partition = om::components(certified);
  std::vector<std::size_t> ranks;
  for (const auto& block : partition.blocks) {
    const auto sub = om::restrict_to(m, block);
    ranks.push_back(om::rank(om::Orthomatroid::certify(sub.orthoset, cfg.node_budget),
                             sub.orthoset.ground_set())
                        .value);
  }
  if (cfg.format.value_or(Format::Text) == Format::Json) {
    emit_json(om::partition_to_json(m, partition, ranks));
  } else {
    const std::size_t k = partition.blocks.size();
    std::cout << k << (k == 1 ? " component" : " components");
    for (std::size_t b = 0; b < k; ++b) {
      std::cout << (b ? "; " : ", ") << "size " << partition.blocks[b].count() << ", rank "
                << ranks[b];
    }
    std::cout << "\n";
  }
  return kExitHolds;
}

int cmd_simplify(const RunConfig& cfg, const std::string& path) {
  const om::Orthoset m = load_orthoset(path);
  const auto s = om::simplify(om::Orthomatroid::certify(m, cfg.node_budget), cfg.node_budget);
  if (cfg.format.value_or(Format::Json) == Format::Text) {
    std::cout << s.orthoset.size() << " elements, " << s.orthoset.pairs().size()
              << " orthogonal pairs; quotient map:";
    for (om::ElementId x = 0; x < m.size(); ++x) {
      std::cout << " " << m.name(x) << "->" << s.orthoset.name(s.quotient_map[x]);
    }
    std::cout << "\n";
  } else {
    om::Json j;
    j["orthoset"] = om::orthoset_to_json(s.orthoset);
    j["quotient_map"] = s.quotient_map;
    emit_json(j);
  }
  return kExitHolds;
}

int cmd_iso(const RunConfig& cfg, const std::string& a_path, const std::string& b_path) {
  const auto ja = read_json(a_path);
  const auto jb = read_json(b_path);
  std::optional<std::vector<std::size_t>> mapping;
  std::string reason;
  if (om::looks_like_lattice(ja) || om::looks_like_lattice(jb)) {
    const auto la = load_lattice(cfg, a_path);
    const auto lb = load_lattice(cfg, b_path);
    auto r = om::lattice_isomorphism_search(la, lb);
    if (r.iso) mapping = r.iso->mapping;
    reason = r.distinguishing_invariant;
  } else {
    auto r = om::ortho_isomorphism_search(om::orthoset_from_json(ja), om::orthoset_from_json(jb));
    if (r.iso) mapping = r.iso->mapping;
    reason = r.distinguishing_invariant;
  }
  if (cfg.format.value_or(Format::Text) == Format::Json) {
    om::Json j;
    j["isomorphic"] = mapping.has_value();
    if (mapping) {
      j["mapping"] = *mapping;
    } else {
      j["distinguishing_invariant"] = reason;
    }
    emit_json(j);
  } else if (mapping) {
    std::cout << om::Json(*mapping).dump() << "\n";
  } else {
    std::cout << "NOT ISOMORPHIC: " << reason << "\n";
  }
  return mapping ? kExitHolds : kExitFails;
}

om::FormKind parse_form(const std::string& s) {
  if (s == "euclidean") return om::FormKind::Euclidean;
  if (s == "hermitian") return om::FormKind::Hermitian;
  throw om::Error(om::ErrorCode::InvalidArgument, "unknown form '" + s + "'");
}

int cmd_gen_rays(const RunConfig& cfg, const std::string& path, const std::string& form,
                 std::size_t negative_terms) {
  std::ifstream in(path);
  if (!in) throw om::Error(om::ErrorCode::ParseError, "cannot open " + path);
  const auto vectors = om::parse_ray_file(in);
  if (vectors.empty()) throw om::Error(om::ErrorCode::ParseError, path + " has no vectors");
  om::FormSpec form_spec{parse_form(form), vectors.front().size(), negative_terms};
  const auto system = om::from_rays(vectors, form_spec, cfg.drop_isotropic);
  emit_json(om::orthoset_to_json(system.orthoset));
  return kExitHolds;
}

int cmd_gen_enum(std::size_t n, bool up_to_iso, std::size_t bound) {
  om::EnumerationOptions options;
  options.up_to_isomorphism = up_to_iso;
  options.bound = bound;
  om::Json j = om::Json::array();
  for (const auto& m : om::enumerate_orthomatroids(n, options)) j.push_back(om::orthoset_to_json(m));
  emit_json(j);
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthomat: orthosets, orthomatroids and their lattices of closed sets"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format_text;
  app.add_option("--exhaustive-limit", cfg.exhaustive_limit,
                 "largest instance count checked exhaustively by law checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-budget", cfg.node_budget, "maximum number of closed sets")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format_text, "output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--seed", cfg.seed, "seed for sampled law checks");
  app.add_flag("--drop-isotropic", cfg.drop_isotropic, "skip isotropic rays instead of failing");

  std::string file, file2, span_text, start_text, form = "euclidean";
  std::optional<std::string> rank_span;
  std::size_t count = 0, seed_arg = 0, negative_terms = 0, bound = om::kDefaultEnumerationBound;
  double density = 0.0;
  bool up_to_iso = false;

  auto* check = app.add_subcommand("check", "verify orthoset, exchange, straightening and orthobasis axioms");
  check->add_option("file", file, "orthoset JSON")->required();
  auto* laws = app.add_subcommand("laws", "check the Galois-connection and closure-operator laws");
  laws->add_option("file", file, "orthoset JSON")->required();
  auto* lattice = app.add_subcommand("lattice", "build and export the lattice of closed sets");
  lattice->add_option("file", file, "orthoset or lattice JSON")->required();
  auto* propsys = app.add_subcommand("propsys", "check whether a lattice is a propositional system");
  propsys->add_option("file", file, "orthoset or lattice JSON")->required();
  auto* basis = app.add_subcommand("basis", "complete an orthoindependent set to an orthobasis");
  basis->add_option("file", file, "orthoset JSON")->required();
  basis->add_option("--span", span_text, "elements whose closure is spanned")->required();
  basis->add_option("--start", start_text, "orthoindependent starting set")->required();
  auto* rank = app.add_subcommand("rank", "rank of the closure of a subset (default: all)");
  rank->add_option("file", file, "orthoset JSON")->required();
  rank->add_option("--span", rank_span, "elements whose closure is measured");
  auto* comps = app.add_subcommand("components", "irreducible components of a simple orthomatroid");
  comps->add_option("file", file, "orthoset JSON")->required();
  auto* simp = app.add_subcommand("simplify", "simplification O(L(M)) with quotient map");
  simp->add_option("file", file, "orthoset JSON")->required();
  auto* iso = app.add_subcommand("iso", "orthoisomorphism (or lattice isomorphism) test");
  iso->add_option("first", file, "orthoset or lattice JSON")->required();
  iso->add_option("second", file2, "orthoset or lattice JSON")->required();

  auto* gen = app.add_subcommand("gen", "generate orthoset instances as JSON");
  gen->require_subcommand(1);
  auto* gen_discrete = gen->add_subcommand("discrete", "all pairs orthogonal");
  gen_discrete->add_option("N", count)->required();
  auto* gen_mo = gen->add_subcommand("mo", "MO_N: N orthogonal pairs");
  gen_mo->add_option("N", count)->required()->check(CLI::PositiveNumber);
  auto* gen_rays = gen->add_subcommand("rays", "rays of an exact inner-product space");
  gen_rays->add_option("file", file, "one vector per line")->required();
  gen_rays->add_option("--form", form, "euclidean or hermitian")
      ->check(CLI::IsMember({"euclidean", "hermitian"}));
  gen_rays->add_option("--negative-terms", negative_terms,
                       "trailing coordinates with coefficient -1 in the form");
  auto* gen_random = gen->add_subcommand("random", "random orthoset");
  gen_random->add_option("N", count)->required();
  gen_random->add_option("DENSITY", density)->required()->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("SEED", seed_arg)->required();
  auto* gen_enum = gen->add_subcommand("enum", "all orthomatroids on N labelled elements");
  gen_enum->add_option("N", count)->required();
  gen_enum->add_flag("--up-to-iso", up_to_iso, "one representative per orthoisomorphism class");
  gen_enum->add_option("--bound", bound, "largest N accepted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kExitUsage;
  }

  if (format_text == "json") cfg.format = Format::Json;
  if (format_text == "dot") cfg.format = Format::Dot;
  if (format_text == "text") cfg.format = Format::Text;

  try {
    if (*check) return cmd_check(cfg, file);
    if (*laws) return cmd_laws(cfg, file);
    if (*lattice) return cmd_lattice(cfg, file);
    if (*propsys) return cmd_propsys(cfg, file);
    if (*basis) return cmd_basis(cfg, file, span_text, start_text);
    if (*rank) return cmd_rank(cfg, file, rank_span);
    if (*comps) return cmd_components(cfg, file);
    if (*simp) return cmd_simplify(cfg, file);
    if (*iso) return cmd_iso(cfg, file, file2);
    if (*gen_discrete) return (emit_json(om::orthoset_to_json(om::discrete(count))), kExitHolds);
    if (*gen_mo) return (emit_json(om::orthoset_to_json(om::mo(count))), kExitHolds);
    if (*gen_rays) return cmd_gen_rays(cfg, file, form, negative_terms);
    if (*gen_random) {
      emit_json(om::orthoset_to_json(om::random_orthoset(count, density, seed_arg)));
      return kExitHolds;
    }
    if (*gen_enum) return cmd_gen_enum(count, up_to_iso, bound);
  } catch (const om::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

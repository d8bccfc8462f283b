#include "shtop/report.hpp"

#include <sstream>

#include "json.hpp"
#include "shtop/nerve.hpp"
#include "shtop/strong.hpp"
#include "shtop/symmetry.hpp"

namespace shtop {

namespace {

nlohmann::json tri_json(Tri t) {
  if (t == Tri::Unknown) return "unknown";
  return t == Tri::True;
}

std::string tri_text(Tri t) {
  if (t == Tri::Unknown) return "unknown";
  return t == Tri::True ? "true" : "false";
}

nlohmann::json level_json(const CollapseLevel& l) {
  switch (l.kind) {
    case CollapseLevel::Kind::Level:
      return l.value;
    case CollapseLevel::Kind::Evasive:
      return "evasive";
    default:
      return "unknown";
  }
}

std::string level_text(const CollapseLevel& l) {
  switch (l.kind) {
    case CollapseLevel::Kind::Level:
      return std::to_string(l.value);
    case CollapseLevel::Kind::Evasive:
      return "evasive";
    default:
      return "unknown";
  }
}

}  // namespace

AnalysisReport analyze_complex(const SimplicialComplex& K, bool deep, const SearchLimits& lim) {
  AnalysisReport r;
  r.kind = "complex";
  r.n_vertices = K.n;
  r.n_facets = (int)K.facets.size();
  r.minimal = is_minimal(K);
  CoreResult c = core(K);
  r.core_vertices = c.complex.n;
  r.core_facets = (int)c.complex.facets.size();
  r.strong_collapsible = c.complex.n == 1;
  r.core_trace = std::move(c.trace);
  for (const auto& entry : nerve_tower(K, 64, lim))
    r.nerve_tower_sizes.push_back({entry.n, (int)entry.facets.size()});
  try {
    AutomorphismGroup G = automorphisms(K, lim);
    r.aut_order = (long long)G.order();
    r.vertex_homogeneous = tri_of(K.n == 1 || (int)vertex_orbit(G, 0).size() == K.n);
  } catch (const BudgetExceededError&) {
  }
  r.deep = deep;
  if (deep) {
    r.collapse_level = collapse_level(K, lim);
    CollapseSearchResult cs = is_collapsible(K, lim);
    r.collapsible = cs.verdict;
    r.collapse_trace = std::move(cs.trace);
    r.non_evasive_verdict = non_evasive(K, lim);
  }
  return r;
}

AnalysisReport analyze_poset(const FinitePoset& X, bool deep, const SearchLimits& lim) {
  AnalysisReport r;
  r.kind = "poset";
  r.n_vertices = X.n;
  int covers = 0;
  for (int x = 0; x < X.n; ++x) covers += (int)covers_up(X, x).size();
  r.n_facets = covers;
  r.minimal = beat_points(X).empty();
  PosetCoreResult c = poset_core(X);
  r.core_vertices = c.core.n;
  r.core_facets = 0;
  for (int x = 0; x < c.core.n; ++x) r.core_facets += (int)covers_up(c.core, x).size();
  r.strong_collapsible = c.core.n == 1;
  r.core_trace = std::move(c.trace);
  r.deep = deep;
  if (deep) {
    PosetCollapseResult pc = poset_collapses_to_point(X, lim);
    r.collapsible = pc.verdict;
    r.collapse_trace = std::move(pc.trace);
    r.non_evasive_verdict = poset_non_evasive(X, lim);
  }
  return r;
}

void assert_report_consistent(const AnalysisReport& r) {
  if (r.deep && r.kind == "complex") {
    if (r.strong_collapsible && r.collapse_level.kind == CollapseLevel::Kind::Level &&
        r.collapse_level.value != 0)
      throw Error("strong collapsibility must put the collapse level at zero");
    if (r.strong_collapsible && r.collapse_level.kind == CollapseLevel::Kind::Evasive)
      throw Error("a strong collapsible complex cannot be evasive");
    if (r.collapse_level.kind == CollapseLevel::Kind::Level &&
        r.non_evasive_verdict == Tri::False)
      throw Error("a finite collapse level contradicts an evasive verdict");
    if (r.non_evasive_verdict == Tri::True && r.collapsible == Tri::False)
      throw Error("a non-evasive complex cannot be incollapsible");
  }
  if (r.deep && r.kind == "poset") {
    if (r.strong_collapsible && r.collapsible == Tri::False)
      throw Error("a contractible poset cannot be incollapsible");
    if (r.collapsible == Tri::True && r.non_evasive_verdict == Tri::False)
      throw Error("a collapsible poset cannot be evasive");
  }
}

bool report_budget_starved(const AnalysisReport& r) {
  bool complex = r.kind == "complex";
  if (complex && r.aut_order < 0) return true;
  if (!r.deep) return false;
  if (complex && r.collapse_level.kind == CollapseLevel::Kind::Unknown) return true;
  return r.collapsible == Tri::Unknown || r.non_evasive_verdict == Tri::Unknown;
}

std::string report_json_string(const AnalysisReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["object_id"] = r.object_id;
  j["kind"] = r.kind;
  bool complex = r.kind == "complex";
  j[complex ? "n_vertices" : "n_elements"] = r.n_vertices;
  j[complex ? "n_facets" : "n_covers"] = r.n_facets;
  j["minimal"] = r.minimal;
  if (complex) {
    j["core"] = {{"vertices", r.core_vertices}, {"facets", r.core_facets}};
    j["strong_collapsible"] = r.strong_collapsible;
    auto tower = nlohmann::json::array();
    for (auto [v, f] : r.nerve_tower_sizes) tower.push_back({v, f});
    j["nerve_tower"] = tower;
    if (r.aut_order >= 0) {
      j["vertex_homogeneous"] = tri_json(r.vertex_homogeneous);
      j["aut_order"] = r.aut_order;
    } else {
      j["vertex_homogeneous"] = "unknown";
      j["aut_order"] = "unknown";
    }
  } else {
    j["core"] = {{"elements", r.core_vertices}, {"covers", r.core_facets}};
    j["contractible"] = r.strong_collapsible;
  }
  if (r.deep) {
    if (complex) j["collapse_level"] = level_json(r.collapse_level);
    j["collapsible"] = tri_json(r.collapsible);
    j["non_evasive"] = tri_json(r.non_evasive_verdict);
  }
  j["traces"] = r.traces;
  return j.dump(2);
}

std::string report_text_string(const AnalysisReport& r) {
  std::ostringstream os;
  bool complex = r.kind == "complex";
  os << "object: " << r.object_id << "\n";
  os << "kind: " << r.kind << "\n";
  os << (complex ? "vertices: " : "elements: ") << r.n_vertices << "\n";
  os << (complex ? "facets: " : "covers: ") << r.n_facets << "\n";
  os << "minimal: " << (r.minimal ? "true" : "false") << "\n";
  os << "core: " << r.core_vertices << (complex ? " vertices, " : " elements, ") << r.core_facets
     << (complex ? " facets" : " covers") << "\n";
  os << (complex ? "strong_collapsible: " : "contractible: ")
     << (r.strong_collapsible ? "true" : "false") << "\n";
  if (complex) {
    os << "nerve_tower:";
    for (auto [v, f] : r.nerve_tower_sizes) os << " " << v << "/" << f;
    os << "\n";
    if (r.aut_order >= 0) {
      os << "vertex_homogeneous: " << tri_text(r.vertex_homogeneous) << "\n";
      os << "aut_order: " << r.aut_order << "\n";
    } else {
      os << "vertex_homogeneous: unknown\naut_order: unknown\n";
    }
  }
  if (r.deep) {
    if (complex) os << "collapse_level: " << level_text(r.collapse_level) << "\n";
    os << "collapsible: " << tri_text(r.collapsible) << "\n";
    os << "non_evasive: " << tri_text(r.non_evasive_verdict) << "\n";
  }
  for (const auto& t : r.traces) os << "trace: " << t << "\n";
  return os.str();
}

}  // namespace shtop

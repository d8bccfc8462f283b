#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shtop/base.hpp"
#include "shtop/collapse.hpp"
#include "shtop/complex.hpp"
#include "shtop/poset.hpp"
#include "shtop/trace.hpp"

namespace shtop {

// Classification record behind `analyze`. Expensive verdicts stay at their
// defaults unless deep is set; Unknown is reported as "unknown", never false.
struct AnalysisReport {
  std::string object_id;
  std::string kind;  // "complex" or "poset"
  int n_vertices = 0;
  int n_facets = 0;  // cover-relation count for posets
  bool minimal = false;
  int core_vertices = 0;
  int core_facets = 0;
  bool strong_collapsible = false;  // contractibility for posets
  std::vector<std::pair<int, int>> nerve_tower_sizes;
  bool deep = false;
  CollapseLevel collapse_level = CollapseLevel::unknown();
  Tri collapsible = Tri::Unknown;
  Tri non_evasive_verdict = Tri::Unknown;
  Tri vertex_homogeneous = Tri::Unknown;
  long long aut_order = -1;  // -1 when not computed
  std::vector<std::string> traces;

  MoveTrace core_trace;
  std::optional<MoveTrace> collapse_trace;
};

AnalysisReport analyze_complex(const SimplicialComplex& K, bool deep, const SearchLimits& lim = {});
AnalysisReport analyze_poset(const FinitePoset& X, bool deep, const SearchLimits& lim = {});

// Throws when the graded verdicts contradict each other; Unknown never
// participates in a check.
void assert_report_consistent(const AnalysisReport& r);

bool report_budget_starved(const AnalysisReport& r);

std::string report_json_string(const AnalysisReport& r);
std::string report_text_string(const AnalysisReport& r);

}  // namespace shtop

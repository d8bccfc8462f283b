#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shtop/canonical.hpp"
#include "shtop/collapse.hpp"
#include "shtop/functors.hpp"
#include "shtop/io.hpp"
#include "shtop/nerve.hpp"
#include "shtop/report.hpp"
#include "shtop/strong.hpp"
#include "shtop/symmetry.hpp"
#include "shtop/workbench.hpp"

namespace fs = std::filesystem;
using namespace shtop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidTrace = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  bool deep = false;
  long long budget = 1'000'000;
  uint64_t seed = 0;
  std::string out_dir = ".";
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_flag("--deep", o.deep, "also run the collapse-level searches");
  cmd->add_option("--budget", o.budget, "search node budget");
  cmd->add_option("--seed", o.seed, "generator seed");
  cmd->add_option("--out", o.out_dir, "output directory for emitted files");
  cmd->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

SearchLimits limits_of(const CommonOpts& o) { return {o.budget}; }

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string content_hash(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

bool has_ext(const std::string& path, const std::string& ext) {
  return fs::path(path).extension() == ext;
}

std::string out_path(const CommonOpts& o, const std::string& in_path, const std::string& tag,
                     const std::string& ext) {
  fs::create_directories(o.out_dir);
  return (fs::path(o.out_dir) / (fs::path(in_path).stem().string() + "." + tag + ext)).string();
}

TraceObject load_object(const std::string& path) {
  if (has_ext(path, ".scx")) return load_complex(path);
  if (has_ext(path, ".fsp")) return load_poset(path);
  throw ParseError("expected a .scx or .fsp file: " + path);
}

int run_analyze(const std::string& path, const CommonOpts& o) {
  std::string bytes = slurp_file(path);
  AnalysisReport r;
  SearchLimits lim = limits_of(o);
  if (has_ext(path, ".scx"))
    r = analyze_complex(parse_complex(bytes), o.deep, lim);
  else if (has_ext(path, ".fsp"))
    r = analyze_poset(parse_poset(bytes), o.deep, lim);
  else
    throw ParseError("expected a .scx or .fsp file: " + path);
  r.object_id = path + ":" + content_hash(bytes);
  if (!r.core_trace.moves.empty()) {
    std::string p = out_path(o, path, "core", ".trc");
    save_trace(r.core_trace, p);
    r.traces.push_back(p);
  }
  if (r.collapse_trace && !r.collapse_trace->moves.empty()) {
    std::string p = out_path(o, path, "collapse", ".trc");
    save_trace(*r.collapse_trace, p);
    r.traces.push_back(p);
  }
  assert_report_consistent(r);
  std::cout << (o.format == "json" ? report_json_string(r) : report_text_string(r)) << "\n";
  return report_budget_starved(r) ? kExitBudget : kExitOk;
}

int run_compare(const std::string& a, const std::string& b, const CommonOpts& o) {
  SimplicialComplex K = load_complex(a);
  SimplicialComplex L = load_complex(b);
  SearchLimits lim = limits_of(o);
  bool same = same_strong_homotopy_type(K, L, lim);
  int ca = core(K).complex.n, cb = core(L).complex.n;
  if (o.format == "json") {
    nlohmann::json j{{"schema", 1},
                     {"same_strong_homotopy_type", same},
                     {"core_vertices", {ca, cb}}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "same_strong_homotopy_type: " << (same ? "true" : "false") << "\n"
              << "core_vertices: " << ca << " " << cb << "\n";
  }
  return kExitOk;
}

int run_transform(const std::string& path, const std::string& op, const CommonOpts& o) {
  TraceObject obj = load_object(path);
  bool complex = std::holds_alternative<SimplicialComplex>(obj);
  std::vector<std::string> written;

  auto put_complex = [&](const SimplicialComplex& K, const std::string& tag) {
    std::string p = out_path(o, path, tag, ".scx");
    save_complex(K, p);
    written.push_back(p);
  };
  auto put_poset = [&](const FinitePoset& X, const std::string& tag) {
    std::string p = out_path(o, path, tag, ".fsp");
    save_poset(X, p);
    written.push_back(p);
  };
  auto put_trace = [&](const MoveTrace& t, const std::string& tag) {
    std::string p = out_path(o, path, tag, ".trc");
    save_trace(t, p);
    written.push_back(p);
  };

  if (op == "core") {
    if (complex) {
      CoreResult c = core(std::get<SimplicialComplex>(obj));
      put_complex(c.complex, "core");
      put_trace(c.trace, "core");
    } else {
      PosetCoreResult c = poset_core(std::get<FinitePoset>(obj));
      put_poset(c.core, "core");
      put_trace(c.trace, "core");
    }
  } else if (op == "nerve" || op == "nerve2") {
    if (!complex) throw KindMismatchError("nerves act on complexes");
    SimplicialComplex N = nerve(std::get<SimplicialComplex>(obj));
    if (op == "nerve2") N = nerve(N);
    put_complex(N, op);
  } else if (op == "barycentric") {
    if (complex)
      put_complex(barycentric_complex(std::get<SimplicialComplex>(obj)), "barycentric");
    else
      put_poset(barycentric_poset(std::get<FinitePoset>(obj)), "barycentric");
  } else if (op == "face-poset") {
    if (!complex) throw KindMismatchError("face posets act on complexes");
    put_poset(face_poset(std::get<SimplicialComplex>(obj)).poset, "face-poset");
  } else if (op == "order-complex") {
    if (complex) throw KindMismatchError("order complexes act on posets");
    put_complex(order_complex(std::get<FinitePoset>(obj)), "order-complex");
  } else if (op.rfind("multiple:", 0) == 0) {
    if (!complex) throw KindMismatchError("multiples act on complexes");
    int n = std::stoi(op.substr(9));
    put_complex(multiple(std::get<SimplicialComplex>(obj), n), "multiple" + std::to_string(n));
  } else {
    throw Error("unknown transform op: " + op);
  }
  for (const auto& p : written) std::cout << p << "\n";
  return kExitOk;
}

int run_verify(const std::string& start, const std::string& trc, const std::string& end,
               const CommonOpts& o) {
  TraceObject a = load_object(start);
  TraceObject b = load_object(end);
  MoveTrace t = load_trace(trc);
  TraceVerdict v = verify_trace(a, t, b, limits_of(o));
  if (o.format == "json") {
    nlohmann::json j{{"schema", 1}, {"valid", v.ok}};
    if (!v.ok) {
      j["failing_move"] = v.failing_move;
      j["reason"] = v.reason;
    }
    std::cout << j.dump(2) << "\n";
  } else if (v.ok) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid at move " << v.failing_move << ": " << v.reason << "\n";
  }
  if (v.ok) return kExitOk;
  return v.budget_starved ? kExitBudget : kExitInvalidTrace;
}

int run_conjecture_audit(const std::vector<std::string>& paths, const CommonOpts& o) {
  SearchLimits lim = limits_of(o);
  auto rows = nlohmann::json::array();
  int starved = 0;
  for (const auto& path : paths) {
    SimplicialComplex K = load_complex(path);
    nlohmann::json row{{"path", path}};
    bool vh = is_vertex_homogeneous(K, lim);
    row["vertex_homogeneous"] = vh;
    if (vh) {
      Tri ne = non_evasive(K, lim);
      row["non_evasive"] = ne == Tri::Unknown ? nlohmann::json("unknown")
                                              : nlohmann::json(ne == Tri::True);
      if (ne == Tri::Unknown) ++starved;
      if (ne == Tri::True) {
        SimplicialComplex C = vh_core(K, lim);
        row["core_vertices"] = C.n;
        row["core_is_point"] = C.n == 1;
      }
    }
    rows.push_back(row);
  }
  if (o.format == "json") {
    nlohmann::json j{{"schema", 1}, {"instances", rows}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      std::cout << row["path"].get<std::string>()
                << " vertex_homogeneous=" << row["vertex_homogeneous"].dump();
      if (row.contains("non_evasive")) std::cout << " non_evasive=" << row["non_evasive"].dump();
      if (row.contains("core_is_point"))
        std::cout << " core_vertices=" << row["core_vertices"].dump()
                  << " core_is_point=" << row["core_is_point"].dump();
      std::cout << "\n";
    }
  }
  return starved ? kExitBudget : kExitOk;
}

int run_gen(const std::string& kind, const std::string& mode, int max_vertices, int max_facets,
            const std::string& out_file, const CommonOpts& o) {
  GeneratorConfig cfg;
  cfg.seed = o.seed;
  cfg.max_vertices = max_vertices;
  cfg.max_facets = max_facets;
  if (mode == "uniform")
    cfg.mode = GenMode::UniformFacets;
  else if (kind == "complex")
    cfg.mode = GenMode::GrownByDomination;
  else
    cfg.mode = GenMode::GrownByBeatPoints;
  fs::path p = out_file;
  if (auto dir = p.parent_path(); !dir.empty()) fs::create_directories(dir);
  if (kind == "complex")
    save_complex(gen_complex(cfg), out_file);
  else
    save_poset(gen_poset(cfg), out_file);
  std::cout << out_file << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong homotopy toolkit for simplicial complexes and finite posets"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string path_a, path_b, path_c, op;
  std::vector<std::string> paths;
  std::string gen_kind = "complex", gen_mode = "uniform", gen_out = "generated.scx";
  int gen_vertices = 8, gen_facets = 12;

  CLI::App* analyze = app.add_subcommand("analyze", "classify one object");
  analyze->add_option("path", path_a, "input .scx or .fsp")->required();
  add_common(analyze, o);

  CLI::App* compare = app.add_subcommand("compare", "strong homotopy comparison");
  compare->add_option("a", path_a, "first .scx or .fsp")->required();
  compare->add_option("b", path_b, "second .scx or .fsp")->required();
  add_common(compare, o);

  CLI::App* transform = app.add_subcommand("transform", "derive a new object");
  transform->add_option("path", path_a, "input .scx or .fsp")->required();
  transform
      ->add_option("op", op, "core|nerve|nerve2|barycentric|face-poset|order-complex|multiple:n")
      ->required();
  add_common(transform, o);

  CLI::App* verify = app.add_subcommand("verify", "replay a trace certificate");
  verify->add_option("start", path_a, "starting object")->required();
  verify->add_option("trace", path_b, "certificate .trc")->required();
  verify->add_option("end", path_c, "claimed result")->required();
  add_common(verify, o);

  CLI::App* audit = app.add_subcommand("conjecture-audit",
                                       "cores of vertex-homogeneous non-evasive inputs");
  audit->add_option("paths", paths, "input .scx files")->required();
  add_common(audit, o);

  CLI::App* gen = app.add_subcommand("gen", "write a pseudorandom instance");
  gen->add_option("--kind", gen_kind, "complex or poset")->check(CLI::IsMember({"complex", "poset"}));
  gen->add_option("--mode", gen_mode, "uniform or grown")->check(CLI::IsMember({"uniform", "grown"}));
  gen->add_option("--max-vertices", gen_vertices, "vertex cap");
  gen->add_option("--max-facets", gen_facets, "facet cap");
  gen->add_option("--file", gen_out, "output path");
  add_common(gen, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(path_a, o);
    if (*compare) return run_compare(path_a, path_b, o);
    if (*transform) return run_transform(path_a, op, o);
    if (*verify) return run_verify(path_a, path_b, path_c, o);
    if (*audit) return run_conjecture_audit(paths, o);
    if (*gen) return run_gen(gen_kind, gen_mode, gen_vertices, gen_facets, gen_out, o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const AntisymmetryError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidTraceError& e) {
    std::cerr << "invalid trace: " << e.what() << "\n";
    return kExitInvalidTrace;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

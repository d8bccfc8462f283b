#include "shtop/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace shtop {
namespace {

bool valid_token(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

// Comment-stripped, whitespace-split lines, with 1-based numbers for messages.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream is(text);
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back({no, std::move(toks)});
  }
  return out;
}

[[noreturn]] void bad_line(int no, const std::string& what) {
  throw ParseError("line " + std::to_string(no) + ": " + what);
}

int intern(std::vector<std::string>& labels, std::map<std::string, int>& index,
           const std::string& tok) {
  auto it = index.find(tok);
  if (it != index.end()) return it->second;
  int id = (int)labels.size();
  labels.push_back(tok);
  index.emplace(tok, id);
  return id;
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<Simplex> facets;
  for (auto& [no, toks] : tokenize(text)) {
    if (toks[0] != "facet") bad_line(no, "expected 'facet', got '" + toks[0] + "'");
    if (toks.size() < 2) bad_line(no, "facet needs at least one vertex");
    Simplex f;
    std::vector<std::string> seen;
    for (size_t i = 1; i < toks.size(); ++i) {
      if (!valid_token(toks[i])) bad_line(no, "bad token '" + toks[i] + "'");
      if (std::find(seen.begin(), seen.end(), toks[i]) != seen.end())
        bad_line(no, "duplicate vertex '" + toks[i] + "' in facet");
      seen.push_back(toks[i]);
      f.push_back(intern(labels, index, toks[i]));
    }
    facets.push_back(std::move(f));
  }
  if (facets.empty()) throw EmptyComplexError("no facet lines");
  int n = (int)labels.size();
  return make_complex(n, std::move(facets), std::move(labels));
}

std::string render_complex(const SimplicialComplex& K) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : K.facets) {
    std::vector<std::string> toks;
    for (Vertex v : f) toks.push_back(K.labels[v]);
    std::sort(toks.begin(), toks.end());
    rows.push_back(std::move(toks));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "facet";
    for (const auto& t : r) os << " " << t;
    os << "\n";
  }
  return os.str();
}

FinitePoset parse_poset(const std::string& text) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> rels;
  for (auto& [no, toks] : tokenize(text)) {
    if (toks[0] == "point") {
      if (toks.size() != 2) bad_line(no, "point takes one token");
      if (!valid_token(toks[1])) bad_line(no, "bad token '" + toks[1] + "'");
      intern(labels, index, toks[1]);
    } else if (toks[0] == "rel") {
      if (toks.size() != 3) bad_line(no, "rel takes two tokens");
      for (int i : {1, 2})
        if (!valid_token(toks[i])) bad_line(no, "bad token '" + toks[i] + "'");
      if (toks[1] == toks[2]) bad_line(no, "element related to itself");
      rels.push_back({intern(labels, index, toks[1]), intern(labels, index, toks[2])});
    } else {
      bad_line(no, "expected 'point' or 'rel', got '" + toks[0] + "'");
    }
  }
  if (labels.empty()) throw ParseError("no elements");
  int n = (int)labels.size();
  return make_poset(n, rels, std::move(labels));
}

std::string render_poset(const FinitePoset& X) {
  std::vector<std::string> pts = X.labels;
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<std::string, std::string>> rels;
  for (int x = 0; x < X.n; ++x)
    for (int y : covers_up(X, x)) rels.push_back({X.labels[x], X.labels[y]});
  std::sort(rels.begin(), rels.end());
  std::ostringstream os;
  for (const auto& p : pts) os << "point " << p << "\n";
  for (const auto& [a, b] : rels) os << "rel " << a << " " << b << "\n";
  return os.str();
}

MoveTrace parse_trace(const std::string& text) {
  MoveTrace out;
  for (auto& [no, toks] : tokenize(text)) {
    const std::string& op = toks[0];
    auto want_token = [&](const std::string& t) {
      if (!valid_token(t)) bad_line(no, "bad token '" + t + "'");
      return t;
    };
    if (op == "SD") {
      if (toks.size() != 4 || toks[2] != "by") bad_line(no, "expected: SD v by w");
      out.moves.push_back(strong_delete(want_token(toks[1]), want_token(toks[3])));
    } else if (op == "CC") {
      auto bar = std::find(toks.begin(), toks.end(), "|");
      if (bar == toks.end()) bad_line(no, "expected: CC s.. | t..");
      std::vector<std::string> sigma, tau;
      for (auto it = toks.begin() + 1; it != bar; ++it) sigma.push_back(want_token(*it));
      for (auto it = bar + 1; it != toks.end(); ++it) tau.push_back(want_token(*it));
      if (sigma.empty() || tau.empty()) bad_line(no, "empty simplex in collapse");
      out.moves.push_back(free_face_collapse(std::move(sigma), std::move(tau)));
    } else if (op == "NE") {
      if (toks.size() != 4 || toks[2] != "level") bad_line(no, "expected: NE v level k");
      int k;
      try {
        size_t pos = 0;
        k = std::stoi(toks[3], &pos);
        if (pos != toks[3].size() || k < 0) throw std::invalid_argument("");
      } catch (const std::exception&) {
        bad_line(no, "bad level '" + toks[3] + "'");
      }
      out.moves.push_back(ne_delete(want_token(toks[1]), k));
    } else if (op == "BR") {
      if (toks.size() != 3 || (toks[2] != "up" && toks[2] != "down"))
        bad_line(no, "expected: BR x up|down");
      out.moves.push_back(
          beat_remove(want_token(toks[1]), toks[2] == "up" ? BeatDir::Up : BeatDir::Down));
    } else if (op == "WR") {
      if (toks.size() != 2) bad_line(no, "expected: WR x");
      out.moves.push_back(weak_remove(want_token(toks[1])));
    } else {
      bad_line(no, "unknown move '" + op + "'");
    }
  }
  return out;
}

std::string render_trace(const MoveTrace& t) {
  std::ostringstream os;
  for (const auto& m : t.moves) os << to_line(m) << "\n";
  return os.str();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace

SimplicialComplex load_complex(const std::string& path) { return parse_complex(slurp(path)); }
FinitePoset load_poset(const std::string& path) { return parse_poset(slurp(path)); }
MoveTrace load_trace(const std::string& path) { return parse_trace(slurp(path)); }

void save_complex(const SimplicialComplex& K, const std::string& path) {
  spit(path, render_complex(K));
}
void save_poset(const FinitePoset& X, const std::string& path) { spit(path, render_poset(X)); }
void save_trace(const MoveTrace& t, const std::string& path) { spit(path, render_trace(t)); }

}  // namespace shtop

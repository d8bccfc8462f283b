#include "shtop/functors.hpp"

#include <algorithm>

namespace shtop {

FacePosetResult face_poset(const SimplicialComplex& K) {
  FacePosetResult out;
  out.simplices = all_simplices(K);
  const int n = (int)out.simplices.size();
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && out.simplices[i].size() < out.simplices[j].size() &&
          is_face_of(out.simplices[i], out.simplices[j]))
        rels.push_back({i, j});
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : out.simplices) {
    std::string l;
    for (size_t k = 0; k < s.size(); ++k) {
      if (k) l += "_";
      l += K.labels[s[k]];
    }
    labels.push_back(std::move(l));
  }
  out.poset = make_poset(n, rels, std::move(labels));
  return out;
}

SimplicialComplex order_complex(const FinitePoset& X) {
  if (X.n == 0) throw EmptyComplexError("order complex of the empty space");
  std::vector<Simplex> chains;
  std::vector<int> chain;
  // Maximal chains: start at a minimal element, extend along covers.
  auto extend = [&](auto&& self, int x) -> void {
    chain.push_back(x);
    auto ups = covers_up(X, x);
    if (ups.empty()) {
      Simplex s = chain;
      std::sort(s.begin(), s.end());
      chains.push_back(std::move(s));
    } else {
      for (int y : ups) self(self, y);
    }
    chain.pop_back();
  };
  for (int x = 0; x < X.n; ++x)
    if (!X.below[x].any()) extend(extend, x);
  return make_complex(X.n, std::move(chains), X.labels);
}

SimplicialComplex barycentric_complex(const SimplicialComplex& K) {
  return order_complex(face_poset(K).poset);
}

FinitePoset barycentric_poset(const FinitePoset& X) { return face_poset(order_complex(X)).poset; }

PosetMap induced_order_map(const SimplicialMap& f) {
  if (!is_simplicial(f)) throw InvalidMapError("map is not simplicial");
  FacePosetResult A = face_poset(f.source);
  FacePosetResult B = face_poset(f.target);
  auto find = [&](const Simplex& s) {
    auto it = std::lower_bound(B.simplices.begin(), B.simplices.end(), s, simplex_lt);
    if (it == B.simplices.end() || *it != s) throw InvalidMapError("image simplex missing");
    return (int)(it - B.simplices.begin());
  };
  PosetMap out{A.poset, B.poset, {}};
  out.element_map.reserve(A.simplices.size());
  for (const auto& s : A.simplices) out.element_map.push_back(find(map_simplex(f, s)));
  return out;
}

SimplicialMap induced_simplicial_map(const PosetMap& f) {
  if (!is_order_preserving(f)) throw InvalidMapError("map is not order preserving");
  return SimplicialMap{order_complex(f.source), order_complex(f.target), f.element_map};
}

}  // namespace shtop

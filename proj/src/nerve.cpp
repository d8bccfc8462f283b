#include "shtop/nerve.hpp"

#include <algorithm>

#include "shtop/canonical.hpp"

namespace shtop {

SimplicialComplex nerve(const SimplicialComplex& K) {
  const int m = (int)K.facets.size();
  // Star of v, as a set of facet indices.
  std::vector<Bits> stars(K.n, Bits(m));
  for (int i = 0; i < m; ++i)
    for (Vertex v : K.facets[i]) stars[v].set(i);
  std::vector<Simplex> families;
  for (Vertex v = 0; v < K.n; ++v) {
    bool keep = true;
    for (Vertex w = 0; w < K.n && keep; ++w) {
      if (w == v) continue;
      if (stars[v] == stars[w]) {
        if (w < v) keep = false;  // one representative per repeated star
      } else if (stars[v].subset_of(stars[w])) {
        keep = false;
      }
    }
    if (keep) families.push_back(stars[v].members());
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) labels.push_back("s" + std::to_string(i));
  return make_complex(m, std::move(families), std::move(labels));
}

std::vector<SimplicialComplex> nerve_tower(const SimplicialComplex& K, int max_steps,
                                           const SearchLimits& lim) {
  std::vector<SimplicialComplex> tower{K};
  while ((int)tower.size() <= max_steps) {
    if (tower.back().n == 1) break;
    tower.push_back(nerve(tower.back()));
    size_t i = tower.size() - 1;
    if (i >= 2 && i % 2 == 0) {
      if (tower[i].n == 1) break;
      if (is_isomorphic(tower[i], tower[i - 2], lim)) break;
    }
  }
  return tower;
}

SquareNerveEmbedding embed_square_nerve(const SimplicialComplex& K) {
  SimplicialComplex N1 = nerve(K);
  SimplicialComplex N2 = nerve(N1);

  std::vector<char> dominated(K.n, 0);
  for (auto [v, w] : dominated_vertices(K)) dominated[v] = 1;

  // Vertex t of N² is facet t of N¹, i.e. a maximal family of facets of K.
  std::vector<Vertex> image_of(N2.n);
  for (int t = 0; t < N2.n; ++t) {
    Bits common(K.n);
    bool first = true;
    for (int fi : N1.facets[t]) {
      Bits m = bits_of(K.n, K.facets[fi]);
      if (first) {
        common = m;
        first = false;
      } else {
        common &= m;
      }
    }
    auto members = common.members();
    if (members.empty()) throw Error("maximal family with empty intersection");
    Vertex pick = members.front();
    for (Vertex v : members)
      if (!dominated[v]) {
        pick = v;
        break;
      }
    image_of[t] = pick;
  }

  std::vector<Vertex> image_set = image_of;
  std::sort(image_set.begin(), image_set.end());
  image_set.erase(std::unique(image_set.begin(), image_set.end()), image_set.end());
  if ((int)image_set.size() != N2.n) throw Error("family intersections chose a vertex twice");

  SquareNerveEmbedding out;
  out.image = full_subcomplex(K, image_set);
  out.map = SimplicialMap{N2, K, image_of};

  // Vertices outside the image stay dominated while they are deleted one by
  // one, and a dominator can be taken inside the image.
  Bits in_image = bits_of(K.n, image_set);
  std::vector<Vertex> cur_ids(K.n);
  for (int v = 0; v < K.n; ++v) cur_ids[v] = v;
  SimplicialComplex cur = K;
  while (cur_ids.size() > image_set.size()) {
    auto dom = dominated_vertices(cur);
    int chosen_v = -1, chosen_w = -1;
    for (auto [v, w] : dom) {
      if (in_image.test(cur_ids[v])) continue;
      if (chosen_v < 0) {
        chosen_v = v;
        chosen_w = w;
      }
      if (v != chosen_v) break;  // pairs are sorted; past the smallest candidate
      if (!in_image.test(cur_ids[chosen_w]) && in_image.test(cur_ids[w])) chosen_w = w;
    }
    if (chosen_v < 0) throw Error("vertex outside the square-nerve image is not dominated");
    out.trace.moves.push_back(strong_delete(cur.labels[chosen_v], cur.labels[chosen_w]));
    cur = delete_vertex(cur, chosen_v);
    cur_ids.erase(cur_ids.begin() + chosen_v);
  }
  if (cur_ids != image_set) throw Error("strong collapse stalled outside the image");
  return out;
}

SimplicialComplex core_via_nerve(const SimplicialComplex& K, const SearchLimits& lim) {
  SimplicialComplex cur = K;
  for (;;) {
    SimplicialComplex next = nerve(nerve(cur));
    if (next.n == cur.n) {
      if (!is_isomorphic(cur, next, lim))
        throw Error("even nerve tower stalled without stabilizing");
      break;
    }
    if (next.n > cur.n) throw Error("even nerve tower grew");
    cur = std::move(next);
  }
  SimplicialComplex greedy = core(K).complex;
  if (!is_isomorphic(cur, greedy, lim))
    throw Error("nerve-tower fixed point disagrees with the greedy core");
  return cur;
}

bool strong_collapsible_via_nerve(const SimplicialComplex& K, const SearchLimits& lim) {
  for (const auto& C : nerve_tower(K, 64, lim))
    if (C.n == 1) return true;
  return false;
}

}  // namespace shtop

#include "morseaut/search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "morseaut/errors.hpp"

namespace morseaut {

namespace {

using Color = std::uint32_t;
using Coloring = std::vector<Color>;
using Trace = std::vector<std::uint64_t>;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Color class_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

/// Relabels colors to 0..k-1 by rank of the original color.
Coloring normalize(const std::vector<std::uint32_t>& raw) {
  std::vector<std::uint32_t> distinct = raw;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Coloring out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    out[i] = static_cast<Color>(std::lower_bound(distinct.begin(), distinct.end(), raw[i]) -
                                distinct.begin());
  return out;
}

/// 1-WL refinement to a stable coloring. The trace records, per round, every
/// (old color, neighbourhood hash, count) triple; two colorings related by an
/// isomorphism produce identical traces and corresponding colors.
class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), keys_(g.node_count()), order_(g.node_count()) {}

  void refine(Coloring& color, Trace& trace) {
    const std::size_t n = g_.node_count();
    Color classes = class_count(color);
    for (;;) {
      for (NodeId v = 0; v < n; ++v) {
        std::uint64_t h = 0;
        for (NodeId u : g_.neighbors(v)) h += mix(color[u]);
        keys_[v] = {color[v], h};
      }
      std::iota(order_.begin(), order_.end(), NodeId{0});
      std::sort(order_.begin(), order_.end(),
                [&](NodeId a, NodeId b) { return keys_[a] < keys_[b]; });
      Color next = 0;
      std::size_t run = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && keys_[order_[i]] != keys_[order_[i - 1]]) {
          push(trace, keys_[order_[i - 1]], run);
          ++next;
          run = 0;
        }
        color[order_[i]] = next;
        ++run;
      }
      if (n > 0) push(trace, keys_[order_[n - 1]], run);
      trace.push_back(~std::uint64_t{0});  // round separator
      const Color now = n == 0 ? 0 : next + 1;
      if (now == classes) return;
      classes = now;
    }
  }

 private:
  static void push(Trace& trace, const std::pair<Color, std::uint64_t>& key, std::size_t run) {
    trace.push_back(key.first);
    trace.push_back(key.second);
    trace.push_back(run);
  }

  const Graph& g_;
  std::vector<std::pair<Color, std::uint64_t>> keys_;
  std::vector<NodeId> order_;
};

void individualize(Coloring& color, NodeId v) { color[v] = class_count(color); }

/// Branching choice on the left graph: smallest non-singleton class, lowest
/// node id within it. Returns nullopt when the coloring is discrete.
std::optional<std::pair<Color, NodeId>> choose_target(const Coloring& color) {
  const Color k = class_count(color);
  std::vector<std::size_t> size(k, 0);
  std::vector<NodeId> first(k, 0);
  for (NodeId v = static_cast<NodeId>(color.size()); v-- > 0;) {
    ++size[color[v]];
    first[color[v]] = v;
  }
  std::optional<std::pair<Color, NodeId>> best;
  std::size_t best_size = 0;
  for (Color c = 0; c < k; ++c) {
    if (size[c] < 2) continue;
    if (!best || size[c] < best_size || (size[c] == best_size && first[c] < best->second)) {
      best = std::pair{c, first[c]};
      best_size = size[c];
    }
  }
  return best;
}

bool same_shape(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  auto ca = a.colors(), cb = b.colors();
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Point>& map) {
  for (NodeId u = 0; u < a.node_count(); ++u) {
    if (a.color(u) != b.color(map[u])) return false;
    if (a.degree(u) != b.degree(map[u])) return false;
    for (NodeId w : a.neighbors(u))
      if (!b.has_edge(map[u], map[w])) return false;
  }
  return true;
}

/// Runs the individualization-refinement search from graph a into graph b.
/// `accept` receives each verified isomorphism and returns false to stop.
void search(const Graph& a, const Graph& b, const std::function<bool(Permutation)>& accept) {
  if (!same_shape(a, b)) return;
  const std::size_t n = a.node_count();
  if (n == 0) {
    accept(Permutation());
    return;
  }
  Refiner ra(a), rb(b);

  // Fixed left path.
  struct Level {
    Color cell;
    NodeId node;
    Trace trace;  // trace after individualizing `node` and refining
  };
  std::vector<Level> path;
  Coloring left = normalize(a.colors());
  Trace left_root;
  ra.refine(left, left_root);
  while (auto target = choose_target(left)) {
    Level lv{target->first, target->second, {}};
    individualize(left, lv.node);
    ra.refine(left, lv.trace);
    path.push_back(std::move(lv));
  }
  // `left` is now discrete; its colors index the nodes of a.
  std::vector<NodeId> left_by_color(n);
  for (NodeId u = 0; u < n; ++u) left_by_color[left[u]] = u;

  Coloring right = normalize(b.colors());
  Trace right_root;
  rb.refine(right, right_root);
  if (right_root != left_root) return;

  bool stop = false;
  std::function<void(std::size_t, const Coloring&)> explore = [&](std::size_t depth,
                                                                   const Coloring& color) {
    if (stop) return;
    if (depth == path.size()) {
      std::vector<Point> map(n);
      for (NodeId w = 0; w < n; ++w) map[left_by_color[color[w]]] = w;
      if (is_isomorphism(a, b, map) && !accept(Permutation(std::move(map)))) stop = true;
      return;
    }
    const Level& lv = path[depth];
    for (NodeId w = 0; w < n && !stop; ++w) {
      if (color[w] != lv.cell) continue;
      Coloring next = color;
      Trace trace;
      individualize(next, w);
      rb.refine(next, trace);
      if (trace == lv.trace) explore(depth + 1, next);
    }
  };
  explore(0, right);
}

}  // namespace

PermutationGroup graph_automorphisms(const Graph& g, std::size_t budget) {
  std::vector<Permutation> found;
  search(g, g, [&](Permutation p) {
    found.push_back(std::move(p));
    if (found.size() > budget)
      throw BudgetExceeded("automorphism enumeration", budget, found.size());
    return true;
  });
  return PermutationGroup::from_elements(g.node_count(), std::move(found));
}

std::optional<Permutation> graph_isomorphism(const Graph& a, const Graph& b) {
  std::optional<Permutation> out;
  search(a, b, [&](Permutation p) {
    out = std::move(p);
    return false;
  });
  return out;
}

Graph incidence_graph(const SimplicialComplex& complex) {
  const std::size_t nv = complex.vertex_count();
  Graph g(nv + complex.facets().size());
  for (std::size_t i = 0; i < complex.facets().size(); ++i) {
    const NodeId node = static_cast<NodeId>(nv + i);
    const Simplex& f = complex.face(complex.facets()[i]);
    g.set_color(node, static_cast<std::uint32_t>(1 + f.dimension()));
    for (VertexId v : f.vertices()) g.add_edge(v, node);
  }
  return g;
}

bool is_complex_automorphism(const SimplicialComplex& complex, const Permutation& f) {
  if (f.degree() != complex.vertex_count()) return false;
  std::vector<VertexId> image;
  for (FaceId id : complex.facets()) {
    image.clear();
    for (VertexId v : complex.face(id).vertices()) image.push_back(f(v));
    std::sort(image.begin(), image.end());
    auto mapped = complex.find(image);
    if (!mapped || !complex.is_facet(*mapped)) return false;
  }
  return true;
}

bool is_graph_automorphism(const Graph& g, const Permutation& f) {
  if (f.degree() != g.node_count()) return false;
  return is_isomorphism(g, g, f.images());
}

PermutationGroup complex_automorphisms(const SimplicialComplex& complex, std::size_t budget) {
  const std::size_t nv = complex.vertex_count();
  const Graph g = incidence_graph(complex);
  std::vector<Permutation> found;
  search(g, g, [&](Permutation p) {
    std::vector<Point> images(p.images().begin(), p.images().begin() + static_cast<long>(nv));
    Permutation f(std::move(images));
    if (is_complex_automorphism(complex, f)) {
      found.push_back(std::move(f));
      if (found.size() > budget)
        throw BudgetExceeded("automorphism enumeration", budget, found.size());
    }
    return true;
  });
  return PermutationGroup::from_elements(nv, std::move(found));
}

}  // namespace morseaut

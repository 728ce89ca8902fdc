#include "morseaut/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "morseaut/errors.hpp"

namespace morseaut {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidInput("simplex must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InvalidInput("simplex has a repeated vertex");
}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

std::uint64_t Simplex::mask() const noexcept {
  std::uint64_t m = 0;
  for (VertexId v : vertices_) m |= std::uint64_t{1} << (v & 63u);
  return m;
}

std::strong_ordering Simplex::operator<=>(const Simplex& other) const {
  if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0) return c;
  return vertices_ <=> other.vertices_;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (VertexId v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void add_closure(std::span<const VertexId> facet, std::vector<Simplex>& out) {
  const std::size_t k = facet.size();
  if (k > 24) throw InvalidInput("facet too large to close (more than 24 vertices)");
  std::vector<VertexId> buf;
  buf.reserve(k);
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << k); ++bits) {
    buf.clear();
    for (std::size_t i = 0; i < k; ++i)
      if (bits & (std::uint32_t{1} << i)) buf.push_back(facet[i]);
    out.emplace_back(buf);
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) throw InvalidInput("facet list is empty");
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::vector<VertexId>> id_facets;
  id_facets.reserve(facets.size());
  for (const auto& facet : facets) {
    if (facet.empty()) throw InvalidInput("empty facet");
    std::vector<VertexId> f;
    for (const auto& label : facet) {
      auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
      if (inserted) labels.push_back(label);
      f.push_back(it->second);
    }
    std::vector<VertexId> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("duplicate vertex within a facet");
    id_facets.push_back(std::move(f));
  }
  return from_id_facets(std::move(labels), id_facets);
}

SimplicialComplex SimplicialComplex::from_id_facets(
    std::vector<std::string> labels, const std::vector<std::vector<VertexId>>& facets) {
  std::vector<Simplex> faces;
  for (const auto& f : facets) {
    Simplex s(f);
    for (VertexId v : s.vertices())
      if (v >= labels.size()) throw InvalidInput("facet references an unknown vertex id");
    add_closure(s.vertices(), faces);
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  k.faces_ = std::move(faces);
  k.index_faces();
  return k;
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<std::string> labels,
                                                       std::vector<Simplex> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  k.faces_ = std::move(faces);
  k.index_faces();
  // Downward closure: every codimension-1 face must be present.
  std::vector<VertexId> buf;
  for (const Simplex& s : k.faces_) {
    for (VertexId v : s.vertices())
      if (v >= k.labels_.size()) throw InvalidInput("face references an unknown vertex id");
    if (s.size() < 2) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      buf.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) buf.push_back(s[i]);
      if (!k.find(buf)) throw InvalidInput("face family is not downward closed");
    }
  }
  return k;
}

void SimplicialComplex::index_faces() {
  single_char_labels_ = std::all_of(labels_.begin(), labels_.end(),
                                    [](const std::string& l) { return l.size() == 1; });
  by_mask_.clear();
  by_vertices_.clear();
  const bool use_mask = labels_.size() <= 64;
  for (FaceId id = 0; id < faces_.size(); ++id) {
    if (use_mask)
      by_mask_.emplace(faces_[id].mask(), id);
    else
      by_vertices_.emplace(faces_[id], id);
  }

  const int dim = dimension();
  dim_offsets_.assign(static_cast<std::size_t>(dim + 2), 0);
  for (const Simplex& s : faces_) ++dim_offsets_[static_cast<std::size_t>(s.dimension() + 1)];
  std::partial_sum(dim_offsets_.begin(), dim_offsets_.end(), dim_offsets_.begin());

  is_facet_.assign(faces_.size(), true);
  std::vector<VertexId> buf;
  for (const Simplex& s : faces_) {
    if (s.size() < 2) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      buf.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) buf.push_back(s[i]);
      if (auto sub = find(buf)) is_facet_[*sub] = false;
    }
  }
  facets_.clear();
  for (FaceId id = 0; id < faces_.size(); ++id)
    if (is_facet_[id]) facets_.push_back(id);
}

std::optional<VertexId> SimplicialComplex::vertex_by_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::optional<FaceId> SimplicialComplex::find(std::span<const VertexId> sorted_vertices) const {
  if (sorted_vertices.empty()) return std::nullopt;
  if (labels_.size() <= 64) {
    std::uint64_t m = 0;
    for (VertexId v : sorted_vertices) {
      if (v >= 64) return std::nullopt;
      m |= std::uint64_t{1} << v;
    }
    auto it = by_mask_.find(m);
    if (it == by_mask_.end() ||
        faces_[it->second].size() != sorted_vertices.size())
      return std::nullopt;
    return it->second;
  }
  std::vector<VertexId> copy(sorted_vertices.begin(), sorted_vertices.end());
  if (!std::is_sorted(copy.begin(), copy.end())) return std::nullopt;
  if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) return std::nullopt;
  auto it = by_vertices_.find(Simplex(std::move(copy)));
  if (it == by_vertices_.end()) return std::nullopt;
  return it->second;
}

std::pair<FaceId, FaceId> SimplicialComplex::dimension_range(int d) const {
  if (d < 0 || d > dimension()) return {0, 0};
  return {dim_offsets_[static_cast<std::size_t>(d)],
          dim_offsets_[static_cast<std::size_t>(d + 1)]};
}

int SimplicialComplex::dimension() const noexcept {
  return faces_.empty() ? -1 : faces_.back().dimension();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const Simplex& s : faces_) ++f[static_cast<std::size_t>(s.dimension())];
  return f;
}

std::vector<std::size_t> vertex_degrees(const SimplicialComplex& complex) {
  std::vector<std::size_t> deg(complex.vertex_count(), 0);
  auto [first, last] = complex.dimension_range(1);
  for (FaceId e = first; e < last; ++e) {
    ++deg[complex.face(e)[0]];
    ++deg[complex.face(e)[1]];
  }
  return deg;
}

bool SimplicialComplex::is_connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return false;
  std::vector<std::vector<VertexId>> adj(n);
  auto [first, last] = dimension_range(1);
  for (FaceId e = first; e < last; ++e) {
    adj[faces_[e][0]].push_back(faces_[e][1]);
    adj[faces_[e][1]].push_back(faces_[e][0]);
  }
  std::vector<bool> seen(n, false);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
  }
  return reached == n;
}

std::string SimplicialComplex::simplex_label(std::span<const VertexId> vertices) const {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0 && !single_char_labels_) out += ',';
    out += labels_.at(vertices[i]);
  }
  return out;
}

std::string SimplicialComplex::face_label(FaceId id) const {
  return simplex_label(faces_.at(id).vertices());
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_labels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(facets_.size());
  for (FaceId id : facets_) {
    std::vector<std::string> f;
    for (VertexId v : faces_[id].vertices()) f.push_back(labels_[v]);
    out.push_back(std::move(f));
  }
  return out;
}

std::string Classification::to_string() const {
  switch (kind) {
    case Kind::Cycle:
      return "Cycle(" + std::to_string(cycle_n) + ")";
    case Kind::BoundarySimplex:
      return "BoundarySimplex(" + std::to_string(boundary_n) + ")";
    case Kind::Both:
      return "Both(" + std::to_string(cycle_n) + ", " + std::to_string(boundary_n) + ")";
    case Kind::Other:
      break;
  }
  return "Other";
}

namespace {

std::vector<std::string> v_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

}  // namespace

SimplicialComplex generate_cycle(int n) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3");
  std::vector<std::vector<VertexId>> facets;
  for (int i = 0; i < n; ++i)
    facets.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
  return SimplicialComplex::from_id_facets(v_labels(n), facets);
}

SimplicialComplex generate_boundary_simplex(int n) {
  if (n < 2) throw InvalidInput("boundary of the n-simplex requires n >= 2");
  if (n > 20) throw InvalidInput("boundary of the n-simplex: n too large");
  std::vector<std::vector<VertexId>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<VertexId> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(static_cast<VertexId>(v));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_id_facets(v_labels(n + 1), facets);
}

SimplicialComplex generate_path(int n) {
  if (n < 2) throw InvalidInput("path needs at least 2 vertices");
  std::vector<std::vector<VertexId>> facets;
  for (int i = 0; i + 1 < n; ++i)
    facets.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  return SimplicialComplex::from_id_facets(v_labels(n), facets);
}

SimplicialComplex generate_simplex(int n) {
  if (n < 1) throw InvalidInput("simplex dimension must be at least 1");
  if (n > 20) throw InvalidInput("simplex dimension too large");
  std::vector<VertexId> all(static_cast<std::size_t>(n + 1));
  std::iota(all.begin(), all.end(), 0u);
  return SimplicialComplex::from_id_facets(v_labels(n + 1), {all});
}

Classification classify(const SimplicialComplex& complex) {
  if (!complex.is_connected())
    throw PreconditionFailed("classification requires a connected complex");
  const std::size_t nv = complex.vertex_count();
  Classification c;

  bool cycle = false;
  if (complex.dimension() == 1 && nv >= 3) {
    auto deg = vertex_degrees(complex);
    cycle = std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; });
  }

  bool boundary = false;
  if (nv >= 3 && nv <= 62 && complex.dimension() == static_cast<int>(nv) - 2) {
    boundary = complex.face_count() == (std::size_t{1} << nv) - 2;
  }

  if (cycle) c.cycle_n = static_cast<int>(nv);
  if (boundary) c.boundary_n = static_cast<int>(nv) - 1;
  if (cycle && boundary)
    c.kind = Classification::Kind::Both;
  else if (cycle)
    c.kind = Classification::Kind::Cycle;
  else if (boundary)
    c.kind = Classification::Kind::BoundarySimplex;
  return c;
}

}  // namespace morseaut

#include "morseaut/morse.hpp"

#include <algorithm>
#include <limits>

#include "morseaut/errors.hpp"

namespace morseaut {

namespace {

constexpr FaceId kUnmatched = std::numeric_limits<FaceId>::max();

std::vector<FaceId> partner_table(std::size_t faces, const DiscreteVectorField& field) {
  std::vector<FaceId> partner(faces, kUnmatched);
  for (const PrimitiveVector& v : field.pairs()) {
    partner[v.face] = v.coface;
    partner[v.coface] = v.face;
  }
  return partner;
}

}  // namespace

std::vector<PrimitiveVector> primitives(const HasseDiagram& hasse) {
  std::vector<PrimitiveVector> out;
  out.reserve(hasse.edge_count());
  for (const HasseEdge& e : hasse.edges())
    out.push_back({e.face, e.coface, hasse.dimension(e.face) + 1});
  return out;
}

std::vector<PrimitiveVector> primitives(const SimplicialComplex& complex) {
  return primitives(build_hasse(complex));
}

std::string primitive_label(const SimplicialComplex& complex, const PrimitiveVector& v) {
  return complex.face_label(v.face) + "|" + complex.face_label(v.coface);
}

bool DiscreteVectorField::contains(const PrimitiveVector& v) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), v);
}

DiscreteVectorField make_dvf(const SimplicialComplex& complex,
                             std::vector<PrimitiveVector> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (PrimitiveVector& v : pairs) {
    if (v.face >= complex.face_count() || v.coface >= complex.face_count())
      throw InvalidInput("pair references an unknown simplex");
    const Simplex& s = complex.face(v.face);
    const Simplex& t = complex.face(v.coface);
    if (t.dimension() != s.dimension() + 1 || !s.is_face_of(t))
      throw InvalidInput("pair " + complex.face_label(v.face) + ">" +
                         complex.face_label(v.coface) + " is not a codimension-1 incidence");
    v.index = s.dimension() + 1;
  }
  // Report the doubly used simplex in canonical face order.
  std::vector<FaceId> touched;
  for (const PrimitiveVector& v : pairs) {
    touched.push_back(v.face);
    touched.push_back(v.coface);
  }
  std::sort(touched.begin(), touched.end());
  if (auto dup = std::adjacent_find(touched.begin(), touched.end()); dup != touched.end())
    throw MatchingViolation(*dup, complex.face_label(*dup));
  DiscreteVectorField field;
  field.pairs_ = std::move(pairs);
  return field;
}

DiscreteVectorField make_dvf(const SimplicialComplex& complex,
                             const std::vector<PrimitiveVector>& all_primitives,
                             std::span<const PrimitiveId> ids) {
  std::vector<PrimitiveVector> pairs;
  pairs.reserve(ids.size());
  for (PrimitiveId id : ids) pairs.push_back(all_primitives.at(id));
  return make_dvf(complex, std::move(pairs));
}

namespace {

// Directed cycle search, one pair of consecutive dimensions at a time.
bool acyclic_on_partners(const HasseDiagram& hasse, const std::vector<FaceId>& partner) {
  const auto& layers = hasse.layers();
  // 0 = unvisited, 1 = on stack, 2 = done.
  std::vector<std::uint8_t> state(hasse.node_count(), 0);
  struct Frame {
    FaceId node;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (std::size_t p = 0; p + 1 < layers.size(); ++p) {
    const int low = static_cast<int>(p);
    for (FaceId start : layers[p]) {
      if (state[start] != 0) continue;
      stack.push_back({start, 0});
      state[start] = 1;
      while (!stack.empty()) {
        Frame& top = stack.back();
        std::optional<FaceId> next;
        if (hasse.dimension(top.node) == low) {
          const FaceId up = partner[top.node];
          if (top.next == 0 && up != kUnmatched && hasse.dimension(up) == low + 1) next = up;
          top.next = 1;
        } else {
          auto d = hasse.down(top.node);
          while (top.next < d.size() && d[top.next] == partner[top.node]) ++top.next;
          if (top.next < d.size()) next = d[top.next++];
        }
        if (!next) {
          state[top.node] = 2;
          stack.pop_back();
          continue;
        }
        if (state[*next] == 1) return false;
        if (state[*next] == 0) {
          state[*next] = 1;
          stack.push_back({*next, 0});
        }
      }
    }
    // Layer p+1 is the bottom of the next pair.
    for (FaceId u : layers[p + 1]) state[u] = 0;
  }
  return true;
}

}  // namespace

bool is_gradient(const HasseDiagram& hasse, const DiscreteVectorField& field) {
  return acyclic_on_partners(hasse, partner_table(hasse.node_count(), field));
}

std::vector<VPath> enumerate_v_paths(const HasseDiagram& hasse,
                                     const DiscreteVectorField& field,
                                     std::optional<std::size_t> max_pairs) {
  const std::size_t limit = max_pairs.value_or(field.size());
  const auto partner = partner_table(hasse.node_count(), field);
  std::vector<VPath> out;

  std::vector<FaceId> cells;
  auto extend = [&](auto&& self) -> void {
    const FaceId alpha = cells.back();
    VPath path{cells, cells.size() > 1 && alpha == cells.front()};
    out.push_back(std::move(path));
    if (cells.size() / 2 >= limit) return;
    const FaceId beta = partner[alpha];
    if (beta == kUnmatched || hasse.dimension(beta) != hasse.dimension(alpha) + 1) return;
    for (FaceId next : hasse.down(beta)) {
      if (next == alpha) continue;
      cells.push_back(beta);
      cells.push_back(next);
      self(self);
      cells.pop_back();
      cells.pop_back();
    }
  };
  for (FaceId start = 0; start < hasse.node_count(); ++start) {
    cells.assign(1, start);
    extend(extend);
  }
  return out;
}

namespace {

class GradientEnumerator {
 public:
  GradientEnumerator(const HasseDiagram& hasse, const std::vector<PrimitiveVector>& prims,
                     std::size_t budget,
                     const std::function<void(std::span<const PrimitiveId>)>& visit)
      : hasse_(hasse),
        prims_(prims),
        budget_(budget),
        visit_(visit),
        partner_(hasse.node_count(), kUnmatched),
        seen_(hasse.node_count(), 0) {}

  void run() { descend(0); }

 private:
  void descend(PrimitiveId first) {
    for (PrimitiveId id = first; id < prims_.size(); ++id) {
      const PrimitiveVector& v = prims_[id];
      if (partner_[v.face] != kUnmatched || partner_[v.coface] != kUnmatched) continue;
      partner_[v.face] = v.coface;
      partner_[v.coface] = v.face;
      if (!closes_cycle(v.face, v.coface)) {
        chosen_.push_back(id);
        if (++count_ > budget_)
          throw BudgetExceeded("gradient vector field enumeration", budget_, count_);
        visit_(chosen_);
        descend(id + 1);
        chosen_.pop_back();
      }
      partner_[v.face] = kUnmatched;
      partner_[v.coface] = kUnmatched;
    }
  }

  // Any new closed V-path must use the new pair, i.e. lead from coface back
  // down to face within the same two dimensions.
  bool closes_cycle(FaceId face, FaceId coface) {
    ++stamp_;
    stack_.clear();
    stack_.push_back(coface);
    seen_[coface] = stamp_;
    while (!stack_.empty()) {
      const FaceId beta = stack_.back();
      stack_.pop_back();
      for (FaceId alpha : hasse_.down(beta)) {
        if (alpha == partner_[beta]) continue;
        if (alpha == face) return true;
        const FaceId up = partner_[alpha];
        if (up == kUnmatched || hasse_.dimension(up) != hasse_.dimension(alpha) + 1) continue;
        if (seen_[up] == stamp_) continue;
        seen_[up] = stamp_;
        stack_.push_back(up);
      }
    }
    return false;
  }

  const HasseDiagram& hasse_;
  const std::vector<PrimitiveVector>& prims_;
  std::size_t budget_;
  const std::function<void(std::span<const PrimitiveId>)>& visit_;
  std::vector<FaceId> partner_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
  std::vector<FaceId> stack_;
  std::vector<PrimitiveId> chosen_;
  std::size_t count_ = 0;
};

}  // namespace

void for_each_gradient_field(const HasseDiagram& hasse,
                             const std::vector<PrimitiveVector>& prims, std::size_t budget,
                             const std::function<void(std::span<const PrimitiveId>)>& visit) {
  GradientEnumerator(hasse, prims, budget, visit).run();
}

std::vector<DiscreteVectorField> enumerate_gvfs(const SimplicialComplex& complex,
                                                std::size_t budget) {
  const HasseDiagram hasse(complex);
  const auto prims = primitives(hasse);
  std::vector<DiscreteVectorField> out;
  for_each_gradient_field(hasse, prims, budget, [&](std::span<const PrimitiveId> ids) {
    out.push_back(make_dvf(complex, prims, ids));
  });
  return out;
}

SimplicialComplex build_morse_complex(const SimplicialComplex& complex, std::size_t budget) {
  const HasseDiagram hasse(complex);
  const auto prims = primitives(hasse);
  std::vector<std::string> labels;
  labels.reserve(prims.size());
  for (const PrimitiveVector& v : prims) labels.push_back(primitive_label(complex, v));
  std::vector<Simplex> faces;
  for_each_gradient_field(hasse, prims, budget, [&](std::span<const PrimitiveId> ids) {
    faces.emplace_back(std::vector<VertexId>(ids.begin(), ids.end()));
  });
  return SimplicialComplex::from_closed_faces(std::move(labels), std::move(faces));
}

bool is_subfield(const DiscreteVectorField& sub, const DiscreteVectorField& field) {
  return std::includes(field.pairs().begin(), field.pairs().end(), sub.pairs().begin(),
                       sub.pairs().end());
}

bool is_compatible(const HasseDiagram& hasse, const std::vector<PrimitiveVector>& prims,
                   std::span<const PrimitiveId> ids) {
  std::vector<FaceId> partner(hasse.node_count(), kUnmatched);
  for (PrimitiveId id : ids) {
    const PrimitiveVector& v = prims.at(id);
    if (partner[v.face] != kUnmatched || partner[v.coface] != kUnmatched) return false;
    partner[v.face] = v.coface;
    partner[v.coface] = v.face;
  }
  return acyclic_on_partners(hasse, partner);
}

}  // namespace morseaut

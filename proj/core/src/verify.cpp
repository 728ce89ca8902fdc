#include "morseaut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "morseaut/errors.hpp"

namespace morseaut {

MorseContext::MorseContext(SimplicialComplex complex, std::optional<std::size_t> morse_budget)
    : complex_(std::move(complex)),
      hasse_(complex_),
      hasse_graph_(as_graph(hasse_)),
      primitives_(morseaut::primitives(hasse_)) {
  if (morse_budget) {
    try {
      morse_ = build_morse_complex(complex_, *morse_budget);
    } catch (const BudgetExceeded& e) {
      morse_error_ = e.what();
    }
  }
}

std::optional<PrimitiveId> MorseContext::primitive_id(FaceId face, FaceId coface) const {
  auto idx = hasse_.edge_index(face, coface);
  if (!idx) return std::nullopt;
  return static_cast<PrimitiveId>(*idx);
}

std::optional<FaceId> MorseContext::map_face(const Permutation& f, FaceId face) const {
  std::vector<VertexId> image;
  for (VertexId v : complex_.face(face).vertices()) image.push_back(f(v));
  std::sort(image.begin(), image.end());
  return complex_.find(image);
}

bool preserves_morse_faces(const MorseContext& ctx, const Permutation& g) {
  if (!ctx.morse()) throw PreconditionFailed("Morse complex was not built");
  const SimplicialComplex& m = *ctx.morse();
  if (g.degree() != m.vertex_count()) return false;
  std::vector<VertexId> image;
  // g is a bijection on vertices, so facets landing on faces is enough.
  for (FaceId id : m.facets()) {
    image.clear();
    for (VertexId v : m.face(id).vertices()) image.push_back(g(v));
    std::sort(image.begin(), image.end());
    if (!m.find(image)) return false;
  }
  return true;
}

Permutation induced_morse_automorphism(const MorseContext& ctx, const Permutation& f) {
  if (!is_complex_automorphism(ctx.complex(), f))
    throw NotAnAutomorphism("vertex map " + f.to_string() + " is not an automorphism of K");
  std::vector<Point> images(ctx.primitive_count());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const PrimitiveVector& v = ctx.primitives()[i];
    auto face = ctx.map_face(f, v.face);
    auto coface = ctx.map_face(f, v.coface);
    std::optional<PrimitiveId> id;
    if (face && coface) id = ctx.primitive_id(*face, *coface);
    if (!id) throw Error("induced map sends a primitive outside V(M(K))");
    images[i] = *id;
  }
  Permutation out(std::move(images));
  if (ctx.morse() && !preserves_morse_faces(ctx, out))
    throw Error("induced map is not simplicial on M(K)");
  return out;
}

PhiImage phi_image(const MorseContext& ctx, const PermutationGroup& aut_k) {
  PhiImage out;
  out.images.reserve(aut_k.order());
  for (const Permutation& f : aut_k.elements())
    out.images.push_back(induced_morse_automorphism(ctx, f));
  out.group = PermutationGroup::from_elements(ctx.primitive_count(), out.images);
  out.injective = is_injective(out.images);
  out.homomorphism = is_homomorphism(out.images, aut_k, out.group);
  return out;
}

std::vector<HasseEdge> m_correspondence(const MorseContext& ctx) { return ctx.hasse().edges(); }

Permutation transport(const MorseContext& ctx, const Permutation& g) {
  if (!is_graph_automorphism(ctx.hasse_graph(), g))
    throw NotAnAutomorphism("node map " + g.to_string() + " is not a Hasse automorphism");
  const HasseDiagram& h = ctx.hasse();
  std::vector<Point> images(ctx.primitive_count());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const PrimitiveVector& v = ctx.primitives()[i];
    FaceId a = g(v.face), b = g(v.coface);
    if (h.dimension(a) > h.dimension(b)) std::swap(a, b);
    auto id = ctx.primitive_id(a, b);
    if (!id) throw Error("transported edge is not a Hasse edge");
    images[i] = *id;
  }
  Permutation out(std::move(images));
  if (ctx.morse() && !preserves_morse_faces(ctx, out))
    throw Error("transported map is not simplicial on M(K)");
  return out;
}

Simplex reflection(int n, std::span<const VertexId> sigma) {
  if (n < 1) throw InvalidInput("reflection needs n >= 1");
  if (sigma.empty()) throw InvalidInput("reflection of the empty set");
  std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
  for (VertexId v : sigma) {
    if (v > static_cast<VertexId>(n)) throw InvalidInput("vertex outside {0..n}");
    if (in[v]) throw InvalidInput("repeated vertex");
    in[v] = true;
  }
  if (sigma.size() == static_cast<std::size_t>(n + 1))
    throw InvalidInput("reflection of the full simplex");
  std::vector<VertexId> out;
  for (VertexId v = 0; v <= static_cast<VertexId>(n); ++v)
    if (!in[v]) out.push_back(v);
  return Simplex(std::move(out));
}

bool reflection_is_cosimplicial_involution(const SimplicialComplex& boundary) {
  const int n = static_cast<int>(boundary.vertex_count()) - 1;
  const auto& faces = boundary.faces();
  std::vector<FaceId> image(faces.size());
  std::vector<bool> hit(faces.size(), false);
  for (FaceId id = 0; id < faces.size(); ++id) {
    auto r = boundary.find(reflection(n, faces[id].vertices()));
    if (!r || hit[*r]) return false;
    hit[*r] = true;
    image[id] = *r;
  }
  for (FaceId id = 0; id < faces.size(); ++id) {
    if (image[image[id]] != id) return false;
    for (FaceId sub = 0; sub < faces.size(); ++sub)
      if (faces[sub].is_face_of(faces[id]) && !faces[image[id]].is_face_of(faces[image[sub]]))
        return false;
  }
  return true;
}

Permutation reflection_induced(const MorseContext& ctx) {
  const Classification c = classify(ctx.complex());
  if (!c.is_boundary())
    throw PreconditionFailed("reflection is defined on the boundary of a simplex only");
  const int n = c.boundary_n;
  const SimplicialComplex& k = ctx.complex();
  std::vector<Point> images(ctx.primitive_count());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const PrimitiveVector& v = ctx.primitives()[i];
    auto face = k.find(reflection(n, k.face(v.coface).vertices()));
    auto coface = k.find(reflection(n, k.face(v.face).vertices()));
    std::optional<PrimitiveId> id;
    if (face && coface) id = ctx.primitive_id(*face, *coface);
    if (!id) throw Error("reflected pair is not a primitive");
    images[i] = *id;
  }
  return Permutation(std::move(images));
}

Permutation reflection_induced(int n) {
  return reflection_induced(MorseContext(generate_boundary_simplex(n)));
}

bool VerificationReport::overall() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_json(bool timings) const {
  using nlohmann::json;
  json j;
  j["classification"] = classification.to_string();
  j["via_hasse"] = via_hasse;
  if (via_hasse) j["via_hasse_reason"] = via_hasse_reason;
  json orders = json::object();
  auto put = [&](const char* key, const std::optional<std::size_t>& v) {
    orders[key] = v ? json(*v) : json(nullptr);
  };
  put("aut_complex", aut_complex_order);
  put("aut_hasse", aut_hasse_order);
  put("aut_morse", aut_morse_order);
  put("phi_image", phi_image_order);
  j["orders"] = orders;
  j["morse_faces"] = morse_face_count ? json(*morse_face_count) : json(nullptr);
  json list = json::array();
  for (const Check& c : checks) {
    json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["pass"] = c.pass;
    if (!c.basis.empty()) e["basis"] = c.basis;
    if (timings) e["elapsed_ms"] = c.elapsed_ms;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  j["incomplete"] = incomplete;
  j["overall"] = overall();
  return j.dump(2);
}

std::string VerificationReport::to_table() const {
  auto show = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::size_t name_w = 5, exp_w = 8, act_w = 6;
  for (const Check& c : checks) {
    name_w = std::max(name_w, c.name.size());
    exp_w = std::max(exp_w, c.expected.size());
    act_w = std::max(act_w, c.actual.size());
  }
  std::ostringstream out;
  out << "classification: " << classification.to_string() << "\n";
  out << "orders (|Aut K|, |Aut M|) = (" << show(aut_complex_order) << ", "
      << show(aut_morse_order) << ")" << (via_hasse ? "  [via_hasse]" : "") << "\n";
  if (via_hasse) out << "via_hasse: " << via_hasse_reason << "\n";
  out << "|Aut H(K)| = " << show(aut_hasse_order) << ", |phi(Aut K)| = " << show(phi_image_order)
      << ", faces of M(K) = " << show(morse_face_count) << "\n\n";
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << pad("check", name_w) << "  " << pad("expected", exp_w) << "  " << pad("actual", act_w)
      << "  result\n";
  for (const Check& c : checks) {
    out << pad(c.name, name_w) << "  " << pad(c.expected, exp_w) << "  " << pad(c.actual, act_w)
        << "  " << (c.pass ? "PASS" : "FAIL");
    if (!c.basis.empty()) out << "  (" << c.basis << ")";
    out << "\n";
  }
  out << "\noverall: " << (overall() ? "PASS" : "FAIL")
      << (incomplete ? " (incomplete: budget exceeded)" : "") << "\n";
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class T>
struct Outcome {
  std::optional<T> value;
  std::string error;
};

template <class F>
auto attempt(F&& fn) -> Outcome<decltype(fn())> {
  Outcome<decltype(fn())> out;
  try {
    out.value.emplace(fn());
  } catch (const BudgetExceeded& e) {
    out.error = e.what();
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(VerificationReport& report) : report_(report) {}

  /// Runs `fn`, which returns the actual value as a string; the check passes
  /// when it equals `expected`. Budget errors fail the check only.
  template <class F>
  void check(std::string name, std::string expected, F&& fn, std::string basis = {}) {
    Check c{std::move(name), std::move(expected), {}, false, 0.0, std::move(basis)};
    const auto start = Clock::now();
    try {
      c.actual = fn();
      c.pass = c.actual == c.expected;
    } catch (const BudgetExceeded& e) {
      c.actual = e.what();
      report_.incomplete = true;
    } catch (const Error& e) {
      c.actual = std::string("error: ") + e.what();
    }
    c.elapsed_ms = ms_since(start);
    report_.checks.push_back(std::move(c));
  }

  void fail_budget(std::string name, std::string expected, std::string why) {
    report_.incomplete = true;
    report_.checks.push_back({std::move(name), std::move(expected), std::move(why), false, 0.0, {}});
  }

 private:
  VerificationReport& report_;
};

void sort_checks(VerificationReport& report) {
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Random matchings of K checked against the literal V-path definition.
std::string oracle_spot_check(const MorseContext& ctx, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution take(0.35);
  const auto& prims = ctx.primitives();
  std::size_t disagreements = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<bool> used(ctx.hasse().node_count(), false);
    std::vector<PrimitiveVector> pairs;
    std::vector<std::size_t> order(prims.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order) {
      const PrimitiveVector& v = prims[i];
      if (used[v.face] || used[v.coface] || !take(rng)) continue;
      used[v.face] = used[v.coface] = true;
      pairs.push_back(v);
    }
    const DiscreteVectorField field = make_dvf(ctx.complex(), std::move(pairs));
    const auto paths = enumerate_v_paths(ctx.hasse(), field);
    const bool oracle = std::none_of(paths.begin(), paths.end(),
                                     [](const VPath& p) { return p.closed; });
    if (oracle != is_gradient(ctx.hasse(), field)) ++disagreements;
  }
  return std::to_string(disagreements);
}

}  // namespace

VerificationReport verify_main_theorem(const SimplicialComplex& complex,
                                       const VerifyOptions& options) {
  VerificationReport report;
  report.classification = classify(complex);
  const Classification& cls = report.classification;
  ReportBuilder rb(report);

  // The three expensive computations are independent.
  auto aut_k_future = std::async(std::launch::async, [&] {
    return attempt([&] { return complex_automorphisms(complex, options.group_budget); });
  });
  auto aut_h_future = std::async(std::launch::async, [&] {
    return attempt([&] {
      return graph_automorphisms(as_graph(build_hasse(complex)), options.group_budget);
    });
  });
  struct MorseSide {
    MorseContext ctx;
    Outcome<PermutationGroup> aut_m;
  };
  auto morse_future = std::async(std::launch::async, [&] {
    MorseSide side{MorseContext(complex, options.force_via_hasse
                                             ? std::nullopt
                                             : std::optional<std::size_t>(options.gvf_budget)),
                   {}};
    if (side.ctx.morse())
      side.aut_m = attempt([&] {
        return complex_automorphisms(*side.ctx.morse(), options.group_budget);
      });
    return side;
  });

  const auto aut_k = aut_k_future.get();
  const auto aut_h = aut_h_future.get();
  const MorseSide morse_side = morse_future.get();
  const MorseContext& ctx = morse_side.ctx;

  if (aut_k.value) report.aut_complex_order = aut_k.value->order();
  if (aut_h.value) report.aut_hasse_order = aut_h.value->order();
  if (ctx.morse()) report.morse_face_count = ctx.morse()->face_count();

  if (!aut_k.value) rb.fail_budget("aut_complex", "computed", aut_k.error);
  if (!aut_h.value) rb.fail_budget("aut_hasse", "computed", aut_h.error);
  if (!aut_k.value || !aut_h.value) {
    sort_checks(report);
    return report;
  }

  const PermutationGroup& autK = *aut_k.value;
  const PermutationGroup& autH = *aut_h.value;

  // Aut(M(K)): direct when M(K) was built, otherwise the image of Aut(H(K)).
  std::optional<PermutationGroup> autM;
  const bool direct = ctx.morse().has_value() && morse_side.aut_m.value.has_value();
  std::vector<Permutation> transported;
  rb.check("hasse.transport_well_defined", "true", [&] {
    transported.reserve(autH.order());
    for (const Permutation& g : autH.elements()) transported.push_back(transport(ctx, g));
    return std::string("true");
  });
  if (direct) {
    autM = *morse_side.aut_m.value;
  } else {
    report.via_hasse = true;
    if (options.force_via_hasse)
      report.via_hasse_reason = "requested";
    else if (ctx.morse_error())
      report.via_hasse_reason = *ctx.morse_error();
    else
      report.via_hasse_reason = morse_side.aut_m.error;
    if (transported.size() == autH.order())
      autM = PermutationGroup::from_elements(ctx.primitive_count(), transported);
  }
  if (autM) report.aut_morse_order = autM->order();

  std::optional<PhiImage> phi;
  rb.check("phi.well_defined", "true", [&] {
    phi = phi_image(ctx, autK);
    return std::string("true");
  });
  if (phi) {
    report.phi_image_order = phi->group.order();
    rb.check("phi.homomorphism", "true", [&] { return yes_no(phi->homomorphism); });
    rb.check("phi.injective", "true", [&] { return yes_no(phi->injective); });
    if (autM)
      rb.check("phi.image_in_aut_morse", "true",
               [&] { return yes_no(phi->group.is_subgroup_of(*autM)); });
  }

  if (autM && transported.size() == autH.order()) {
    if (direct) {
      rb.check("hasse.aut_order_equals_aut_morse", std::to_string(autH.order()),
               [&] { return std::to_string(autM->order()); });
      rb.check("hasse.transport_bijection", "true", [&] {
        const bool into = std::all_of(transported.begin(), transported.end(),
                                      [&](const Permutation& t) { return autM->contains(t); });
        return yes_no(into && is_injective(transported) && transported.size() == autM->order());
      });
    } else {
      // Aut(M(K)) is defined as the image here; what remains checkable is that
      // transport is an injective homomorphism.
      rb.check("hasse.transport_injective_homomorphism", "true", [&] {
        return yes_no(is_injective(transported) &&
                      is_homomorphism(transported, autH, *autM));
      });
    }
  }

  if (options.oracle_samples > 0)
    rb.check("morse.gradient_oracle_disagreements", "0",
             [&] { return oracle_spot_check(ctx, options.oracle_samples, options.seed); });

  if (cls.kind == Classification::Kind::Other) {
    const std::string basis = "external-theorem-consistency";
    rb.check("generic.aut_hasse_equals_aut_complex", std::to_string(autK.order()),
             [&] { return std::to_string(autH.order()); }, basis);
    if (autM && phi)
      rb.check("generic.aut_morse_equals_phi_image", "true",
               [&] { return yes_no(autM->elements() == phi->group.elements()); }, basis);
  }

  if (cls.is_cycle()) {
    const std::size_t n = static_cast<std::size_t>(cls.cycle_n);
    const Graph c2n = cycle_graph(2 * n);
    rb.check("cycle.hasse_isomorphic_to_c2n", "isomorphic", [&] {
      return std::string(graph_isomorphism(ctx.hasse_graph(), c2n) ? "isomorphic"
                                                                     : "not isomorphic");
    });
    std::size_t aut_c2n = 0;
    rb.check("cycle.aut_c2n_order", std::to_string(4 * n), [&] {
      aut_c2n = graph_automorphisms(c2n, options.group_budget).order();
      return std::to_string(aut_c2n);
    });
    if (autM)
      rb.check("cycle.aut_morse_order", std::to_string(aut_c2n),
               [&] { return std::to_string(autM->order()); });
  }

  if (cls.is_boundary()) {
    const std::size_t n = static_cast<std::size_t>(cls.boundary_n);
    const HasseDiagram& h = ctx.hasse();
    std::vector<std::size_t> sizes_expected, degrees_expected;
    for (std::size_t i = 0; i < n; ++i) {
      sizes_expected.push_back(binomial(n + 1, i + 1));
      degrees_expected.push_back(i == 0 || i + 1 == n ? n : n + 1);
    }
    rb.check("boundary.layer_sizes", join(sizes_expected), [&] { return join(layer_sizes(h)); });
    rb.check("boundary.layer_degrees", join(degrees_expected), [&] {
      std::vector<std::size_t> d;
      for (std::size_t i = 0; i < h.layers().size(); ++i) d.push_back(layer_degree(h, i));
      return join(d);
    });
    const auto& h0 = h.layers().front();
    std::vector<Point> block(h0.begin(), h0.end());
    rb.check("boundary.orbit_h0", "2", [&] { return std::to_string(orbit(autH, block).size()); });
    rb.check("boundary.stabilizer_h0", std::to_string(factorial(n + 1)), [&] {
      const std::size_t stab = stabilizer_order(autH, block);
      if (stab != autK.order() || orbit(autH, block).size() * stab != autH.order())
        return "inconsistent: " + std::to_string(stab);
      return std::to_string(stab);
    });
    if (autM)
      rb.check("boundary.aut_morse_order", std::to_string(2 * factorial(n + 1)),
               [&] { return std::to_string(autM->order()); });
    rb.check("boundary.reflection_cosimplicial", "true",
             [&] { return yes_no(reflection_is_cosimplicial_involution(ctx.complex())); });

    std::optional<Permutation> ghost;
    rb.check("boundary.ghost_defined", "true", [&] {
      ghost = reflection_induced(ctx);
      return std::string("true");
    });
    if (ghost) {
      const Permutation& pi = *ghost;
      rb.check("boundary.ghost_involution", "true", [&] { return yes_no((pi * pi).is_identity()); });
      if (ctx.morse())
        rb.check("boundary.ghost_preserves_faces", "true",
                 [&] { return yes_no(preserves_morse_faces(ctx, pi)); });
      if (autM)
        rb.check("boundary.ghost_in_aut_morse", "true", [&] { return yes_no(autM->contains(pi)); });
      if (phi) {
        rb.check("boundary.ghost_commutes_with_phi", "true", [&] {
          return yes_no(std::all_of(phi->images.begin(), phi->images.end(),
                                    [&](const Permutation& f) { return f * pi == pi * f; }));
        });
        rb.check("boundary.ghost_outside_phi", "true",
                 [&] { return yes_no(!phi->group.contains(pi)); });
        if (autM)
          rb.check("boundary.product_map_bijective_homomorphism", "true", [&] {
            // (f, i) -> f_* o pi_*^i on Aut(K) x Z2, element (k, i) at 2k + i.
            const std::size_t m = autK.order();
            std::vector<Permutation> image;
            image.reserve(2 * m);
            for (std::size_t k = 0; k < m; ++k) {
              image.push_back(phi->images[k]);
              image.push_back(phi->images[k] * pi);
            }
            for (std::size_t a = 0; a < 2 * m; ++a)
              for (std::size_t b = 0; b < 2 * m; ++b) {
                auto k = autK.index_of(autK.elements()[a / 2] * autK.elements()[b / 2]);
                if (!k) return std::string("domain not closed");
                const std::size_t prod = 2 * *k + ((a + b) % 2);
                if (image[prod] != image[a] * image[b]) return std::string("not a homomorphism");
              }
            if (!is_injective(image)) return std::string("not injective");
            for (const Permutation& p : image)
              if (!autM->contains(p)) return std::string("image outside Aut(M)");
            return yes_no(image.size() == autM->order());
          });
      }
    }
  }

  if (cls.kind == Classification::Kind::Both) {
    const std::size_t cyc = 4 * static_cast<std::size_t>(cls.cycle_n);
    const std::size_t bnd = 2 * factorial(static_cast<std::size_t>(cls.boundary_n) + 1);
    rb.check("both.predicted_orders_agree", std::to_string(cyc), [&] { return std::to_string(bnd); });
  }

  sort_checks(report);
  return report;
}

}  // namespace morseaut

#include "morseaut_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "morseaut/complex.hpp"
#include "morseaut/complex_io.hpp"
#include "morseaut/errors.hpp"
#include "morseaut/hasse.hpp"
#include "morseaut/morse.hpp"
#include "morseaut/search.hpp"
#include "morseaut/verify.hpp"

namespace morseaut::cli {

namespace {

struct CliConfig {
  std::string command;
  std::string input = "-";
  std::string kind;
  int size = 0;
  std::size_t gvf_budget = kDefaultGvfBudget;
  std::size_t group_budget = kDefaultGroupBudget;
  std::string format;
  std::string of = "complex";
  std::string output;
  bool via_hasse = false;
  bool timings = false;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
};

class Streams {
 public:
  Streams(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read(const std::string& path) const {
    if (path == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot read " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }

  void write(const std::string& path, const std::string& text) const {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw InvalidInput("cannot write " + path);
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s.push_back('\n');
  return s;
}

std::string f_vector_text(const std::vector<std::size_t>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + std::to_string(f[i]);
  return s + ")";
}

void require_format(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) return;
  for (const char* a : allowed)
    if (cfg.format == a) return;
  throw InvalidInput("format '" + cfg.format + "' is not supported by " + cfg.command);
}

int cmd_gen(const CliConfig& cfg, const Streams& io) {
  require_format(cfg, {"text", "json"});
  SimplicialComplex k = [&] {
    if (cfg.kind == "cycle") return generate_cycle(cfg.size);
    if (cfg.kind == "boundary") return generate_boundary_simplex(cfg.size);
    if (cfg.kind == "path") return generate_path(cfg.size);
    if (cfg.kind == "simplex") return generate_simplex(cfg.size);
    throw InvalidInput("unknown generator '" + cfg.kind + "'");
  }();
  io.write(cfg.output, cfg.format == "json" ? with_newline(to_json(k)) : to_facet_text(k));
  return kExitOk;
}

int cmd_build_morse(const CliConfig& cfg, const Streams& io, std::ostream& err) {
  require_format(cfg, {"table", "text", "json"});
  const SimplicialComplex k = parse_complex(io.read(cfg.input));
  const bool json_out = cfg.format == "json";
  try {
    const SimplicialComplex m = build_morse_complex(k, cfg.gvf_budget);
    if (json_out) {
      auto j = nlohmann::json::parse(to_json(m));
      j["partial"] = false;
      io.write(cfg.output, with_newline(j.dump(2)));
    } else {
      io.write("-", "primitives: " + std::to_string(m.vertex_count()) + "\n" +
                        "f-vector: " + f_vector_text(m.f_vector()) + "\n");
      if (!cfg.output.empty()) {
        auto j = nlohmann::json::parse(to_json(m));
        j["partial"] = false;
        io.write(cfg.output, with_newline(j.dump(2)));
      }
    }
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    if (json_out || !cfg.output.empty()) {
      nlohmann::json j;
      j["partial"] = true;
      j["budget"] = e.budget();
      j["gradient_fields_reached"] = e.reached();
      j["primitives"] = primitives(k).size();
      io.write(cfg.output, with_newline(j.dump(2)));
    }
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_aut(const CliConfig& cfg, const Streams& io) {
  require_format(cfg, {"table", "text", "json"});
  const SimplicialComplex k = parse_complex(io.read(cfg.input));
  const PermutationGroup group = [&] {
    if (cfg.of == "complex") return complex_automorphisms(k, cfg.group_budget);
    if (cfg.of == "hasse") return graph_automorphisms(as_graph(build_hasse(k)), cfg.group_budget);
    if (cfg.of != "morse") throw InvalidInput("--of must be complex, hasse or morse");
    if (cfg.via_hasse) {
      const MorseContext ctx(k);
      const auto aut_h = graph_automorphisms(ctx.hasse_graph(), cfg.group_budget);
      std::vector<Permutation> images;
      for (const Permutation& g : aut_h.elements()) images.push_back(transport(ctx, g));
      return PermutationGroup::from_elements(ctx.primitive_count(), std::move(images));
    }
    return complex_automorphisms(build_morse_complex(k, cfg.gvf_budget), cfg.group_budget);
  }();
  const auto gens = group.generators();
  if (cfg.format == "json") {
    nlohmann::json j;
    j["of"] = cfg.of;
    j["degree"] = group.degree();
    j["order"] = group.order();
    j["generators"] = nlohmann::json::array();
    for (const Permutation& g : gens) j["generators"].push_back(g.images());
    io.write(cfg.output, with_newline(j.dump(2)));
  } else {
    std::string text = "order: " + std::to_string(group.order()) + "\ngenerators:";
    if (gens.empty()) text += " none";
    text += "\n";
    for (const Permutation& g : gens) text += "  " + g.to_string() + "\n";
    io.write(cfg.output, text);
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, const Streams& io) {
  require_format(cfg, {"table", "text", "json"});
  const SimplicialComplex k = parse_complex(io.read(cfg.input));
  VerifyOptions options;
  options.gvf_budget = cfg.gvf_budget;
  options.group_budget = cfg.group_budget;
  options.force_via_hasse = cfg.via_hasse;
  options.oracle_samples = cfg.samples;
  options.seed = cfg.seed;
  const VerificationReport report = verify_main_theorem(k, options);
  io.write(cfg.output,
           cfg.format == "json" ? with_newline(report.to_json(cfg.timings)) : report.to_table());
  if (report.overall()) return kExitOk;
  return report.incomplete ? kExitError : kExitTheoremFailure;
}

int cmd_export_dot(const CliConfig& cfg, const Streams& io) {
  require_format(cfg, {"dot"});
  if (cfg.of != "complex" && cfg.of != "hasse")
    throw InvalidInput("export-dot renders the Hasse diagram only");
  const SimplicialComplex k = parse_complex(io.read(cfg.input));
  io.write(cfg.output, to_dot(build_hasse(k), k));
  return kExitOk;
}

int cmd_export_json(const CliConfig& cfg, const Streams& io) {
  require_format(cfg, {"json"});
  const SimplicialComplex k = parse_complex(io.read(cfg.input));
  if (cfg.of == "complex") {
    io.write(cfg.output, with_newline(to_json(k)));
  } else if (cfg.of == "morse") {
    io.write(cfg.output, with_newline(to_json(build_morse_complex(k, cfg.gvf_budget))));
  } else {
    throw InvalidInput("export-json supports --of complex or morse");
  }
  return kExitOk;
}

void add_budgets(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--budget", cfg.gvf_budget, "Maximum number of gradient vector fields")
      ->check(CLI::PositiveNumber);
  sub->add_option("--group-budget", cfg.group_budget, "Maximum automorphism group order")
      ->check(CLI::PositiveNumber);
}

void add_output(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("-o,--output", cfg.output, "Output file, '-' for standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Morse complexes of simplicial complexes and their automorphism groups",
               "morseaut"};
  app.require_subcommand(1, 1);

  auto* gen = app.add_subcommand("gen", "Emit a generated complex as facet text");
  gen->add_option("kind", cfg.kind, "cycle | boundary | path | simplex")->required();
  gen->add_option("n", cfg.size, "Size parameter")->required();
  gen->add_option("--format", cfg.format, "text | json");
  add_output(gen, cfg);

  auto* build = app.add_subcommand("build-morse", "Build M(K) and print its f-vector");
  build->add_option("file", cfg.input, "Complex file, '-' for standard input")->required();
  build->add_option("--format", cfg.format, "table | json");
  add_budgets(build, cfg);
  add_output(build, cfg);

  auto* aut = app.add_subcommand("aut", "Automorphism group order and generators");
  aut->add_option("file", cfg.input, "Complex file, '-' for standard input")->required();
  aut->add_option("--of", cfg.of, "complex | hasse | morse");
  aut->add_option("--format", cfg.format, "table | json");
  aut->add_flag("--via-hasse", cfg.via_hasse, "Aut(M(K)) as the image of Aut(H(K))");
  add_budgets(aut, cfg);
  add_output(aut, cfg);

  auto* verify = app.add_subcommand("verify", "Check the automorphism classification on K");
  verify->add_option("file", cfg.input, "Complex file, '-' for standard input")->required();
  verify->add_option("--format", cfg.format, "table | json");
  verify->add_flag("--via-hasse", cfg.via_hasse, "Do not build M(K)");
  verify->add_flag("--timings", cfg.timings, "Include elapsed_ms in JSON output");
  verify->add_option("--seed", cfg.seed, "Seed for the gradient oracle spot check");
  verify->add_option("--samples", cfg.samples, "Random matchings checked against the oracle");
  add_budgets(verify, cfg);
  add_output(verify, cfg);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in Graphviz format");
  dot->add_option("file", cfg.input, "Complex file, '-' for standard input")->required();
  dot->add_option("--of", cfg.of, "hasse");
  dot->add_option("--format", cfg.format, "dot");
  add_output(dot, cfg);

  auto* json = app.add_subcommand("export-json", "Complex or Morse complex as JSON");
  json->add_option("file", cfg.input, "Complex file, '-' for standard input")->required();
  json->add_option("--of", cfg.of, "complex | morse");
  json->add_option("--format", cfg.format, "json");
  add_budgets(json, cfg);
  add_output(json, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  const Streams io(in, out);
  try {
    if (gen->parsed()) cfg.command = "gen";
    if (build->parsed()) cfg.command = "build-morse";
    if (aut->parsed()) cfg.command = "aut";
    if (verify->parsed()) cfg.command = "verify";
    if (dot->parsed()) cfg.command = "export-dot";
    if (json->parsed()) cfg.command = "export-json";

    if (cfg.command == "gen") return cmd_gen(cfg, io);
    if (cfg.command == "build-morse") return cmd_build_morse(cfg, io, err);
    if (cfg.command == "aut") return cmd_aut(cfg, io);
    if (cfg.command == "verify") return cmd_verify(cfg, io);
    if (cfg.command == "export-dot") return cmd_export_dot(cfg, io);
    return cmd_export_json(cfg, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace morseaut::cli

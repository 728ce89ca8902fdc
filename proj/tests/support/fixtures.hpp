#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "morseaut/complex.hpp"
#include "morseaut/complex_io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(MORSEAUT_FIXTURE_DIR) + "/" + name + ".txt";
}

inline morseaut::SimplicialComplex load(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  return morseaut::parse_facet_text(in);
}

/// Connected fixtures of the generic branch.
inline const std::vector<std::string>& generic_names() {
  static const std::vector<std::string> names{"p3",   "p4",       "p5",     "star3",
                                              "kite", "simplex3", "mobius5"};
  return names;
}

/// Triangle on a, b, c.
inline morseaut::SimplicialComplex triangle_abc() {
  return morseaut::SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

}  // namespace fixtures

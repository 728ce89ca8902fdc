#include "morseaut/complex_io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "morseaut/errors.hpp"

namespace morseaut {

using nlohmann::json;

SimplicialComplex parse_facet_text(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> facet;
    for (std::string tok; tokens >> tok;) facet.push_back(tok);
    if (facet.empty()) continue;
    std::vector<std::string> sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("line " + std::to_string(line_no) +
                         ": duplicate vertex within a facet");
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw InvalidInput("no facets in input");
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex parse_facet_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_facet_text(in);
}

std::string to_facet_text(const SimplicialComplex& complex) {
  std::string out;
  for (const auto& facet : complex.facet_labels()) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (i > 0) out += ' ';
      out += facet[i];
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SimplicialComplex& complex, int indent) {
  json j;
  j["vertices"] = complex.labels();
  j["facets"] = complex.facet_labels();
  j["f_vector"] = complex.f_vector();
  return j.dump(indent);
}

SimplicialComplex parse_complex_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
    throw InvalidInput("JSON complex must be an object with a `facets` array");
  std::vector<std::vector<std::string>> facets;
  std::optional<std::vector<std::size_t>> f_vector;
  try {
    facets = j["facets"].get<std::vector<std::vector<std::string>>>();
    // Keep the declared vertex order when present so ids survive a round trip.
    if (j.contains("vertices") && !facets.empty()) {
      std::vector<std::vector<std::string>> ordered;
      for (const auto& v : j["vertices"].get<std::vector<std::string>>()) ordered.push_back({v});
      ordered.insert(ordered.end(), facets.begin(), facets.end());
      facets = std::move(ordered);
    }
    if (j.contains("f_vector")) f_vector = j["f_vector"].get<std::vector<std::size_t>>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON complex: ") + e.what());
  }
  SimplicialComplex k = SimplicialComplex::from_facets(facets);
  if (f_vector && *f_vector != k.f_vector())
    throw InvalidInput("`f_vector` does not match the closure of `facets`");
  return k;
}

SimplicialComplex parse_complex(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_complex_json(text);
  return parse_facet_text(text);
}

}  // namespace morseaut

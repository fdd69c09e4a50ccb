#include "hyperdual/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hyperdual/errors.hpp"
#include "json.hpp"

namespace hyperdual {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  // nlohmann reports a 1-based byte count of the last character read.
  const std::size_t end = std::min(text.size(), byte == 0 ? 0 : byte - 1);
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t as_count(const json& v, const std::string& what) {
  if (!v.is_number_unsigned()) throw ValidationError(what + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

double as_real(const json& v, const std::string& what) {
  if (!v.is_number()) throw ValidationError(what + " must be a number");
  return v.get<double>();
}

}  // namespace

Hypergraph ModelDocument::hypergraph() const {
  std::vector<Hypergraph::Edge> e(edges.begin(), edges.end());
  return Hypergraph(k, std::move(e));
}

SpinModel ModelDocument::spin_model() const {
  if (!couplings) throw ValidationError("model has no couplings");
  if (!beta) throw ValidationError("model has no beta");
  return SpinModel(hypergraph(), *couplings, *beta);
}

ModelDocument document_from(const Hypergraph& h) {
  ModelDocument doc;
  doc.k = h.num_vertices();
  doc.edges = h.edges();
  return doc;
}

ModelDocument document_from(const SpinModel& model) {
  ModelDocument doc = document_from(model.graph());
  doc.couplings = model.couplings();
  doc.beta = model.beta();
  return doc;
}

ModelDocument parse_model(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..." prefix.
    if (auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw SyntaxError(line, column, what);
  }
  if (!root.is_object()) throw ValidationError("model document must be a JSON object");

  for (const auto& [key, value] : root.items()) {
    static constexpr std::string_view known[] = {"format_version", "k", "edges", "couplings",
                                                 "beta"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ValidationError("unknown field \"" + key + "\"");
    }
  }

  ModelDocument doc;
  const auto version = as_count(require(root, "format_version"), "format_version");
  if (version != static_cast<std::uint64_t>(kModelFormatVersion)) {
    throw ValidationError("unsupported format_version " + std::to_string(version));
  }
  doc.k = static_cast<std::size_t>(as_count(require(root, "k"), "k"));

  const json& edges = require(root, "edges");
  if (!edges.is_array()) throw ValidationError("edges must be a list");
  for (std::size_t m = 0; m < edges.size(); ++m) {
    const std::string where = "edge " + std::to_string(m);
    if (!edges[m].is_array()) throw ValidationError(where + " must be a list of vertices");
    std::vector<std::uint32_t> edge;
    for (const auto& v : edges[m]) {
      const auto idx = as_count(v, where + " vertex");
      if (idx >= doc.k) {
        throw ValidationError(where + ": vertex " + std::to_string(idx) + " out of range (k=" +
                              std::to_string(doc.k) + ")");
      }
      edge.push_back(static_cast<std::uint32_t>(idx));
    }
    std::sort(edge.begin(), edge.end());
    doc.edges.push_back(std::move(edge));
  }

  if (auto it = root.find("couplings"); it != root.end()) {
    if (!it->is_array()) throw ValidationError("couplings must be a list");
    std::vector<double> js;
    for (std::size_t m = 0; m < it->size(); ++m) {
      js.push_back(as_real((*it)[m], "coupling " + std::to_string(m)));
    }
    if (js.size() != doc.edges.size()) {
      throw ValidationError("couplings has " + std::to_string(js.size()) + " entries, expected " +
                            std::to_string(doc.edges.size()));
    }
    doc.couplings = std::move(js);
  }
  if (auto it = root.find("beta"); it != root.end()) {
    const double beta = as_real(*it, "beta");
    if (!(beta >= 0.0)) throw ValidationError("beta must be non-negative");
    doc.beta = beta;
  }

  // Remaining structural checks (empty edges, repeated vertices).
  (void)doc.hypergraph();
  return doc;
}

std::string serialize_model(const ModelDocument& doc) {
  nlohmann::ordered_json out;
  out["format_version"] = doc.format_version;
  out["k"] = doc.k;
  out["edges"] = doc.edges;
  if (doc.couplings) out["couplings"] = *doc.couplings;
  if (doc.beta) out["beta"] = *doc.beta;
  return out.dump() + "\n";
}

}  // namespace hyperdual

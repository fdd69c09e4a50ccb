#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdual/hypergraph.hpp"
#include "hyperdual/spin_model.hpp"

namespace hyperdual {

inline constexpr int kModelFormatVersion = 1;

/// On-disk model: a JSON object with fields, in canonical order,
///   format_version  integer, must be 1
///   k               vertex count
///   edges           list of vertex lists
///   couplings       optional, one real per edge
///   beta            optional, non-negative real
/// Parsing sorts the vertices of every edge; edge order is kept.
struct ModelDocument {
  int format_version = kModelFormatVersion;
  std::size_t k = 0;
  std::vector<std::vector<std::uint32_t>> edges;
  std::optional<std::vector<double>> couplings;
  std::optional<double> beta;

  [[nodiscard]] Hypergraph hypergraph() const;
  /// Throws ValidationError if couplings or beta are absent.
  [[nodiscard]] SpinModel spin_model() const;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

[[nodiscard]] ModelDocument document_from(const Hypergraph& h);
[[nodiscard]] ModelDocument document_from(const SpinModel& model);

/// Throws SyntaxError (with line and column) on malformed JSON and
/// ValidationError on a well-formed document that does not describe a
/// valid model.
[[nodiscard]] ModelDocument parse_model(std::string_view text);

/// Single-line canonical JSON followed by a newline. Reals use the shortest
/// representation that reads back to the same double.
[[nodiscard]] std::string serialize_model(const ModelDocument& doc);

}  // namespace hyperdual

#pragma once

// Plain-text documents for matrices and networks.
//
//   # comment
//   kind: trop-matrix | weight-matrix
//   rows: 2
//   cols: 2
//   data:
//   0 1/2
//   -inf 3.5
//
//   kind: network
//   nodes: 4
//   sources: 0 1
//   targets: 3 2
//   arcs:
//   0 3 1
//   1 2 -inf
//
// Entries are integers, p/q or decimals; "-inf" is allowed in trop-matrix
// data and arc weights. Tokens may be spread over lines freely.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "troptp/network.hpp"
#include "troptp/tropical.hpp"

namespace troptp {

enum class DocumentKind { TropMatrix, WeightMatrix, Network };

struct Document {
  DocumentKind kind = DocumentKind::TropMatrix;
  TropMatrix matrix;       // trop-matrix
  WeightMatrix weights;    // weight-matrix
  PlanarNetwork network;   // network
};

/// Throws Error(Parse) on malformed input, Error(Shape) on a non-square
/// weight matrix.
Document parse_document(std::string_view text);

/// Reads a whole stream and parses it.
Document read_document(std::istream& in);

std::string format_trop_matrix(const TropMatrix& m);
std::string format_weight_matrix(const WeightMatrix& w);
std::string format_network(const PlanarNetwork& net);

}  // namespace troptp

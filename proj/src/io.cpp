#include "troptp/io.hpp"

#include <istream>
#include <iterator>
#include <map>
#include <sstream>
#include <vector>

#include "troptp/error.hpp"

namespace troptp {
namespace {

struct RawDocument {
  std::map<std::string, std::string> headers;
  std::vector<std::string> body;  // tokens after "data:" / "arcs:"
  std::string body_key;
};

RawDocument split(std::string_view text) {
  RawDocument raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (raw.body_key.empty()) {
      const auto colon = line.find(':');
      if (colon == std::string::npos) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 'key: value'");
      }
      std::istringstream key_in(line.substr(0, colon));
      std::string key;
      key_in >> key;
      const std::string value = line.substr(colon + 1);
      if (key == "data" || key == "arcs") {
        raw.body_key = key;
        std::istringstream rest(value);
        for (std::string tok; rest >> tok;) raw.body.push_back(tok);
        continue;
      }
      if (raw.headers.count(key)) throw Error(ErrorCode::Parse, "duplicate key '" + key + "'");
      raw.headers[key] = value;
    } else {
      std::istringstream rest(line);
      for (std::string tok; rest >> tok;) raw.body.push_back(tok);
    }
  }
  return raw;
}

const std::string& header(const RawDocument& raw, const std::string& key) {
  auto it = raw.headers.find(key);
  if (it == raw.headers.end()) throw Error(ErrorCode::Parse, "missing '" + key + ":'");
  return it->second;
}

std::vector<std::string> tokens(const std::string& value) {
  std::istringstream in(value);
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

std::size_t parse_count(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::Parse, "expected a nonnegative integer, got '" + token + "'");
  }
  return std::stoul(token);
}

std::size_t single_count(const RawDocument& raw, const std::string& key) {
  const auto t = tokens(header(raw, key));
  if (t.size() != 1) throw Error(ErrorCode::Parse, "'" + key + ":' takes one value");
  return parse_count(t.front());
}

TropValue parse_trop(const std::string& token) {
  if (token == "-inf") return TropValue::neg_inf();
  return parse_rational(token);
}

std::string single_token(const RawDocument& raw, const std::string& key) {
  const auto t = tokens(header(raw, key));
  if (t.size() != 1) throw Error(ErrorCode::Parse, "'" + key + ":' takes one value");
  return t.front();
}

}  // namespace

Document parse_document(std::string_view text) {
  const RawDocument raw = split(text);
  const std::string kind = single_token(raw, "kind");
  Document doc;

  if (kind == "trop-matrix" || kind == "weight-matrix") {
    if (raw.body_key != "data") throw Error(ErrorCode::Parse, "missing 'data:'");
    const std::size_t rows = single_count(raw, "rows");
    const std::size_t cols = single_count(raw, "cols");
    if (raw.body.size() != rows * cols) {
      throw Error(ErrorCode::Parse, "expected " + std::to_string(rows * cols) + " entries, got " +
                                        std::to_string(raw.body.size()));
    }
    if (kind == "trop-matrix") {
      doc.kind = DocumentKind::TropMatrix;
      doc.matrix = TropMatrix(rows, cols);
      for (std::size_t k = 0; k < raw.body.size(); ++k) doc.matrix(k / cols, k % cols) = parse_trop(raw.body[k]);
    } else {
      if (rows != cols) throw Error(ErrorCode::Shape, "weight matrix must be square");
      doc.kind = DocumentKind::WeightMatrix;
      doc.weights = WeightMatrix(rows);
      for (std::size_t k = 0; k < raw.body.size(); ++k) doc.weights(k / cols, k % cols) = parse_rational(raw.body[k]);
    }
    return doc;
  }

  if (kind == "network") {
    if (raw.body_key != "arcs") throw Error(ErrorCode::Parse, "missing 'arcs:'");
    const std::size_t nodes = single_count(raw, "nodes");
    std::vector<std::size_t> sources, targets;
    for (const auto& t : tokens(header(raw, "sources"))) sources.push_back(parse_count(t));
    for (const auto& t : tokens(header(raw, "targets"))) targets.push_back(parse_count(t));
    if (raw.body.size() % 3 != 0) throw Error(ErrorCode::Parse, "arcs are 'from to weight' triples");
    std::vector<Arc> arcs;
    for (std::size_t k = 0; k < raw.body.size(); k += 3) {
      arcs.push_back({parse_count(raw.body[k]), parse_count(raw.body[k + 1]), parse_trop(raw.body[k + 2])});
    }
    doc.kind = DocumentKind::Network;
    try {
      doc.network = PlanarNetwork(nodes, std::move(arcs), std::move(sources), std::move(targets));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
    return doc;
  }

  throw Error(ErrorCode::Parse, "unknown kind '" + kind + "'");
}

Document read_document(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string format_trop_matrix(const TropMatrix& m) {
  std::ostringstream out;
  out << "kind: trop-matrix\nrows: " << m.rows() << "\ncols: " << m.cols() << "\ndata:\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

std::string format_weight_matrix(const WeightMatrix& w) {
  std::ostringstream out;
  out << "kind: weight-matrix\nrows: " << w.n() << "\ncols: " << w.n() << "\ndata:\n";
  for (std::size_t i = 0; i < w.n(); ++i) {
    for (std::size_t j = 0; j < w.n(); ++j) out << (j ? " " : "") << to_string(w(i, j));
    out << '\n';
  }
  return out.str();
}

std::string format_network(const PlanarNetwork& net) {
  std::ostringstream out;
  out << "kind: network\nnodes: " << net.node_count() << "\nsources:";
  for (auto s : net.sources()) out << ' ' << s;
  out << "\ntargets:";
  for (auto t : net.targets()) out << ' ' << t;
  out << "\narcs:\n";
  for (const Arc& a : net.arcs()) out << a.from << ' ' << a.to << ' ' << to_string(a.weight) << '\n';
  return out.str();
}

}  // namespace troptp

#include "troptp/network.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "troptp/error.hpp"
#include "troptp/kernels.hpp"

namespace troptp {

WeightMatrix::WeightMatrix(std::size_t n, const Rational& fill) : n_(n), data_(n * n, fill) {}

WeightMatrix::WeightMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorCode::Shape, "weight matrix must be square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

WeightMatrix WeightMatrix::from_trop(const TropMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::Shape, "weight matrix must be square");
  WeightMatrix w(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j).value();
  return w;
}

TropMatrix WeightMatrix::to_trop() const {
  TropMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

PlanarNetwork::PlanarNetwork(std::size_t node_count, std::vector<Arc> arcs, std::vector<std::size_t> sources,
                             std::vector<std::size_t> targets, std::vector<GridPos> positions)
    : node_count_(node_count),
      arcs_(std::move(arcs)),
      sources_(std::move(sources)),
      targets_(std::move(targets)),
      positions_(std::move(positions)),
      out_(node_count) {
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (arcs_[k].from >= node_count_ || arcs_[k].to >= node_count_) {
      throw Error(ErrorCode::BadIndex, "arc endpoint out of range");
    }
    out_[arcs_[k].from].push_back(k);
  }
  for (std::size_t s : sources_) {
    if (s >= node_count_) throw Error(ErrorCode::BadIndex, "source out of range");
    if (std::find(targets_.begin(), targets_.end(), s) != targets_.end()) {
      throw Error(ErrorCode::Shape, "sources and targets must be disjoint");
    }
  }
  for (std::size_t t : targets_) {
    if (t >= node_count_) throw Error(ErrorCode::BadIndex, "target out of range");
  }
  if (!positions_.empty() && positions_.size() != node_count_) {
    throw Error(ErrorCode::Shape, "one grid position per node");
  }
}

std::vector<std::size_t> PlanarNetwork::topological_order() const {
  std::vector<std::size_t> indegree(node_count_, 0);
  for (const Arc& a : arcs_) ++indegree[a.to];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < node_count_; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::vector<std::size_t> order;
  order.reserve(node_count_);
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (std::size_t k : out_[v]) {
      if (--indegree[arcs_[k].to] == 0) ready.push_back(arcs_[k].to);
    }
  }
  if (order.size() != node_count_) throw Error(ErrorCode::Cyclic, "network contains a cycle");
  return order;
}

namespace {

struct Reach {
  std::vector<TropValue> best;
  std::vector<std::uint64_t> count;
};

// Longest-path DP from one node, with the number of optimal paths.
Reach longest_from(const PlanarNetwork& net, const std::vector<std::size_t>& order, std::size_t start) {
  Reach r{std::vector<TropValue>(net.node_count()), std::vector<std::uint64_t>(net.node_count(), 0)};
  r.best[start] = TropValue::unit();
  r.count[start] = 1;
  for (std::size_t v : order) {
    if (r.best[v].is_neg_inf()) continue;
    for (std::size_t k : net.out_arcs()[v]) {
      const Arc& a = net.arcs()[k];
      if (a.weight.is_neg_inf()) continue;
      TropValue cand = otimes(r.best[v], a.weight);
      if (r.best[a.to] < cand) {
        r.best[a.to] = std::move(cand);
        r.count[a.to] = r.count[v];
      } else if (r.best[a.to] == cand) {
        r.count[a.to] += r.count[v];
      }
    }
  }
  return r;
}

}  // namespace

TropMatrix transfer_matrix(const PlanarNetwork& net) {
  const auto order = net.topological_order();
  TropMatrix m(net.sources().size(), net.targets().size());
  for (std::size_t i = 0; i < net.sources().size(); ++i) {
    const Reach r = longest_from(net, order, net.sources()[i]);
    for (std::size_t j = 0; j < net.targets().size(); ++j) m(i, j) = r.best[net.targets()[j]];
  }
  return m;
}

std::vector<std::vector<std::uint64_t>> optimal_path_counts(const PlanarNetwork& net) {
  const auto order = net.topological_order();
  std::vector<std::vector<std::uint64_t>> counts(net.sources().size());
  for (std::size_t i = 0; i < net.sources().size(); ++i) {
    const Reach r = longest_from(net, order, net.sources()[i]);
    for (std::size_t t : net.targets()) counts[i].push_back(r.best[t].is_finite() ? r.count[t] : 0);
  }
  return counts;
}

std::uint64_t count_optimal_paths(const PlanarNetwork& net, std::size_t source, std::size_t target) {
  if (source >= net.sources().size() || target >= net.targets().size()) {
    throw Error(ErrorCode::BadIndex, "source or target index out of range");
  }
  const Reach r = longest_from(net, net.topological_order(), net.sources()[source]);
  const std::size_t t = net.targets()[target];
  if (r.best[t].is_neg_inf()) throw Error(ErrorCode::Disconnected, "no path between the given endpoints");
  return r.count[t];
}

std::size_t canonical_column_count(std::size_t n) { return 2 * n; }

std::size_t canonical_node(std::size_t n, std::size_t column, std::size_t level) {
  return column * n + (level - 1);
}

std::vector<CanonicalArc> canonical_layout(std::size_t n) {
  std::vector<CanonicalArc> arcs;
  if (n == 0) return arcs;
  for (std::size_t c = 0; c + 1 < canonical_column_count(n); ++c) {
    for (std::size_t l = 1; l <= n; ++l) {
      CanonicalArc h{c, l, l, std::nullopt};
      if (c == n - 1) h.weight = std::pair{l - 1, l - 1};
      arcs.push_back(h);
    }
    if (c + 1 < n) {
      const std::size_t k = c + 1;
      for (std::size_t i = n - k + 1; i <= n; ++i) {
        arcs.push_back({c, i, i - 1, std::pair{i - 1, i - (n - k) - 1}});
      }
    } else if (c >= n) {
      const std::size_t k = 2 * n - 1 - c;
      for (std::size_t j = n - k + 1; j <= n; ++j) {
        arcs.push_back({c, j - 1, j, std::pair{j - (n - k) - 1, j - 1}});
      }
    }
  }
  return arcs;
}

PlanarNetwork build_canonical(const WeightMatrix& w) {
  const std::size_t n = w.n();
  if (n == 0) throw Error(ErrorCode::Shape, "G_n needs n >= 1");
  const std::size_t columns = canonical_column_count(n);
  std::vector<GridPos> positions(columns * n);
  for (std::size_t c = 0; c < columns; ++c)
    for (std::size_t l = 1; l <= n; ++l) positions[canonical_node(n, c, l)] = {c, l};

  std::vector<Arc> arcs;
  for (const CanonicalArc& a : canonical_layout(n)) {
    TropValue weight = a.weight ? TropValue(w(a.weight->first, a.weight->second)) : TropValue::unit();
    arcs.push_back({canonical_node(n, a.column, a.from_level), canonical_node(n, a.column + 1, a.to_level),
                    std::move(weight)});
  }
  std::vector<std::size_t> sources, targets;
  for (std::size_t l = 1; l <= n; ++l) {
    sources.push_back(canonical_node(n, 0, l));
    targets.push_back(canonical_node(n, columns - 1, l));
  }
  return PlanarNetwork(columns * n, std::move(arcs), std::move(sources), std::move(targets), std::move(positions));
}

InequalityReport inequality_report(const WeightMatrix& w) {
  InequalityReport r;
  auto record = [&r](InequalityKind kind, std::size_t i, std::size_t j, const Rational& larger,
                     const Rational& smaller) {
    if (larger > smaller) return;
    const bool breaks_weak = larger < smaller;
    const bool trapeze = kind == InequalityKind::Trapeze;
    (trapeze ? r.strict_trapeze : r.strict_parallelogram) = false;
    if (breaks_weak) (trapeze ? r.weak_trapeze : r.weak_parallelogram) = false;
    r.violations.push_back({kind, i, j, breaks_weak});
  };
  for (std::size_t i = 1; i < w.n(); ++i) {
    record(InequalityKind::Trapeze, i, i, w(i, i), w(i, i - 1) + w(i - 1, i - 1) + w(i - 1, i));
    for (std::size_t t = 1; t < i; ++t) {
      record(InequalityKind::ParallelogramRow, i, t, w(i, t), w(i, t - 1));
      record(InequalityKind::ParallelogramColumn, t, i, w(t, i), w(t - 1, i));
    }
  }
  return r;
}

Rational uppermost_weight(const WeightMatrix& w, std::size_t i, std::size_t j) {
  if (i >= w.n() || j >= w.n()) throw Error(ErrorCode::BadIndex, "uppermost path endpoint out of range");
  Rational sum = 0;
  if (i <= j) {
    for (std::size_t t = i; t <= j; ++t) sum += w(i, t);
  } else {
    for (std::size_t t = j; t <= i; ++t) sum += w(t, j);
  }
  return sum;
}

void validate_path(const PlanarNetwork& net, const PathSeq& path) {
  if (path.arcs.empty()) throw Error(ErrorCode::NotAPath, "empty path");
  for (std::size_t k = 0; k < path.arcs.size(); ++k) {
    if (path.arcs[k] >= net.arcs().size()) throw Error(ErrorCode::NotAPath, "unknown arc");
    if (k > 0 && net.arcs()[path.arcs[k - 1]].to != net.arcs()[path.arcs[k]].from) {
      throw Error(ErrorCode::NotAPath, "consecutive arcs do not share an endpoint");
    }
  }
  const auto& s = net.sources();
  const auto& t = net.targets();
  if (std::find(s.begin(), s.end(), net.arcs()[path.arcs.front()].from) == s.end()) {
    throw Error(ErrorCode::NotAPath, "path does not start at a source");
  }
  if (std::find(t.begin(), t.end(), net.arcs()[path.arcs.back()].to) == t.end()) {
    throw Error(ErrorCode::NotAPath, "path does not end at a target");
  }
}

Rational path_weight(const PlanarNetwork& net, const PathSeq& path) {
  validate_path(net, path);
  Rational sum = 0;
  for (std::size_t k : path.arcs) sum += net.arcs()[k].weight.value();
  return sum;
}

std::vector<std::size_t> path_levels(const PlanarNetwork& canonical, const PathSeq& path) {
  validate_path(canonical, path);
  if (canonical.positions().empty()) throw Error(ErrorCode::NotAPath, "network has no grid layout");
  std::vector<std::size_t> levels;
  levels.push_back(canonical.positions()[canonical.arcs()[path.arcs.front()].from].level);
  for (std::size_t k : path.arcs) levels.push_back(canonical.positions()[canonical.arcs()[k].to].level);
  return levels;
}

PathSeq path_from_levels(const PlanarNetwork& canonical, const std::vector<std::size_t>& levels) {
  const std::size_t n = canonical.sources().size();
  if (levels.size() != canonical_column_count(n)) throw Error(ErrorCode::NotAPath, "one level per column");
  PathSeq path;
  for (std::size_t c = 0; c + 1 < levels.size(); ++c) {
    if (levels[c] < 1 || levels[c] > n) throw Error(ErrorCode::NotAPath, "level out of range");
    const std::size_t from = canonical_node(n, c, levels[c]);
    bool found = false;
    for (std::size_t k : canonical.out_arcs()[from]) {
      if (canonical.positions()[canonical.arcs()[k].to].level == levels[c + 1]) {
        path.arcs.push_back(k);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::NotAPath, "no arc for step at column " + std::to_string(c));
  }
  return path;
}

std::vector<std::size_t> uppermost_levels(std::size_t n, std::size_t i, std::size_t j) {
  // 1-based levels; i, j are 0-based endpoints.
  const std::size_t src = i + 1, dst = j + 1;
  std::vector<std::size_t> levels(canonical_column_count(n));
  for (std::size_t c = 0; c < levels.size(); ++c) {
    if (src <= dst) {
      levels[c] = c <= n ? src : std::min(dst, src + (c - n));
    } else {
      // descents from src down to dst occupy the last src-dst left transitions
      const std::size_t start = n - 1 - (src - dst);
      levels[c] = c <= start ? src : std::max(dst, src + start - std::min(c, n - 1));
    }
  }
  return levels;
}

namespace {

std::vector<Mutation> applicable_mutations(std::size_t n, const std::vector<std::size_t>& L) {
  std::vector<Mutation> out;
  for (std::size_t c = 1; c + 1 < L.size(); ++c) {
    // left: delay a descent L[c-1] -> L[c] by one column
    if (c + 1 <= n - 1 && L[c] + 1 == L[c - 1] && L[c + 1] == L[c]) {
      out.push_back({MutationKind::ParallelogramLeft, c, L[c - 1]});
    }
    // trapeze: descent into the middle followed by the matching ascent
    if (n >= 2 && c == n - 1 && L[c - 1] == L[c] + 1 && L[c + 1] == L[c] && L[c + 2] == L[c - 1]) {
      out.push_back({MutationKind::Trapeze, c, L[c - 1]});
    }
    // right: advance an ascent L[c] -> L[c+1] by one column
    if (c - 1 >= n && L[c - 1] == L[c] && L[c + 1] == L[c] + 1) {
      out.push_back({MutationKind::ParallelogramRight, c, L[c + 1]});
    }
  }
  return out;
}

}  // namespace

NormalizedPath normalize_path(const WeightMatrix& w, const PathSeq& path, const MutationChooser& choose) {
  const PlanarNetwork net = build_canonical(w);
  std::vector<std::size_t> levels = path_levels(net, path);
  const std::size_t n = w.n();
  NormalizedPath out;
  while (true) {
    const auto options = applicable_mutations(n, levels);
    if (options.empty()) break;
    const std::size_t pick = choose ? choose(options.size()) : 0;
    if (pick >= options.size()) throw Error(ErrorCode::BadIndex, "mutation chooser out of range");
    const Mutation& m = options[pick];
    levels[m.column] = m.level;
    if (m.kind == MutationKind::Trapeze) levels[m.column + 1] = m.level;
    out.trace.push_back(m);
  }
  out.path = path_from_levels(net, levels);
  return out;
}

bool is_totally_connected(const PlanarNetwork& net) {
  const std::size_t n = net.sources().size();
  if (n != net.targets().size()) throw Error(ErrorCode::Shape, "needs as many sources as targets");
  if (n > kConnectivitySourceLimit || net.node_count() > kConnectivityNodeLimit) {
    throw Error(ErrorCode::TooLarge, "total connectivity budget exceeded");
  }
  net.topological_order();

  // Unit node capacities via node splitting: in(v) = 2v, out(v) = 2v + 1.
  const std::size_t V = 2 * net.node_count() + 2;
  const std::size_t S = V - 2, T = V - 1;
  struct Edge {
    std::size_t to;
    int cap;
  };
  std::vector<Edge> base_edges;
  std::vector<std::vector<std::size_t>> base_adj(V);
  auto add_edge = [](std::vector<Edge>& edges, std::vector<std::vector<std::size_t>>& adj, std::size_t u,
                     std::size_t v) {
    adj[u].push_back(edges.size());
    edges.push_back({v, 1});
    adj[v].push_back(edges.size());
    edges.push_back({u, 0});
  };
  for (std::size_t v = 0; v < net.node_count(); ++v) add_edge(base_edges, base_adj, 2 * v, 2 * v + 1);
  for (const Arc& a : net.arcs()) {
    if (a.weight.is_finite()) add_edge(base_edges, base_adj, 2 * a.from + 1, 2 * a.to);
  }

  for (const auto& I : index_subsets(n, n)) {
    for (const auto& J : index_subsets(n, n)) {
      if (I.size() != J.size()) continue;
      auto edges = base_edges;
      auto adj = base_adj;
      for (std::size_t i : I) add_edge(edges, adj, S, 2 * net.sources()[i]);
      for (std::size_t j : J) add_edge(edges, adj, 2 * net.targets()[j] + 1, T);

      std::size_t flow = 0;
      while (true) {
        std::vector<std::ptrdiff_t> via(V, -1);
        std::deque<std::size_t> queue{S};
        std::vector<bool> seen(V, false);
        seen[S] = true;
        while (!queue.empty() && !seen[T]) {
          const std::size_t u = queue.front();
          queue.pop_front();
          for (std::size_t e : adj[u]) {
            if (edges[e].cap > 0 && !seen[edges[e].to]) {
              seen[edges[e].to] = true;
              via[edges[e].to] = static_cast<std::ptrdiff_t>(e);
              queue.push_back(edges[e].to);
            }
          }
        }
        if (!seen[T]) break;
        for (std::size_t v = T; v != S;) {
          const auto e = static_cast<std::size_t>(via[v]);
          edges[e].cap -= 1;
          edges[e ^ 1].cap += 1;
          v = edges[e ^ 1].to;
        }
        ++flow;
      }
      if (flow < I.size()) return false;
    }
  }
  return true;
}

std::string to_dot(const PlanarNetwork& net) {
  auto name = [&net](std::size_t v) {
    if (net.positions().empty()) return "x_" + std::to_string(v);
    return "x_" + std::to_string(net.positions()[v].column) + "_" + std::to_string(net.positions()[v].level);
  };
  std::ostringstream out;
  out << "digraph network {\n  rankdir=LR;\n  node [shape=point];\n";
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    out << "  \"" << name(v) << "\"";
    if (!net.positions().empty()) {
      out << " [pos=\"" << net.positions()[v].column << "," << net.positions()[v].level << "!\"]";
    }
    out << ";\n";
  }
  for (std::size_t k = 0; k < net.sources().size(); ++k)
    out << "  \"" << name(net.sources()[k]) << "\" [xlabel=\"s" << k + 1 << "\"];\n";
  for (std::size_t k = 0; k < net.targets().size(); ++k)
    out << "  \"" << name(net.targets()[k]) << "\" [xlabel=\"t" << k + 1 << "\"];\n";
  for (const Arc& a : net.arcs()) {
    out << "  \"" << name(a.from) << "\" -> \"" << name(a.to) << "\" [label=\"" << to_string(a.weight) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace troptp

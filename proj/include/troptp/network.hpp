#pragma once

// Weighted planar networks (acyclic digraphs with ordered sources and
// targets), their tropical transfer matrices, and the canonical totally
// connected network G_n built from an n x n matrix of weights.
//
// Layout of G_n used throughout: nodes sit on a grid, column c in
// [0, 2n-1] and level l in [1, n] (level 1 at the bottom). Between
// consecutive columns every level has a horizontal arc of weight 0, except
// the middle transition (n-1 -> n), whose horizontal arc at level l carries
// w(l,l). The n-1 transitions left of the middle also carry descending arcs,
// the n-1 transitions right of it ascending arcs:
//
//   left  transition c = k-1 -> k,  k = 1..n-1:
//         (c, i) -> (c+1, i-1), weight w(i, i-(n-k)),  i = n-k+1..n
//   right transition c -> c+1, k = 2n-1-c = 1..n-1:
//         (c, j-1) -> (c+1, j), weight w(j-(n-k), j),  j = n-k+1..n
//
// Sources are (0, l), targets (2n-1, l).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troptp/tropical.hpp"

namespace troptp {

/// n x n matrix of finite weights w(i,j) of G_n.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t n, const Rational& fill = 0);
  WeightMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  /// Throws Error(RequiresFinite) on -inf, Error(Shape) if not square.
  static WeightMatrix from_trop(const TropMatrix& m);
  TropMatrix to_trop() const;

  std::size_t n() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  TropValue weight = TropValue::unit();
};

struct GridPos {
  std::size_t column = 0;
  std::size_t level = 0;  // 1-based, bottom to top

  friend bool operator==(const GridPos&, const GridPos&) = default;
};

class PlanarNetwork {
 public:
  PlanarNetwork() = default;
  /// Sources and targets are listed bottom to top and must be disjoint.
  /// Acyclicity is checked by the algorithms that rely on it.
  PlanarNetwork(std::size_t node_count, std::vector<Arc> arcs, std::vector<std::size_t> sources,
                std::vector<std::size_t> targets, std::vector<GridPos> positions = {});

  std::size_t node_count() const noexcept { return node_count_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<std::size_t>& sources() const noexcept { return sources_; }
  const std::vector<std::size_t>& targets() const noexcept { return targets_; }
  /// Grid coordinates; empty unless the network was built on a grid.
  const std::vector<GridPos>& positions() const noexcept { return positions_; }

  /// Outgoing arc indices per node, in arc order.
  const std::vector<std::vector<std::size_t>>& out_arcs() const noexcept { return out_; }

  /// Kahn order; throws Error(Cyclic).
  std::vector<std::size_t> topological_order() const;

 private:
  std::size_t node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> sources_;
  std::vector<std::size_t> targets_;
  std::vector<GridPos> positions_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Ordered list of arc indices forming a source -> target walk.
struct PathSeq {
  std::vector<std::size_t> arcs;

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

/// Entry (i,j): maximal tropical weight of a path from source i to target j,
/// -inf if none. Throws Error(Cyclic).
TropMatrix transfer_matrix(const PlanarNetwork& net);

/// Number of distinct paths from source i to target j attaining the maximal
/// weight. Throws Error(Disconnected) if there is no path.
std::uint64_t count_optimal_paths(const PlanarNetwork& net, std::size_t source, std::size_t target);

/// All multiplicities at once (0 where no path exists).
std::vector<std::vector<std::uint64_t>> optimal_path_counts(const PlanarNetwork& net);

/// One arc of the canonical layout. `weight` is the (i,j) index into W, or
/// empty for a unit arc.
struct CanonicalArc {
  std::size_t column = 0;
  std::size_t from_level = 0;
  std::size_t to_level = 0;
  std::optional<std::pair<std::size_t, std::size_t>> weight;
};

std::size_t canonical_column_count(std::size_t n);
std::size_t canonical_node(std::size_t n, std::size_t column, std::size_t level);
/// Arcs of G_n in network order (by column, horizontals bottom to top, then
/// diagonals bottom to top).
std::vector<CanonicalArc> canonical_layout(std::size_t n);

PlanarNetwork build_canonical(const WeightMatrix& w);

enum class InequalityKind { Trapeze, ParallelogramRow, ParallelogramColumn };

struct InequalityViolation {
  InequalityKind kind;
  std::size_t i;  // 0-based cell of the entry that should be the larger one
  std::size_t j;
  bool breaks_weak;  // false: only the strict form fails

  friend bool operator==(const InequalityViolation&, const InequalityViolation&) = default;
};

struct InequalityReport {
  bool weak_trapeze = true;
  bool strict_trapeze = true;
  bool weak_parallelogram = true;
  bool strict_parallelogram = true;
  std::vector<InequalityViolation> violations;

  bool weak() const { return weak_trapeze && weak_parallelogram; }
  bool strict() const { return strict_trapeze && strict_parallelogram; }
};

/// Trapeze: w(i,i) vs w(i,i-1) + w(i-1,i-1) + w(i-1,i).
/// Parallelogram: w(i,0) < ... < w(i,i-1) and w(0,i) < ... < w(i-1,i).
InequalityReport inequality_report(const WeightMatrix& w);

/// Weight of the uppermost path from source i to target j:
/// sum_{t=i..j} w(i,t) if i <= j, else sum_{t=j..i} w(t,j).
Rational uppermost_weight(const WeightMatrix& w, std::size_t i, std::size_t j);

/// Level (1-based) of a G_n path at every column.
std::vector<std::size_t> path_levels(const PlanarNetwork& canonical, const PathSeq& path);
/// Inverse of path_levels. Throws Error(NotAPath) if a step has no arc.
PathSeq path_from_levels(const PlanarNetwork& canonical, const std::vector<std::size_t>& levels);
std::vector<std::size_t> uppermost_levels(std::size_t n, std::size_t i, std::size_t j);

/// Throws Error(NotAPath) unless `path` is a source -> target walk of `net`.
void validate_path(const PlanarNetwork& net, const PathSeq& path);
Rational path_weight(const PlanarNetwork& net, const PathSeq& path);

enum class MutationKind { Trapeze, ParallelogramLeft, ParallelogramRight };

struct Mutation {
  MutationKind kind;
  std::size_t column;  // column whose level changes (first one for trapeze)
  std::size_t level;   // level the path is lifted to

  friend bool operator==(const Mutation&, const Mutation&) = default;
};

struct NormalizedPath {
  PathSeq path;
  std::vector<Mutation> trace;
};

/// Picks one of `count` applicable mutations (ordered leftmost first).
using MutationChooser = std::function<std::size_t(std::size_t count)>;

/// Applies trapeze / parallelogram mutations until none applies. The result
/// is the uppermost path between the same endpoints. Without a chooser the
/// leftmost applicable mutation is taken.
NormalizedPath normalize_path(const WeightMatrix& w, const PathSeq& path,
                              const MutationChooser& choose = {});

inline constexpr std::size_t kConnectivitySourceLimit = 5;
inline constexpr std::size_t kConnectivityNodeLimit = 4096;

/// True iff every pair (I, J) of equal-size source / target subsets is
/// linked by vertex-disjoint paths. Throws Error(TooLarge) above budget.
bool is_totally_connected(const PlanarNetwork& net);

/// Graphviz text; grid nodes are named "x_<column>_<level>", others "x_<id>".
std::string to_dot(const PlanarNetwork& net);

}  // namespace troptp

#pragma once

// Enumeration kernels. Each kernel has a serial reference implementation and
// an OpenMP implementation that must return identical results in identical
// order; the public API dispatches on Exec.

#include <cstddef>
#include <vector>

#include "troptp/tropical.hpp"

namespace troptp {

enum class Exec { Serial, Parallel };

/// A square minor: row and column index sets, both sorted ascending.
struct MinorIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

/// All k-subsets of {0..n-1} for 1 <= k <= max_size, ordered by (k, lexicographic).
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t max_size);

/// All square minors of an n x m matrix of size <= max_size, in
/// lexicographic (size, rows, cols) order.
std::vector<MinorIndex> enumerate_minors(std::size_t n, std::size_t m, std::size_t max_size);

namespace kernels {

/// Scans the permutations with sigma(0) == first in lexicographic order,
/// updating the running optimum `best` and its argmax list. Shared by the
/// serial and the OpenMP kernel.
void scan_permutations_with_first(const TropMatrix& a, std::size_t first, TropValue& best,
                                  std::vector<std::vector<std::size_t>>& argmax);

std::vector<Permutation> optimal_permutations_serial(const TropMatrix& a);
std::vector<Permutation> optimal_permutations_parallel(const TropMatrix& a);

std::vector<TropSign> minor_signs_serial(const TropMatrix& a, const std::vector<MinorIndex>& minors);
std::vector<TropSign> minor_signs_parallel(const TropMatrix& a, const std::vector<MinorIndex>& minors);

}  // namespace kernels

std::vector<Permutation> optimal_permutations(const TropMatrix& a, Exec exec,
                                              std::size_t limit = kDefaultBruteLimit);
std::vector<TropSign> minor_signs(const TropMatrix& a, const std::vector<MinorIndex>& minors, Exec exec);

}  // namespace troptp

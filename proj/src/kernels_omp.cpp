#include <omp.h>

#include "troptp/kernels.hpp"

namespace troptp::kernels {

namespace {
// Below this size the fork/join overhead dominates the scan.
constexpr std::size_t kParallelPermutationThreshold = 6;
}  // namespace

std::vector<Permutation> optimal_permutations_parallel(const TropMatrix& a) {
  const std::size_t d = a.rows();
  if (d < kParallelPermutationThreshold) return optimal_permutations_serial(a);

  // One slice per value of sigma(0); slices are merged in order so the
  // lexicographic ordering of the serial scan is preserved.
  std::vector<TropValue> best(d);
  std::vector<std::vector<std::vector<std::size_t>>> argmax(d);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t first = 0; first < d; ++first) {
    scan_permutations_with_first(a, first, best[first], argmax[first]);
  }

  TropValue overall;
  for (const auto& b : best) overall = oplus(overall, b);
  std::vector<Permutation> out;
  if (overall.is_neg_inf()) return out;
  for (std::size_t first = 0; first < d; ++first) {
    if (best[first] != overall) continue;
    for (auto& images : argmax[first]) out.push_back(Permutation::from_images(std::move(images)));
  }
  return out;
}

std::vector<TropSign> minor_signs_parallel(const TropMatrix& a, const std::vector<MinorIndex>& minors) {
  std::vector<TropSign> out(minors.size());
  const auto count = static_cast<std::ptrdiff_t>(minors.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    out[k] = minor_sign(a, minors[k].rows, minors[k].cols);
  }
  return out;
}

}  // namespace troptp::kernels

#include <algorithm>
#include <numeric>

#include "troptp/error.hpp"
#include "troptp/kernels.hpp"

namespace troptp {

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 1; k <= std::min(n, max_size); ++k) {
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
      out.push_back(cur);
      // next k-combination in lexicographic order
      std::size_t pos = k;
      while (pos > 0 && cur[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++cur[pos - 1];
      for (std::size_t q = pos; q < k; ++q) cur[q] = cur[q - 1] + 1;
    }
  }
  return out;
}

std::vector<MinorIndex> enumerate_minors(std::size_t n, std::size_t m, std::size_t max_size) {
  const auto row_sets = index_subsets(n, max_size);
  const auto col_sets = index_subsets(m, max_size);
  std::vector<MinorIndex> out;
  for (std::size_t k = 1; k <= std::min({n, m, max_size}); ++k) {
    for (const auto& r : row_sets) {
      if (r.size() != k) continue;
      for (const auto& c : col_sets) {
        if (c.size() == k) out.push_back({r, c});
      }
    }
  }
  return out;
}

namespace kernels {
namespace {

// Scans permutations with images[0] == first (or all, when first == d) in
// lexicographic order, keeping the running optimum and its argmax list.
void scan_permutations(const TropMatrix& a, std::size_t first, TropValue& best,
                       std::vector<std::vector<std::size_t>>& argmax) {
  const std::size_t d = a.rows();
  std::vector<std::size_t> images(d);
  std::iota(images.begin(), images.end(), 0);
  if (first < d) std::rotate(images.begin(), images.begin() + first, images.begin() + first + 1);
  Rational sum;
  do {
    if (first < d && images[0] != first) break;
    bool finite = true;
    sum = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const TropValue& x = a(i, images[i]);
      if (x.is_neg_inf()) {
        finite = false;
        break;
      }
      sum += x.value();
    }
    if (!finite) continue;
    if (best.is_neg_inf() || sum > best.value()) {
      best = TropValue(sum);
      argmax.clear();
      argmax.push_back(images);
    } else if (sum == best.value()) {
      argmax.push_back(images);
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

void scan_permutations_with_first(const TropMatrix& a, std::size_t first, TropValue& best,
                                  std::vector<std::vector<std::size_t>>& argmax) {
  scan_permutations(a, first, best, argmax);
}

std::vector<Permutation> optimal_permutations_serial(const TropMatrix& a) {
  TropValue best;
  std::vector<std::vector<std::size_t>> argmax;
  scan_permutations(a, a.rows(), best, argmax);
  std::vector<Permutation> out;
  out.reserve(argmax.size());
  for (auto& images : argmax) out.push_back(Permutation::from_images(std::move(images)));
  return out;
}

std::vector<TropSign> minor_signs_serial(const TropMatrix& a, const std::vector<MinorIndex>& minors) {
  std::vector<TropSign> out;
  out.reserve(minors.size());
  for (const auto& m : minors) out.push_back(minor_sign(a, m.rows, m.cols));
  return out;
}

}  // namespace kernels

std::vector<Permutation> optimal_permutations(const TropMatrix& a, Exec exec, std::size_t limit) {
  if (!a.is_square()) throw Error(ErrorCode::Shape, "optimal permutations of non-square matrix");
  if (a.rows() > limit) {
    throw Error(ErrorCode::TooLarge, "enumeration limited to size " + std::to_string(limit));
  }
  if (a.rows() == 0) return {Permutation{}};
  return exec == Exec::Serial ? kernels::optimal_permutations_serial(a)
                              : kernels::optimal_permutations_parallel(a);
}

std::vector<TropSign> minor_signs(const TropMatrix& a, const std::vector<MinorIndex>& minors, Exec exec) {
  return exec == Exec::Serial ? kernels::minor_signs_serial(a, minors)
                              : kernels::minor_signs_parallel(a, minors);
}

}  // namespace troptp

#pragma once

// Tropical total positivity classes.
//
// TP   : every tropical minor is tropically positive (entries finite).
// TN   : no tropical minor is tropically negative (-inf allowed).
// TN(R): TN with finite entries.
//
// For finite square matrices both TP and TN(R) are decided by the adjacent
// 2x2 (Monge-type) inequalities; classify_oracle enumerates every minor and
// is kept as an independent check of that shortcut.

#include <cstddef>
#include <utility>
#include <vector>

#include "troptp/kernels.hpp"
#include "troptp/tropical.hpp"

namespace troptp {

enum class Strictness { Strict, Weak };

struct Adjacent2x2Result {
  bool holds = true;
  /// (i, j) with 1 <= i, j < n (0-based lower-right corner of the failing
  /// block {i-1, i} x {j-1, j}).
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Checks a(i,j) + a(i-1,j-1) > a(i-1,j) + a(i,j-1) (strict) or >= (weak)
/// for every adjacent block. Throws Error(RequiresFinite) on -inf entries or
/// a non-square input.
Adjacent2x2Result adjacent_2x2_check(const TropMatrix& a, Strictness strictness);

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  TropSign sign = TropSign::Positive;

  friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

/// Result of the brute-force classification over minors of size <= t.
/// With t < n the flags describe TP_t / TN_t.
struct PositivityClass {
  bool is_tp = false;
  bool is_tn_finite = false;
  bool is_tn = false;
  std::size_t max_t_positive = 0;
  std::size_t max_t_nonnegative = 0;
  /// First non-positive minor, then first negative minor, in (size, rows,
  /// cols) lexicographic order. Absent when no such minor exists.
  std::vector<MinorWitness> witnesses;
};

inline constexpr std::size_t kOracleSizeLimit = 6;

/// Enumerates every minor of size <= t. Throws Error(TooLarge) for n > 6 and
/// Error(Shape) for non-square input or t outside [1, n].
PositivityClass classify_oracle(const TropMatrix& a, std::size_t t, Exec exec = Exec::Parallel);
inline PositivityClass classify_oracle(const TropMatrix& a) { return classify_oracle(a, a.rows()); }

bool is_tp(const TropMatrix& a);
bool is_tn_finite(const TropMatrix& a);

}  // namespace troptp

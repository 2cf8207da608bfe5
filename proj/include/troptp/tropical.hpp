#pragma once

// Max-plus scalars and matrices with exact rational finite part.
//
//   a (+) b = max(a, b)      zero = -inf
//   a (x) b = a + b          unit = 0
//
// Indices in this API are 0-based; reports meant for humans print them
// 1-based.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "troptp/rational.hpp"

namespace troptp {

/// Element of R u {-inf}.
class TropValue {
 public:
  /// Default-constructed value is the tropical zero, -inf.
  TropValue() = default;
  TropValue(const Rational& v) : value_(v) {}  // NOLINT: implicit by intent
  TropValue(long v) : value_(Rational(v)) {}   // NOLINT
  TropValue(int v) : value_(Rational(v)) {}    // NOLINT

  static TropValue neg_inf() { return TropValue(); }
  static TropValue unit() { return TropValue(0); }

  bool is_finite() const noexcept { return value_.has_value(); }
  bool is_neg_inf() const noexcept { return !value_.has_value(); }

  /// Finite part. Throws Error(RequiresFinite) on -inf.
  const Rational& value() const;

  friend bool operator==(const TropValue& a, const TropValue& b);
  friend std::strong_ordering operator<=>(const TropValue& a, const TropValue& b);

 private:
  std::optional<Rational> value_;
};

TropValue oplus(const TropValue& a, const TropValue& b);
TropValue otimes(const TropValue& a, const TropValue& b);

/// "-inf" or the rational text form.
std::string to_string(const TropValue& v);

/// Dense row-major matrix over the max-plus semiring.
class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols, const TropValue& fill = TropValue::neg_inf());
  TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows);

  /// Tropical identity: 0 on the diagonal, -inf elsewhere.
  static TropMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const TropValue& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  TropValue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool all_finite() const;
  TropMatrix transpose() const;
  TropMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TropValue> data_;
};

std::string to_string(const TropMatrix& m);

/// result(i,j) = max_t A(i,t) + B(t,j). Throws Error(Shape) on mismatch.
TropMatrix trop_matmul(const TropMatrix& a, const TropMatrix& b);

enum class Parity { Even, Odd };

/// A bijection of {0..d-1} together with its sign.
struct Permutation {
  std::vector<std::size_t> images;
  Parity parity = Parity::Even;

  /// Validates the bijection and computes parity by cycle decomposition.
  static Permutation from_images(std::vector<std::size_t> images);

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
};

enum class TropSign { Positive, Negative, SignSingular };

std::string_view to_string(TropSign sign) noexcept;

/// Above this size trop_permanent switches from enumeration to an optimal
/// assignment solver, and optimal_permutations refuses to run.
inline constexpr std::size_t kDefaultBruteLimit = 8;

/// Sum of A(i, sigma(i)), or -inf.
TropValue permutation_weight(const TropMatrix& a, const Permutation& sigma);

/// Tropical permanent: the optimal assignment value. Throws Error(Shape)
/// if A is not square.
TropValue trop_permanent(const TropMatrix& a, std::size_t brute_limit = kDefaultBruteLimit);

/// Permanent through the O(d^3) Hungarian method regardless of size.
TropValue assignment_permanent(const TropMatrix& a);

/// Every permutation attaining the permanent, in lexicographic order of
/// image sequences. Empty iff the permanent is -inf. Throws Error(TooLarge)
/// above `limit`.
std::vector<Permutation> optimal_permutations(const TropMatrix& a,
                                              std::size_t limit = kDefaultBruteLimit);

/// Sign of the tropical minor on rows x cols. A 1x1 minor is Positive iff
/// the entry is finite.
TropSign minor_sign(const TropMatrix& a, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols);

/// Sign of the full (square) matrix.
TropSign matrix_sign(const TropMatrix& a);

}  // namespace troptp

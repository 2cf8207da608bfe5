#pragma once

// Finitely supported generalized Puiseux series sum_k a_k t^{b_k} with
// rational coefficients and exponents. This fragment of the nonarchimedean
// field is closed under +, -, *, which is all the lifting checks need.
//
//   val(f) = largest exponent with nonzero coefficient, val(0) = -inf
//   f > 0  iff its leading coefficient is positive

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "troptp/jacobi.hpp"
#include "troptp/kernels.hpp"
#include "troptp/network.hpp"
#include "troptp/tropical.hpp"

namespace troptp {

struct Term {
  Rational coeff;
  Rational exp;

  friend bool operator==(const Term&, const Term&) = default;
};

class PuiseuxPoly {
 public:
  /// The zero series.
  PuiseuxPoly() = default;
  /// Terms in any order; equal exponents are merged and zeros dropped.
  explicit PuiseuxPoly(std::vector<Term> terms);

  static PuiseuxPoly constant(const Rational& c) { return monomial(c, 0); }
  static PuiseuxPoly monomial(const Rational& coeff, const Rational& exp);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Strictly decreasing exponents, nonzero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  friend PuiseuxPoly operator+(const PuiseuxPoly& f, const PuiseuxPoly& g);
  friend PuiseuxPoly operator-(const PuiseuxPoly& f);
  friend PuiseuxPoly operator-(const PuiseuxPoly& f, const PuiseuxPoly& g);
  friend PuiseuxPoly operator*(const PuiseuxPoly& f, const PuiseuxPoly& g);
  friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

 private:
  std::vector<Term> terms_;
};

enum class KOp { Add, Neg, Mul };

/// Neg ignores g.
PuiseuxPoly k_arith(KOp op, const PuiseuxPoly& f, const PuiseuxPoly& g = {});

/// "c1*t^e1 + c2*t^e2 + ..." with rationals as p/q; "0" for zero.
std::string to_string(const PuiseuxPoly& f);

TropValue k_val(const PuiseuxPoly& f);
/// Throws Error(ZeroSeries) on zero.
bool k_positive(const PuiseuxPoly& f);

class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(std::size_t rows, std::size_t cols);

  static KMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PuiseuxPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  PuiseuxPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  KMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend bool operator==(const KMatrix&, const KMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<PuiseuxPoly> data_;
};

KMatrix k_matmul(const KMatrix& a, const KMatrix& b);

/// Entrywise valuation.
TropMatrix k_val(const KMatrix& m);

inline constexpr std::size_t kDeterminantSizeLimit = 6;

/// Exact determinant (signed permutation sum, evaluated by Laplace
/// expansion over column subsets). Throws Error(Shape) / Error(TooLarge).
PuiseuxPoly k_det(const KMatrix& m);

/// w(i,j) -> 1 * t^{w(i,j)}.
KMatrix lift_weights(const WeightMatrix& w);
/// w(i,j) -> c * t^{w(i,j)} with c a seeded random positive rational.
KMatrix lift_weights(const WeightMatrix& w, std::uint64_t seed);

inline constexpr std::size_t kTransferSizeLimit = 5;

/// Classical (sum over paths of products of arc weights) transfer matrix of
/// G_n carrying the given weights; unit arcs carry 1.
KMatrix k_transfer(const KMatrix& weights);

/// Classical Jacobi matrices over the series field: x_i(s) = I + s E(i,i+1),
/// x_bar(i)(s) = I + s E(i+1,i), x_(i)(s) = I + (s - 1) E(i,i).
KMatrix k_jacobi_matrix(const Letter& letter, const PuiseuxPoly& s, std::size_t n);
KMatrix k_evaluate_word(const Word& word, const std::vector<PuiseuxPoly>& params);

/// Determinants of the listed minors.
std::vector<PuiseuxPoly> k_minor_determinants(const KMatrix& m, const std::vector<MinorIndex>& minors,
                                              Exec exec = Exec::Parallel);

struct CorrespondenceReport {
  /// val of the classical transfer matrix equals the tropical one.
  bool entrywise_valuation = false;
  std::size_t minors_checked = 0;
  std::size_t sign_nonsingular_minors = 0;
  /// val(det) = per and sign(det) = optimal parity on sign-nonsingular minors.
  bool determinant_valuation = false;
  bool determinant_sign = false;
  /// The remaining fields are only evaluated for strict weights.
  bool strict_weights = false;
  bool all_minors_positive = false;
  bool params_recovered = false;

  bool ok() const {
    return entrywise_valuation && determinant_valuation && determinant_sign &&
           (!strict_weights || (all_minors_positive && params_recovered));
  }
};

inline constexpr std::size_t kCorrespondenceSizeLimit = 4;

CorrespondenceReport val_correspondence_check(const WeightMatrix& w, Exec exec = Exec::Parallel);
/// Same, on an explicit lift of w (e.g. one with random coefficients).
CorrespondenceReport val_correspondence_check(const WeightMatrix& w, const KMatrix& lifted, Exec exec = Exec::Parallel);

}  // namespace troptp

#include "troptp/tropical.hpp"

#include <algorithm>
#include <sstream>

#include "troptp/error.hpp"
#include "troptp/kernels.hpp"

namespace troptp {

const Rational& TropValue::value() const {
  if (!value_) throw Error(ErrorCode::RequiresFinite, "value of -inf requested");
  return *value_;
}

bool operator==(const TropValue& a, const TropValue& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return a.is_neg_inf() == b.is_neg_inf();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const TropValue& a, const TropValue& b) {
  if (a.is_neg_inf() && b.is_neg_inf()) return std::strong_ordering::equal;
  if (a.is_neg_inf()) return std::strong_ordering::less;
  if (b.is_neg_inf()) return std::strong_ordering::greater;
  const int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TropValue oplus(const TropValue& a, const TropValue& b) { return a < b ? b : a; }

TropValue otimes(const TropValue& a, const TropValue& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return TropValue::neg_inf();
  return TropValue(Rational(a.value() + b.value()));
}

std::string to_string(const TropValue& v) {
  return v.is_neg_inf() ? std::string("-inf") : to_string(v.value());
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, const TropValue& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::Shape, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TropValue::unit();
  return m;
}

bool TropMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const TropValue& v) { return v.is_finite(); });
}

TropMatrix TropMatrix::transpose() const {
  TropMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

TropMatrix TropMatrix::submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const {
  TropMatrix s(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      if (rows[a] >= rows_ || cols[b] >= cols_) throw Error(ErrorCode::BadIndex, "minor index out of range");
      s(a, b) = (*this)(rows[a], cols[b]);
    }
  }
  return s;
}

std::string to_string(const TropMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_string(m(i, j));
    out << ']';
  }
  out << ']';
  return out.str();
}

TropMatrix trop_matmul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::Shape, "inner dimensions differ");
  TropMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (a(i, t).is_neg_inf()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(t, j).is_neg_inf()) continue;
        TropValue term(Rational(a(i, t).value() + b(t, j).value()));
        if (c(i, j) < term) c(i, j) = std::move(term);
      }
    }
  }
  return c;
}

Permutation Permutation::from_images(std::vector<std::size_t> images) {
  const std::size_t d = images.size();
  std::vector<bool> seen(d, false);
  for (std::size_t x : images) {
    if (x >= d || seen[x]) throw Error(ErrorCode::Shape, "not a permutation");
    seen[x] = true;
  }
  // parity = (d - #cycles) mod 2
  std::fill(seen.begin(), seen.end(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < d; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t x = start; !seen[x]; x = images[x]) seen[x] = true;
  }
  Permutation p;
  p.images = std::move(images);
  p.parity = (d - cycles) % 2 == 0 ? Parity::Even : Parity::Odd;
  return p;
}

std::string_view to_string(TropSign sign) noexcept {
  switch (sign) {
    case TropSign::Positive: return "Positive";
    case TropSign::Negative: return "Negative";
    case TropSign::SignSingular: return "SignSingular";
  }
  return "?";
}

TropValue permutation_weight(const TropMatrix& a, const Permutation& sigma) {
  if (!a.is_square() || sigma.images.size() != a.rows()) throw Error(ErrorCode::Shape, "permutation size");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const TropValue& x = a(i, sigma.images[i]);
    if (x.is_neg_inf()) return TropValue::neg_inf();
    sum += x.value();
  }
  return TropValue(sum);
}

TropValue assignment_permanent(const TropMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::Shape, "permanent of non-square matrix");
  const std::size_t d = a.rows();
  if (d == 0) return TropValue::unit();

  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (a(i, j).is_neg_inf()) continue;
      const Rational& x = a(i, j).value();
      if (!lo || x < *lo) lo = x;
      if (!hi || x > *hi) hi = x;
    }
  }
  if (!lo) return TropValue::neg_inf();

  // Min-cost assignment on cost = -a. A forbidden (-inf) cell costs more
  // than any assignment avoiding forbidden cells can save.
  const Rational big = Rational(static_cast<long>(d)) * (abs(*lo) + abs(*hi)) + 1;
  std::vector<std::vector<Rational>> cost(d + 1, std::vector<Rational>(d + 1));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      cost[i + 1][j + 1] = a(i, j).is_neg_inf() ? big : Rational(-a(i, j).value());

  std::vector<Rational> u(d + 1), v(d + 1);
  std::vector<std::size_t> match(d + 1, 0), way(d + 1, 0);
  for (std::size_t i = 1; i <= d; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(d + 1);
    std::vector<bool> used(d + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= d; ++j) {
        if (used[j]) continue;
        Rational cur = cost[i0][j] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= d; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Rational total = 0;
  for (std::size_t j = 1; j <= d; ++j) {
    const TropValue& x = a(match[j] - 1, j - 1);
    if (x.is_neg_inf()) return TropValue::neg_inf();
    total += x.value();
  }
  return TropValue(total);
}

TropValue trop_permanent(const TropMatrix& a, std::size_t brute_limit) {
  if (!a.is_square()) throw Error(ErrorCode::Shape, "permanent of non-square matrix");
  if (a.rows() > brute_limit) return assignment_permanent(a);
  const auto optimal = optimal_permutations(a, Exec::Parallel, brute_limit);
  if (optimal.empty()) return TropValue::neg_inf();
  return permutation_weight(a, optimal.front());
}

std::vector<Permutation> optimal_permutations(const TropMatrix& a, std::size_t limit) {
  return optimal_permutations(a, Exec::Parallel, limit);
}

TropSign matrix_sign(const TropMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::Shape, "sign of non-square matrix");
  if (a.rows() == 1) return a(0, 0).is_finite() ? TropSign::Positive : TropSign::SignSingular;
  const auto optimal = optimal_permutations(a, Exec::Serial);
  if (optimal.empty()) return TropSign::SignSingular;
  const Parity p = optimal.front().parity;
  for (const auto& sigma : optimal) {
    if (sigma.parity != p) return TropSign::SignSingular;
  }
  return p == Parity::Even ? TropSign::Positive : TropSign::Negative;
}

TropSign minor_sign(const TropMatrix& a, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
  if (rows.size() != cols.size() || rows.empty()) throw Error(ErrorCode::Shape, "minor index sets differ in size");
  return matrix_sign(a.submatrix(rows, cols));
}

}  // namespace troptp

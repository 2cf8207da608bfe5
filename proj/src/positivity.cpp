#include "troptp/positivity.hpp"

#include <optional>

#include "troptp/error.hpp"

namespace troptp {

Adjacent2x2Result adjacent_2x2_check(const TropMatrix& a, Strictness strictness) {
  if (!a.is_square()) throw Error(ErrorCode::RequiresFinite, "adjacent check needs a square matrix");
  if (!a.all_finite()) throw Error(ErrorCode::RequiresFinite, "adjacent check needs finite entries");
  Adjacent2x2Result result;
  const std::size_t n = a.rows();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const Rational diagonal = a(i, j).value() + a(i - 1, j - 1).value();
      const Rational anti = a(i - 1, j).value() + a(i, j - 1).value();
      const bool ok = strictness == Strictness::Strict ? diagonal > anti : diagonal >= anti;
      if (!ok) {
        result.holds = false;
        result.violations.emplace_back(i, j);
      }
    }
  }
  return result;
}

PositivityClass classify_oracle(const TropMatrix& a, std::size_t t, Exec exec) {
  if (!a.is_square()) throw Error(ErrorCode::Shape, "classification needs a square matrix");
  const std::size_t n = a.rows();
  if (n > kOracleSizeLimit) {
    throw Error(ErrorCode::TooLarge, "minor oracle limited to n <= " + std::to_string(kOracleSizeLimit));
  }
  if (t < 1 || t > n) throw Error(ErrorCode::Shape, "minor size bound outside [1, n]");

  const auto minors = enumerate_minors(n, n, t);
  const auto signs = minor_signs(a, minors, exec);

  PositivityClass out;
  // Index of the first non-positive and first negative minor, if any.
  std::optional<std::size_t> non_positive, negative;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    if (!non_positive && signs[k] != TropSign::Positive) non_positive = k;
    if (!negative && signs[k] == TropSign::Negative) negative = k;
  }
  if (non_positive) {
    out.witnesses.push_back({minors[*non_positive].rows, minors[*non_positive].cols, signs[*non_positive]});
  }
  if (negative && negative != non_positive) {
    out.witnesses.push_back({minors[*negative].rows, minors[*negative].cols, signs[*negative]});
  }
  const std::size_t first_non_positive = non_positive ? minors[*non_positive].rows.size() : t + 1;
  const std::size_t first_negative = negative ? minors[*negative].rows.size() : t + 1;
  out.is_tp = first_non_positive > t;
  out.is_tn = first_negative > t;
  out.is_tn_finite = out.is_tn && a.all_finite();
  out.max_t_positive = first_non_positive - 1;
  out.max_t_nonnegative = first_negative - 1;
  return out;
}

bool is_tp(const TropMatrix& a) { return adjacent_2x2_check(a, Strictness::Strict).holds; }

bool is_tn_finite(const TropMatrix& a) { return adjacent_2x2_check(a, Strictness::Weak).holds; }

}  // namespace troptp

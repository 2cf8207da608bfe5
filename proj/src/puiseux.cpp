#include "troptp/puiseux.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>

#include "troptp/error.hpp"
#include "troptp/parametrization.hpp"

namespace troptp {
namespace {

using TermMap = std::map<Rational, Rational, std::greater<>>;

std::vector<Term> collect(const TermMap& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [e, c] : acc) {
    if (c != 0) out.push_back({c, e});
  }
  return out;
}

}  // namespace

PuiseuxPoly::PuiseuxPoly(std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) acc[t.exp] += t.coeff;
  terms_ = collect(acc);
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coeff, const Rational& exp) {
  PuiseuxPoly p;
  if (coeff != 0) p.terms_.push_back({coeff, exp});
  return p;
}

PuiseuxPoly operator+(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  // merge of two exponent-descending lists
  PuiseuxPoly out;
  auto a = f.terms_.begin(), b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && a->exp > b->exp)) {
      out.terms_.push_back(*a++);
    } else if (a == f.terms_.end() || b->exp > a->exp) {
      out.terms_.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.terms_.push_back({c, a->exp});
      ++a;
      ++b;
    }
  }
  return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& f) {
  PuiseuxPoly out = f;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& f, const PuiseuxPoly& g) { return f + (-g); }

PuiseuxPoly operator*(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  TermMap acc;
  for (const auto& x : f.terms_)
    for (const auto& y : g.terms_) acc[x.exp + y.exp] += x.coeff * y.coeff;
  PuiseuxPoly out;
  out.terms_ = collect(acc);
  return out;
}

PuiseuxPoly k_arith(KOp op, const PuiseuxPoly& f, const PuiseuxPoly& g) {
  switch (op) {
    case KOp::Add: return f + g;
    case KOp::Neg: return -f;
    case KOp::Mul: return f * g;
  }
  return {};
}

std::string to_string(const PuiseuxPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(t.coeff) + "*t^" + to_string(t.exp);
  }
  return out;
}

TropValue k_val(const PuiseuxPoly& f) {
  if (f.is_zero()) return TropValue::neg_inf();
  return f.terms().front().exp;
}

bool k_positive(const PuiseuxPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroSeries, "sign of the zero series");
  return f.terms().front().coeff > 0;
}

KMatrix::KMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

KMatrix KMatrix::identity(std::size_t n) {
  KMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = PuiseuxPoly::constant(1);
  return m;
}

KMatrix KMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  KMatrix s(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) s(a, b) = (*this)(rows[a], cols[b]);
  return s;
}

KMatrix k_matmul(const KMatrix& a, const KMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::Shape, "inner dimensions differ");
  KMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (a(i, t).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + a(i, t) * b(t, j);
    }
  return c;
}

TropMatrix k_val(const KMatrix& m) {
  TropMatrix v(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(i, j) = k_val(m(i, j));
  return v;
}

PuiseuxPoly k_det(const KMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Shape, "determinant of non-square matrix");
  const std::size_t d = m.rows();
  if (d > kDeterminantSizeLimit) throw Error(ErrorCode::TooLarge, "determinant limited to n <= 6");
  if (d == 0) return PuiseuxPoly::constant(1);

  // minor[mask] = det of rows d-|mask|..d-1 against the columns in mask,
  // expanded along its first row.
  const std::size_t full = (std::size_t{1} << d) - 1;
  std::vector<PuiseuxPoly> minor(full + 1);
  minor[0] = PuiseuxPoly::constant(1);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t row = d - size;
    PuiseuxPoly sum;
    std::size_t position = 0;
    for (std::size_t c = 0; c < d; ++c) {
      if (!(mask >> c & 1)) continue;
      const PuiseuxPoly& entry = m(row, c);
      if (!entry.is_zero()) {
        PuiseuxPoly term = entry * minor[mask & ~(std::size_t{1} << c)];
        sum = position % 2 == 0 ? sum + term : sum - term;
      }
      ++position;
    }
    minor[mask] = std::move(sum);
  }
  return minor[full];
}

KMatrix lift_weights(const WeightMatrix& w) {
  KMatrix k(w.n(), w.n());
  for (std::size_t i = 0; i < w.n(); ++i)
    for (std::size_t j = 0; j < w.n(); ++j) k(i, j) = PuiseuxPoly::monomial(1, w(i, j));
  return k;
}

KMatrix lift_weights(const WeightMatrix& w, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  KMatrix k(w.n(), w.n());
  for (std::size_t i = 0; i < w.n(); ++i)
    for (std::size_t j = 0; j < w.n(); ++j) {
      const auto num = static_cast<long>(engine() % 9 + 1);
      const auto den = static_cast<long>(engine() % 9 + 1);
      Rational c(num, den);
      c.canonicalize();
      k(i, j) = PuiseuxPoly::monomial(c, w(i, j));
    }
  return k;
}

KMatrix k_transfer(const KMatrix& weights) {
  const std::size_t n = weights.rows();
  if (n != weights.cols() || n == 0) throw Error(ErrorCode::Shape, "weights must be a nonempty square matrix");
  if (n > kTransferSizeLimit) throw Error(ErrorCode::TooLarge, "path enumeration limited to n <= 5");

  const auto layout = canonical_layout(n);
  const std::size_t columns = canonical_column_count(n);
  std::vector<std::vector<std::size_t>> out(columns * n);
  for (std::size_t k = 0; k < layout.size(); ++k) out[canonical_node(n, layout[k].column, layout[k].from_level)].push_back(k);

  KMatrix result(n, n);
  // explicit enumeration of every source -> target path
  std::function<void(std::size_t, std::size_t, std::size_t, const PuiseuxPoly&)> walk =
      [&](std::size_t source, std::size_t column, std::size_t level, const PuiseuxPoly& product) {
        if (column == columns - 1) {
          result(source, level - 1) = result(source, level - 1) + product;
          return;
        }
        for (std::size_t k : out[canonical_node(n, column, level)]) {
          const CanonicalArc& a = layout[k];
          const PuiseuxPoly next = a.weight ? product * weights(a.weight->first, a.weight->second) : product;
          walk(source, column + 1, a.to_level, next);
        }
      };
  for (std::size_t l = 1; l <= n; ++l) walk(l - 1, 0, l, PuiseuxPoly::constant(1));
  return result;
}

KMatrix k_jacobi_matrix(const Letter& letter, const PuiseuxPoly& s, std::size_t n) {
  if (!letter.valid_for(n)) throw Error(ErrorCode::BadIndex, "letter " + to_string(letter) + " invalid for n=" + std::to_string(n));
  KMatrix m = KMatrix::identity(n);
  const std::size_t i = letter.index - 1;
  switch (letter.kind) {
    case LetterKind::Lower: m(i, i + 1) = s; break;
    case LetterKind::Barred: m(i + 1, i) = s; break;
    case LetterKind::Circled: m(i, i) = s; break;
  }
  return m;
}

KMatrix k_evaluate_word(const Word& word, const std::vector<PuiseuxPoly>& params) {
  if (word.size() != params.size()) throw Error(ErrorCode::Shape, "word and parameter lengths differ");
  KMatrix acc = KMatrix::identity(word.n());
  for (std::size_t k = 0; k < word.size(); ++k) acc = k_matmul(acc, k_jacobi_matrix(word.letters()[k], params[k], word.n()));
  return acc;
}

std::vector<PuiseuxPoly> k_minor_determinants(const KMatrix& m, const std::vector<MinorIndex>& minors, Exec exec) {
  std::vector<PuiseuxPoly> out(minors.size());
  const auto count = static_cast<std::ptrdiff_t>(minors.size());
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t k = 0; k < count; ++k) out[k] = k_det(m.submatrix(minors[k].rows, minors[k].cols));
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) out[k] = k_det(m.submatrix(minors[k].rows, minors[k].cols));
  return out;
}

CorrespondenceReport val_correspondence_check(const WeightMatrix& w, Exec exec) {
  return val_correspondence_check(w, lift_weights(w), exec);
}

CorrespondenceReport val_correspondence_check(const WeightMatrix& w, const KMatrix& lifted, Exec exec) {
  const std::size_t n = w.n();
  if (n > kCorrespondenceSizeLimit) throw Error(ErrorCode::TooLarge, "correspondence check limited to n <= 4");
  if (lifted.rows() != n || lifted.cols() != n) throw Error(ErrorCode::Shape, "lift does not match the weights");

  CorrespondenceReport report;
  const KMatrix classical = k_transfer(lifted);
  const TropMatrix valuation = k_val(classical);
  report.entrywise_valuation = valuation == transfer_matrix(build_canonical(w));

  const auto minors = enumerate_minors(n, n, n);
  const auto dets = k_minor_determinants(classical, minors, exec);
  const auto signs = minor_signs(valuation, minors, exec);
  report.minors_checked = minors.size();
  report.determinant_valuation = true;
  report.determinant_sign = true;
  bool all_positive = true;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    if (dets[k].is_zero() || !k_positive(dets[k])) all_positive = false;
    if (signs[k] == TropSign::SignSingular) continue;
    ++report.sign_nonsingular_minors;
    const TropMatrix sub = valuation.submatrix(minors[k].rows, minors[k].cols);
    if (k_val(dets[k]) != trop_permanent(sub)) report.determinant_valuation = false;
    if (dets[k].is_zero() || k_positive(dets[k]) != (signs[k] == TropSign::Positive)) report.determinant_sign = false;
  }

  report.strict_weights = inequality_report(w).strict();
  if (report.strict_weights) {
    report.all_minors_positive = all_positive;
    try {
      report.params_recovered = recover_params(valuation) == weight_sequence(w);
    } catch (const Error&) {
      report.params_recovered = false;
    }
  }
  return report;
}

}  // namespace troptp

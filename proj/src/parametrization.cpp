#include "troptp/parametrization.hpp"

#include <random>

#include "troptp/error.hpp"

namespace troptp {

TropMatrix psi(const WeightMatrix& w) {
  TropMatrix a(w.n(), w.n());
  for (std::size_t i = 0; i < w.n(); ++i)
    for (std::size_t j = 0; j < w.n(); ++j) a(i, j) = uppermost_weight(w, i, j);
  return a;
}

WeightMatrix phi(const TropMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::Shape, "phi needs a square matrix");
  if (!a.all_finite()) throw Error(ErrorCode::RequiresFinite, "phi needs finite entries");
  WeightMatrix w(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j) {
        w(i, j) = a(i, j).value();
      } else if (i < j) {
        w(i, j) = a(i, j).value() - a(i, j - 1).value();
      } else {
        w(i, j) = a(i, j).value() - a(i - 1, j).value();
      }
    }
  }
  return w;
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi] by rejection; std distributions are not
  // reproducible across standard libraries.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

WeightMatrix gen_weights(std::size_t n, WeightMode mode, std::uint64_t seed) {
  Sampler rng(seed);
  WeightMatrix w(n);
  if (mode == WeightMode::Arbitrary) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w(i, j) = rng.uniform(-20, 20);
    return w;
  }
  const long min_gap = mode == WeightMode::Strict ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    // off-diagonal entries increase toward the diagonal along each level
    for (std::size_t t = 0; t < i; ++t) {
      w(i, t) = t == 0 ? Rational(rng.uniform(-10, 10)) : Rational(w(i, t - 1) + rng.uniform(min_gap, 10));
      w(t, i) = t == 0 ? Rational(rng.uniform(-10, 10)) : Rational(w(t - 1, i) + rng.uniform(min_gap, 10));
    }
    if (i == 0) {
      w(0, 0) = rng.uniform(-10, 10);
    } else {
      w(i, i) = w(i, i - 1) + w(i - 1, i - 1) + w(i - 1, i) + rng.uniform(min_gap, 10);
    }
  }
  return w;
}

}  // namespace troptp

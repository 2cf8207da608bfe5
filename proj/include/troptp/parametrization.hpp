#pragma once

// psi sends a matrix of weights to the matrix of uppermost-path weights of
// G_n; phi is its explicit inverse. Restricted to weights satisfying the
// weak (strict) trapeze and parallelogram inequalities, psi is a bijection
// onto TN(R) (onto TP).

#include <cstdint>

#include "troptp/network.hpp"
#include "troptp/tropical.hpp"

namespace troptp {

/// psi(W)(i,j) = uppermost_weight(W, i, j).
TropMatrix psi(const WeightMatrix& w);

/// phi(A)(i,i) = a(i,i); a(i,j) - a(i,j-1) above the diagonal;
/// a(i,j) - a(i-1,j) below. Throws Error(RequiresFinite).
WeightMatrix phi(const TropMatrix& a);

enum class WeightMode { Strict, Weak, Arbitrary };

/// Seeded sampler. Strict: integer gaps in [1, 10] make every trapeze and
/// parallelogram inequality strict. Weak: gaps in [0, 10]. Arbitrary:
/// independent entries in [-20, 20]. Row/column starting values are drawn
/// from [-10, 10]. Uses mt19937_64 with a fixed reduction, so the output is
/// identical on every platform.
WeightMatrix gen_weights(std::size_t n, WeightMode mode, std::uint64_t seed);

}  // namespace troptp

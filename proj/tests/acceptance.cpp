// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "troptp/error.hpp"
#include "troptp/io.hpp"
#include "troptp/jacobi.hpp"
#include "troptp/parametrization.hpp"
#include "troptp/positivity.hpp"
#include "troptp/puiseux.hpp"

using namespace troptp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> run;
};

std::string str(const TropMatrix& m) { return to_string(m); }

// 1. phi o psi = id and psi o phi = id -----------------------------------------
Outcome bijection_suite() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const WeightMatrix w = gen_weights(n, WeightMode::Arbitrary, seed);
      if (phi(psi(w)) != w) o.fail("phi(psi(W)) != W at n=" + std::to_string(n) + " seed=" + std::to_string(seed));
      oracle::Random rng(seed * 31 + n);
      TropMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.rational(-50, 50);
      if (psi(phi(a)) != a) o.fail("psi(phi(A)) != A at n=" + std::to_string(n) + " seed=" + std::to_string(seed));
      checked += 2;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " identities, n = 1..8";
  return o;
}

// 2. strict / weak / arbitrary weights on G_n ------------------------------------
Outcome network_suite() {
  Outcome o;
  std::size_t strict = 0, weak = 0, violating = 0, weak_arbitrary = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::string at = " at n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      {
        const WeightMatrix w = gen_weights(n, WeightMode::Strict, seed);
        const PlanarNetwork net = build_canonical(w);
        const TropMatrix a = transfer_matrix(net);
        if (a != psi(w)) o.fail("strict: transfer != psi" + at);
        if (!classify_oracle(a).is_tp) o.fail("strict: oracle says not TP" + at);
        for (const auto& row : optimal_path_counts(net))
          for (auto c : row)
            if (c != 1) o.fail("strict: optimal path not unique" + at);
        ++strict;
      }
      {
        const WeightMatrix w = gen_weights(n, WeightMode::Weak, seed);
        const TropMatrix a = transfer_matrix(build_canonical(w));
        if (a != psi(w)) o.fail("weak: transfer != psi" + at);
        if (!classify_oracle(a).is_tn_finite) o.fail("weak: oracle says not TN(R)" + at);
        ++weak;
      }
      {
        const WeightMatrix w = gen_weights(n, WeightMode::Arbitrary, seed);
        const PlanarNetwork net = build_canonical(w);
        const TropMatrix a = transfer_matrix(net);
        const TropMatrix u = psi(w);
        if (inequality_report(w).weak()) {
          if (a != u) o.fail("arbitrary weak-valid: transfer != psi" + at);
          ++weak_arbitrary;
          continue;
        }
        const auto counts = optimal_path_counts(net);
        bool witnessed = false;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) witnessed = witnessed || u(i, j) < a(i, j) || counts[i][j] > 1;
        if (!witnessed) o.fail("arbitrary: weak violation left no trace in the transfer matrix" + at);
        ++violating;
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(strict) + " strict, " + std::to_string(weak) + " weak, " + std::to_string(violating) +
               " weak-violating (" + std::to_string(weak_arbitrary) + " arbitrary draws were weak-valid)";
  }
  return o;
}

// 3. adjacent 2x2 criteria vs full minor oracle ----------------------------------
Outcome criterion_equivalence() {
  Outcome o;
  oracle::Random rng(2024);
  std::size_t tp = 0, tn_only = 0, neither = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::size_t>(trial % 5 + 1);
    TropMatrix a;
    switch (trial % 4) {
      case 0: a = rng.monge_like(n, true); break;
      case 1: a = rng.monge_like(n, false); break;
      case 2: a = rng.matrix(n, n, -3, 3); break;
      default: a = rng.matrix(n, n, -20, 20); break;
    }
    const auto full = classify_oracle(a);
    if (is_tp(a) != full.is_tp) o.fail("TP mismatch on trial " + std::to_string(trial) + ": " + str(a));
    if (is_tn_finite(a) != full.is_tn_finite) o.fail("TN(R) mismatch on trial " + std::to_string(trial) + ": " + str(a));
    tp += full.is_tp;
    tn_only += full.is_tn_finite && !full.is_tp;
    neither += !full.is_tn_finite;
  }
  if (o.pass) {
    o.detail = "2000 matrices: " + std::to_string(tp) + " TP, " + std::to_string(tn_only) + " TN(R) not TP, " +
               std::to_string(neither) + " neither";
  }
  return o;
}

// 4. the two-source example network ----------------------------------------------
PlanarNetwork example_network(const Rational& alpha) {
  std::vector<Arc> arcs{{5, 1, 0}, {2, 1, 3}, {2, 3, alpha}, {1, 4, 1}, {4, 3, 2}, {4, 6, 0}};
  return PlanarNetwork(7, std::move(arcs), {5, 2}, {6, 3});
}

Outcome example_reproduction() {
  Outcome o;
  std::string counts;
  for (long alpha : {5, 6, 7}) {
    const PlanarNetwork net = example_network(alpha);
    const TropMatrix expected{{1, 3}, {4, std::max(6L, alpha)}};
    if (transfer_matrix(net) != expected) o.fail("alpha=" + std::to_string(alpha) + ": transfer " + str(transfer_matrix(net)));
    const auto c = count_optimal_paths(net, 1, 1);
    counts += (counts.empty() ? "" : ", ") + std::string("alpha=") + std::to_string(alpha) + ": " + std::to_string(c);
    if (alpha <= 6 && c < 2) {
      o.fail("alpha=" + std::to_string(alpha) + ": count_optimal_paths(2,2) = " + std::to_string(c) + " (criterion asks >= 2)");
    }
  }
  if (transfer_matrix(example_network(5)) != transfer_matrix(example_network(6))) o.fail("alpha=5 and alpha=6 differ");
  const TropMatrix a7 = transfer_matrix(example_network(7));
  if (!is_tp(a7)) o.fail("alpha=7 transfer matrix is not TP");
  // (w21, w11, w22, w12): alpha sits on the diagonal slot of the top level
  else if (recover_params(a7) != ParamVector{3, 1, 7, 2}) o.fail("alpha=7: recovered parameters differ");
  o.detail = o.pass ? "transfer [[1,3],[4,max(6,a)]]; optimal path counts " + counts + "; alpha=7 recovered"
                    : o.detail + "; counts " + counts;
  return o;
}

// 5. Jacobi factorization of G_n -------------------------------------------------
Outcome jacobi_suite() {
  Outcome o;
  const std::string word3 = to_string(canonical_word(3));
  if (word3 != "b2 b1 b2 c1 c2 c3 2 1 2") o.fail("canonical_word(3) = " + word3);
  WeightMatrix labels(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) labels(i, j) = static_cast<long>(10 * (i + 1) + j + 1);
  if (weight_sequence(labels) != ParamVector{31, 21, 32, 11, 22, 33, 23, 12, 13}) o.fail("weight sequence order for n=3");

  std::size_t checked = 0;
  const WeightMode modes[] = {WeightMode::Strict, WeightMode::Weak, WeightMode::Arbitrary};
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const WeightMatrix w = gen_weights(n, modes[seed % 3], seed);
      if (evaluate_word(canonical_word(n), weight_sequence(w)) != transfer_matrix(build_canonical(w))) {
        o.fail("word product != transfer at n=" + std::to_string(n) + " seed=" + std::to_string(seed));
      }
      const WeightMatrix s = gen_weights(n, WeightMode::Strict, seed);
      if (recover_params(evaluate_word(canonical_word(n), weight_sequence(s))) != weight_sequence(s)) {
        o.fail("recover_params round trip at n=" + std::to_string(n) + " seed=" + std::to_string(seed));
      }
      if (!validate_scheme(canonical_word(n))) o.fail("canonical word is not a factorization scheme");
      ++checked;
    }
  if (o.pass) o.detail = "\"" + word3 + "\"; " + std::to_string(checked) + " products and round trips, n = 1..6";
  return o;
}

// 6. commutation relation ----------------------------------------------------------
Outcome commutation_suite() {
  Outcome o;
  oracle::Random rng(77);
  std::size_t ties = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<Rational, 4> s{rng.rational(-10, 10), rng.rational(-10, 10), rng.rational(-10, 10), rng.rational(-10, 10)};
    if (trial % 4 == 0) s[1] = s[0] + s[2] + s[3];
    ties += s[1] == s[0] + s[2] + s[3];
    const auto n = static_cast<std::size_t>(rng.integer(2, 5));
    const auto i = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n) - 1));
    const auto t = commutation_map(s, Direction::Forward, i, n);
    const auto [left, right] = commutation_words(i, n);
    if (evaluate_word(left, ParamVector(s.begin(), s.end())) != evaluate_word(right, ParamVector(t.begin(), t.end()))) {
      o.fail("sides differ on trial " + std::to_string(trial));
    }
    if (commutation_map(t, Direction::Backward, i, n) != s) o.fail("backward(forward(s)) != s on trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "1000 tuples, " + std::to_string(ties) + " with s2 = s1 + s3 + s4";
  return o;
}

// 7. valuation correspondence over Puiseux series ----------------------------------
Outcome puiseux_suite() {
  Outcome o;
  std::size_t minors = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const std::string at = " at n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      const WeightMatrix w = gen_weights(n, WeightMode::Strict, seed);
      for (const KMatrix& lifted : {lift_weights(w), lift_weights(w, seed)}) {
        const auto r = val_correspondence_check(w, lifted);
        if (!r.entrywise_valuation) o.fail("entrywise valuation" + at);
        if (!r.all_minors_positive) o.fail("a lifted minor is not positive" + at);
        if (!r.determinant_valuation) o.fail("val(det) != per" + at);
        if (!r.determinant_sign) o.fail("det sign mismatch" + at);
        if (!r.params_recovered) o.fail("recover_params(val M) != weight_sequence(W)" + at);
        minors += r.minors_checked;
      }
      const WeightMatrix arbitrary = gen_weights(n, WeightMode::Arbitrary, seed);
      if (k_val(k_transfer(lift_weights(arbitrary, seed))) != transfer_matrix(build_canonical(arbitrary))) {
        o.fail("entrywise valuation (arbitrary weights)" + at);
      }
    }
  if (o.pass) o.detail = std::to_string(minors) + " lifted minors, n = 1..4, two lifts per W";
  return o;
}

// 8. parameters invisible to the valuation -----------------------------------------
Outcome counterexample() {
  Outcome o;
  const auto t = [](long e) { return PuiseuxPoly::monomial(1, e); };
  const KMatrix m = k_evaluate_word(canonical_word(2), {t(0), t(0), t(-2), t(0)});
  KMatrix expected(2, 2);
  expected(0, 0) = t(0);
  expected(0, 1) = t(0);
  expected(1, 0) = t(0);
  expected(1, 1) = t(0) + t(-2);
  if (m != expected) o.fail("series product differs from [[1,1],[1,1+t^-2]]");
  const TropMatrix v = k_val(m);
  if (v != TropMatrix(2, 2, TropValue(0))) o.fail("valuation is not the zero matrix: " + str(v));
  std::istringstream in(format_trop_matrix(v));
  std::ostringstream out, err;
  const int code = cli::run_cli({"factor", "-"}, in, out, err);
  if (code != cli::kExitNotTp) o.fail("factor exit code " + std::to_string(code));
  if (o.pass) o.detail = "M(2,2) = " + to_string(m(1, 1)) + ", val = 0, factor exits " + std::to_string(code);
  return o;
}

// 9. products through a narrow inner dimension ---------------------------------------
Outcome narrow_product_singularity() {
  Outcome o;
  oracle::Random rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = static_cast<std::size_t>(rng.integer(2, 5));
    const auto s = static_cast<std::size_t>(rng.integer(1, static_cast<long>(m) - 1));
    const TropMatrix f = trop_matmul(rng.matrix(m, s, -10, 10), rng.matrix(s, m, -10, 10));
    if (matrix_sign(f) != TropSign::SignSingular) o.fail("nonsingular product on trial " + std::to_string(trial) + ": " + str(f));
  }
  if (o.pass) o.detail = "500 products F = G H with s < m <= 5";
  return o;
}

// 10. confluence of path normalization ----------------------------------------------
Outcome mutation_confluence() {
  Outcome o;
  oracle::Random rng(10);
  std::size_t steps = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const WeightMatrix w = gen_weights(4, WeightMode::Weak, static_cast<std::uint64_t>(trial));
    const PlanarNetwork net = build_canonical(w);
    std::size_t v = net.sources()[static_cast<std::size_t>(rng.integer(0, 3))];
    std::vector<std::size_t> start{net.positions()[v].level};
    while (!net.out_arcs()[v].empty()) {
      const auto& out = net.out_arcs()[v];
      v = net.arcs()[out[static_cast<std::size_t>(rng.integer(0, static_cast<long>(out.size()) - 1))]].to;
      start.push_back(net.positions()[v].level);
    }
    const PathSeq path = path_from_levels(net, start);
    const auto target = uppermost_levels(4, start.front() - 1, start.back() - 1);
    for (int order = 0; order < 6; ++order) {
      MutationChooser chooser;
      if (order > 0) chooser = [&rng](std::size_t c) { return static_cast<std::size_t>(rng.integer(0, static_cast<long>(c) - 1)); };
      const NormalizedPath out = normalize_path(w, path, chooser);
      if (path_levels(net, out.path) != target) o.fail("did not reach the uppermost path on trial " + std::to_string(trial));
      std::vector<std::size_t> levels = start;
      Rational previous = path_weight(net, path);
      for (const Mutation& m : out.trace) {
        levels[m.column] = m.level;
        if (m.kind == MutationKind::Trapeze) levels[m.column + 1] = m.level;
        const Rational now = path_weight(net, path_from_levels(net, levels));
        if (now < previous) o.fail("weight decreased on trial " + std::to_string(trial));
        previous = now;
        ++steps;
      }
    }
  }
  if (o.pass) o.detail = "100 paths in G_4 x 6 mutation orders, " + std::to_string(steps) + " mutations";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bijection suite", 5, bijection_suite},
      {2, "network positivity suite", 60, network_suite},
      {3, "2x2 criterion equivalence", 0, criterion_equivalence},
      {4, "example network reproduction", 0, example_reproduction},
      {5, "Jacobi factorization suite", 0, jacobi_suite},
      {6, "commutation suite", 0, commutation_suite},
      {7, "Puiseux valuation suite", 120, puiseux_suite},
      {8, "valuation counterexample", 0, counterexample},
      {9, "narrow product singularity", 0, narrow_product_singularity},
      {10, "mutation confluence", 0, mutation_confluence},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    failures += !o.pass;
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

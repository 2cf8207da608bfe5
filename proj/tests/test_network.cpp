#include <doctest.h>

#include "oracles.hpp"
#include "troptp/error.hpp"
#include "troptp/network.hpp"
#include "troptp/parametrization.hpp"

using namespace troptp;

namespace {

// Two sources, two targets; the top source reaches the top target either
// directly (weight alpha) or via 3 + 1 + 2.
PlanarNetwork example_network(const Rational& alpha) {
  std::vector<Arc> arcs{{5, 1, 0}, {2, 1, 3}, {2, 3, alpha}, {1, 4, 1}, {4, 3, 2}, {4, 6, 0}};
  return PlanarNetwork(7, std::move(arcs), {5, 2}, {6, 3});
}

TropValue mx(std::initializer_list<Rational> xs) {
  TropValue best;
  for (const auto& x : xs) best = oplus(best, x);
  return best;
}

std::vector<std::size_t> random_levels(std::size_t n, oracle::Random& rng, const PlanarNetwork& net) {
  std::size_t v = net.sources()[static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1))];
  std::vector<std::size_t> levels{net.positions()[v].level};
  while (!net.out_arcs()[v].empty()) {
    const auto& out = net.out_arcs()[v];
    v = net.arcs()[out[static_cast<std::size_t>(rng.integer(0, static_cast<long>(out.size()) - 1))]].to;
    levels.push_back(net.positions()[v].level);
  }
  return levels;
}

}  // namespace

TEST_SUITE("network") {
  TEST_CASE("example network transfer matrix and path multiplicities") {
    for (long a : {4, 5, 6, 7}) {
      const PlanarNetwork net = example_network(a);
      const TropMatrix expected{{1, 3}, {4, std::max(6L, a)}};
      CHECK(transfer_matrix(net) == expected);
      CHECK(oracle::transfer(net) == expected);
      const auto dfs = oracle::paths(net);
      CHECK(count_optimal_paths(net, 1, 1) == dfs[1][1].count);
      CHECK(count_optimal_paths(net, 1, 1) == (a == 6 ? 2u : 1u));
      CHECK(optimal_path_counts(net)[0][0] == 1);
    }
  }

  TEST_CASE("G_3 transfer matrix equals the symbolic max-plus expression") {
    oracle::Random rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      const WeightMatrix W = rng.weights(3, -10, 10);
      auto w = [&W](int i, int j) { return W(i - 1, j - 1); };
      const TropMatrix expected{
          {mx({w(1, 1)}), mx({w(1, 1) + w(1, 2)}), mx({w(1, 1) + w(1, 2) + w(1, 3)})},
          {mx({w(2, 1) + w(1, 1)}), mx({w(2, 1) + w(1, 1) + w(1, 2), w(2, 2)}),
           mx({w(2, 1) + w(1, 1) + w(1, 2) + w(1, 3), w(2, 2) + w(1, 3), w(2, 2) + w(2, 3)})},
          {mx({w(3, 1) + w(2, 1) + w(1, 1)}), mx({w(3, 1) + w(2, 1) + w(1, 1) + w(1, 2), w(3, 1) + w(2, 2), w(3, 2) + w(2, 2)}),
           mx({w(3, 1) + w(2, 1) + w(1, 1) + w(1, 2) + w(1, 3), w(3, 1) + w(2, 2) + w(2, 3), w(3, 1) + w(2, 2) + w(1, 3),
               w(3, 2) + w(2, 2) + w(2, 3), w(3, 2) + w(2, 2) + w(1, 3), w(3, 3)})}};
      CHECK(transfer_matrix(build_canonical(W)) == expected);
    }
  }

  TEST_CASE("canonical network shape") {
    for (std::size_t n = 1; n <= 6; ++n) {
      const PlanarNetwork net = build_canonical(WeightMatrix(n));
      CHECK(net.node_count() == 2 * n * n);
      CHECK(net.arcs().size() == 3 * n * n - 2 * n);
      CHECK(net.sources().size() == n);
      std::size_t weighted = 0;
      for (const auto& a : canonical_layout(n)) weighted += a.weight.has_value();
      CHECK(weighted == n * n);
    }
    const PlanarNetwork g1 = build_canonical(WeightMatrix{{Rational(4)}});
    CHECK(g1.node_count() == 2);
    CHECK(g1.arcs().size() == 1);
  }

  TEST_CASE("transfer matrix and multiplicities agree with exhaustive DFS") {
    oracle::Random rng(42);
    for (int trial = 0; trial < 150; ++trial) {
      const auto n = static_cast<std::size_t>(rng.integer(1, 5));
      const PlanarNetwork net = build_canonical(rng.weights(n, -2, 2));
      const auto dfs = oracle::paths(net);
      CHECK(transfer_matrix(net) == oracle::transfer(net));
      const auto counts = optimal_path_counts(net);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(counts[i][j] == dfs[i][j].count);
    }
  }

  TEST_CASE("G_n is totally connected") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(is_totally_connected(build_canonical(WeightMatrix(n))));
    // both sources must pass through node 2
    const PlanarNetwork bottleneck(5, {{0, 2, 0}, {1, 2, 0}, {2, 3, 0}, {2, 4, 0}}, {0, 1}, {3, 4});
    CHECK_FALSE(is_totally_connected(bottleneck));
    CHECK_THROWS_AS(is_totally_connected(build_canonical(WeightMatrix(6))), Error);
  }

  TEST_CASE("errors: cycles, disconnection, bad construction") {
    const PlanarNetwork cyclic(3, {{0, 1, 0}, {1, 0, 0}, {1, 2, 0}}, {0}, {2});
    CHECK_THROWS_AS(transfer_matrix(cyclic), Error);
    try {
      (void)transfer_matrix(cyclic);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Cyclic);
    }
    const PlanarNetwork split(4, {{0, 2, 1}, {1, 3, 1}}, {0, 1}, {2, 3});
    CHECK(transfer_matrix(split)(0, 1) == TropValue::neg_inf());
    CHECK_THROWS_AS(count_optimal_paths(split, 0, 1), Error);
    CHECK_THROWS_AS(count_optimal_paths(split, 0, 5), Error);
    CHECK_THROWS_AS(PlanarNetwork(2, {{0, 7, 0}}, {0}, {1}), Error);
    CHECK_THROWS_AS(PlanarNetwork(2, {{0, 1, 0}}, {0}, {0}), Error);
  }

  TEST_CASE("inequality report") {
    const auto tight = inequality_report(WeightMatrix{{1, 2}, {3, 6}});
    CHECK(tight.weak());
    CHECK_FALSE(tight.strict());
    CHECK_FALSE(tight.strict_trapeze);
    CHECK(tight.strict_parallelogram);
    REQUIRE(tight.violations.size() == 1);
    CHECK(tight.violations[0] == InequalityViolation{InequalityKind::Trapeze, 1, 1, false});

    const auto broken = inequality_report(WeightMatrix{{0, 1, 5}, {0, 3, 2}, {0, 0, 20}});
    CHECK_FALSE(broken.weak_parallelogram);
    CHECK(broken.weak_trapeze);
    CHECK(inequality_report(WeightMatrix{{0, 1}, {2, 5}}).strict());
  }

  TEST_CASE("uppermost levels trace a path of the uppermost weight") {
    oracle::Random rng(43);
    for (std::size_t n = 1; n <= 5; ++n) {
      const WeightMatrix w = rng.weights(n, -5, 5);
      const PlanarNetwork net = build_canonical(w);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto levels = uppermost_levels(n, i, j);
          CHECK(levels.front() == i + 1);
          CHECK(levels.back() == j + 1);
          const PathSeq p = path_from_levels(net, levels);
          CHECK(path_levels(net, p) == levels);
          CHECK(path_weight(net, p) == uppermost_weight(w, i, j));
          // every other path between the same endpoints lies weakly below
          for (int k = 0; k < 20; ++k) {
            const auto other = random_levels(n, rng, net);
            if (other.front() != levels.front() || other.back() != levels.back()) continue;
            for (std::size_t c = 0; c < levels.size(); ++c) CHECK(other[c] <= levels[c]);
          }
        }
    }
  }

  TEST_CASE("path validation") {
    const PlanarNetwork net = build_canonical(WeightMatrix(3));
    CHECK_THROWS_AS(path_from_levels(net, {3, 1, 1, 1, 1, 1}), Error);
    CHECK_THROWS_AS(path_from_levels(net, {1, 1, 1}), Error);
    CHECK_THROWS_AS(path_from_levels(net, {1, 1, 1, 1, 2, 4}), Error);
    CHECK_THROWS_AS(validate_path(net, PathSeq{}), Error);
    PathSeq partial = path_from_levels(net, {2, 2, 2, 2, 2, 2});
    partial.arcs.pop_back();
    CHECK_THROWS_AS(validate_path(net, partial), Error);
  }

  TEST_CASE("normalization of a G_4 path: parallelogram, trapeze, parallelogram") {
    const WeightMatrix w = gen_weights(4, WeightMode::Strict, 7);
    const PlanarNetwork net = build_canonical(w);
    const PathSeq p = path_from_levels(net, {4, 3, 3, 2, 2, 3, 3, 3});
    const NormalizedPath out = normalize_path(w, p);
    const std::vector<Mutation> expected{{MutationKind::ParallelogramLeft, 1, 4},
                                         {MutationKind::Trapeze, 3, 3},
                                         {MutationKind::ParallelogramLeft, 2, 4}};
    CHECK(out.trace == expected);
    CHECK(path_levels(net, out.path) == std::vector<std::size_t>{4, 4, 4, 3, 3, 3, 3, 3});
    CHECK(path_levels(net, out.path) == uppermost_levels(4, 3, 2));
    CHECK(path_weight(net, out.path) > path_weight(net, p));

    // ascents are pulled towards the middle one column at a time
    const PathSeq up = path_from_levels(net, {2, 2, 2, 2, 2, 2, 3, 4});
    const std::vector<Mutation> right{{MutationKind::ParallelogramRight, 5, 3}, {MutationKind::ParallelogramRight, 6, 4}};
    CHECK(normalize_path(w, up).trace == right);
    CHECK(uppermost_levels(4, 0, 0) == std::vector<std::size_t>(8, 1));
  }

  TEST_CASE("normalization is confluent with non-decreasing weights on weak weights") {
    oracle::Random rng(44);
    for (int trial = 0; trial < 60; ++trial) {
      const auto n = static_cast<std::size_t>(rng.integer(1, 5));
      const WeightMatrix w = gen_weights(n, trial % 2 ? WeightMode::Weak : WeightMode::Strict, 100 + trial);
      const PlanarNetwork net = build_canonical(w);
      const auto start = random_levels(n, rng, net);
      const PathSeq p = path_from_levels(net, start);
      const auto target = uppermost_levels(n, start.front() - 1, start.back() - 1);
      for (int order = 0; order < 5; ++order) {
        MutationChooser chooser;
        if (order > 0) chooser = [&rng](std::size_t count) { return static_cast<std::size_t>(rng.integer(0, static_cast<long>(count) - 1)); };
        const NormalizedPath out = normalize_path(w, p, chooser);
        CHECK(path_levels(net, out.path) == target);
        std::vector<std::size_t> levels = start;
        Rational previous = path_weight(net, p);
        for (const Mutation& m : out.trace) {
          levels[m.column] = m.level;
          if (m.kind == MutationKind::Trapeze) levels[m.column + 1] = m.level;
          const Rational now = path_weight(net, path_from_levels(net, levels));
          CHECK(now >= previous);
          previous = now;
        }
      }
    }
  }

  TEST_CASE("DOT export") {
    const std::string g1 = to_dot(build_canonical(WeightMatrix{{Rational(2)}}));
    CHECK(g1.find("\"x_0_1\" -> \"x_1_1\" [label=\"2\"]") != std::string::npos);
    CHECK(std::count(g1.begin(), g1.end(), '>') == 1);
    const WeightMatrix w = gen_weights(3, WeightMode::Strict, 1);
    CHECK(to_dot(build_canonical(w)) == to_dot(build_canonical(w)));
    CHECK(to_dot(example_network(5)).find("x_5") != std::string::npos);
  }
}

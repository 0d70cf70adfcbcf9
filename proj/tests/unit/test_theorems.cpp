#include <doctest.h>

#include "groupft/errors.hpp"
#include "groupft/theorems.hpp"

using namespace groupft;

TEST_CASE("finite suites pass on the builtins") {
  SuiteOptions opts;
  opts.trials = 20;
  for (const char* name : {"z4", "s3", "d4", "h3", "z2xs3"}) {
    const auto g = builtin_group(name);
    const auto r = run_suite(g, "all", opts);
    CAPTURE(name);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
    CHECK(r.overall());
  }
}

TEST_CASE("suite checks carry their names") {
  const auto g = builtin_group("s3");
  SuiteOptions opts;
  opts.trials = 5;
  const std::pair<const char*, const char*> expected[] = {
      {"plancherel", "plancherel_defect"},         {"inversion", "inversion_defect"},
      {"convolution", "convolution_defect"},       {"hausdorff-young", "hausdorff_young_excess"},
      {"lemma-opnorm", "lemma_opnorm_excess"},     {"lemma-identity", "lemma_identity_defect"},
      {"theorem4", "theorem4_difference_sets"}};
  for (const auto& [suite, check] : expected) {
    const auto r = run_suite(g, suite, opts);
    REQUIRE(!r.checks.empty());
    CHECK(r.checks.front().name == check);
    CHECK(r.suite == suite);
  }
  CHECK_THROWS_AS(run_suite(g, "nonsense", opts), DomainError);
}

TEST_CASE("suites are deterministic for a fixed seed") {
  const auto g = builtin_group("d4");
  SuiteOptions opts;
  opts.trials = 10;
  const auto a = to_json(run_suite(g, "all", opts)).dump();
  const auto b = to_json(run_suite(g, "all", opts)).dump();
  CHECK(a == b);
  opts.seed = 2;
  CHECK(to_json(run_suite(g, "all", opts)).dump() != a);
}

TEST_CASE("a tight tolerance override fails honestly") {
  const auto g = builtin_group("h3");
  SuiteOptions opts;
  opts.trials = 5;
  opts.tol = 1e-30;
  const auto r = run_suite(g, "plancherel", opts);
  CHECK_FALSE(r.overall());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->tolerance == 1e-30);
}

TEST_CASE("identity lemma needs a strictly decreasing sequence") {
  const auto g = builtin_group("z3");
  CHECK_THROWS_AS(check_lemma_identity(g, {1.0, 0.5}, 1e-10), DomainError);
  CHECK_THROWS_AS(check_lemma_identity(g, {1.0, 1.0, 0.5}, 1e-10), DomainError);
  CHECK(check_lemma_identity(g, {1.0, 0.5, 0.25}, 1e-10).metric == 0.0);
}

TEST_CASE("Hausdorff-Young endpoints and midpoint") {
  const auto g = builtin_group("d5");
  const auto c = check_hausdorff_young(g, {1.0, 1.5, 2.0}, 10, 4, 1e-9);
  CHECK(c.passed);
  CHECK_THROWS_AS(check_hausdorff_young(g, {2.5}, 1, 1, 1e-9), DomainError);
}

TEST_CASE("explicit difference sets") {
  const auto g = gen_cyclic(4);
  const auto c = check_theorem4(g, indicator_measure(g, {0, 1}), default_tolerances(g));
  CHECK(c.passed);
  SuiteOptions opts;
  opts.sets = {{0, 1}, {0, 2, 3}};
  const auto r = run_suite(g, "theorem4", opts);
  CHECK(r.overall());
}

TEST_CASE("density recovery on finite groups") {
  const auto g = builtin_group("h3");
  Rng rng(6);
  const auto d = random_density(g, rng);
  CHECK(check_theorem3_part1(d, 1e-10).passed);
  const auto m = DiscreteMeasure<FiniteGroup>::from_density(d);
  CHECK(check_theorem3_part2(g, m, d, default_tolerances(g)).passed);
}

TEST_CASE("Heisenberg suites refuse finite-only checks") {
  HeisenbergConfig c;
  c.grid_n = 32;
  c.half_width = 4.0;
  c.lambda_nodes = 8;
  c.lambda_min = 0.2;
  c.lambda_max = 3.0;
  c.x_extent = 1.0;
  c.y_extent = 0.5;
  c.t_extent = 0.5;
  c.x_step = 0.25;
  c.t_step = 0.25;
  const HeisenbergGroup g(c);
  CHECK_THROWS_AS(run_suite(g, "convolution"), DomainError);
  CHECK_THROWS_AS(run_suite(g, "hausdorff-young"), DomainError);
  const auto r = run_suite(g, "lemma-opnorm");
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].passed);
}

TEST_CASE("tolerance documents") {
  const auto t = Tolerances::uniform(1e-6);
  const auto j = t.to_json();
  CHECK(j["density"].get<double>() == 1e-6);
  CHECK(j["factorization"].get<double>() == 1e-6);
  CHECK(default_tolerances(HeisenbergGroup{}).transform == 0.05);
}

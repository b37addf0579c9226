#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "ocucb/bandit.hpp"
#include "ocucb/errors.hpp"

using namespace ocucb;

namespace {

void check_vector(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-15) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol));
}

}  // namespace

TEST_CASE("compute_gaps") {
  SUBCASE("subtracts from the max") {
    check_vector(compute_gaps(BanditInstance({0.5, 0.2, 0.0})).gaps, {0.0, 0.3, 0.5});
  }
  SUBCASE("conjecture instance with K = 10") {
    std::vector<double> means(10, 0.0);
    means[0] = 0.5;
    means[1] = 0.5 - 1.0 / 10;
    std::vector<double> want(10, 0.5);
    want[0] = 0.0;
    want[1] = 0.1;
    check_vector(compute_gaps(BanditInstance(means)).gaps, want);
  }
  SUBCASE("all equal means") {
    check_vector(compute_gaps(BanditInstance({1.5, 1.5, 1.5})).gaps, {0, 0, 0});
  }
  SUBCASE("best arm need not be first, ties allowed") {
    const auto g = compute_gaps(BanditInstance({0.1, 0.4, 0.4}));
    CHECK(g[1] == 0.0);
    CHECK(g[2] == 0.0);
  }
  SUBCASE("invariant under a common shift") {
    const std::vector<double> base{0.25, -1.0, 0.75, 0.5};
    const auto g0 = compute_gaps(base);
    std::vector<double> shifted = base;
    for (double& m : shifted) m += 0.5;
    check_vector(compute_gaps(shifted).gaps, g0.gaps);
  }
}

TEST_CASE("invalid instances") {
  CHECK_THROWS_AS(BanditInstance({1.0}), InvalidInstance);
  CHECK_THROWS_AS(BanditInstance({0.0, std::numeric_limits<double>::quiet_NaN()}), InvalidInstance);
  CHECK_THROWS_AS(BanditInstance({0.0, std::numeric_limits<double>::infinity()}), InvalidInstance);
  const std::vector<double> bad{0.0, std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(compute_gaps(bad), InvalidInstance);
}

TEST_CASE("pseudo_regret") {
  const std::vector<std::uint64_t> only_best{10, 0};
  CHECK(pseudo_regret(GapVector{{0.0, 0.3}}, only_best) == 0.0);
  const std::vector<std::uint64_t> p1{1, 2};
  CHECK(pseudo_regret(GapVector{{0.0, 0.3}}, p1) == doctest::Approx(0.6).epsilon(1e-15));
  const std::vector<std::uint64_t> p2{5, 3, 2};
  CHECK(pseudo_regret(GapVector{{0.0, 0.1, 0.5}}, p2) == doctest::Approx(1.3).epsilon(1e-15));

  SUBCASE("linear in the pull counts") {
    const GapVector g{{0.0, 0.37, 1.25, 0.01}};
    const std::vector<std::uint64_t> p{7, 13, 2, 99};
    const std::vector<std::uint64_t> twice{14, 26, 4, 198};
    CHECK(pseudo_regret(g, twice) == 2.0 * pseudo_regret(g, p));
  }
  SUBCASE("length mismatch") {
    const std::vector<std::uint64_t> p{1, 2, 3};
    CHECK_THROWS_AS(pseudo_regret(GapVector{{0.0, 0.3}}, p), ContractError);
  }
}

TEST_CASE("pull") {
  SUBCASE("noiseless hook returns the mean") {
    const auto instance = BanditInstance::noiseless({0.1, 0.7});
    RngStream rng(5, {0, 0});
    CHECK(pull(instance, 1, rng) == 0.7);
  }
  SUBCASE("replay gives the same reward") {
    const BanditInstance instance({0.0, 0.3});
    RngStream a(11, {2, 5});
    RngStream b(11, {2, 5});
    for (int i = 0; i < 10; ++i) CHECK(pull(instance, i % 2, a) == pull(instance, i % 2, b));
  }
  SUBCASE("sample mean concentrates") {
    const BanditInstance instance({0.0, 1.0});
    RngStream rng(3, {0, 1});
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += pull(instance, 0, rng);
    CHECK(std::abs(sum / n) <= 4.0 / std::sqrt(static_cast<double>(n)));
  }
  SUBCASE("arm out of range") {
    const BanditInstance instance({0.0, 1.0});
    RngStream rng(3, {0, 1});
    CHECK_THROWS_AS(pull(instance, 2, rng), ContractError);
  }
}

TEST_CASE("PullStats bookkeeping") {
  PullStats stats(3);
  CHECK(stats.t() == 1);
  CHECK_THROWS_AS(stats.mean(0), ContractError);
  stats.record(0, 1.0);
  stats.record(2, 3.0);
  stats.record(0, 2.0);
  CHECK(stats.t() == 4);
  CHECK(stats.count(0) + stats.count(1) + stats.count(2) == stats.t() - 1);
  CHECK(stats.mean(0) == 1.5);
  CHECK(stats.mean(2) == 3.0);
  CHECK_THROWS_AS(stats.record(3, 0.0), ContractError);
}

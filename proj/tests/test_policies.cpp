#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ocucb/errors.hpp"
#include "ocucb/policies.hpp"

using namespace ocucb;

namespace {

constexpr double kTol = 1e-12;

PolicyConfig ocucb_config(double alpha, double psi, std::uint64_t n, std::size_t k = 2) {
  return PolicyConfig{Algorithm::OCUCB, alpha, psi, n, k};
}

PullStats make_stats(const std::vector<double>& means, const std::vector<std::uint64_t>& counts) {
  PullStats stats(means.size());
  for (std::size_t arm = 0; arm < means.size(); ++arm) {
    for (std::uint64_t c = 0; c < counts[arm]; ++c) stats.record(arm, means[arm]);
  }
  return stats;
}

}  // namespace

// Expected values below were evaluated independently in Python (math.sqrt/log).
TEST_CASE("ocucb_index examples") {
  CHECK(std::abs(ocucb_index(0.5, 1, 20, ocucb_config(3, 2, 10)) - 0.5) <= kTol);
  CHECK(std::abs(ocucb_index(0.0, 1, 100, ocucb_config(3, 2, 100)) - 1.442026886600883) <= kTol);
  CHECK(std::abs(ocucb_index(0.0, 1, 150, ocucb_config(3, 2, 100)) - 0.9290028080449179) <= kTol);
  CHECK(ocucb_index(0.0, 1, 150, ocucb_config(3, 2, 100)) < ocucb_index(0.0, 1, 100, ocucb_config(3, 2, 100)));
  SUBCASE("log clamps to zero past psi * n") {
    CHECK(ocucb_index(0.25, 3, 50, ocucb_config(3, 0.5, 40)) == 0.25);
  }
  CHECK_THROWS_AS(ocucb_index(0.0, 0, 5, ocucb_config(3, 2, 10)), ContractError);
}

TEST_CASE("aocucb_index examples") {
  CHECK(aocucb_index(0.7, 50, 50.0) == 0.7);
  CHECK(std::abs(aocucb_index(0.0, 1, std::numbers::e) - 1.4142135623730951) <= kTol);
  CHECK(std::abs(aocucb_index(0.0, 4, 100.0) - 1.2686362411795196) <= kTol);
  CHECK_THROWS_AS(aocucb_index(0.0, 0, 10.0), ContractError);
}

TEST_CASE("ucb_index examples") {
  CHECK(ucb_index(-0.3, 5, 1.0) == -0.3);
  CHECK(std::abs(ucb_index(0.0, 2, std::numbers::e) - 1.0) <= kTol);
  CHECK(std::abs(ucb_index(0.0, 1, std::numbers::e * std::numbers::e) - 2.0) <= kTol);
  CHECK_THROWS_AS(ucb_index(0.0, 0, 3.0), ContractError);
}

TEST_CASE("moss_index examples") {
  CHECK(moss_index(0.4, 50, 100.0, 2) == 0.4);
  CHECK(moss_index(0.4, 60, 100.0, 2) == 0.4);
  CHECK(std::abs(moss_index(0.0, 1, 200.0, 2) - 3.034854258770293) <= kTol);
  CHECK(std::abs(moss_index(-1.0, 1, 200.0, 2) - 2.034854258770293) <= kTol);
  CHECK_THROWS_AS(moss_index(0.0, 0, 200.0, 2), ContractError);
}

TEST_CASE("thompson_sample") {
  SUBCASE("noiseless hook") {
    RngStream rng(1, {0, 0});
    CHECK(thompson_sample(0.35, 4, rng, 0.0) == 0.35);
  }
  SUBCASE("variance is 1/T") {
    RngStream rng(2024, {0, 0});
    const int n = 100000;
    std::vector<double> xs(n);
    double sum = 0.0;
    for (auto& x : xs) sum += (x = thompson_sample(0.0, 4, rng));
    const double mean = sum / n;
    double sq = 0.0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    CHECK(std::abs(sq / (n - 1) - 0.25) <= 0.01);
  }
  SUBCASE("replay") {
    RngStream a(8, {1, 1});
    RngStream b(8, {1, 1});
    CHECK(thompson_sample(0.1, 3, a) == thompson_sample(0.1, 3, b));
  }
  SUBCASE("unplayed arm") {
    RngStream rng(1, {0, 0});
    CHECK_THROWS_AS(thompson_sample(0.0, 0, rng), ContractError);
  }
}

TEST_CASE("select_arm") {
  RngStream rng(1, {0, 0});
  SUBCASE("forced initialization") {
    const auto cfg = ocucb_config(3, 2, 100, 4);
    PullStats stats(4);
    CHECK(select_arm(cfg, stats, rng) == 0);
    stats.record(0, 0.0);
    stats.record(1, 0.0);
    stats.record(2, 0.0);
    CHECK(select_arm(cfg, stats, rng) == 3);
  }
  SUBCASE("tie goes to the lowest arm") {
    const auto stats = make_stats({0.2, 0.2}, {3, 3});
    CHECK(select_arm(ocucb_config(3, 2, 100), stats, rng) == 0);
  }
  SUBCASE("equal bonuses, higher mean wins") {
    const auto stats = make_stats({0.0, 0.1}, {1, 1});
    const auto cfg = ocucb_config(3, 2, 10);
    REQUIRE(stats.t() == 3);
    // Both bonuses equal sqrt(3 log(20/3)) = 2.3856571326696643.
    CHECK(std::abs(policy_index(cfg, stats, 0) - 2.3856571326696643) <= kTol);
    CHECK(select_arm(cfg, stats, rng) == 1);
  }
  SUBCASE("past the horizon") {
    const auto stats = make_stats({0.0, 0.1}, {5, 6});
    CHECK_THROWS_AS(select_arm(ocucb_config(3, 2, 10), stats, rng), ContractError);
  }
  SUBCASE("Thompson consumes one draw per arm") {
    const auto stats = make_stats({0.0, 0.1, 0.2}, {2, 2, 2});
    PolicyConfig cfg{Algorithm::ThompsonGaussian, 3, 2, 100, 3};
    RngStream a(77, {0, 0});
    RngStream b(77, {0, 0});
    select_arm(cfg, stats, a);
    for (int i = 0; i < 3; ++i) b.gaussian();
    CHECK(a.gaussian() == b.gaussian());
  }
}

TEST_CASE("index monotonicity properties") {
  RngStream gen(99, {0, 0});
  const std::vector<Algorithm> algorithms{Algorithm::UCB, Algorithm::MOSS, Algorithm::OCUCB,
                                          Algorithm::AOCUCB};
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t n = 100 + gen.next_u32() % 10000;
    const std::size_t k = 2 + gen.next_u32() % 20;
    const std::uint64_t t = k + 1 + gen.next_u32() % (n - k);
    const std::uint64_t count = 1 + gen.next_u32() % (t - 1);
    const double mean = gen.gaussian();
    const double alpha = 1.0 + 5.0 * gen.uniform();
    const double psi = 1.0 + 3.0 * gen.uniform();
    for (Algorithm a : algorithms) {
      const PolicyConfig cfg{a, alpha, psi, n, k};
      auto index = [&](double m, std::uint64_t c, std::uint64_t time) {
        switch (a) {
          case Algorithm::UCB: return ucb_index(m, c, static_cast<double>(time));
          case Algorithm::MOSS: return moss_index(m, c, static_cast<double>(n), k);
          case Algorithm::OCUCB: return ocucb_index(m, c, time, cfg);
          default: return aocucb_index(m, c, static_cast<double>(n));
        }
      };
      CAPTURE(to_string(a));
      CAPTURE(trial);
      // Strictly increasing in the mean.
      REQUIRE(index(mean + 0.01, count, t) > index(mean, count, t));
      // Bonus non-increasing in the count.
      REQUIRE(index(mean, count + 1, t) - mean <= index(mean, count, t) - mean + 1e-15);
      // Time dependence.
      const double now = index(mean, count, t);
      const double later = index(mean, count, t + 1);
      if (a == Algorithm::UCB) REQUIRE(later >= now);
      else if (a == Algorithm::OCUCB) {
        REQUIRE(later <= now);
        if (psi * static_cast<double>(n) / static_cast<double>(t + 1) > 1.0) REQUIRE(later < now);
      } else {
        REQUIRE(later == now);
      }
    }
  }
}

TEST_CASE("argmax invariant under a common shift of the means") {
  RngStream gen(5, {0, 0});
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + gen.next_u32() % 8;
    std::vector<double> means(k);
    std::vector<std::uint64_t> counts(k);
    for (std::size_t i = 0; i < k; ++i) {
      // Dyadic values keep the shift exact in floating point.
      means[i] = static_cast<double>(gen.next_u32() % 64) / 16.0;
      counts[i] = 1 + gen.next_u32() % 20;
    }
    std::vector<double> shifted = means;
    for (double& m : shifted) m += 4.0;
    const auto s1 = make_stats(means, counts);
    const auto s2 = make_stats(shifted, counts);
    for (Algorithm a : {Algorithm::UCB, Algorithm::MOSS, Algorithm::OCUCB, Algorithm::AOCUCB}) {
      const PolicyConfig cfg{a, 3, 2, 1000, k};
      RngStream r1(1, {0, 0}), r2(1, {0, 0});
      CHECK(select_arm(cfg, s1, r1) == select_arm(cfg, s2, r2));
    }
  }
}

TEST_CASE("config validation") {
  CHECK(ocucb_config(3, 2, 10).in_provable_range());
  CHECK_FALSE(ocucb_config(2, 2, 10).in_provable_range());
  CHECK_FALSE(ocucb_config(3, 1.5, 10).in_provable_range());
  CHECK(validate(ocucb_config(3, 2, 10)).empty());
  CHECK(validate(ocucb_config(1, 2, 10)).size() == 1);
  CHECK_THROWS(validate(ocucb_config(0, 2, 10)));
  CHECK_THROWS(validate(ocucb_config(3, -1, 10)));
  CHECK_THROWS(validate(ocucb_config(3, 2, 0)));
  CHECK(parse_algorithm("Thompson") == Algorithm::ThompsonGaussian);
  CHECK_FALSE(parse_algorithm("KL-UCB").has_value());
  CHECK(ocucb_config(3, 2, 10).label() == "OCUCB(alpha=3,psi=2)");
}

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "pzlab/arith.hpp"
#include "pzlab/error.hpp"

using namespace pzlab;

TEST_SUITE("arith") {
  TEST_CASE("sieve matches trial division") {
    CHECK(sieve_primes(10).positions().size() == 4);
    const auto p10 = sieve_primes(10);
    CHECK(std::vector<double>(p10.positions().begin(), p10.positions().end()) ==
          std::vector<double>{2, 3, 5, 7});
    for (std::uint64_t limit : {100ULL, 2000ULL, 7919ULL}) {
      std::vector<double> expect;
      for (std::uint64_t n = 2; n <= limit; ++n)
        if (oracle::is_prime_trial(n)) expect.push_back(static_cast<double>(n));
      const auto got = sieve_primes(limit);
      CHECK(std::vector<double>(got.positions().begin(), got.positions().end()) == expect);
      CHECK(got.ambient_lo() == 0.0);
      CHECK(got.ambient_hi() == static_cast<double>(limit));
    }
    CHECK(sieve_primes(100).size() == 25);
    CHECK(sieve_primes(2000).size() == 303);
  }

  TEST_CASE("segmented sieve agrees with the plain sieve across the switch") {
    const auto big = primes_up_to(10'000'500);
    const auto plain = primes_up_to(10'000'000);
    std::vector<std::uint32_t> extra;
    for (std::uint32_t n = 10'000'001; n <= 10'000'500; ++n)
      if (oracle::is_prime_trial(n)) extra.push_back(n);
    REQUIRE(big.size() == plain.size() + extra.size());
    CHECK(std::equal(plain.begin(), plain.end(), big.begin()));
    CHECK(std::equal(extra.begin(), extra.end(), big.begin() + plain.size()));
    for (std::size_t i = 0; i < big.size(); i += 50'000) CHECK(oracle::is_prime_trial(big[i]));
  }

  TEST_CASE("sieve rejects limits below 2") {
    CHECK_THROWS_AS(sieve_primes(1), Error);
    try {
      sieve_primes(0);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::empty_input);
    }
  }

  TEST_CASE("residue selection") {
    const auto subset = select_residues(sieve_primes(100), ResidueSpec::mod16_quarter());
    std::vector<double> expect;
    for (double p : sieve_primes(100).positions())
      if (static_cast<int>(p) % 4 == 1) expect.push_back(p);
    CHECK(std::vector<double>(subset.positions().begin(), subset.positions().end()) == expect);
    CHECK(expect == std::vector<double>{5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97});
    CHECK(subset.ambient_hi() == 100.0);

    const auto id = select_residues(sieve_primes(50), ResidueSpec{});
    CHECK(id.size() == sieve_primes(50).size());

    const auto m4 = select_residues(sieve_primes(20), ResidueSpec{4, {1}});
    CHECK(std::vector<double>(m4.positions().begin(), m4.positions().end()) ==
          std::vector<double>{5, 13, 17});

    const auto twice = select_residues(subset, ResidueSpec::mod16_quarter());
    CHECK(twice.size() == subset.size());

    CHECK_THROWS_AS(select_residues(PointSet({1.5}, 0, 2), ResidueSpec{}), Error);
    CHECK_THROWS_AS(ResidueSpec({4, {4}}).validate(), Error);
    CHECK_THROWS_AS(ResidueSpec({4, {}}).validate(), Error);
  }

  TEST_CASE("indicator sequences") {
    CHECK(indicator_sequence(sieve_primes(100), 6).to_string() == "011010");
    CHECK(indicator_sequence(PointSet({}, 0, 4), 4).to_string() == "0000");
    const auto sub = select_residues(sieve_primes(16), ResidueSpec::mod16_quarter());
    const auto bits = indicator_sequence(sub, 16);
    CHECK(bits.to_string() == "0000100000001000");
    const auto primes = sieve_primes(1000);
    for (std::size_t N : {10u, 97u, 500u, 1000u}) {
      std::size_t below = 0;
      for (double p : primes.positions()) below += p <= static_cast<double>(N);
      CHECK(indicator_sequence(primes, N).popcount() == below);
    }
    CHECK(BitSequence::from_string("0110\n").to_string() == "0110");
    CHECK_THROWS_AS(BitSequence::from_string("01x"), Error);
  }

  TEST_CASE("block densities") {
    const auto primes = sieve_primes(100);
    const auto rows = block_density(primes, 100, 50);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].center == 25.0);
    CHECK(rows[0].count == 15);
    CHECK(rows[0].rho == doctest::Approx(15.0 / (50.0 / std::log(25.0))).epsilon(1e-12));
    CHECK(rows[0].rho == doctest::Approx(0.9657).epsilon(1e-4));

    const auto empty = block_density(PointSet({}, 0, 100), 100, 10);
    CHECK(empty.size() == 10);
    for (const auto& r : empty) CHECK(r.rho == 0.0);

    CHECK(block_density(primes, 100, 100).size() == 1);

    const auto big = sieve_primes(1000);
    const auto blocks = block_density(big, 1000, 70);
    std::size_t total = 0;
    for (const auto& r : blocks) total += r.count;
    std::size_t expect = 0;
    for (double p : big.positions()) expect += p > 0 && p <= 70.0 * 14;
    CHECK(total == expect);
    CHECK_THROWS_AS(block_density(big, 1000, 0), Error);
  }

  TEST_CASE("log integral") {
    CHECK(log_integral(2.0) == doctest::Approx(1.0451638).epsilon(1e-6));
    CHECK(log_integral(10.0) == doctest::Approx(6.1655995).epsilon(1e-8));
    for (double x : {1.5, 3.0, 10.0, 100.0, 1e4, 1e6}) {
      const double want = oracle::li_ramanujan(x);
      CHECK(std::abs(log_integral(x) - want) <= 1e-9 * std::abs(want));
    }
    CHECK(log_integral(100.0) > log_integral(10.0));
    for (double x : {5.0, 50.0, 500.0}) {
      const double h = 1e-4;
      const double d = (log_integral(x + h) - log_integral(x - h)) / (2 * h);
      CHECK(std::abs(d - 1.0 / std::log(x)) < 1e-6);
    }
    CHECK_THROWS_AS(log_integral(1.0), Error);
  }

  TEST_CASE("prime fluctuation field") {
    const auto f = prime_fluctuation_field(1000, 1.0);
    CHECK(f.x0() == 2.0);
    CHECK(f.values()[0] == doctest::Approx((1.0 - kLi2) / (std::sqrt(2.0) / std::log(2.0))));
    CHECK(f.values()[0] == doctest::Approx(-0.0221).epsilon(1e-2));
    for (double v : f.values()) CHECK(std::abs(v) < 3.0);
    const auto primes = sieve_primes(1000);
    for (std::size_t i = 0; i < f.size(); i += 97) {
      const double x = f.x_at(i);
      double pi = 0;
      for (double p : primes.positions()) pi += p <= x;
      const double li = x == 2.0 ? kLi2 : oracle::li_ramanujan(x);
      CHECK(f.values()[i] == doctest::Approx((pi - li) / (std::sqrt(x) / std::log(x))).epsilon(1e-8));
    }
    CHECK_THROWS_AS(prime_fluctuation_field(2, 1.0), Error);
  }

  TEST_CASE("point set validation") {
    CHECK_THROWS_AS(PointSet({2, 1}, 0, 3), Error);
    CHECK_THROWS_AS(PointSet({1, 1}, 0, 3), Error);
    CHECK_THROWS_AS(PointSet({4}, 0, 3), Error);
    const auto t = sieve_primes(100).truncated(20);
    CHECK(t.size() == 8);
    CHECK(t.ambient_hi() == 20.0);
  }
}

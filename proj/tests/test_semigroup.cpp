#include <doctest.h>

#include <psns/psns.hpp>

#include "paper_data.hpp"

using namespace psns;

TEST_CASE("derive_generators reproduces the worked examples") {
  CHECK(derive_generators(paper::example1()) == paper::example1_gens());
  CHECK(derive_generators(paper::example2()) == paper::example2_gens());
}

TEST_CASE("n2 formula spot check") {
  // 5*7*4 + 15*6 + 7 = 237
  CHECK(derive_generators({21, 11, 7, 4, 5}).n2 == 5 * 7 * 4 + 15 * 6 + 7);
}

TEST_CASE("derive_generators rejects malformed parameters") {
  CHECK_THROWS_AS(derive_generators({2, 2, 2, 2, 5}), invalid_params); // a21 >= a1-1
  CHECK_THROWS_AS(derive_generators({5, 1, 2, 2, 1}), invalid_params); // a2 = 1
  CHECK_THROWS_AS(derive_generators({5, 2, 2, 2, 0}), invalid_params); // a21 = 0
}

TEST_CASE("derive_generators detects overflow instead of wrapping") {
  PseudoSymParams huge{int64_t{1} << 22, int64_t{1} << 22, int64_t{1} << 22, int64_t{1} << 22, 3};
  CHECK_THROWS_AS(derive_generators(huge), arithmetic_overflow);
}

TEST_CASE("check_conditions on the examples and at the cond4 boundary") {
  CHECK(check_conditions(paper::example1()).all());
  CHECK(check_conditions(paper::example2()).all());
  ConditionReport r = check_conditions({21, 3, 7, 4, 2}); // a2 = a21 + 1
  CHECK_FALSE(r.cond4);
}

TEST_CASE("order table basics") {
  std::vector<i64> gens23 = {2, 3};
  OrderTable t = compute_order_table(gens23, 9);
  CHECK(t.at(0) == 0);
  CHECK(t.at(4) == 2);  // 2+2
  CHECK(t.at(1) == -1); // not in S
  CHECK(t.at(5) == 2);  // 2+3
}

TEST_CASE("oracle_hilbert small cases") {
  std::vector<i64> gens23 = {2, 3};
  CHECK(oracle_hilbert(gens23, 3) == std::vector<i64>{1, 2, 2, 2});
  std::vector<i64> gens1 = {1};
  CHECK(oracle_hilbert(gens1, 2) == std::vector<i64>{1, 1, 1});
}

TEST_CASE("oracle_hilbert matches Example 1 partial sums") {
  auto h = oracle_hilbert(paper::example1_gens(), 4);
  CHECK(h == std::vector<i64>{1, 4, 10, 20, 32});
}

static std::vector<PseudoSymParams> valid_sweep(i64 amax, i64 a21max) {
  std::vector<PseudoSymParams> out;
  for (i64 a1 = 2; a1 <= amax; ++a1)
    for (i64 a2 = 2; a2 <= amax; ++a2)
      for (i64 a3 = 2; a3 <= amax; ++a3)
        for (i64 a4 = 2; a4 <= amax; ++a4)
          for (i64 a21 = 1; a21 <= a21max; ++a21) {
            PseudoSymParams p{a1, a2, a3, a4, a21};
            if (p.well_formed()) out.push_back(p);
          }
  return out;
}

TEST_CASE("coprimality is reported as data, not gated on") {
  // Example 1 generates a numerical semigroup; Example 2's published
  // generators share the factor 3, yet all structural results go through.
  CHECK(check_conditions(paper::example1()).coprime);
  CHECK(derive_generators(paper::example1()).gcd() == 1);
  CHECK_FALSE(check_conditions(paper::example2()).coprime);
  CHECK(derive_generators(paper::example2()).gcd() == 3);
  CHECK(check_conditions(paper::example2()).all()); // gcd does not invalidate
}

TEST_CASE("ordered generators imply conditions (1)-(3)") {
  for (const auto& p : valid_sweep(6, 4)) {
    ConditionReport r = check_conditions(p);
    if (r.ordered) {
      CHECK(r.cond1);
      CHECK(r.cond2);
      CHECK(r.cond3);
    }
  }
}

TEST_CASE("ord is superadditive along generators") {
  auto gens = paper::example1_gens().as_array();
  std::vector<i64> g(gens.begin(), gens.end());
  OrderTable t = compute_order_table(std::span<const i64>(g), 6000);
  for (i64 s = 0; s <= t.bound; ++s) {
    if (!t.contains(s)) continue;
    for (i64 n : g)
      if (s + n <= t.bound) CHECK(t.at(s + n) >= t.at(s) + 1);
  }
}

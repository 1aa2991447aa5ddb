#include <doctest.h>

#include <random>

#include <psns/psns.hpp>

#include "paper_data.hpp"

using namespace psns;

static Monomial m(i64 a, i64 b, i64 c, i64 d) { return Monomial{{a, b, c, d}}; }

TEST_CASE("local order prefers lower total degree") {
  // X1^a21 X4 beats X2^a2 when a2 > a21 + 1
  CHECK(local_greater(m(5, 0, 0, 1), m(0, 11, 0, 0)));
  CHECK(local_compare(m(1, 2, 3, 4), m(1, 2, 3, 4)) == std::strong_ordering::equal);
  // degree tie broken by reverse lex: X1^52 X3^5 > X2^56 X4 (both degree 57)
  CHECK(local_greater(m(52, 0, 5, 0), m(0, 56, 0, 1)));
  // unit monomial is maximal
  CHECK(local_greater(Monomial::unit(), m(1, 0, 0, 0)));
}

TEST_CASE("local order is total and multiplicative") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<i64> d(0, 5);
  auto rand_mono = [&] { return m(d(rng), d(rng), d(rng), d(rng)); };
  for (int it = 0; it < 2000; ++it) {
    Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
    auto ab = local_compare(a, b);
    if (ab == std::strong_ordering::greater)
      CHECK(local_compare(b, a) == std::strong_ordering::less);
    else if (ab == std::strong_ordering::less)
      CHECK(local_compare(b, a) == std::strong_ordering::greater);
    if (ab == std::strong_ordering::greater) {
      // compatibility with multiplication
      CHECK(local_greater(a * c, b * c));
      // transitivity spot check
      if (local_greater(b, c)) CHECK(local_greater(a, c));
    }
    CHECK((local_compare(a, b) == std::strong_ordering::equal) == (a == b));
  }
}

TEST_CASE("monomial rendering") {
  CHECK(m(5, 0, 0, 1).str() == "X1^5*X4");
  CHECK(m(0, 166, 0, 0).str() == "X2^166");
  CHECK(Monomial::unit().str() == "1");
}

TEST_CASE("binomial orientation and ecart") {
  Binomial f2(m(0, 11, 0, 0), m(5, 0, 0, 1));
  CHECK(f2.lead == m(5, 0, 0, 1));
  CHECK(f2.ecart() == 11 - 6);
}

TEST_CASE("spoly of f2 and f4 is X2^{a2-1} g_{0,0}") {
  // Example 1: f2 = X1^5 X4 - X2^11, f4 = X4^4 - X1 X2^10 X3^6
  Binomial f2(m(0, 11, 0, 0), m(5, 0, 0, 1));
  Binomial f4(m(0, 0, 0, 4), m(1, 10, 6, 0));
  auto s = spoly(f2, f4);
  REQUIRE(s.has_value());
  // X2^10 * (X2 X4^3 - X1^6 X3^6)
  CHECK(s->lead == m(0, 11, 0, 3));
  CHECK(s->tail == m(6, 10, 6, 0));
}

TEST_CASE("spoly of a binomial with itself vanishes") {
  Binomial f(m(0, 11, 0, 0), m(5, 0, 0, 1));
  CHECK_FALSE(spoly(f, f).has_value());
}

TEST_CASE("spoly in two variables under the local order") {
  // spoly(x^2 - y^5, x^2 - y^3) = y^3 - y^5 with lead y^3
  Binomial f(m(2, 0, 0, 0), m(0, 5, 0, 0));
  Binomial g(m(2, 0, 0, 0), m(0, 3, 0, 0));
  auto s = spoly(f, g);
  REQUIRE(s.has_value());
  CHECK(s->lead == m(0, 3, 0, 0));
  CHECK(s->tail == m(0, 5, 0, 0));
}

TEST_CASE("mora_nf basic reductions") {
  // NF(X^3 - Y^3 | {X - Y}) = 0
  std::vector<Binomial> g = {Binomial(m(1, 0, 0, 0), m(0, 1, 0, 0))};
  auto f = make_binomial(m(3, 0, 0, 0), m(0, 3, 0, 0));
  CHECK_FALSE(mora_nf(f, g).has_value());

  // self reduction
  std::vector<Binomial> g2 = {Binomial(m(0, 11, 0, 0), m(5, 0, 0, 1))};
  CHECK_FALSE(mora_nf(g2[0], g2).has_value());

  // no applicable reductor: NF(y^3 - y^5 | {x^2 - y^5, x^2 - y^3})
  std::vector<Binomial> g3 = {Binomial(m(2, 0, 0, 0), m(0, 5, 0, 0)),
                              Binomial(m(2, 0, 0, 0), m(0, 3, 0, 0))};
  auto r = mora_nf(make_binomial(m(0, 3, 0, 0), m(0, 5, 0, 0)), g3);
  REQUIRE(r.has_value());
  CHECK(r->lead == m(0, 3, 0, 0));
  CHECK(r->tail == m(0, 5, 0, 0));

  // zero input
  CHECK_FALSE(mora_nf(std::nullopt, g).has_value());
}

TEST_CASE("power-difference normal forms vanish against the base binomial") {
  // For random monomials m1 != m2 and k <= 6, NF(m1^k - m2^k | {m1 - m2}) = 0.
  std::mt19937 rng(11);
  std::uniform_int_distribution<i64> d(0, 4);
  auto rand_mono = [&] { return m(d(rng), d(rng), d(rng), d(rng)); };
  int done = 0;
  while (done < 300) {
    Monomial m1 = rand_mono(), m2 = rand_mono();
    if (m1 == m2) continue;
    ++done;
    std::vector<Binomial> g = {Binomial(m1, m2)};
    for (i64 k = 1; k <= 6; ++k) {
      Monomial p1 = m1, p2 = m2;
      for (i64 t = 1; t < k; ++t) {
        p1 = p1 * m1;
        p2 = p2 * m2;
      }
      CHECK_FALSE(mora_nf(make_binomial(p1, p2), g).has_value());
    }
  }
}

TEST_CASE("is_standard_basis witnesses") {
  std::vector<Binomial> single = {Binomial(m(0, 11, 0, 0), m(5, 0, 0, 1))};
  CHECK(is_standard_basis(single).ok);

  std::vector<Binomial> bad = {Binomial(m(2, 0, 0, 0), m(0, 5, 0, 0)),
                               Binomial(m(2, 0, 0, 0), m(0, 3, 0, 0))};
  auto r = is_standard_basis(bad);
  CHECK_FALSE(r.ok);
  REQUIRE(r.remainder.has_value());
  CHECK(r.remainder->lead == m(0, 3, 0, 0));
  CHECK(r.remainder->tail == m(0, 5, 0, 0));
}

TEST_CASE("leading_form cases") {
  Binomial f2(m(0, 11, 0, 0), m(5, 0, 0, 1));
  auto lf = leading_form(f2);
  REQUIRE(std::holds_alternative<Monomial>(lf));
  CHECK(std::get<Monomial>(lf) == m(5, 0, 0, 1));

  Binomial hom(m(1, 0, 0, 0), m(0, 1, 0, 0));
  CHECK(std::holds_alternative<Binomial>(leading_form(hom)));

  Binomial g34(m(0, 166, 0, 0), m(165, 0, 2, 0));
  auto lf3 = leading_form(g34);
  REQUIRE(std::holds_alternative<Monomial>(lf3));
  CHECK(std::get<Monomial>(lf3) == m(0, 166, 0, 0));
}

TEST_CASE("s_degree and is_toric") {
  GeneratorTuple g = paper::example1_gens();
  CHECK(s_degree(Monomial::unit(), g) == 0);
  CHECK(s_degree(m(0, 11, 0, 0), g) == 11 * 237);
  Binomial f2(m(0, 11, 0, 0), m(5, 0, 0, 1));
  CHECK(s_degree(f2.lead, g) == s_degree(f2.tail, g));
  CHECK(s_degree(f2.lead, g) == 2607);
  CHECK(is_toric(f2, g));
  Binomial f1(m(21, 0, 0, 0), m(0, 0, 1, 3));
  CHECK(s_degree(m(21, 0, 0, 0), g) == 4872);
  CHECK(is_toric(f1, g));
  CHECK_FALSE(is_toric(Binomial(m(1, 0, 0, 0), m(0, 1, 0, 0)), g));
}

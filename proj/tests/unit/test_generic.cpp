#include "doctest.h"
#include "subn/algorithms.hpp"
#include "subn/generic.hpp"

using namespace subn;

namespace {

// Phi_d(q) from its roots: prod over k coprime to d of (q - zeta^k), computed
// as prod_{e | d} (q^e - 1)^mu(d/e)
Integer phi_mobius(unsigned d, long long q)
{
  auto mu = [](unsigned n) {
    int m = 1;
    for (unsigned p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0)
          return 0;
        m = -m;
      }
    return n > 1 ? -m : m;
  };
  Integer num = 1, den = 1;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e)
      continue;
    Integer t = 1;
    for (unsigned i = 0; i < e; ++i)
      t *= q;
    t -= 1;
    int m = mu(d / e);
    if (m == 1)
      num *= t;
    else if (m == -1)
      den *= t;
  }
  return num / den;
}

} // namespace

TEST_CASE("cyclotomic values")
{
  for (unsigned d = 1; d <= 24; ++d)
    for (long long q : {2LL, 3LL, 4LL, 5LL, 7LL, 9LL}) {
      CAPTURE(d);
      CAPTURE(q);
      CHECK(cyclotomic_value(d, q) == phi_mobius(d, q));
    }
  CHECK(cyclotomic_value(2, -4) == -3);
  CHECK(cyclotomic_value(1, -4) == -5);
}

TEST_CASE("multiplicative order and Zsigmondy primes")
{
  CHECK(e_ell(3, 2) == 2);
  CHECK(e_ell(7, 2) == 3);
  CHECK(e_ell(5, 4) == 2);
  CHECK(e_ell(13, 3) == 3);
  CHECK_THROWS_AS(e_ell(2, 4), DomainError);
  CHECK(zsigmondy(3, 2) == 7u);
  CHECK(zsigmondy(4, 2) == 5u);
  CHECK(!zsigmondy(6, 2)); // 2^6 - 1 has no primitive prime divisor
  CHECK(!zsigmondy(2, 7)); // 7 + 1 = 8
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (unsigned d = 1; d <= 12; ++d)
      if (auto l = zsigmondy(d, q))
        CHECK(e_ell(*l, q) == d);
}

TEST_CASE("order polynomials evaluate to the group order")
{
  struct Case
  {
    char const *spec;
    char const *poly;
    char const *order;
  };
  // frozen values
  Case const cases[] = {
      {"SL 4 2", "q^6 Phi1^3 Phi2^2 Phi3 Phi4", "20160"},
      {"G2 4", "q^6 Phi1^2 Phi2^2 Phi3 Phi6", "251596800"},
      {"Sp 2 3", "q^4 Phi1^2 Phi2^2 Phi4", "51840"},
      {"SU 3 3", "q^3 Phi1 Phi2^2 Phi6", "6048"},
  };
  for (auto const &c : cases) {
    GroupSpec s = GroupSpec::parse(c.spec);
    CHECK(order_polynomial(s).str() == c.poly);
    CHECK(order_value(s) == Integer(c.order));
  }
  CHECK(order_value(GroupSpec::parse("E8 2")) ==
        Integer("337804753143634806261388190614085595079991692242467651576160959909068800000"));
  CHECK(order_value(GroupSpec::parse("3D4 2")) == 211341312);
  CHECK(order_value(GroupSpec::parse("F4 2")) == Integer("3311126603366400"));
  // the polynomial counts the full group; the simple 2E6(2) has index gcd(3, q+1) = 3
  CHECK(order_value(GroupSpec::parse("2E6 2")) == 3 * Integer("76532479683774853939200"));
  CHECK_THROWS_AS(order_polynomial(GroupSpec::parse("Sym 5")), UnsupportedError);
}

TEST_CASE("Levi shapes")
{
  auto levis = dsplit_levis(GroupSpec::parse("SL 4 2"), 2);
  REQUIRE(levis.size() == 3);
  CHECK(levis[0].shape.str() == "(1,1;0)");
  CHECK(levis[1].shape.str() == "(2;0)");
  CHECK(levis[2].shape.str() == "(1;2)");
  // full level: GL_1(4)^2, GL_2(4), GL_1(4) x GL_2(2)
  CHECK(levis[0].order == 9);
  CHECK(levis[1].order == 180);
  CHECK(levis[2].order == 18);

  CHECK(LeviShape::parse("(2,1;3)-").str() == "(2,1;3)-");
  CHECK(LeviShape::parse("(1;0)").parts == std::vector<unsigned>{1});

  // every shape partitions n
  for (auto text : {"SL 6 2", "SU 5 2", "Sp 4 3", "SO 4 3", "SO+ 5 2", "SO- 5 2"}) {
    GroupSpec s = GroupSpec::parse(text);
    for (unsigned d : order_polynomial(s).degrees()) {
      TorusData t = torus_decomposition(s, d);
      for (auto const &le : dsplit_levis(s, d)) {
        CAPTURE(text);
        CAPTURE(le.shape.str());
        CHECK(t.e * le.shape.part_sum() + le.shape.s == s.n);
        CHECK(LeviShape::parse(le.shape.str()) == le.shape);
        CHECK(le.order > 0);
      }
    }
  }
}

TEST_CASE("torus data")
{
  TorusData t = torus_decomposition(GroupSpec::parse("SL 4 2"), 2);
  CHECK(t.a == 2);
  CHECK(t.r == 0);
  CHECK(t.e == 2);
  t = torus_decomposition(GroupSpec::parse("Sp 3 2"), 3);
  CHECK(t.a == 1);
  CHECK(t.e == 3);
}

TEST_CASE("abelian Sylow criterion against the constructed groups")
{
  for (auto text : {"SL 4 2", "SL 3 4", "SU 3 4", "Sp 2 3"}) {
    GroupSpec s = GroupSpec::parse(text);
    PermGroup G = build_group(s);
    for (unsigned ell : prime_divisors(G.order())) {
      if (ell == 2 || s.q % ell == 0)
        continue;
      CAPTURE(text);
      CAPTURE(ell);
      CHECK(sylow_abelian(s, ell) == sylow(G, ell).is_abelian());
    }
  }
}

TEST_CASE("factor strings")
{
  CHECK(factor_string(20160) == "2^6 * 3^2 * 5 * 7");
  CHECK(factor_string(1) == "1");
  CHECK(ell_part(Integer(20160), 3) == 9);
}

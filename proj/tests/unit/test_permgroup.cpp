#include <random>
#include <set>

#include "doctest.h"
#include "subn/algorithms.hpp"
#include "subn/classical.hpp"

using namespace subn;

namespace {

Perm cyc(unsigned n, std::vector<std::vector<point>> c) { return Perm::from_cycles(n, c); }

// closure of the generators under multiplication
std::set<Perm> closure(std::vector<Perm> const &gens)
{
  std::set<Perm> seen{Perm(gens.front().degree())};
  std::vector<Perm> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Perm a = todo.back();
    todo.pop_back();
    for (auto const &g : gens) {
      Perm b = a * g;
      if (seen.insert(b).second)
        todo.push_back(b);
    }
  }
  return seen;
}

} // namespace

TEST_CASE("perm basics")
{
  Perm a = Perm::parse(5, "(1,2,3)(4,5)");
  CHECK(a.order() == 6);
  CHECK(a.str() == "(1,2,3)(4,5)");
  CHECK((a * ~a).is_identity());
  CHECK(a.pow(6).is_identity());
  CHECK(a.pow(-1) == ~a);
  CHECK(!a.is_even());
  CHECK_THROWS_AS(Perm::parse(3, "(1,4)"), ParseError);
  // products read left to right: apply a, then b
  Perm b = Perm::parse(5, "(1,2)");
  CHECK((a * b)[0] == b[a[0]]);
}

TEST_CASE("orders match closure")
{
  std::vector<std::vector<Perm>> gensets = {
      {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1}})},
      {cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4, 5}}), cyc(6, {{0, 3}, {1, 4}, {2, 5}})},
      {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})},
  };
  for (auto const &gens : gensets) {
    PermGroup G(gens.front().degree(), gens);
    auto all = closure(gens);
    CHECK(G.order() == all.size());
    for (auto const &g : all)
      CHECK(G.contains(g));
    std::set<Perm> listed;
    G.for_each_element([&](Perm const &g) {
      listed.insert(g);
      return true;
    });
    CHECK(listed == all);
  }
}

TEST_CASE("element_at agrees with for_each_element ranges")
{
  PermGroup G = PermGroup::symmetric(5);
  std::vector<Perm> seq;
  G.for_each_element([&](Perm const &g) {
    seq.push_back(g);
    return true;
  });
  for (std::size_t i = 0; i < seq.size(); i += 7)
    CHECK(G.element_at(i) == seq[i]);
  std::vector<Perm> part;
  G.for_each_element(
      [&](Perm const &g) {
        part.push_back(g);
        return true;
      },
      30, 45);
  REQUIRE(part.size() == 15);
  CHECK(part.front() == seq[30]);
  CHECK(part.back() == seq[44]);
}

TEST_CASE("symmetric and alternating")
{
  CHECK(PermGroup::symmetric(8).order() == 40320);
  CHECK(PermGroup::alternating(8).order() == 20160);
  CHECK(!PermGroup::alternating(6).contains(cyc(6, {{0, 1}})));
  CHECK(derived_subgroup(PermGroup::symmetric(6)).order() == 360);
  CHECK(normal_closure(PermGroup::symmetric(5), {cyc(5, {{0, 1, 2}})}).order() == 60);
}

TEST_CASE("centraliser and normaliser agree with enumeration")
{
  SearchOptions noenum;
  noenum.enumeration_fallback = 0;
  std::vector<PermGroup> groups = {PermGroup::symmetric(6), PermGroup::alternating(7),
                                   build_group(GroupSpec::parse("SL 3 2"))};
  std::mt19937_64 rng(5);
  for (auto const &G : groups)
    for (int t = 0; t < 6; ++t) {
      Perm x = G.random_element(rng);
      PermGroup C = centraliser(G, x, noenum);
      CHECK(C.same_group(centraliser_by_enumeration(G, x)));
      PermGroup H(G.degree(), {x});
      CHECK(normaliser(G, H, noenum).same_group(normaliser_by_enumeration(G, H)));
    }
}

TEST_CASE("conjugacy search")
{
  SearchOptions noenum;
  noenum.enumeration_fallback = 0;
  PermGroup G = build_group(GroupSpec::parse("SL 3 2"));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    Perm x = G.random_element(rng), g = G.random_element(rng);
    Perm y = conj(x, g);
    auto h = conjugating_element(G, x, y, noenum);
    REQUIRE(h);
    CHECK(conj(x, *h) == y);
    CHECK(G.contains(*h));
  }
  // a 4-cycle and a double transposition share no class in S_4
  PermGroup S4 = PermGroup::symmetric(4);
  CHECK(!conjugating_element(S4, cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 1, 2, 3}}), noenum));
  // (1,2,3) and (1,3,2) are not conjugate in A_4
  PermGroup A4 = PermGroup::alternating(4);
  CHECK(!conjugating_element(A4, cyc(4, {{0, 1, 2}}), cyc(4, {{0, 2, 1}}), noenum));
}

TEST_CASE("Sylow subgroups")
{
  PermGroup G = build_group(GroupSpec::parse("SL 4 2"));
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    PermGroup P = sylow(G, p);
    CHECK(P.order() == p_part(G.order(), p));
    CHECK(P.is_p_group(p));
    CHECK(P.is_subgroup_of(G));
  }
  // frozen: |N_G(P)| for the Sylow 3-subgroup of SL_4(2) = A_8
  CHECK(normaliser(G, sylow(G, 3)).order() == 72);
  CHECK(p_class_representatives(G, 3).size() == 2);
  CHECK(p_class_representatives(PermGroup::symmetric(6), 3).size() == 2);
}

TEST_CASE("prime divisors")
{
  CHECK(prime_divisors(Integer(20160)) == std::vector<unsigned>{2, 3, 5, 7});
  CHECK(p_part(Integer(20160), 2) == 64);
}

TEST_CASE("product replacement is reproducible")
{
  PermGroup G = PermGroup::symmetric(7);
  ProductReplacement a(G.generators(), 7, 3), b(G.generators(), 7, 3);
  for (int i = 0; i < 20; ++i) {
    Perm x = a.next();
    CHECK(x == b.next());
    CHECK(G.contains(x));
  }
}

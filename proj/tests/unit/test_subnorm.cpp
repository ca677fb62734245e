#include <algorithm>
#include <set>

#include "doctest.h"
#include "subn/classical.hpp"
#include "subn/subnorm.hpp"

using namespace subn;

namespace {

using Set = std::set<std::vector<point>>;

std::vector<point> key(Perm const &p) { return p.images(); }

Perm from_key(std::vector<point> const &k) { return Perm(k); }

// the group generated by gens as a set of image vectors
Set closure_set(std::vector<Perm> const &gens, unsigned degree)
{
  Set out{key(Perm(degree))};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const &a : frontier)
      for (auto const &g : gens) {
        Perm b = a * g;
        if (out.insert(key(b)).second)
          next.push_back(b);
      }
    frontier.swap(next);
  }
  return out;
}

// normal closure of x in the group given as a set
Set normal_closure_set(Set const &H, Perm const &x, unsigned degree)
{
  std::vector<Perm> conj;
  Set seen;
  for (auto const &k : H) {
    Perm h = from_key(k);
    Perm c = ~h * x * h;
    if (seen.insert(key(c)).second)
      conj.push_back(c);
  }
  return closure_set(conj, degree);
}

// <x> subnormal in H iff the chain of normal closures of x reaches <x>
bool subnormal_naive(Perm const &x, Set H, unsigned degree)
{
  Set cyclic = closure_set({x}, degree);
  while (H.size() > cyclic.size()) {
    Set next = normal_closure_set(H, x, degree);
    if (next.size() == H.size())
      return false;
    H.swap(next);
  }
  return true;
}

// the set S_G(x) by definition
std::vector<Perm> subnormal_set_naive(PermGroup const &G, Perm const &x)
{
  std::vector<Perm> out;
  G.for_each_element([&](Perm const &g) {
    if (subnormal_naive(x, closure_set({g, x}, G.degree()), G.degree()))
      out.push_back(g);
    return true;
  });
  return out;
}

} // namespace

TEST_CASE("subnormality of cyclic subgroups")
{
  Perm x = Perm::parse(4, "(1,2)(3,4)");
  CHECK(is_subnormal(x, PermGroup::alternating(4)));
  CHECK(is_subnormal(x, PermGroup::symmetric(4)));
  Perm t = Perm::parse(4, "(1,2)");
  CHECK_FALSE(is_subnormal(t, PermGroup::symmetric(4)));
  CHECK(is_subnormal_pair(t, Perm::parse(4, "(3,4)")));
  CHECK_FALSE(is_subnormal_pair(t, Perm::parse(4, "(2,3)")));
}

TEST_CASE("brute force agrees with the definition on S5")
{
  PermGroup G = PermGroup::symmetric(5);
  char const *reps[] = {"(1,2)", "(1,2,3)", "(1,2)(3,4)", "(1,2,3,4)", "(1,2,3,4,5)",
                        "(1,2,3)(4,5)"};
  for (char const *r : reps) {
    Perm x = Perm::parse(5, r);
    auto naive = subnormal_set_naive(G, x);
    Integer naive_order = closure_set(naive, 5).size();

    BruteForceOptions bo;
    bo.threads = 2;
    bo.chunk = 16;
    auto fast = subnormaliser_bruteforce(G, x, bo);
    INFO(r);
    CHECK(fast.subnormaliser.order() == naive_order);

    bo.exact_set = true;
    auto exact = subnormaliser_bruteforce(G, x, bo);
    REQUIRE(exact.set_size);
    CHECK(*exact.set_size == naive.size());
    CHECK(exact.subnormaliser.order() == naive_order);
  }
}

TEST_CASE("brute force refuses above the ceiling")
{
  BruteForceOptions bo;
  bo.ceiling = 100;
  CHECK_THROWS_AS(subnormaliser_bruteforce(PermGroup::symmetric(5), Perm::parse(5, "(1,2,3)"), bo),
                  CeilingError);
}

TEST_CASE("thread count does not change the result")
{
  PermGroup G = PermGroup::symmetric(6);
  Perm x = Perm::parse(6, "(1,2,3)");
  Integer first;
  for (unsigned th : {1u, 2u, 3u}) {
    BruteForceOptions bo;
    bo.threads = th;
    bo.chunk = 50;
    bo.exact_set = true;
    auto r = subnormaliser_bruteforce(G, x, bo);
    if (th == 1)
      first = *r.set_size;
    CHECK(*r.set_size == first);
    CHECK(r.subnormaliser.order() == 72);
  }
}

TEST_CASE("formula equals brute force for abelian Sylow subgroups")
{
  struct Case
  {
    PermGroup G;
    unsigned p;
  };
  std::vector<Case> cases = {
      {PermGroup::symmetric(6), 3},
      {PermGroup::symmetric(7), 3},
      {PermGroup::symmetric(7), 5},
      {PermGroup::alternating(7), 3},
      {build_group(GroupSpec::parse("SL 4 2")), 3},
      {build_group(GroupSpec::parse("SL 3 2")), 7},
  };
  for (auto const &c : cases)
    for (auto const &x : p_class_representatives(c.G, c.p)) {
      auto f = subnormaliser_formula(c.G, x, c.p);
      BruteForceOptions bo;
      bo.threads = 1;
      auto b = subnormaliser_bruteforce(c.G, x, bo);
      INFO(c.G.order() << " p=" << c.p << " x=" << x.str());
      CHECK(f.subnormaliser.order() == b.subnormaliser.order());
      CHECK(f.picky == b.picky);
      CHECK(f.sylow_normaliser_order == b.sylow_normaliser_order);
      // same subgroup, not only the same order
      for (auto const &g : f.subnormaliser.generators())
        CHECK(b.subnormaliser.contains(g));
    }
}

TEST_CASE("formula refuses non-abelian Sylow subgroups and non-p-elements")
{
  PermGroup G = PermGroup::symmetric(9);
  CHECK_THROWS_AS(subnormaliser_formula(G, Perm::parse(9, "(1,2,3)"), 3), RefusalError);
  CHECK_THROWS(subnormaliser_formula(PermGroup::symmetric(6), Perm::parse(6, "(1,2)"), 3));
}

TEST_CASE("prime of order")
{
  CHECK(prime_of_order(Perm::parse(6, "(1,2,3)(4,5,6)")) == 3);
  CHECK(prime_of_order(Perm::parse(6, "(1,2,3,4)")) == 2);
  CHECK(prime_of_order(Perm::parse(6, "(1,2,3)(4,5)")) == 0);
  CHECK(prime_of_order(Perm(6)) == 0);
}

TEST_CASE("M11, ell = 3: the subnormaliser is the Sylow normaliser")
{
  PermFile pf = named_generators("M11");
  PermGroup G(pf.degree, pf.gens);
  REQUIRE(G.order() == 7920);
  auto reps = p_class_representatives(G, 3);
  REQUIRE(reps.size() == 1);
  BruteForceOptions bo;
  bo.threads = 1;
  auto r = subnormaliser_bruteforce(G, reps[0], bo);
  CHECK(r.subnormaliser.order() == 144);
  CHECK(r.picky);
  CHECK(picky_test(G, reps[0], 3));
}

TEST_CASE("J2, ell = 5: picky exactly on the classes with |C| = 50")
{
  PermFile pf = named_generators("J2");
  PermGroup G(pf.degree, pf.gens);
  REQUIRE(G.order() == 604800);
  unsigned small = 0;
  for (auto const &x : p_class_representatives(G, 5)) {
    Integer c = centraliser(G, x).order();
    bool picky = picky_test(G, x, 5);
    CHECK(picky == (c == 50));
    auto f = subnormaliser_formula(G, x, 5);
    CHECK(f.subnormaliser.order() == (picky ? 300 : 604800));
    small += c == 50;
  }
  CHECK(small == 2);
}

#include "doctest.h"
#include "subn/classical.hpp"

using namespace subn;

namespace {

Integer ipow(Integer b, unsigned e)
{
  Integer r = 1;
  while (e--)
    r *= b;
  return r;
}

// textbook order formulas, written out independently of the generic module
Integer gl(unsigned n, Integer q)
{
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i)
    r *= ipow(q, n) - ipow(q, i);
  return r;
}

Integer gu(unsigned n, Integer q)
{
  Integer r = ipow(q, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i)
    r *= ipow(q, i) - (i % 2 ? Integer(-1) : Integer(1));
  return r;
}

Integer sp(unsigned m, Integer q)
{
  Integer r = ipow(q, m * m);
  for (unsigned i = 1; i <= m; ++i)
    r *= ipow(q, 2 * i) - 1;
  return r;
}

} // namespace

TEST_CASE("group spec parsing")
{
  CHECK(GroupSpec::parse("SL 4 2").str() == "SL 4 2");
  CHECK(GroupSpec::parse("sym 7").family == Family::Sym);
  CHECK(GroupSpec::parse("M11").family == Family::Sporadic);
  CHECK(GroupSpec::parse("G2 4").dimension() == 6);
  CHECK(GroupSpec::parse("G2 5").dimension() == 7);
  CHECK(GroupSpec::parse("Sp 3 2").dimension() == 6);
  CHECK(GroupSpec::parse("SO 3 3").dimension() == 7);
  CHECK_THROWS_AS(GroupSpec::parse("SL 4 6"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("SL 0 2"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("SL 4"), ParseError);
}

TEST_CASE("generators preserve their forms")
{
  for (auto text : {"SL 3 4", "SU 3 3", "SU 4 2", "Sp 2 3", "Sp 3 2", "SO 2 3", "SO+ 3 2",
                    "SO- 3 3", "GU 2 3", "G2 4", "G2 3"}) {
    CAPTURE(text);
    MatrixGroup mg = matrix_generators(GroupSpec::parse(text));
    for (auto const &g : mg.gens) {
      CHECK(g.dim() == mg.dim);
      if (mg.form.kind != FormKind::none)
        CHECK(preserves_form(g, mg.form));
    }
  }
}

TEST_CASE("determinant one for special groups")
{
  for (auto text : {"SL 3 4", "SU 3 4", "Sp 2 5", "SO 2 5"}) {
    MatrixGroup mg = matrix_generators(GroupSpec::parse(text));
    for (auto const &g : mg.gens)
      CHECK(g.det() == Field::one());
  }
}

TEST_CASE("constructed orders equal textbook formulas")
{
  struct Case
  {
    char const *spec;
    Integer order;
  };
  Case const cases[] = {
      {"SL 2 4", gl(2, 4) / 3},   {"SL 2 9", gl(2, 9) / 8},   {"SL 3 4", gl(3, 4) / 3},
      {"SL 4 2", gl(4, 2)},       {"GL 2 5", gl(2, 5)},       {"SU 3 3", gu(3, 3) / 4},
      {"SU 4 2", gu(4, 2) / 3},   {"GU 2 3", gu(2, 3)},       {"Sp 2 3", sp(2, 3)},
      {"Sp 3 2", sp(3, 2)},       {"SO 2 3", sp(2, 3)},       {"Sym 7", Integer(5040)},
      {"Alt 8", Integer(20160)},  {"M11", Integer(7920)},     {"J2", Integer(604800)},
  };
  for (auto const &c : cases) {
    CAPTURE(c.spec);
    CHECK(build_group(GroupSpec::parse(c.spec)).order() == c.order);
  }
}

TEST_CASE("even orthogonal orders")
{
  // |SO^+-_2m(q)| = q^(m(m-1)) (q^m -+ 1) prod_{i<m} (q^2i - 1)
  auto so = [](unsigned m, int sign, Integer q) {
    Integer r = ipow(q, m * (m - 1)) * (ipow(q, m) - sign);
    for (unsigned i = 1; i < m; ++i)
      r *= ipow(q, 2 * i) - 1;
    return r;
  };
  CHECK(build_group(GroupSpec::parse("SO+ 3 2")).order() == so(3, 1, 2));
  CHECK(build_group(GroupSpec::parse("SO- 3 2")).order() == so(3, -1, 2));
  CHECK(build_group(GroupSpec::parse("SO+ 2 3")).order() == so(2, 1, 3));
  CHECK(build_group(GroupSpec::parse("SO- 2 3")).order() == so(2, -1, 3));
}

TEST_CASE("catalogue")
{
  CHECK(!catalogue().empty());
  for (auto const &e : catalogue()) {
    if (e.source.rfind("perms", 0) != 0)
      continue;
    PermFile pf = named_generators(e.name);
    CHECK(pf.degree == e.degree);
    CHECK(PermGroup(pf.degree, pf.gens).order() == e.order);
  }
  CHECK_THROWS_AS(named_generators("Monster"), Error);
}

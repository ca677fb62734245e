#include <fstream>
#include <sstream>

#include "doctest.h"
#include "subn/harness.hpp"

using namespace subn;

namespace {

Prediction for_shape(char const *group, unsigned ell, char const *shape)
{
  return predict_subnormaliser(GroupSpec::parse(group), ell, LeviShape::parse(shape));
}

// classical specs small enough to enumerate shapes quickly
std::vector<GroupSpec> classical_specs()
{
  std::vector<GroupSpec> out;
  unsigned const qs[] = {2, 3, 4, 5, 7, 8, 9};
  for (unsigned q : qs) {
    for (unsigned n = 2; n <= 7; ++n) {
      out.push_back({Family::SL, n, q, ""});
      if (n >= 3)
        out.push_back({Family::SU, n, q, ""});
    }
    for (unsigned n = 1; n <= 4; ++n) {
      if (n >= 2 && !(n == 2 && q == 2))
        out.push_back({Family::Sp, n, q, ""});
      if (n >= 3 && q % 2)
        out.push_back({Family::SOodd, n, q, ""});
    }
    for (unsigned n = 4; n <= 4; ++n) {
      out.push_back({Family::SOevenPlus, n, q, ""});
      out.push_back({Family::SOevenMinus, n, q, ""});
    }
  }
  return out;
}

// odd primes dividing |G| with abelian Sylow subgroups, up to a bound
std::vector<unsigned> abelian_primes(GroupSpec const &spec)
{
  std::vector<unsigned> out;
  Integer order = order_value(spec);
  for (unsigned ell = 3; ell < 60; ell += 2) {
    if (!is_prime(ell) || spec.q % ell == 0 || order % ell != 0)
      continue;
    if (sylow_abelian(spec, ell))
      out.push_back(ell);
  }
  return out;
}

std::vector<std::string> data_lines(std::string const &file)
{
  std::ifstream in(data_dir() + "/tables/" + file);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#')
      out.push_back(line);
  return out;
}

std::vector<std::string> split_lines(std::string const &s)
{
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line))
    out.push_back(line);
  return out;
}

} // namespace

TEST_CASE("SL4(2), ell = 3: one prediction per shape")
{
  auto a = for_shape("SL 4 2", 3, "(1,1;0)");
  CHECK(a.case_tag == "subn-SL(1)");
  CHECK(a.picky);
  CHECK(a.order == 72);

  auto b = for_shape("SL 4 2", 3, "(2;0)");
  CHECK(b.case_tag == "subn-SL(4)");
  CHECK(b.whole_group);
  CHECK(b.order == 20160);

  auto c = for_shape("SL 4 2", 3, "(1;2)");
  CHECK(c.case_tag == "subn-SL(3)");
  CHECK_FALSE(c.picky);
  CHECK(c.order == 72);
}

TEST_CASE("cyclic Sylow cases give N_G(P)")
{
  auto check = [](char const *g, unsigned ell, char const *shape, int order) {
    auto p = for_shape(g, ell, shape);
    CHECK(p.case_tag == "cyclic");
    CHECK(p.picky);
    CHECK(p.order == order);
  };
  check("SL 3 4", 5, "(1;1)", 30);
  check("SU 3 3", 7, "(1;0)", 21);
  check("Sp 2 3", 5, "(1;0)", 40);
  check("Sp 3 2", 7, "(1;0)", 42);
}

TEST_CASE("symmetric and alternating predictions")
{
  auto a = predict_symmetric(6, 3, 1);
  CHECK(a.order == 72);
  CHECK_FALSE(a.picky);
  auto b = predict_symmetric(7, 3, 2);
  CHECK(b.order == 72);
  CHECK(b.picky);
  CHECK(predict_symmetric(7, 3, 1).whole_group);
  auto alt = predict_symmetric(7, 3, 2, true);
  CHECK(alt.order == 36);
  CHECK_FALSE(alt.order_exact);
}

TEST_CASE("sporadic predictions")
{
  CHECK(predict_sporadic("Suz", 5).order == Integer("1209600"));
  CHECK(predict_sporadic("Fi22", 5).order == Integer("1045094400"));
  CHECK(predict_sporadic("He", 5).whole_group);
  auto m = predict_sporadic("M11", 3);
  CHECK(m.order == 144);
  CHECK(m.picky);
  // a class with a different centraliser order is not covered by the row
  CHECK(predict_sporadic("J2", 5, 50).order == 300);
  auto other = predict_sporadic("J2", 5, 300);
  CHECK(other.whole_group);
  CHECK(other.order == 604800);
}

TEST_CASE("G2(4), ell = 5: torus and the two non-torus outcomes")
{
  GroupSpec g = GroupSpec::parse("G2 4");
  auto labels = exceptional_centralisers(g, 2);
  REQUIRE(labels.size() == 2);
  CHECK(labels[0] == "torus");
  CHECK(exceptional_label_order(g, 2, "torus") == 25);
  CHECK(exceptional_label_order(g, 2, labels[1]) == 300);

  auto t = predict_exceptional(g, 5, "torus");
  REQUIRE(t.size() == 1);
  CHECK(t[0].picky);
  CHECK(t[0].order == 300);

  auto l = predict_exceptional(g, 5, labels[1]);
  REQUIRE(l.size() == 2);
  CHECK(l[0].order == 124800);
  CHECK(l[1].order == 604800);
}

TEST_CASE("exactly one clause matches every classical shape")
{
  std::size_t checked = 0;
  for (auto const &spec : classical_specs())
    for (unsigned ell : abelian_primes(spec)) {
      unsigned d = e_ell(ell, spec.q);
      for (auto const &le : dsplit_levis(spec, d)) {
        auto tags = matching_clauses(spec, ell, le.shape);
        INFO(spec.str() << " ell=" << ell << " " << le.shape.str());
        CHECK(tags.size() == 1);
        ++checked;
      }
    }
  CHECK(checked > 500);
}

TEST_CASE("exact predictions divide |G| and contain the centraliser")
{
  for (auto const &spec : classical_specs())
    for (unsigned ell : abelian_primes(spec)) {
      Integer order = order_value(spec);
      unsigned d = e_ell(ell, spec.q);
      for (auto const &le : dsplit_levis(spec, d)) {
        Prediction p = predict_subnormaliser(spec, ell, le.shape);
        INFO(spec.str() << " ell=" << ell << " " << le.shape.str() << " " << p);
        if (p.whole_group)
          CHECK(p.order == order);
        if (!p.order_exact || p.order == 0)
          continue;
        CHECK(order % p.order == 0);
        CHECK(p.order % levi_order_in_group(spec, le) == 0);
      }
    }
}

TEST_CASE("the minimal shape is the torus centraliser")
{
  for (auto const &spec : classical_specs())
    for (unsigned ell : abelian_primes(spec)) {
      unsigned d = e_ell(ell, spec.q);
      LeviShape m = minimal_shape(spec, d);
      auto levis = dsplit_levis(spec, d);
      bool found = false;
      for (auto const &le : levis)
        found = found || le.shape == m;
      INFO(spec.str() << " d=" << d << " " << m.str());
      CHECK(found);
      for (unsigned part : m.parts)
        CHECK(part == 1);
    }
}

TEST_CASE("emitted tables reproduce the bundled files")
{
  for (auto const &name : table_names()) {
    std::ostringstream os;
    emit_table(os, name);
    INFO(name);
    CHECK(split_lines(os.str()) == data_lines(table_file(name)));
  }
}

TEST_CASE("structure orders")
{
  CHECK(structure_order("J_2", 4, 2) == 604800);
  CHECK(structure_order("2A_2(q).2", 4, 2) == 124800);
  CHECK(structure_order("5^2.W(G_2)", 4, 2) == 300);
  CHECK(structure_order("no such thing", 4, 2) == 0);
}

#include <sstream>

#include "doctest.h"
#include "subn/harness.hpp"

using namespace subn;

namespace {

SuiteConfig parse(std::string const &text)
{
  std::istringstream in(text);
  return parse_suite(in);
}

std::string tsv(Report const &r)
{
  std::ostringstream os;
  r.write_tsv(os);
  return os.str();
}

} // namespace

TEST_CASE("suite config parsing")
{
  auto cfg = parse("name = t\nceiling = 5000 # small\nthreads = 2\n\n[instance]\ngroup = SL 4 2\n"
                   "ell = 3\nshape = (1;2)\n[instance]\ngroup = Sym 6\np = 3\nexact_set = yes\n");
  CHECK(cfg.name == "t");
  CHECK(cfg.ceiling == 5000);
  CHECK(cfg.threads == 2);
  REQUIRE(cfg.instances.size() == 2);
  CHECK(cfg.instances[0].group == "SL 4 2");
  CHECK(*cfg.instances[0].shape == "(1;2)");
  CHECK(cfg.instances[1].ell == 3);
  CHECK(cfg.instances[1].exact_set);

  CHECK_THROWS_AS(parse("bogus = 1\n"), ParseError);
  CHECK_THROWS_AS(parse("ceiling = lots\n"), ParseError);
  CHECK_THROWS_AS(parse("ceiling = 0\n"), ParseError);
  CHECK_THROWS_AS(parse("[instance]\ngroup = Sym 5\n"), ParseError);
  CHECK_THROWS_AS(parse("[instance]\ncolour = red\n"), ParseError);
  CHECK_THROWS_AS(parse("no equals sign\n"), ParseError);
}

TEST_CASE("bundled suites load")
{
  auto d = builtin_suite("default");
  CHECK(d.instances.size() > 50);
  auto f = builtin_suite("flagship");
  REQUIRE(f.instances.size() == 1);
  CHECK(*f.instances[0].perms == "G2(4)");
  CHECK_THROWS(builtin_suite("nope"));
}

TEST_CASE("SL4(2), ell = 3 verdicts")
{
  SuiteConfig cfg;
  cfg.instances.push_back({"SL 4 2", 3, std::nullopt, std::nullopt, false});
  Report r = run_suite(cfg);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.count(Verdict::match) == 2);
  CHECK(r.rows[0].shape == "(1;2)");
  CHECK(r.rows[0].computed == 72);
  CHECK(r.rows[1].shape == "(2;0)");
  CHECK(r.rows[1].computed == 20160);
}

TEST_CASE("refusals become skipped rows")
{
  SuiteConfig cfg;
  cfg.instances.push_back({"Sym 9", 3, std::nullopt, std::nullopt, false});
  cfg.instances.push_back({"Sym 6", 2, std::nullopt, std::nullopt, false});
  cfg.instances.push_back({"Sym 6", 7, std::nullopt, std::nullopt, false});
  Report r = run_suite(cfg);
  REQUIRE(r.rows.size() == 3);
  for (auto const &row : r.rows) {
    CHECK(row.verdict == Verdict::skipped);
    CHECK(row.reason.rfind("hypothesis-violated", 0) == 0);
  }
}

TEST_CASE("reports do not depend on the thread count")
{
  SuiteConfig cfg;
  cfg.instances.push_back({"Sym 7", 3, std::nullopt, std::nullopt, false});
  cfg.instances.push_back({"SL 3 2", 7, std::nullopt, std::nullopt, false});
  cfg.instances.push_back({"Alt 7", 5, std::nullopt, std::nullopt, false});
  cfg.threads = 1;
  std::string one = tsv(run_suite(cfg));
  cfg.threads = 3;
  CHECK(tsv(run_suite(cfg)) == one);
}

TEST_CASE("summary counts")
{
  SuiteConfig cfg;
  cfg.name = "s";
  cfg.instances.push_back({"Sym 5", 5, std::nullopt, std::nullopt, false});
  cfg.instances.push_back({"Sym 9", 3, std::nullopt, std::nullopt, false});
  Report r = run_suite(cfg);
  std::ostringstream os;
  r.write_summary(os);
  std::string s = os.str();
  CHECK(s.find("suite = s") != std::string::npos);
  CHECK(s.find("match = 1") != std::string::npos);
  CHECK(s.find("skipped = 1") != std::string::npos);
  CHECK(s.find("skipped.hypothesis-violated = 1") != std::string::npos);
}

TEST_CASE("Levi orders inside the group")
{
  GroupSpec sl = GroupSpec::parse("SL 4 2");
  for (auto const &le : dsplit_levis(sl, 2))
    if (le.shape == LeviShape::parse("(1;2)"))
      CHECK(levi_order_in_group(sl, le) == 18);
  GroupSpec su = GroupSpec::parse("SU 3 4");
  for (auto const &le : dsplit_levis(su, 2))
    if (le.shape == LeviShape::parse("(2,1;0)"))
      CHECK(levi_order_in_group(su, le) == 300);
}

TEST_CASE("simplicity")
{
  CHECK(is_simple(PermGroup::alternating(5)));
  CHECK(is_simple(PermGroup::alternating(6)));
  CHECK_FALSE(is_simple(PermGroup::symmetric(5)));
  CHECK_FALSE(is_simple(PermGroup::alternating(4)));
}

TEST_CASE("order and normaliser bounds hold")
{
  auto checks = check_bounds(6, 5);
  CHECK(checks.size() > 50);
  for (auto const &c : checks) {
    INFO(c.what << " " << c.spec.str() << " d=" << c.d);
    CHECK(c.holds);
  }
}

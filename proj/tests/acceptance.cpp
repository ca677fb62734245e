// Acceptance checks, one PASS/FAIL line per criterion. Exit code 1 if any
// criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "subn/harness.hpp"

using namespace subn;

namespace {

// wall-clock budgets in seconds
constexpr double budget_orders = 120;
constexpr double budget_bounds = 60;
constexpr double budget_equivalence = 600;
constexpr double budget_symmetric = 300;
constexpr double budget_classical = 600;
constexpr double budget_sporadic = 300;
constexpr double budget_flagship = 1800;
constexpr double budget_properties = 600;

// brute force runs on groups up to this order in the equivalence check
Integer const equivalence_ceiling = 200000;
// and up to |S_11| in the symmetric check
Integer const symmetric_ceiling = 39916800;

struct Outcome
{
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string const &what)
  {
    ok = false;
    if (failures.size() < 10)
      failures.push_back(what);
  }
};

int failed = 0;

void run(unsigned id, char const *title, double budget, std::function<Outcome()> const &body)
{
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (std::exception const &e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget)
    o.fail("over budget");
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << "criterion " << id << " " << (o.ok ? "PASS" : "FAIL") << " " << title << " ("
       << secs << " s of " << budget << " s)";
  if (!o.detail.empty())
    line << " " << o.detail;
  std::cout << line.str() << std::endl;
  for (auto const &f : o.failures)
    std::cout << "    " << f << '\n';
  if (!o.ok)
    ++failed;
}

bool contains_all(PermGroup const &H, std::vector<Perm> const &gens)
{
  for (auto const &g : gens)
    if (!H.contains(g))
      return false;
  return true;
}

bool is_abelian(PermGroup const &P)
{
  auto const &g = P.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] * g[j] != g[j] * g[i])
        return false;
  return true;
}

PermGroup group_of(InstanceConfig const &inst)
{
  if (inst.perms) {
    PermFile pf = named_generators(*inst.perms);
    return PermGroup(pf.degree, pf.gens);
  }
  return build_group(GroupSpec::parse(inst.group));
}

Integer expected_order(GroupSpec const &spec)
{
  try {
    return order_polynomial(spec).evaluate(spec.q);
  } catch (UnsupportedError const &) {
    return order_value(spec);
  }
}

Outcome orders()
{
  Outcome o;
  std::vector<std::string> specs;
  for (unsigned q : {2, 3, 4, 5, 7, 8, 9})
    specs.push_back("SL 2 " + std::to_string(q));
  for (unsigned q : {2, 3, 4})
    specs.push_back("SL 3 " + std::to_string(q));
  for (unsigned q : {2, 3})
    specs.push_back("SL 4 " + std::to_string(q));
  for (unsigned q : {2, 3, 4})
    specs.push_back("SU 3 " + std::to_string(q));
  for (unsigned q : {2, 3})
    specs.push_back("SU 4 " + std::to_string(q));
  for (unsigned q : {2, 3})
    specs.push_back("Sp 2 " + std::to_string(q));
  specs.push_back("Sp 3 2");
  specs.push_back("SOodd 2 3");
  specs.push_back("SOodd 3 3");
  specs.push_back("G2 4");
  for (auto const &s : specs) {
    GroupSpec spec = GroupSpec::parse(s);
    Integer want = expected_order(spec), got = build_group(spec).order();
    if (got != want)
      o.fail(s + ": bsgs " + got.str() + " polynomial " + want.str());
  }
  // the 416-point G2(4)
  PermFile pf = named_generators("G2(4)");
  Integer got = PermGroup(pf.degree, pf.gens).order();
  if (pf.degree != 416 || got != expected_order(GroupSpec::parse("G2 4")))
    o.fail("G2(4) on 416 points: order " + got.str());
  o.detail = std::to_string(specs.size() + 1) + " groups";
  return o;
}

Outcome bounds()
{
  Outcome o;
  auto checks = check_bounds(10, 9);
  std::size_t n_order = 0, n_norm = 0;
  for (auto const &c : checks) {
    (c.what == "order-bound" ? n_order : n_norm) += 1;
    if (!c.holds)
      o.fail(c.what + " " + c.spec.str() + " d=" + std::to_string(c.d));
  }
  o.detail = std::to_string(n_order) + " order bounds, " + std::to_string(n_norm) +
             " normaliser bounds";
  return o;
}

Outcome equivalence()
{
  Outcome o;
  std::set<std::string> seen;
  std::size_t groups = 0, reps = 0;
  for (auto const &inst : builtin_suite("default").instances) {
    if (!seen.insert(inst.group + "|" + inst.perms.value_or("")).second)
      continue;
    PermGroup G = group_of(inst);
    if (G.order() > equivalence_ceiling)
      continue;
    ++groups;
    for (unsigned p : prime_divisors(G.order())) {
      if (p == 2 || !is_abelian(sylow(G, p)))
        continue;
      for (auto const &x : p_class_representatives(G, p)) {
        ++reps;
        auto f = subnormaliser_formula(G, x, p);
        BruteForceOptions bo;
        bo.ceiling = equivalence_ceiling;
        auto b = subnormaliser_bruteforce(G, x, bo);
        bool same = f.subnormaliser.order() == b.subnormaliser.order() &&
                    contains_all(b.subnormaliser, f.subnormaliser.generators()) &&
                    contains_all(f.subnormaliser, b.subnormaliser.generators());
        if (!same)
          o.fail(inst.group + " p=" + std::to_string(p) + " x=" + x.str() + ": brute force " +
                 b.subnormaliser.order().str() + " formula " + f.subnormaliser.order().str());
      }
    }
  }
  o.detail = std::to_string(groups) + " groups, " + std::to_string(reps) + " representatives";
  return o;
}

Perm p_cycles(unsigned n, unsigned p, unsigned k)
{
  std::vector<std::vector<point>> cycles(k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < p; ++j)
      cycles[i].push_back(i * p + j);
  return Perm::from_cycles(n, cycles);
}

Outcome symmetric()
{
  Outcome o;
  std::size_t cases = 0;
  BruteForceOptions bo;
  bo.ceiling = symmetric_ceiling;
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned n = p; n <= 11; ++n) {
      if (n / p > p - 1)
        continue;
      PermGroup S = PermGroup::symmetric(n), A = PermGroup::alternating(n);
      for (unsigned k = 1; k <= n / p; ++k) {
        ++cases;
        std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                          " k=" + std::to_string(k);
        Perm x = p_cycles(n, p, k);
        Prediction want = predict_symmetric(n, p, k);
        auto s = subnormaliser_bruteforce(S, x, bo);
        if (s.subnormaliser.order() != want.order)
          o.fail(tag + ": S_n brute force " + s.subnormaliser.order().str() + " predicted " +
                 want.order.str());
        // Sub_A(x) = Sub_S(x) cap A_n
        auto a = subnormaliser_bruteforce(A, x, bo);
        bool inside_s = contains_all(s.subnormaliser, a.subnormaliser.generators());
        bool all_even = true;
        for (auto const &g : s.subnormaliser.generators())
          all_even = all_even && g.is_even();
        Integer meet = all_even ? s.subnormaliser.order() : s.subnormaliser.order() / 2;
        if (!inside_s || a.subnormaliser.order() != meet)
          o.fail(tag + ": A_n brute force " + a.subnormaliser.order().str() +
                 ", S_n cap A_n " + meet.str());
      }
    }
  o.detail = std::to_string(cases) + " cycle types";
  return o;
}

Outcome classical()
{
  Outcome o;
  // the three shapes of SL4(2) at ell = 3
  GroupSpec sl42 = GroupSpec::parse("SL 4 2");
  auto pa = predict_subnormaliser(sl42, 3, LeviShape::parse("(1,1;0)"));
  auto pb = predict_subnormaliser(sl42, 3, LeviShape::parse("(1;2)"));
  auto pc = predict_subnormaliser(sl42, 3, LeviShape::parse("(2;0)"));
  if (!pa.picky || pb.order != 72 || !pc.whole_group)
    o.fail("SL 4 2 ell=3 shape predictions are not {picky, 72, G}");

  struct Want
  {
    char const *group;
    unsigned ell;
    bool cyclic_picky;
  };
  Want const wants[] = {
      {"SL 4 2", 3, false}, {"SL 3 4", 5, true}, {"SU 3 3", 7, true},
      {"Sp 2 3", 5, true},  {"Sp 3 2", 7, false},
  };
  SuiteConfig cfg;
  std::size_t rows = 0;
  for (auto const &w : wants) {
    InstanceConfig inst;
    inst.group = w.group;
    inst.ell = w.ell;
    for (auto const &row : run_instance(inst, cfg)) {
      ++rows;
      std::string tag = std::string(w.group) + " ell=" + std::to_string(w.ell) + " rep " +
                        std::to_string(row.rep);
      if (row.verdict != Verdict::match)
        o.fail(tag + ": " + verdict_name(row.verdict) + " " + row.reason);
      if (w.cyclic_picky && (row.case_tag != "cyclic" || !row.picky))
        o.fail(tag + ": expected a picky cyclic-Sylow case, got " + row.case_tag);
    }
  }
  o.detail = std::to_string(rows) + " representatives";
  return o;
}

Outcome sporadic()
{
  Outcome o;
  {
    PermFile pf = named_generators("M11");
    PermGroup G(pf.degree, pf.gens);
    for (auto const &x : p_class_representatives(G, 3)) {
      auto b = subnormaliser_bruteforce(G, x);
      if (!b.picky || b.subnormaliser.order() != 144)
        o.fail("M11 p=3: brute force " + b.subnormaliser.order().str());
    }
  }
  PermFile pf = named_generators("J2");
  PermGroup G(pf.degree, pf.gens);
  std::size_t table_classes = 0;
  for (auto const &x : p_class_representatives(G, 5)) {
    PermGroup C = centraliser(G, x);
    if (C.order() != 50)
      continue;
    ++table_classes;
    auto f = subnormaliser_formula(G, x, 5);
    if (!f.picky || f.subnormaliser.order() != 300)
      o.fail("J2 p=5: formula " + f.subnormaliser.order().str());
    // C_G(x) <= N_G(P), element by element
    // a Sylow 5-subgroup containing x
    PermGroup P = sylow(G, 5);
    std::optional<Perm> h;
    P.for_each_element([&](Perm const &y) {
      if (!y.is_identity())
        h = conjugating_element(G, x, y);
      return !h;
    });
    if (!h) {
      o.fail("J2 p=5: x is not conjugate into P");
      continue;
    }
    std::vector<Perm> moved;
    for (auto const &g : P.generators())
      moved.push_back(*h * g * ~*h);
    P = PermGroup(G.degree(), moved);
    PermGroup N = normaliser(G, P);
    bool inside = true;
    C.for_each_element([&](Perm const &c) {
      inside = inside && N.contains(c);
      return inside;
    });
    if (!P.contains(x) || !inside || !picky_test(G, x, 5))
      o.fail("J2 p=5: C_G(x) is not inside N_G(P)");
  }
  if (table_classes == 0)
    o.fail("J2 p=5: no class with |C| = 50");
  o.detail = "M11 and J2, " + std::to_string(table_classes) + " J2 classes with |C| = 50";
  return o;
}

Outcome flagship()
{
  Outcome o;
  Report r = run_suite(builtin_suite("flagship"));
  std::set<Integer> seen;
  for (auto const &row : r.rows) {
    if (row.verdict != Verdict::match) {
      o.fail("rep " + std::to_string(row.rep) + ": " + verdict_name(row.verdict) + " " + row.reason);
      continue;
    }
    seen.insert(row.computed);
    bool ok = (row.picky && row.computed == 300) ||
              (row.computed == 124800 && row.structure == "derived 62400 simple") ||
              (row.computed == 604800 && row.structure == "derived 604800 simple");
    if (!ok)
      o.fail("rep " + std::to_string(row.rep) + ": " + row.computed.str() + " " + row.structure);
  }
  if (!seen.count(124800) || !seen.count(604800))
    o.fail("both 124800 and 604800 must occur");
  std::string orders;
  for (auto const &v : seen)
    orders += (orders.empty() ? "" : ",") + v.str();
  o.detail = std::to_string(r.rows.size()) + " classes, orders {" + orders + "}";
  return o;
}

// classical specs with n <= 10, q <= 9 in the rank convention of GroupSpec
std::vector<GroupSpec> property_specs()
{
  std::vector<GroupSpec> out;
  for (unsigned q = 2; q <= 9; ++q) {
    if (q == 6)
      continue;
    for (unsigned n = 2; n <= 10; ++n) {
      out.push_back({Family::SL, n, q, ""});
      if (n >= 3)
        out.push_back({Family::SU, n, q, ""});
    }
    for (unsigned n = 1; n <= 5; ++n) {
      if (n >= 2 && !(n == 2 && q == 2))
        out.push_back({Family::Sp, n, q, ""});
      if (n >= 3 && q % 2)
        out.push_back({Family::SOodd, n, q, ""});
    }
    for (unsigned n = 4; n <= 5; ++n) {
      out.push_back({Family::SOevenPlus, n, q, ""});
      out.push_back({Family::SOevenMinus, n, q, ""});
    }
  }
  return out;
}

Outcome properties()
{
  Outcome o;
  std::size_t tables_checked = 0, shapes = 0, exceptional = 0, sporadic_rows = 0, symm = 0;

  for (auto const &name : table_names()) {
    std::ostringstream emitted;
    emit_table(emitted, name);
    std::ifstream in(data_dir() + "/tables/" + table_file(name));
    std::string line, expected;
    while (std::getline(in, line))
      if (!line.empty() && line[0] != '#')
        expected += line + "\n";
    if (emitted.str() != expected)
      o.fail("table " + name + " does not round-trip");
    ++tables_checked;
  }

  for (auto const &spec : property_specs()) {
    Integer order = order_value(spec);
    for (unsigned ell = 3; ell < 200; ell += 2) {
      if (!is_prime(ell) || spec.q % ell == 0 || order % ell != 0 || !sylow_abelian(spec, ell))
        continue;
      unsigned d = e_ell(ell, spec.q);
      for (auto const &le : dsplit_levis(spec, d)) {
        ++shapes;
        std::string tag = spec.str() + " ell=" + std::to_string(ell) + " " + le.shape.str();
        auto clauses = matching_clauses(spec, ell, le.shape);
        if (clauses.size() != 1)
          o.fail(tag + ": " + std::to_string(clauses.size()) + " clauses match");
        Prediction p = predict_subnormaliser(spec, ell, le.shape);
        if (p.whole_group && p.order != order)
          o.fail(tag + ": whole group with order " + p.order.str());
        if (!p.order_exact || p.order == 0)
          continue;
        if (order % p.order != 0)
          o.fail(tag + ": " + p.order.str() + " does not divide |G|");
        if (p.order % levi_order_in_group(spec, le) != 0)
          o.fail(tag + ": centraliser order does not divide " + p.order.str());
        if (p.order % ell_part(order, ell) != 0)
          o.fail(tag + ": Sylow order does not divide " + p.order.str());
      }
    }
  }

  Family const exc[] = {Family::G2, Family::D4_3, Family::F4, Family::E6,
                        Family::E6_2, Family::E7, Family::E8};
  for (Family f : exc)
    for (unsigned q = 2; q <= 9; ++q) {
      if (q == 6)
        continue;
      GroupSpec spec = GroupSpec::parse(std::string(family_name(f)) + " " + std::to_string(q));
      Integer order = order_value(spec);
      for (unsigned ell = 5; ell < 200; ell += 2) {
        if (!is_prime(ell) || spec.q % ell == 0 || order % ell != 0 || !sylow_abelian(spec, ell))
          continue;
        unsigned d = e_ell(ell, q);
        for (auto const &label : exceptional_centralisers(spec, d))
          for (auto const &p : predict_exceptional(spec, ell, label)) {
            ++exceptional;
            if (p.order != 0 && order % p.order != 0)
              o.fail(spec.str() + " ell=" + std::to_string(ell) + " " + label + ": " +
                     p.order.str() + " does not divide |G|");
          }
      }
    }

  for (auto const &sa : sporadic_abelian()) {
    Prediction p = predict_sporadic(sa.name, sa.p);
    ++sporadic_rows;
    if (p.order == 0 || sa.order % p.order != 0 || p.order % ell_part(sa.order, sa.p) != 0)
      o.fail(sa.name + " p=" + std::to_string(sa.p) + ": " + p.order.str());
  }

  for (unsigned n = 3; n <= 40; ++n)
    for (unsigned p = 3; p <= n; p += 2) {
      if (!is_prime(p) || n / p > p - 1)
        continue;
      Integer fact = 1;
      for (unsigned i = 2; i <= n; ++i)
        fact *= i;
      for (unsigned k = 1; k <= n / p; ++k) {
        ++symm;
        Prediction s = predict_symmetric(n, p, k), a = predict_symmetric(n, p, k, true);
        if (fact % s.order != 0 || s.order % ell_part(fact, p) != 0 || s.order != 2 * a.order)
          o.fail("Sym " + std::to_string(n) + " p=" + std::to_string(p) + " k=" +
                 std::to_string(k) + ": " + s.order.str());
      }
    }

  o.detail = std::to_string(tables_checked) + " tables, " + std::to_string(shapes) +
             " classical shapes, " + std::to_string(exceptional) + " exceptional, " +
             std::to_string(sporadic_rows) + " sporadic, " + std::to_string(symm) + " symmetric";
  return o;
}

} // namespace

int main()
{
  run(1, "order suite", budget_orders, orders);
  run(2, "order and normaliser bounds", budget_bounds, bounds);
  run(3, "brute force equals <C_G(x), N_G(P)>", budget_equivalence, equivalence);
  run(4, "symmetric and alternating groups", budget_symmetric, symmetric);
  run(5, "classical predictions", budget_classical, classical);
  run(6, "sporadic rows", budget_sporadic, sporadic);
  run(7, "G2(4), ell = 5 on 416 points", budget_flagship, flagship);
  run(8, "table, clause and divisibility properties", budget_properties, properties);
  std::cout << (failed ? "FAILED " : "PASSED ") << 8 - failed << "/8" << std::endl;
  return failed ? 1 : 0;
}

// Command-line front end: order, predict, verify, tables, compute.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "subn/harness.hpp"

using namespace subn;

namespace {

GroupSpec spec_from(std::vector<std::string> const &words) { return GroupSpec::parse(words); }

int cmd_order(std::vector<std::string> const &words, bool bsgs)
{
  GroupSpec spec = spec_from(words);
  Integer order;
  std::string poly;
  try {
    OrderPolynomial op = order_polynomial(spec);
    order = order_value(spec);
    poly = op.str();
  } catch (UnsupportedError const &) {
    order = build_group(spec).order();
  }
  std::cout << spec.str() << '\n';
  std::cout << "order = " << order << '\n';
  std::cout << "factored = " << factor_string(order) << '\n';
  if (!poly.empty())
    std::cout << "polynomial = " << poly << '\n';
  if (bsgs) {
    PermGroup G = build_group(spec);
    std::cout << "bsgs = " << G.order() << " (degree " << G.degree() << ")\n";
    if (G.order() != order) {
      std::cout << "MISMATCH\n";
      return 1;
    }
  }
  return 0;
}

int cmd_predict(std::vector<std::string> const &words, unsigned ell, std::string const &shape,
                unsigned k, std::string const &label)
{
  GroupSpec spec = spec_from(words);
  if (spec.family == Family::Sym || spec.family == Family::Alt) {
    std::vector<unsigned> ks;
    if (k)
      ks.push_back(k);
    else
      for (unsigned i = 1; i <= spec.n / ell; ++i)
        ks.push_back(i);
    for (unsigned kk : ks)
      std::cout << "k=" << kk << "\t"
                << predict_symmetric(spec.n, ell, kk, spec.family == Family::Alt) << '\n';
    return 0;
  }
  if (spec.family == Family::Sporadic) {
    std::cout << predict_sporadic(spec.name, ell) << '\n';
    return 0;
  }
  unsigned d = e_ell(ell, spec.q);
  if (spec.is_exceptional()) {
    std::vector<std::string> labels;
    if (!label.empty())
      labels.push_back(label);
    else
      labels = exceptional_centralisers(spec, d);
    for (auto const &l : labels) {
      std::cout << l << " (|C| = " << exceptional_label_order(spec, d, l) << ")\n";
      for (auto const &p : predict_exceptional(spec, ell, l))
        std::cout << "\t" << p << '\n';
    }
  } else {
    for (auto const &le : dsplit_levis(spec, d)) {
      if (!shape.empty() && le.shape.str() != shape)
        continue;
      std::cout << le.shape.str() << "\t|C| = " << levi_order_in_group(spec, le) << "\t"
                << predict_subnormaliser(spec, ell, le.shape) << '\n';
    }
  }
  try {
    auto over = predict_overgroups(spec, d, ell);
    std::cout << "overgroups of N_G(S_" << d << "):";
    if (over.empty())
      std::cout << " none (maximal)";
    std::cout << '\n';
    for (auto const &o : over)
      std::cout << '\t' << o.tag << '\t' << o.structure << '\n';
  } catch (RefusalError const &e) {
    std::cout << "overgroups: refused (" << e.what() << ")\n";
  }
  return 0;
}

int cmd_verify(std::string const &config, std::string const &suite, std::string const &report,
               int threads, long long seed, std::string const &ceiling)
{
  SuiteConfig cfg = config.empty() ? builtin_suite(suite.empty() ? "default" : suite)
                                   : load_suite(config);
  if (!report.empty())
    cfg.report = report;
  if (threads >= 0)
    cfg.threads = static_cast<unsigned>(threads);
  if (seed >= 0)
    cfg.seed = static_cast<std::uint64_t>(seed);
  if (!ceiling.empty())
    cfg.ceiling = Integer(ceiling);
  Report r = run_suite(cfg);
  if (cfg.report.empty()) {
    r.write_tsv(std::cout);
  } else {
    std::ofstream out(cfg.report);
    if (!out)
      throw Error("cannot write report " + cfg.report);
    r.write_tsv(out);
  }
  r.write_summary(std::cout);
  return r.count(Verdict::mismatch) == 0 ? 0 : 1;
}

int cmd_tables(std::string const &name, std::string const &family)
{
  if (name.empty()) {
    for (auto const &n : table_names())
      std::cout << n << '\n';
    return 0;
  }
  emit_table(std::cout, name, family);
  return 0;
}

int cmd_compute(std::string const &gens_file, std::string const &element, unsigned prime,
                std::string const &method, bool exact_set, std::string const &ceiling)
{
  PermFile pf = read_perms_file(gens_file);
  PermGroup G(pf.degree, pf.gens);
  Perm x = Perm::parse(pf.degree, element);
  if (!G.contains(x))
    throw DomainError("the element is not in the group");
  if (!prime)
    prime = prime_of_order(x);

  std::cout << "|G| = " << G.order() << '\n';
  std::cout << "|x| = " << x.order() << '\n';
  SubnormResult r;
  if (method == "formula") {
    r = subnormaliser_formula(G, x, prime);
  } else {
    BruteForceOptions bo;
    bo.exact_set = exact_set;
    if (!ceiling.empty())
      bo.ceiling = Integer(ceiling);
    r = subnormaliser_bruteforce(G, x, bo);
  }
  std::cout << "method = " << method_name(r.method) << '\n';
  std::cout << "|Sub_G(x)| = " << r.subnormaliser.order() << '\n';
  if (r.set_size)
    std::cout << "|S_G(x)| = " << *r.set_size << '\n';
  if (prime) {
    std::cout << "|N_G(P)| = " << r.sylow_normaliser_order << '\n';
    std::cout << "picky = " << (r.picky ? "yes" : "no") << '\n';
  }
  std::cout << "generators:\n";
  write_perms(std::cout, G.degree(), r.subnormaliser.generators());
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Subnormalisers of elements in finite groups"};
  app.require_subcommand(1);

  std::vector<std::string> words;
  bool bsgs = false;
  auto *order = app.add_subcommand("order", "exact order and factored order polynomial");
  order->add_option("spec", words, "group spec, e.g. SL 4 2")->required();
  order->add_flag("--bsgs", bsgs, "also build the permutation group and compare");

  unsigned ell = 0, k = 0;
  std::string shape, label;
  auto *predict = app.add_subcommand("predict", "oracle predictions for every shape or one");
  predict->add_option("spec", words, "group spec")->required();
  predict->add_option("--ell,--p", ell, "prime")->required();
  predict->add_option("--shape", shape, "Levi shape, e.g. (1;2)");
  predict->add_option("--k", k, "number of p-cycles (symmetric and alternating groups)");
  predict->add_option("--label", label, "centraliser label (exceptional groups)");

  std::string config, suite, report, ceiling;
  int threads = -1;
  long long seed = -1;
  auto *verify = app.add_subcommand("verify", "run a suite; exit code 0 iff no mismatch");
  verify->add_option("config", config, "suite file");
  verify->add_option("--suite", suite, "bundled suite: default or flagship");
  verify->add_option("--report", report, "TSV output path (default stdout)");
  verify->add_option("--threads", threads, "instances run in parallel");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--ceiling", ceiling, "brute-force enumeration ceiling");

  std::string table, family;
  auto *tables_cmd = app.add_subcommand("tables", "re-emit the bundled tables");
  tables_cmd->add_option("name", table, "table name; omit to list");
  tables_cmd->add_option("family", family, "family filter for s-class");

  std::string gens_file, element, method = "bruteforce";
  unsigned prime = 0;
  bool exact_set = false;
  auto *compute = app.add_subcommand("compute", "Sub_G(x) for a generator file and element");
  compute->add_option("--gens", gens_file, "generator file")->required();
  compute->add_option("--element", element, "element in cycle notation")->required();
  compute->add_option("--prime", prime, "prime for the formula method");
  compute->add_option("--method", method, "bruteforce or formula")
      ->check(CLI::IsMember({"bruteforce", "formula"}));
  compute->add_flag("--exact-set", exact_set, "count S_G(x) exactly");
  compute->add_option("--ceiling", ceiling, "brute-force enumeration ceiling");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*order)
      return cmd_order(words, bsgs);
    if (*predict)
      return cmd_predict(words, ell, shape, k, label);
    if (*verify)
      return cmd_verify(config, suite, report, threads, seed, ceiling);
    if (*tables_cmd)
      return cmd_tables(table, family);
    if (*compute)
      return cmd_compute(gens_file, element, prime, method, exact_set, ceiling);
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

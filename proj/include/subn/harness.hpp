#ifndef GUARD_SUBN_HARNESS_H
#define GUARD_SUBN_HARNESS_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "classical.hpp"
#include "generic.hpp"
#include "oracle.hpp"
#include "subnorm.hpp"

namespace subn {

struct InstanceConfig
{
  std::string group; // group spec text, e.g. "SL 4 2", "Sym 7", "M11"
  unsigned ell = 0;
  // catalogue name whose generators replace the default construction
  std::optional<std::string> perms;
  std::optional<std::string> shape; // keep only reps whose matched shape or label is this
  // set-level check: brute force in exact-set mode
  bool exact_set = false;
};

struct SuiteConfig
{
  std::string name = "custom";
  Integer ceiling = 200000;
  std::uint64_t node_budget = 5000000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string report; // empty: stdout only
  std::vector<InstanceConfig> instances;
};

// key = value lines; each "[instance]" line opens a new instance block.
// '#' starts a comment. Throws ParseError with the line number.
SuiteConfig parse_suite(std::istream &in);
SuiteConfig load_suite(std::string const &path);
// "default", "flagship" from the data directory
SuiteConfig builtin_suite(std::string const &name);

enum class Verdict
{
  match,
  mismatch,
  skipped
};

char const *verdict_name(Verdict v);

struct ReportRow
{
  std::string group;
  Integer group_order;
  unsigned ell = 0;
  unsigned rep = 0; // 1-based class representative id, 0 for instance-level rows
  std::uint64_t rep_order = 0;
  Integer centraliser_order;
  std::string shape; // Levi shape, exceptional label or cycle count
  std::string case_tag;
  std::string predicted; // order, "~" prefix when not exact, "" if none
  Integer computed;
  bool picky = false;
  std::string method;
  Verdict verdict = Verdict::skipped;
  // machine-readable for skips: ceiling, unsupported, hypothesis-violated,
  // ambiguous-shape; free text after ':'
  std::string reason;
  // derived-subgroup note for the exceptional rows
  std::string structure;
};

struct Report
{
  std::string suite;
  std::vector<ReportRow> rows;

  std::size_t count(Verdict v) const;
  // tab-separated, fixed column order, one header line
  void write_tsv(std::ostream &os) const;
  // "key = value" block
  void write_summary(std::ostream &os) const;
};

Report run_suite(SuiteConfig const &cfg);
std::vector<ReportRow> run_instance(InstanceConfig const &inst, SuiteConfig const &cfg);

// order of a Levi shape's centraliser inside the constructed group
Integer levi_order_in_group(GroupSpec const &spec, LeviEntry const &levi);
// dimension of the fixed space of x on the natural module for a shape
unsigned shape_fixed_dimension(GroupSpec const &spec, LeviShape const &shape);
// order of the centraliser attached to an exceptional table label
Integer exceptional_label_order(GroupSpec const &spec, unsigned d, std::string const &label);

// nontrivial normal closures of prime-order elements decide simplicity
bool is_simple(PermGroup const &G, SearchOptions const &opts = {});

// inequality checks on order formulas and normaliser bounds
struct BoundCheck
{
  std::string what; // "order-bound" or "normaliser-bound"
  GroupSpec spec;
  unsigned d = 0;
  Integer value;
  Integer bound;
  bool holds = false;
};

// all supported specs with n <= max_n, q in [2, max_q]; every d with a
// Zsigmondy prime for the normaliser bounds
std::vector<BoundCheck> check_bounds(unsigned max_n = 10, unsigned max_q = 9);

} // namespace subn

#endif // GUARD_SUBN_HARNESS_H

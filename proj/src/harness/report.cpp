#include <map>
#include <ostream>

#include "subn/harness.hpp"

namespace subn {

char const *verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::match:
    return "match";
  case Verdict::mismatch:
    return "mismatch";
  default:
    return "skipped";
  }
}

std::size_t Report::count(Verdict v) const
{
  std::size_t n = 0;
  for (auto const &r : rows)
    n += r.verdict == v;
  return n;
}

void Report::write_tsv(std::ostream &os) const
{
  os << "group\torder\tell\trep\trep_order\tcentraliser\tshape\tcase\tpredicted\tcomputed\t"
        "picky\tmethod\tverdict\treason\tstructure\n";
  for (auto const &r : rows) {
    os << r.group << '\t' << r.group_order << '\t' << r.ell << '\t' << r.rep << '\t'
       << r.rep_order << '\t' << r.centraliser_order << '\t' << r.shape << '\t' << r.case_tag
       << '\t' << r.predicted << '\t' << r.computed << '\t' << (r.picky ? "yes" : "no") << '\t'
       << r.method << '\t' << verdict_name(r.verdict) << '\t' << r.reason << '\t' << r.structure
       << '\n';
  }
}

void Report::write_summary(std::ostream &os) const
{
  std::map<std::string, std::size_t> skips;
  for (auto const &r : rows)
    if (r.verdict == Verdict::skipped)
      ++skips[r.reason.substr(0, r.reason.find(':'))];
  os << "# summary\n";
  os << "suite = " << suite << '\n';
  os << "rows = " << rows.size() << '\n';
  os << "match = " << count(Verdict::match) << '\n';
  os << "mismatch = " << count(Verdict::mismatch) << '\n';
  os << "skipped = " << count(Verdict::skipped) << '\n';
  for (auto const &[k, n] : skips)
    os << "skipped." << k << " = " << n << '\n';
}

} // namespace subn

#ifndef GUARD_SUBN_ORACLE_H
#define GUARD_SUBN_ORACLE_H

#include <iosfwd>
#include <string>
#include <vector>

#include "classical.hpp"
#include "common.hpp"
#include "generic.hpp"

namespace subn {

// Predicted subnormaliser of an ell-element.
struct Prediction
{
  // case and clause, e.g. "subn-SL(3)", "cyclic", "symm(1)"
  std::string case_tag;
  std::string structure;
  // 0 when no order is known
  Integer order;
  // false: order is at the similitude level (or nominal) and the index in
  // the group has to be resolved by computation
  bool order_exact = true;
  bool picky = false;
  bool whole_group = false;
};

std::ostream &operator<<(std::ostream &os, Prediction const &p);

// One maximal overgroup candidate of a Sylow d-torus normaliser.
struct Overgroup
{
  std::string tag; // "over-SL(1)", "class-S", "table-2", ...
  std::string structure;
};

// Candidates with side conditions evaluated at (spec, d, ell). An empty list
// means the torus normaliser is maximal. Throws RefusalError naming the
// failed hypothesis.
std::vector<Overgroup> predict_overgroups(GroupSpec const &spec, unsigned d, unsigned ell);

// Classical families SL, SU, Sp, SOodd, SOevenPlus, SOevenMinus. The shape
// must be one of dsplit_levis(spec, e_ell(q)).
Prediction predict_subnormaliser(GroupSpec const &spec, unsigned ell, LeviShape const &shape);

// the shape of C_G(S_d): all parts 1, s = r
LeviShape minimal_shape(GroupSpec const &spec, unsigned d);

// Exceptional families. Centraliser labels are "torus" for C_G(S_d), the
// entries of the centraliser column of the overgroup tables, or anything
// else for the remaining d-split Levi subgroups. Returns every admissible
// outcome (two for G2(4), d = 2).
std::vector<std::string> exceptional_centralisers(GroupSpec const &spec, unsigned d);
std::vector<Prediction> predict_exceptional(GroupSpec const &spec, unsigned ell,
                                            std::string const &centraliser);

// x of cycle type (p)^k in Sym(n); the alternating variant halves the order
// and leaves the index to be confirmed
Prediction predict_symmetric(unsigned n, unsigned p, unsigned k, bool alternating = false);

// The table row applies to the class with the listed centraliser order;
// other classes get G. centraliser_order = 0 returns the table row.
Prediction predict_sporadic(std::string const &name, unsigned p,
                            Integer const &centraliser_order = 0);

// Clause records, one per case distinction, for auditing and for the
// exhaustiveness tests.
struct ClauseInfo
{
  std::string tag;
  std::string guard; // the condition in words
  std::string structure;
};
std::vector<ClauseInfo> subnormaliser_clauses(Family f);

// tags of every clause whose guard holds; exactly one for a valid input
std::vector<std::string> matching_clauses(GroupSpec const &spec, unsigned ell,
                                          LeviShape const &shape);

// ---- tables ----

struct ExceptionalMaxRow
{
  std::string group;
  std::string d; // "3,6"
  std::string normaliser;
};

struct ExceptionalOvergroupRow
{
  std::string group;
  std::string d;
  std::string normaliser;
  std::string overgroups;
  std::string centraliser; // "-" when no centraliser realises it
};

struct SporadicRow
{
  std::string group;
  unsigned p = 0;
  std::string centraliser_order;
  std::string subnormaliser;
};

struct ClassSRow
{
  std::string family; // family_name of the ambient spec
  unsigned n = 0, q = 0;
  std::string subgroup;
  std::string ambient; // as printed, e.g. "Omega_7(3)"
  std::vector<std::pair<unsigned, unsigned>> d_ell;
};

struct Tables
{
  std::vector<ExceptionalMaxRow> maximal;
  std::vector<ExceptionalOvergroupRow> generic;
  std::vector<ExceptionalOvergroupRow> nongeneric;
  std::vector<SporadicRow> sporadic;
  std::vector<ClassSRow> class_s;
};

// loaded once from data_dir()/tables
Tables const &tables();

// reads and writes the line format of the bundled files
Tables parse_tables(std::istream &maximal, std::istream &generic, std::istream &nongeneric,
                    std::istream &sporadic, std::istream &class_s);

// names accepted by emit_table: exceptional-max, exceptional-generic,
// exceptional-nongeneric, sporadic, s-class [family]
std::vector<std::string> table_names();
void emit_table(std::ostream &os, std::string const &name, std::string const &family = "");

// the file name of a table inside data_dir()/tables
std::string table_file(std::string const &name);

// Sporadic groups with abelian Sylow p-subgroups that are not cyclic of
// prime order, with the group order.
struct SporadicAbelian
{
  std::string name;
  unsigned p = 0;
  Integer order;
};
std::vector<SporadicAbelian> const &sporadic_abelian();

// nominal order of a structure string in table notation, with q and d
// substituted; 0 when a factor is not understood
Integer structure_order(std::string const &structure, unsigned q, unsigned d);

} // namespace subn

#endif // GUARD_SUBN_ORACLE_H

#ifndef GUARD_SUBN_CLASSICAL_H
#define GUARD_SUBN_CLASSICAL_H

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matrix.hpp"
#include "perm.hpp"
#include "permgroup.hpp"

namespace subn {

enum class Family
{
  SL,
  SU,
  Sp,
  SOodd,
  SOevenPlus,
  SOevenMinus,
  OmegaOdd,
  OmegaEvenPlus,
  OmegaEvenMinus,
  GL,
  GU,
  GOplus,
  GOminus,
  G2,
  D4_3,
  F4,
  E6,
  E6_2,
  E7,
  E8,
  Sym,
  Alt,
  Sporadic
};

char const *family_name(Family f);
// accepts the names printed by family_name plus a few aliases, case-insensitive
Family parse_family(std::string const &s);

// Symbolic description of one group. For Sp, SO and GO the rank n is the
// half dimension: Sp(n, q) is Sp_{2n}(q), SOodd(n, q) is
// SO_{2n+1}(q), SOevenPlus(n, q) is SO^+_{2n}(q). For SL/SU/GL/GU n is the
// matrix dimension, for Sym/Alt the degree.
struct GroupSpec
{
  Family family = Family::Sym;
  unsigned n = 0;
  unsigned q = 0;
  std::string name; // sporadic identifier

  // "SL 4 2", "Sp 2 3", "Sym 6", "M11", "Sporadic J2", "G2 4"
  static GroupSpec parse(std::vector<std::string> const &tokens);
  static GroupSpec parse(std::string const &text);

  std::string str() const;

  bool is_matrix_family() const;
  bool is_classical() const;
  bool is_exceptional() const;
  bool is_orthogonal() const;
  // dimension of the natural module, 0 for non-matrix families
  unsigned dimension() const;
  // order of the group of scalar matrices lying in the constructed group
  unsigned scalar_order() const;

  bool operator==(GroupSpec const &o) const
  {
    return family == o.family && n == o.n && q == o.q && name == o.name;
  }
};

struct MatrixGroup
{
  FieldPtr field;
  unsigned dim = 0;
  std::vector<Matrix> gens;
  FormDescriptor form;
};

// Generators of the matrix group for spec; throws UnsupportedError for
// families without a matrix construction (Omega is built by build_group).
MatrixGroup matrix_generators(GroupSpec const &spec);

enum class ActionKind
{
  nonzero_vectors,
  projective_points,
  // nonzero vectors modulo the scalar subgroup of the given order
  reduced_scalars
};

struct PermAction
{
  unsigned degree = 0;
  std::vector<Perm> gens;
  // canonical representative vector of every point
  std::vector<std::vector<Elt>> points;
  unsigned scalar_subgroup_order = 1;
  // encoded canonical vector -> point
  std::unordered_map<std::uint64_t, point> index;
};

constexpr std::size_t default_point_ceiling = 1000000;

PermAction perm_action(std::vector<Matrix> const &gens, ActionKind kind,
                       unsigned scalar_subgroup_order = 1,
                       std::size_t point_ceiling = default_point_ceiling);

// permutation action on the orbit of the point spanned by start under the
// reduced_scalars convention
PermAction orbit_action(std::vector<Matrix> const &gens, std::vector<Elt> const &start,
                        unsigned scalar_subgroup_order = 1,
                        std::size_t point_ceiling = default_point_ceiling);

// image of a single matrix on a computed action
Perm act(PermAction const &action, Matrix const &m);

// the matrix of the group inducing x on the points of action, which must
// have been built from mg.gens; nullopt when no lift preserves the form
// with the generators' determinant
std::optional<Matrix> lift_to_matrix(PermAction const &action, MatrixGroup const &mg,
                                     Perm const &x);

// largest scalar subgroup order that acts trivially modulo nothing in G,
// i.e. the largest divisor of q-1 coprime to the group's scalar order
unsigned faithful_scalar_quotient(GroupSpec const &spec);

// faithful permutation group for spec (matrix action, derived subgroup for
// Omega, catalogue for sporadic names, natural action for Sym/Alt)
PermGroup build_group(GroupSpec const &spec,
                      std::size_t point_ceiling = default_point_ceiling);

struct CatalogueEntry
{
  std::string name;
  std::string source; // "perms <file>" or a group spec
  unsigned degree = 0;
  Integer order;
};

std::vector<CatalogueEntry> const &catalogue();

// throws Error listing the known names
PermFile named_generators(std::string const &name);

} // namespace subn

#endif // GUARD_SUBN_CLASSICAL_H

#ifndef GUARD_SUBN_SUBNORM_H
#define GUARD_SUBN_SUBNORM_H

#include <optional>

#include "algorithms.hpp"
#include "permgroup.hpp"

namespace subn {

enum class SubnormMethod
{
  bruteforce,
  formula
};

char const *method_name(SubnormMethod m);

struct SubnormResult
{
  Perm x;
  PermGroup ambient;
  PermGroup subnormaliser;
  SubnormMethod method = SubnormMethod::bruteforce;
  // subnormaliser equals a Sylow p-normaliser
  bool picky = false;
  // filled by the formula method (and by brute force when x is a p-element)
  Integer centraliser_order;
  Integer sylow_normaliser_order;
  // |S_G(x)|, exact-set mode only
  std::optional<Integer> set_size;
};

// <x> subnormal in H, by descending normal closures; x must lie in H
bool is_subnormal(Perm const &x, PermGroup const &H);

// same for H = <g, x>, without building H first
bool is_subnormal_pair(Perm const &x, Perm const &g);

struct BruteForceOptions
{
  Integer ceiling = 2000000;
  // exact-set mode tests every element and counts S_G(x); order-only mode
  // skips members of the group generated so far and stops at G
  bool exact_set = false;
  // 0: one per hardware thread
  unsigned threads = 0;
  std::size_t chunk = 8192;
  SearchOptions search; // used for the picky check
};

// <g in G : <x> subnormal in <g, x>>; throws CeilingError above the ceiling
SubnormResult subnormaliser_bruteforce(PermGroup const &G, Perm const &x,
                                       BruteForceOptions const &opts = {});

// <C_G(x), N_G(P)> for a Sylow p-subgroup P containing x; refuses when P is
// non-abelian or x is not a p-element
SubnormResult subnormaliser_formula(PermGroup const &G, Perm const &x, unsigned p,
                                    SearchOptions const &opts = {});

// C_G(x) <= N_G(P) for the Sylow p-subgroup P containing x
bool picky_test(PermGroup const &G, Perm const &x, unsigned p, SearchOptions const &opts = {});

// the prime p when the order of x is a power of p, else 0 (also for x = 1)
unsigned prime_of_order(Perm const &x);

} // namespace subn

#endif // GUARD_SUBN_SUBNORM_H

#ifndef GUARD_SUBN_ALGORITHMS_H
#define GUARD_SUBN_ALGORITHMS_H

#include <optional>
#include <vector>

#include "permgroup.hpp"
#include "search.hpp"

namespace subn {

// smallest subgroup containing hgens and closed under conjugation by the
// generators of G; throws if some hgen is not in G
PermGroup normal_closure(PermGroup const &G, std::vector<Perm> const &hgens);

// same, with ambient generators given directly (no membership check)
PermGroup normal_closure_by(unsigned degree, std::vector<Perm> const &ambient_gens,
                            std::vector<Perm> const &hgens);

PermGroup derived_subgroup(PermGroup const &G);

PermGroup centraliser(PermGroup const &G, Perm const &x, SearchOptions const &opts = {});
PermGroup normaliser(PermGroup const &G, PermGroup const &H, SearchOptions const &opts = {});

// some g in G with x^g = y
std::optional<Perm> conjugating_element(PermGroup const &G, Perm const &x, Perm const &y,
                                        SearchOptions const &opts = {});

// some g in G with H^g = K
std::optional<Perm> conjugating_subgroups(PermGroup const &G, PermGroup const &H,
                                          PermGroup const &K, SearchOptions const &opts = {});

PermGroup sylow(PermGroup const &G, unsigned p, SearchOptions const &opts = {});

// one element per G-class of nontrivial p-elements
std::vector<Perm> p_class_representatives(PermGroup const &G, unsigned p,
                                          SearchOptions const &opts = {});

// enumeration-based references, used as fallbacks and in tests
PermGroup centraliser_by_enumeration(PermGroup const &G, Perm const &x);
PermGroup normaliser_by_enumeration(PermGroup const &G, PermGroup const &H);

Integer p_part(Integer n, unsigned p);
std::vector<unsigned> prime_divisors(Integer n);

} // namespace subn

#endif // GUARD_SUBN_ALGORITHMS_H

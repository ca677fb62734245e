#ifndef GUARD_SUBN_PERMGROUP_H
#define GUARD_SUBN_PERMGROUP_H

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "common.hpp"
#include "perm.hpp"

namespace subn {

// Base and strong generating set, built by deterministic Schreier-Sims.
// Every Schreier generator is sifted, so membership is exact.
class StabChain
{
public:
  struct Level
  {
    point base;
    std::vector<Perm> gens;
    std::vector<Perm> gens_inv;
    std::vector<point> orbit;
    std::vector<std::int32_t> pos;      // orbit index of a point, -1 if absent
    std::vector<std::int32_t> label;    // generator reaching orbit[i] from its parent
    std::vector<std::uint32_t> parent;  // orbit index of the parent
    std::vector<std::uint32_t> done;    // generators already used for Schreier gens
    bool explicit_transversal = false;
    std::vector<Perm> u_inv;            // maps orbit[i] to base (explicit mode)
  };

  explicit StabChain(unsigned degree);

  // preferred base order: points moved by most generators first
  void set_point_priority(std::vector<Perm> const &gens);
  // explicit preference order, a permutation of all points
  void set_point_order(std::vector<point> const &order);
  void set_base_prefix(std::vector<point> const &prefix);

  // returns false when g was already a member
  bool add_generator(Perm const &g);

  unsigned degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  Level const &level(std::size_t i) const { return levels_[i]; }

  // Strips g through the chain. Returns the residue and the level where
  // stripping stopped (depth() when all base points were matched).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const;
  bool contains(Perm const &g) const;

  // u with base^u = orbit[i] and its inverse
  Perm transversal(std::size_t lvl, std::size_t i) const;
  Perm transversal_inv(std::size_t lvl, std::size_t i) const;

  Integer order() const;

  // explicit transversals are kept while orbit * degree stays below this
  static constexpr std::size_t explicit_limit = std::size_t(1) << 21;

private:
  void new_level(point b);
  void add_to_level(std::size_t lvl, Perm const &g);
  void extend_orbit(std::size_t lvl, std::size_t first_new_gen);
  void complete(std::size_t start);
  point choose_base_point(Perm const &g) const;
  void strip_level(std::size_t lvl, Perm &g) const;

  unsigned degree_;
  std::vector<Level> levels_;
  std::vector<point> priority_;
  std::vector<std::uint32_t> rank_;
  std::vector<point> prefix_;
};

class PermGroup
{
public:
  PermGroup() : PermGroup(0) {}
  explicit PermGroup(unsigned degree, std::vector<Perm> gens = {});
  // same group, with a base starting with the given points
  PermGroup(unsigned degree, std::vector<Perm> gens, std::vector<point> base_prefix);

  // wraps a finished chain for the group generated by gens
  static PermGroup from_chain(unsigned degree, std::vector<Perm> gens,
                              std::shared_ptr<StabChain const> chain);

  // same group, new base points taken in the given point order
  static PermGroup with_point_order(unsigned degree, std::vector<Perm> gens,
                                    std::vector<point> const &order);

  static PermGroup symmetric(unsigned n);
  static PermGroup alternating(unsigned n);

  unsigned degree() const { return degree_; }
  std::vector<Perm> const &generators() const { return gens_; }
  StabChain const &chain() const { return *chain_; }

  Integer const &order() const { return order_; }
  std::uint64_t order64() const;
  bool is_trivial() const { return order_ == 1; }

  bool contains(Perm const &g) const;
  bool contains_all(std::vector<Perm> const &gs) const;
  bool is_subgroup_of(PermGroup const &other) const;
  // equal as sets: same order and mutual generator membership
  bool same_group(PermGroup const &other) const;

  std::vector<point> base() const;
  std::vector<unsigned> basic_orbit_lengths() const;
  std::vector<Perm> strong_generators() const;

  bool is_abelian() const;
  bool is_p_group(unsigned p) const;

  std::vector<point> orbit(point x) const;
  std::vector<std::vector<point>> orbits() const;

  // stabiliser of the first k base points
  PermGroup base_stabiliser(std::size_t k) const;
  PermGroup point_stabiliser(point x) const;
  PermGroup conjugate(Perm const &g) const;

  // uniform random element through the transversals
  Perm random_element(std::mt19937_64 &rng) const;

  // mixed-radix enumeration: index i_0 + |D_0|(i_1 + |D_1|(...)) maps to
  // u_{k-1}(i_{k-1}) ... u_0(i_0)
  Perm element_at(Integer const &index) const;
  // visits elements with index in [first, last); stops when fn returns false
  void for_each_element(std::function<bool(Perm const &)> const &fn,
                        Integer const &first, Integer const &last) const;
  void for_each_element(std::function<bool(Perm const &)> const &fn) const;
  std::vector<Perm> elements(Integer const &ceiling = default_ceiling) const;

  static inline Integer const default_ceiling{2000000};

private:
  unsigned degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<StabChain const> chain_;
  Integer order_;
};

// product replacement random elements, reseedable
class ProductReplacement
{
public:
  ProductReplacement(std::vector<Perm> const &gens, unsigned degree, std::uint64_t seed);
  Perm next();

private:
  std::vector<Perm> state_;
  Perm acc_;
  std::mt19937_64 rng_;
};

} // namespace subn

#endif // GUARD_SUBN_PERMGROUP_H

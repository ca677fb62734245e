#ifndef GUARD_SUBN_SEARCH_H
#define GUARD_SUBN_SEARCH_H

#include <cstdint>
#include <optional>
#include <vector>

#include "permgroup.hpp"

namespace subn {

struct SearchOptions
{
  // nodes visited by one backtrack before giving up
  std::uint64_t node_budget = 5000000;
  // groups up to this order may be searched by plain enumeration instead
  Integer enumeration_fallback = 100000;
  std::uint64_t seed = 1;
};

struct BudgetExceeded : Error
{
  using Error::Error;
};

// A property of group elements that the backtrack can test on partial
// base images.
class SearchProperty
{
public:
  virtual ~SearchProperty() = default;
  // images[i] is the image of base[i] for i <= depth; returning false
  // discards every element with these base images
  virtual bool admissible(std::size_t depth, std::vector<point> const &base,
                          std::vector<point> const &images) = 0;
  virtual bool accept(Perm const &g) = 0;
};

// x^g = y
class ConjugatingProperty : public SearchProperty
{
public:
  ConjugatingProperty(Perm const &x, Perm const &y);
  bool admissible(std::size_t depth, std::vector<point> const &base,
                  std::vector<point> const &images) override;
  bool accept(Perm const &g) override;

private:
  Perm x_, y_;
  std::vector<unsigned> xlen_, ylen_;
  std::vector<std::int64_t> map_, inv_;
  std::vector<std::vector<point>> log_;
};

// H^g = K (K = H for normalisers)
class MappingSubgroupProperty : public SearchProperty
{
public:
  MappingSubgroupProperty(PermGroup const &H, PermGroup const &K);
  bool admissible(std::size_t depth, std::vector<point> const &base,
                  std::vector<point> const &images) override;
  bool accept(Perm const &g) override;

private:
  static std::vector<std::vector<unsigned>> signatures(PermGroup const &H,
                                                       std::vector<unsigned> &orbit_id);
  PermGroup const &H_;
  PermGroup const &K_;
  std::vector<unsigned> hid_, kid_;
  std::vector<std::vector<unsigned>> hsig_, ksig_;
};

// {g in G : prop(g)}, assuming the result contains known
PermGroup subgroup_search(PermGroup const &G, SearchProperty &prop,
                          std::vector<Perm> const &known, SearchOptions const &opts);

// some g in G with prop(g). When the solution set is closed under right
// multiplication by right_symmetry, only one image per orbit of its
// stabiliser of the images chosen so far is tried at each level.
std::optional<Perm> element_search(PermGroup const &G, SearchProperty &prop,
                                   SearchOptions const &opts,
                                   PermGroup const *right_symmetry = nullptr);

} // namespace subn

#endif // GUARD_SUBN_SEARCH_H

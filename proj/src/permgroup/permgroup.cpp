#include <algorithm>
#include <limits>
#include <numeric>

#include "subn/permgroup.hpp"

namespace subn {

PermGroup::PermGroup(unsigned degree, std::vector<Perm> gens)
  : PermGroup(degree, std::move(gens), {})
{}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> gens, std::vector<point> base_prefix)
  : degree_(degree)
{
  for (auto &g : gens) {
    if (g.degree() != degree)
      throw Error("permgroup: generator degree differs from group degree");
    if (!g.is_identity())
      gens_.push_back(std::move(g));
  }
  auto chain = std::make_shared<StabChain>(degree);
  chain->set_point_priority(gens_);
  chain->set_base_prefix(base_prefix);
  for (auto const &g : gens_)
    chain->add_generator(g);
  order_ = chain->order();
  chain_ = std::move(chain);
}

PermGroup PermGroup::with_point_order(unsigned degree, std::vector<Perm> gens,
                                     std::vector<point> const &order)
{
  PermGroup g;
  g.degree_ = degree;
  for (auto &x : gens) {
    if (x.degree() != degree)
      throw Error("permgroup: generator degree differs from group degree");
    if (!x.is_identity())
      g.gens_.push_back(std::move(x));
  }
  auto chain = std::make_shared<StabChain>(degree);
  chain->set_point_order(order);
  for (auto const &x : g.gens_)
    chain->add_generator(x);
  g.order_ = chain->order();
  g.chain_ = std::move(chain);
  return g;
}

PermGroup PermGroup::from_chain(unsigned degree, std::vector<Perm> gens,
                                std::shared_ptr<StabChain const> chain)
{
  PermGroup g;
  g.degree_ = degree;
  for (auto &x : gens)
    if (!x.is_identity())
      g.gens_.push_back(std::move(x));
  g.order_ = chain->order();
  g.chain_ = std::move(chain);
  return g;
}

PermGroup PermGroup::symmetric(unsigned n)
{
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    gens.push_back(Perm::from_cycles(n, {cyc}));
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  }
  return PermGroup(n, gens);
}

PermGroup PermGroup::alternating(unsigned n)
{
  std::vector<Perm> gens;
  if (n >= 3) {
    gens.push_back(Perm::from_cycles(n, {{0, 1, 2}}));
    std::vector<point> cyc;
    if (n % 2) {
      for (point i = 0; i < n; ++i)
        cyc.push_back(i);
    } else {
      for (point i = 1; i < n; ++i)
        cyc.push_back(i);
    }
    if (cyc.size() > 2)
      gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, gens);
}

std::uint64_t PermGroup::order64() const
{
  if (order_ > Integer(std::numeric_limits<std::uint64_t>::max()))
    throw Error("permgroup: order exceeds 64 bits");
  return static_cast<std::uint64_t>(order_);
}

bool PermGroup::contains(Perm const &g) const { return chain_->contains(g); }

bool PermGroup::contains_all(std::vector<Perm> const &gs) const
{
  return std::all_of(gs.begin(), gs.end(), [&](Perm const &g) { return contains(g); });
}

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  return degree_ == other.degree_ && other.contains_all(gens_);
}

bool PermGroup::same_group(PermGroup const &other) const
{
  return degree_ == other.degree_ && order_ == other.order_ && is_subgroup_of(other);
}

std::vector<point> PermGroup::base() const
{
  std::vector<point> b;
  for (std::size_t l = 0; l < chain_->depth(); ++l)
    b.push_back(chain_->level(l).base);
  return b;
}

std::vector<unsigned> PermGroup::basic_orbit_lengths() const
{
  std::vector<unsigned> r;
  for (std::size_t l = 0; l < chain_->depth(); ++l)
    r.push_back(static_cast<unsigned>(chain_->level(l).orbit.size()));
  return r;
}

std::vector<Perm> PermGroup::strong_generators() const
{
  std::vector<Perm> s;
  for (std::size_t l = 0; l < chain_->depth(); ++l)
    for (auto const &g : chain_->level(l).gens)
      if (std::find(s.begin(), s.end(), g) == s.end())
        s.push_back(g);
  return s;
}

bool PermGroup::is_abelian() const
{
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i])
        return false;
  return true;
}

bool PermGroup::is_p_group(unsigned p) const
{
  Integer o = order_;
  while (o % p == 0)
    o /= p;
  return o == 1;
}

std::vector<point> PermGroup::orbit(point x) const
{
  std::vector<point> orb{x};
  std::vector<char> seen(degree_, 0);
  seen[x] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (auto const &g : gens_) {
      point y = g[orb[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<point>> PermGroup::orbits() const
{
  std::vector<std::vector<point>> out;
  std::vector<char> seen(degree_, 0);
  for (point x = 0; x < degree_; ++x) {
    if (seen[x])
      continue;
    auto o = orbit(x);
    for (point y : o)
      seen[y] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

PermGroup PermGroup::base_stabiliser(std::size_t k) const
{
  if (k >= chain_->depth())
    return PermGroup(degree_);
  return PermGroup(degree_, chain_->level(k).gens);
}

PermGroup PermGroup::point_stabiliser(point x) const
{
  PermGroup g(degree_, gens_, {x});
  return g.base_stabiliser(1);
}

PermGroup PermGroup::conjugate(Perm const &g) const
{
  std::vector<Perm> gs;
  gs.reserve(gens_.size());
  for (auto const &h : gens_)
    gs.push_back(conj(h, g));
  return PermGroup(degree_, gs);
}

Perm PermGroup::random_element(std::mt19937_64 &rng) const
{
  Perm g(degree_);
  for (std::size_t l = chain_->depth(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> d(0, chain_->level(l).orbit.size() - 1);
    g *= chain_->transversal(l, d(rng));
  }
  return g;
}

Perm PermGroup::element_at(Integer const &index) const
{
  if (index < 0 || index >= order_)
    throw Error("permgroup: element index out of range");
  std::size_t k = chain_->depth();
  std::vector<std::size_t> digit(k);
  Integer rest = index;
  for (std::size_t l = 0; l < k; ++l) {
    std::size_t len = chain_->level(l).orbit.size();
    digit[l] = static_cast<std::size_t>(rest % len);
    rest /= len;
  }
  Perm g(degree_);
  for (std::size_t l = k; l-- > 0;)
    g *= chain_->transversal(l, digit[l]);
  return g;
}

void PermGroup::for_each_element(std::function<bool(Perm const &)> const &fn,
                                 Integer const &first, Integer const &last) const
{
  Integer lo = std::max(first, Integer(0));
  Integer hi = std::min(last, order_);
  if (lo >= hi)
    return;
  if (hi > Integer(std::numeric_limits<std::uint64_t>::max() / 2))
    throw CeilingError("permgroup: enumeration range too large");

  std::size_t k = chain_->depth();
  if (k == 0) {
    fn(Perm(degree_));
    return;
  }

  std::vector<std::vector<Perm>> u(k);
  for (std::size_t l = 0; l < k; ++l) {
    std::size_t len = chain_->level(l).orbit.size();
    u[l].reserve(len);
    for (std::size_t i = 0; i < len; ++i)
      u[l].push_back(chain_->transversal(l, i));
  }

  std::vector<std::size_t> digit(k);
  Integer rest = lo;
  for (std::size_t l = 0; l < k; ++l) {
    digit[l] = static_cast<std::size_t>(rest % u[l].size());
    rest /= u[l].size();
  }

  // prefix[l] = u_{k-1} ... u_l
  std::vector<Perm> prefix(k + 1, Perm(degree_));
  for (std::size_t l = k; l-- > 0;)
    prefix[l] = prefix[l + 1] * u[l][digit[l]];

  std::uint64_t count = static_cast<std::uint64_t>(hi - lo);
  for (std::uint64_t c = 0; c < count; ++c) {
    if (!fn(prefix[0]))
      return;
    std::size_t l = 0;
    while (l < k && ++digit[l] == u[l].size()) {
      digit[l] = 0;
      ++l;
    }
    if (l == k)
      return;
    for (std::size_t m = l + 1; m-- > 0;)
      prefix[m] = prefix[m + 1] * u[m][digit[m]];
  }
}

void PermGroup::for_each_element(std::function<bool(Perm const &)> const &fn) const
{
  for_each_element(fn, 0, order_);
}

std::vector<Perm> PermGroup::elements(Integer const &ceiling) const
{
  if (order_ > ceiling)
    throw CeilingError("permgroup: order " + order_.str() + " exceeds enumeration ceiling " +
                       ceiling.str() + "; use sampling instead");
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_));
  for_each_element([&](Perm const &g) {
    out.push_back(g);
    return true;
  });
  return out;
}

ProductReplacement::ProductReplacement(std::vector<Perm> const &gens, unsigned degree,
                                       std::uint64_t seed)
  : acc_(degree), rng_(seed)
{
  state_ = gens;
  if (state_.empty())
    state_.emplace_back(degree);
  std::size_t orig = state_.size();
  while (state_.size() < 10)
    state_.push_back(state_[state_.size() % orig]);
  for (int i = 0; i < 50; ++i)
    next();
}

Perm ProductReplacement::next()
{
  std::uniform_int_distribution<std::size_t> d(0, state_.size() - 1);
  std::size_t s = d(rng_), t = d(rng_);
  while (t == s)
    t = d(rng_);
  if (rng_() & 1)
    state_[s] = state_[s] * state_[t];
  else
    state_[s] = state_[t] * state_[s];
  acc_ = acc_ * state_[s];
  return acc_;
}

} // namespace subn

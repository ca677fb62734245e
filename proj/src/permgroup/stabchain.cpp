#include <algorithm>
#include <numeric>

#include "subn/permgroup.hpp"

namespace subn {

StabChain::StabChain(unsigned degree) : degree_(degree)
{
  priority_.resize(degree);
  std::iota(priority_.begin(), priority_.end(), 0u);
  rank_.assign(priority_.begin(), priority_.end());
}

void StabChain::set_point_priority(std::vector<Perm> const &gens)
{
  std::vector<unsigned> moved(degree_, 0);
  for (auto const &g : gens)
    for (point i = 0; i < degree_; ++i)
      moved[i] += g[i] != i;
  std::stable_sort(priority_.begin(), priority_.end(),
                   [&](point a, point b) { return moved[a] > moved[b]; });
  for (std::uint32_t r = 0; r < degree_; ++r)
    rank_[priority_[r]] = r;
}

void StabChain::set_point_order(std::vector<point> const &order)
{
  priority_ = order;
  for (std::uint32_t r = 0; r < degree_; ++r)
    rank_[priority_[r]] = r;
}

void StabChain::set_base_prefix(std::vector<point> const &prefix)
{
  prefix_ = prefix;
  for (point b : prefix) {
    bool present = false;
    for (auto const &L : levels_)
      present |= L.base == b;
    if (!present)
      new_level(b);
  }
}

point StabChain::choose_base_point(Perm const &g) const
{
  for (point b : priority_)
    if (g[b] != b)
      return b;
  return 0;
}

void StabChain::new_level(point b)
{
  Level L;
  L.base = b;
  L.pos.assign(degree_, -1);
  L.pos[b] = 0;
  L.orbit.push_back(b);
  L.label.push_back(-1);
  L.parent.push_back(0);
  L.done.push_back(0);
  L.explicit_transversal = degree_ <= explicit_limit;
  if (L.explicit_transversal)
    L.u_inv.emplace_back(degree_);
  levels_.push_back(std::move(L));
}

void StabChain::add_to_level(std::size_t lvl, Perm const &g)
{
  Level &L = levels_[lvl];
  L.gens.push_back(g);
  L.gens_inv.push_back(~g);
  extend_orbit(lvl, L.gens.size() - 1);
}

void StabChain::extend_orbit(std::size_t lvl, std::size_t first_new_gen)
{
  Level &L = levels_[lvl];
  std::size_t old = L.orbit.size();
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    std::size_t j0 = i < old ? first_new_gen : 0;
    for (std::size_t j = j0; j < L.gens.size(); ++j) {
      point d = L.gens[j][L.orbit[i]];
      if (L.pos[d] >= 0)
        continue;
      L.pos[d] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(d);
      L.label.push_back(static_cast<std::int32_t>(j));
      L.parent.push_back(static_cast<std::uint32_t>(i));
      L.done.push_back(0);
      if (L.explicit_transversal)
        L.u_inv.push_back(L.gens_inv[j] * L.u_inv[i]);
    }
  }
  if (L.explicit_transversal && L.orbit.size() * degree_ > explicit_limit) {
    L.explicit_transversal = false;
    L.u_inv.clear();
    L.u_inv.shrink_to_fit();
  }
}

void StabChain::strip_level(std::size_t lvl, Perm &g) const
{
  Level const &L = levels_[lvl];
  point gamma = g[L.base];
  std::int32_t idx = L.pos[gamma];
  if (L.explicit_transversal) {
    g *= L.u_inv[idx];
    return;
  }
  while (idx != 0) {
    g *= L.gens_inv[L.label[idx]];
    idx = static_cast<std::int32_t>(L.parent[idx]);
  }
}

std::pair<Perm, std::size_t> StabChain::sift(Perm g, std::size_t from) const
{
  for (std::size_t l = from; l < levels_.size(); ++l) {
    if (levels_[l].pos[g[levels_[l].base]] < 0)
      return {std::move(g), l};
    strip_level(l, g);
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(Perm const &g) const
{
  if (g.degree() != degree_)
    return false;
  auto [res, lvl] = sift(g);
  return lvl == levels_.size() && res.is_identity();
}

Perm StabChain::transversal_inv(std::size_t lvl, std::size_t i) const
{
  Level const &L = levels_[lvl];
  if (L.explicit_transversal)
    return L.u_inv[i];
  Perm h(degree_);
  while (i != 0) {
    h *= L.gens_inv[L.label[i]];
    i = L.parent[i];
  }
  return h;
}

Perm StabChain::transversal(std::size_t lvl, std::size_t i) const
{
  return ~transversal_inv(lvl, i);
}

Integer StabChain::order() const
{
  Integer o = 1;
  for (auto const &L : levels_)
    o *= L.orbit.size();
  return o;
}

bool StabChain::add_generator(Perm const &g)
{
  if (g.degree() != degree_)
    throw Error("stabchain: generator degree mismatch");
  if (contains(g))
    return false;

  std::size_t m = 0;
  while (m < levels_.size() && g[levels_[m].base] == levels_[m].base)
    ++m;
  if (m == levels_.size())
    new_level(choose_base_point(g));
  for (std::size_t l = 0; l <= m; ++l)
    add_to_level(l, g);
  complete(m);
  return true;
}

void StabChain::complete(std::size_t start)
{
  long i = static_cast<long>(start);
  while (i >= 0) {
    bool restart = false;
    for (std::size_t idx = 0; idx < levels_[i].orbit.size() && !restart; ++idx) {
      while (levels_[i].done[idx] < levels_[i].gens.size()) {
        Level &L = levels_[i];
        std::size_t j = L.done[idx]++;
        point gamma = L.orbit[idx];
        point delta = L.gens[j][gamma];
        std::int32_t di = L.pos[delta];
        // tree edges give trivial Schreier generators
        if (L.label[di] == static_cast<std::int32_t>(j) &&
            L.parent[di] == idx && di != 0)
          continue;

        Perm h = transversal(i, idx);
        h *= L.gens[j];
        if (L.explicit_transversal) {
          h *= L.u_inv[di];
        } else {
          std::int32_t k = di;
          while (k != 0) {
            h *= L.gens_inv[L.label[k]];
            k = static_cast<std::int32_t>(L.parent[k]);
          }
        }
        if (h.is_identity())
          continue;

        auto [res, stop] = sift(std::move(h), i + 1);
        if (stop == levels_.size() && res.is_identity())
          continue;
        if (stop == levels_.size())
          new_level(choose_base_point(res));
        for (std::size_t l = i + 1; l <= stop; ++l)
          add_to_level(l, res);
        i = static_cast<long>(stop);
        restart = true;
        break;
      }
    }
    if (!restart)
      --i;
  }
}

} // namespace subn

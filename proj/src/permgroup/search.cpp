#include <algorithm>
#include <map>

#include "subn/search.hpp"

namespace subn {

namespace {

std::vector<unsigned> cycle_lengths(Perm const &x)
{
  std::vector<unsigned> len(x.degree(), 1);
  for (auto const &c : x.cycles())
    for (point p : c)
      len[p] = static_cast<unsigned>(c.size());
  return len;
}

} // namespace

ConjugatingProperty::ConjugatingProperty(Perm const &x, Perm const &y)
  : x_(x), y_(y), xlen_(cycle_lengths(x)), ylen_(cycle_lengths(y)),
    map_(x.degree(), -1), inv_(x.degree(), -1)
{}

bool ConjugatingProperty::admissible(std::size_t depth, std::vector<point> const &base,
                                     std::vector<point> const &images)
{
  if (log_.size() < base.size() + 1)
    log_.resize(base.size() + 1);
  for (std::size_t d = depth; d < log_.size(); ++d) {
    for (point p : log_[d]) {
      inv_[map_[p]] = -1;
      map_[p] = -1;
    }
    log_[d].clear();
  }

  point b = base[depth], g = images[depth];
  if (map_[b] >= 0)
    return map_[b] == g;
  if (inv_[g] >= 0 || xlen_[b] != ylen_[g])
    return false;

  // the whole x-cycle of b is forced onto the y-cycle of g
  point p = b, q = g;
  for (unsigned i = 0; i < xlen_[b]; ++i) {
    if (inv_[q] >= 0)
      return false;
    map_[p] = q;
    inv_[q] = p;
    log_[depth].push_back(p);
    p = x_[p];
    q = y_[q];
  }
  return true;
}

bool ConjugatingProperty::accept(Perm const &g)
{
  for (point p = 0; p < g.degree(); ++p)
    if (g[x_[p]] != y_[g[p]])
      return false;
  return true;
}

std::vector<std::vector<unsigned>>
MappingSubgroupProperty::signatures(PermGroup const &H, std::vector<unsigned> &orbit_id)
{
  orbit_id.assign(H.degree(), 0);
  std::vector<std::vector<unsigned>> sig;
  auto orbs = H.orbits();
  for (unsigned i = 0; i < orbs.size(); ++i) {
    for (point p : orbs[i])
      orbit_id[p] = i;
    std::vector<unsigned> s{static_cast<unsigned>(orbs[i].size())};
    if (orbs[i].size() > 1) {
      std::vector<unsigned> lens;
      for (auto const &o : H.point_stabiliser(orbs[i][0]).orbits())
        lens.push_back(static_cast<unsigned>(o.size()));
      std::sort(lens.begin(), lens.end());
      s.insert(s.end(), lens.begin(), lens.end());
    }
    sig.push_back(std::move(s));
  }
  return sig;
}

MappingSubgroupProperty::MappingSubgroupProperty(PermGroup const &H, PermGroup const &K)
  : H_(H), K_(K)
{
  hsig_ = signatures(H, hid_);
  ksig_ = signatures(K, kid_);
}

bool MappingSubgroupProperty::admissible(std::size_t depth, std::vector<point> const &base,
                                         std::vector<point> const &images)
{
  point b = base[depth], g = images[depth];
  if (hsig_[hid_[b]] != ksig_[kid_[g]])
    return false;
  for (std::size_t i = 0; i < depth; ++i) {
    bool same_h = hid_[base[i]] == hid_[b];
    bool same_k = kid_[images[i]] == kid_[g];
    if (same_h != same_k)
      return false;
  }
  return true;
}

bool MappingSubgroupProperty::accept(Perm const &g)
{
  for (auto const &h : H_.generators())
    if (!K_.contains(conj(h, g)))
      return false;
  return true;
}

namespace {

// orbit of `start` under gens, as a membership mask
void mark_orbit(std::vector<Perm> const &gens, point start, std::vector<char> &mask)
{
  std::vector<point> stack{start};
  mask[start] = 1;
  while (!stack.empty()) {
    point p = stack.back();
    stack.pop_back();
    for (auto const &g : gens) {
      point q = g[p];
      if (!mask[q]) {
        mask[q] = 1;
        stack.push_back(q);
      }
    }
  }
}

class Backtracker
{
public:
  Backtracker(PermGroup const &G, SearchProperty &prop, SearchOptions const &opts,
              PermGroup const *sym = nullptr)
    : G_(G), C_(G.chain()), prop_(prop), opts_(opts), k_(C_.depth()), sym_(sym)
  {
    for (std::size_t l = 0; l < k_; ++l)
      base_.push_back(C_.level(l).base);
    images_ = base_;
    cache_.resize(k_);
    for (std::size_t l = 0; l < k_; ++l)
      cache_[l].resize(C_.level(l).orbit.size());
  }

  std::size_t depth() const { return k_; }
  std::vector<point> const &base() const { return base_; }

  // elements fixing base[0..l-1] with base[l] -> delta
  std::optional<Perm> search_level(std::size_t l, point delta)
  {
    for (std::size_t j = 0; j < l; ++j) {
      images_[j] = base_[j];
      if (!prop_.admissible(j, base_, images_))
        return std::nullopt;
    }
    images_[l] = delta;
    tick();
    if (!prop_.admissible(l, base_, images_))
      return std::nullopt;
    Perm t = u(l, C_.level(l).pos[delta]);
    return dfs(l + 1, t);
  }

  std::optional<Perm> search_all()
  {
    if (k_ == 0) {
      Perm id(G_.degree());
      return prop_.accept(id) ? std::optional<Perm>(id) : std::nullopt;
    }
    return dfs(0, Perm(G_.degree()));
  }

private:
  void tick()
  {
    if (++nodes_ > opts_.node_budget)
      throw BudgetExceeded("backtrack: node budget exhausted");
  }

  Perm const &u(std::size_t l, std::size_t i)
  {
    auto &slot = cache_[l][i];
    if (!slot)
      slot = C_.transversal(l, i);
    return *slot;
  }

  std::optional<Perm> dfs(std::size_t j, Perm const &prev, bool sym_active = true)
  {
    if (j == k_) {
      if (prop_.accept(prev))
        return prev;
      return std::nullopt;
    }
    auto const &L = C_.level(j);
    // orbits of the symmetry stabiliser of images_[0..j-1]; empty once trivial
    std::vector<char> tried;
    std::vector<Perm> stab_gens;
    if (sym_ && sym_active) {
      std::vector<point> fixed(images_.begin(), images_.begin() + j);
      PermGroup S = PermGroup(G_.degree(), sym_->generators(), fixed).base_stabiliser(j);
      if (!S.is_trivial()) {
        stab_gens = S.generators();
        tried.assign(G_.degree(), 0);
      }
    }
    for (std::size_t i = 0; i < L.orbit.size(); ++i) {
      tick();
      images_[j] = prev[L.orbit[i]];
      if (!tried.empty() && tried[images_[j]])
        continue;
      if (!prop_.admissible(j, base_, images_))
        continue;
      if (!tried.empty())
        mark_orbit(stab_gens, images_[j], tried);
      Perm t = u(j, i) * prev;
      if (auto r = dfs(j + 1, t, !tried.empty()))
        return r;
    }
    return std::nullopt;
  }

  PermGroup const &G_;
  StabChain const &C_;
  SearchProperty &prop_;
  SearchOptions const &opts_;
  std::size_t k_;
  std::vector<point> base_, images_;
  std::vector<std::vector<std::optional<Perm>>> cache_;
  std::uint64_t nodes_ = 0;
  PermGroup const *sym_;
};

} // namespace

PermGroup subgroup_search(PermGroup const &G, SearchProperty &prop,
                          std::vector<Perm> const &known, SearchOptions const &opts)
{
  Backtracker bt(G, prop, opts);
  std::size_t k = bt.depth();
  PermGroup K(G.degree(), known, bt.base());
  std::vector<Perm> found;

  for (std::size_t l = k; l-- > 0;) {
    auto const &L = G.chain().level(l);
    std::vector<Perm> rgens = found;
    if (l < K.chain().depth())
      for (auto const &g : K.chain().level(l).gens)
        rgens.push_back(g);

    std::vector<char> covered(G.degree(), 0), failed(G.degree(), 0);
    mark_orbit(rgens, L.base, covered);
    for (point delta : L.orbit) {
      if (covered[delta] || failed[delta])
        continue;
      if (auto g = bt.search_level(l, delta)) {
        found.push_back(*g);
        rgens.push_back(*g);
        std::fill(covered.begin(), covered.end(), 0);
        mark_orbit(rgens, L.base, covered);
      } else {
        mark_orbit(rgens, delta, failed);
      }
    }
  }

  std::vector<Perm> gens = known;
  gens.insert(gens.end(), found.begin(), found.end());
  return PermGroup(G.degree(), gens);
}

std::optional<Perm> element_search(PermGroup const &G, SearchProperty &prop,
                                   SearchOptions const &opts, PermGroup const *right_symmetry)
{
  Backtracker bt(G, prop, opts, right_symmetry);
  return bt.search_all();
}

} // namespace subn

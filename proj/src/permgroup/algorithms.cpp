#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "subn/algorithms.hpp"

namespace subn {

Integer p_part(Integer n, unsigned p)
{
  Integer r = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::vector<unsigned> prime_divisors(Integer n)
{
  // group orders here have prime factors below the degree, so trial division suffices
  std::vector<unsigned> out;
  for (unsigned d = 2; Integer(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1) {
    if (n > std::numeric_limits<unsigned>::max())
      throw DomainError("prime_divisors: prime factor too large");
    out.push_back(static_cast<unsigned>(n));
  }
  return out;
}

PermGroup normal_closure_by(unsigned degree, std::vector<Perm> const &ambient_gens,
                            std::vector<Perm> const &hgens)
{
  auto K = std::make_shared<StabChain>(degree);
  std::vector<Perm> prio = hgens;
  prio.insert(prio.end(), ambient_gens.begin(), ambient_gens.end());
  K->set_point_priority(prio);

  std::vector<Perm> list;
  for (auto const &h : hgens)
    if (K->add_generator(h))
      list.push_back(h);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto const &a : ambient_gens) {
      Perm c = conj(list[i], a);
      if (K->add_generator(c))
        list.push_back(std::move(c));
    }
  return PermGroup::from_chain(degree, std::move(list), std::move(K));
}

PermGroup normal_closure(PermGroup const &G, std::vector<Perm> const &hgens)
{
  for (auto const &h : hgens)
    if (!G.contains(h))
      throw Error("normal_closure: " + h.str() + " is not in the group");
  return normal_closure_by(G.degree(), G.generators(), hgens);
}

PermGroup derived_subgroup(PermGroup const &G)
{
  std::vector<Perm> cs;
  auto const &gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Perm c = comm(gs[i], gs[j]);
      if (!c.is_identity())
        cs.push_back(std::move(c));
    }
  return normal_closure_by(G.degree(), gs, cs);
}

namespace {

PermGroup filtered_enumeration(PermGroup const &G, std::vector<Perm> const &known,
                               std::function<bool(Perm const &)> const &keep)
{
  auto K = std::make_shared<StabChain>(G.degree());
  std::vector<Perm> gens;
  for (auto const &k : known)
    if (K->add_generator(k))
      gens.push_back(k);
  G.for_each_element([&](Perm const &g) {
    if (!K->contains(g) && keep(g)) {
      K->add_generator(g);
      gens.push_back(g);
    }
    return true;
  });
  return PermGroup::from_chain(G.degree(), std::move(gens), std::move(K));
}

bool normalises(PermGroup const &H, Perm const &g)
{
  for (auto const &h : H.generators())
    if (!H.contains(conj(h, g)))
      return false;
  return true;
}

// G with a base running along the cycles of x, longest first, so that a
// conjugating search branches only where a new cycle starts
PermGroup cycle_aligned(PermGroup const &G, Perm const &x)
{
  auto cycles = x.cycles();
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](auto const &a, auto const &b) { return a.size() > b.size(); });
  std::vector<point> prefix;
  std::vector<char> seen(G.degree(), 0);
  for (auto const &c : cycles)
    for (point p : c) {
      prefix.push_back(p);
      seen[p] = 1;
    }
  for (point p = 0; p < G.degree(); ++p)
    if (!seen[p])
      prefix.push_back(p);
  return PermGroup::with_point_order(G.degree(), G.generators(), prefix);
}

template <class Fn>
auto with_fallback(PermGroup const &G, SearchOptions const &opts, Fn &&search,
                   char const *what) -> decltype(search(false))
{
  try {
    return search(false);
  } catch (BudgetExceeded const &) {
    if (G.order() <= opts.enumeration_fallback)
      return search(true);
    throw CeilingError(std::string(what) + ": backtrack budget exhausted for a group of order " +
                       G.order().str());
  }
}

std::vector<Perm> members(PermGroup const &G, std::vector<Perm> const &gs)
{
  std::vector<Perm> out;
  for (auto const &g : gs)
    if (G.contains(g))
      out.push_back(g);
  return out;
}

// closure of {y} under conjugation by gens
std::unordered_set<Perm, PermHash> conjugation_orbit(Perm const &y, std::vector<Perm> const &gens)
{
  std::unordered_set<Perm, PermHash> seen{y};
  std::vector<Perm> stack{y};
  while (!stack.empty()) {
    Perm z = stack.back();
    stack.pop_back();
    for (auto const &g : gens) {
      Perm w = conj(z, g);
      if (seen.insert(w).second)
        stack.push_back(std::move(w));
    }
  }
  return seen;
}

// N_G(H) for small H: N is the union over z in H conjugate to y of the
// cosets N_C(H) c t with C = C_G(y), y^t = z and H^c = H^(t^-1).
PermGroup normaliser_through_element(PermGroup const &G, PermGroup const &H,
                                     SearchOptions const &opts)
{
  Perm y = H.generators().front();
  PermGroup C = centraliser(G, y, opts);
  for (std::size_t i = 1; i < H.generators().size(); ++i) {
    PermGroup Ci = centraliser(G, H.generators()[i], opts);
    if (Ci.order() < C.order()) {
      y = H.generators()[i];
      C = std::move(Ci);
    }
  }

  PermGroup NC = with_fallback(
      C, opts,
      [&](bool enumerate) {
        if (enumerate)
          return filtered_enumeration(C, members(C, H.generators()),
                                      [&](Perm const &g) { return normalises(H, g); });
        MappingSubgroupProperty prop(H, H);
        return subgroup_search(C, prop, members(C, H.generators()), opts);
      },
      "normaliser");

  std::vector<Perm> gens = NC.generators();
  auto reached = conjugation_orbit(y, gens);
  auto ytype = y.cycle_type();

  H.for_each_element([&](Perm const &z) {
    if (reached.count(z) || z.cycle_type() != ytype)
      return true;
    auto t = conjugating_element(G, y, z, opts);
    if (!t)
      return true;
    PermGroup target = H.conjugate(~*t);
    auto c = with_fallback(
        C, opts,
        [&](bool enumerate) -> std::optional<Perm> {
          if (enumerate) {
            std::optional<Perm> hit;
            C.for_each_element([&](Perm const &g) {
              if (target.contains_all([&] {
                    std::vector<Perm> v;
                    for (auto const &h : H.generators())
                      v.push_back(conj(h, g));
                    return v;
                  }())) {
                hit = g;
                return false;
              }
              return true;
            });
            return hit;
          }
          MappingSubgroupProperty prop(H, target);
          return element_search(C, prop, opts);
        },
        "normaliser");
    if (c) {
      gens.push_back(*c * *t);
      reached = conjugation_orbit(y, gens);
    }
    return true;
  });

  std::vector<Perm> all = members(G, H.generators());
  all.insert(all.end(), gens.begin(), gens.end());
  return PermGroup(G.degree(), all);
}

} // namespace

PermGroup centraliser_by_enumeration(PermGroup const &G, Perm const &x)
{
  std::vector<Perm> known;
  if (G.contains(x))
    known.push_back(x);
  return filtered_enumeration(G, known, [&](Perm const &g) { return x * g == g * x; });
}

PermGroup normaliser_by_enumeration(PermGroup const &G, PermGroup const &H)
{
  return filtered_enumeration(G, members(G, H.generators()),
                              [&](Perm const &g) { return normalises(H, g); });
}

PermGroup centraliser(PermGroup const &G, Perm const &x, SearchOptions const &opts)
{
  if (x.is_identity())
    return G;
  return with_fallback(
      G, opts,
      [&](bool enumerate) {
        if (enumerate)
          return centraliser_by_enumeration(G, x);
        ConjugatingProperty prop(x, x);
        std::vector<Perm> known;
        if (G.contains(x))
          known.push_back(x);
        return subgroup_search(cycle_aligned(G, x), prop, known, opts);
      },
      "centraliser");
}

PermGroup normaliser(PermGroup const &G, PermGroup const &H, SearchOptions const &opts)
{
  if (H.is_trivial())
    return G;
  bool normal = std::all_of(G.generators().begin(), G.generators().end(),
                            [&](Perm const &g) { return normalises(H, g); });
  if (normal)
    return G;

  if (G.order() > opts.enumeration_fallback && H.order() <= 10000)
    return normaliser_through_element(G, H, opts);

  return with_fallback(
      G, opts,
      [&](bool enumerate) {
        if (enumerate)
          return normaliser_by_enumeration(G, H);
        MappingSubgroupProperty prop(H, H);
        return subgroup_search(G, prop, members(G, H.generators()), opts);
      },
      "normaliser");
}

std::optional<Perm> conjugating_element(PermGroup const &G, Perm const &x, Perm const &y,
                                        SearchOptions const &opts)
{
  if (x.cycle_type() != y.cycle_type())
    return std::nullopt;
  return with_fallback(
      G, opts,
      [&](bool enumerate) -> std::optional<Perm> {
        if (enumerate) {
          std::optional<Perm> hit;
          G.for_each_element([&](Perm const &g) {
            if (x * g == g * y) {
              hit = g;
              return false;
            }
            return true;
          });
          return hit;
        }
        ConjugatingProperty prop(x, y);
        // x^g = y is preserved by right multiplication with C_G(y)
        PermGroup cy = centraliser(G, y, opts);
        return element_search(cycle_aligned(G, x), prop, opts, &cy);
      },
      "conjugacy");
}

std::optional<Perm> conjugating_subgroups(PermGroup const &G, PermGroup const &H,
                                          PermGroup const &K, SearchOptions const &opts)
{
  if (H.order() != K.order())
    return std::nullopt;
  return with_fallback(
      G, opts,
      [&](bool enumerate) -> std::optional<Perm> {
        if (enumerate) {
          std::optional<Perm> hit;
          G.for_each_element([&](Perm const &g) {
            for (auto const &h : H.generators())
              if (!K.contains(conj(h, g)))
                return true;
            hit = g;
            return false;
          });
          return hit;
        }
        MappingSubgroupProperty prop(H, K);
        return element_search(G, prop, opts);
      },
      "conjugacy");
}

PermGroup sylow(PermGroup const &G, unsigned p, SearchOptions const &opts)
{
  Integer target = p_part(G.order(), p);
  if (target == 1)
    return PermGroup(G.degree());
  if (target == G.order())
    return G;

  std::mt19937_64 rng(opts.seed);
  std::vector<Perm> qgens;
  PermGroup Q(G.degree());
  while (Q.order() < target) {
    PermGroup N = Q.is_trivial() ? G : normaliser(G, Q, opts);
    Perm y;
    for (;;) {
      Perm r = N.random_element(rng);
      std::uint64_t o = r.order();
      while (o % p == 0)
        o /= p;
      y = r.pow(static_cast<long long>(o));
      if (!y.is_identity() && !Q.contains(y))
        break;
    }
    qgens.push_back(std::move(y));
    Q = PermGroup(G.degree(), qgens);
  }
  return Q;
}

std::vector<Perm> p_class_representatives(PermGroup const &G, unsigned p,
                                          SearchOptions const &opts)
{
  PermGroup P = sylow(G, p, opts);
  if (P.is_trivial())
    return {};
  std::vector<Perm> elts = P.elements();
  std::vector<Perm> reps;

  if (P.is_abelian()) {
    // fusion in an abelian Sylow subgroup is controlled by its normaliser
    PermGroup N = normaliser(G, P, opts);
    std::unordered_map<Perm, std::size_t, PermHash> index;
    for (std::size_t i = 0; i < elts.size(); ++i)
      index.emplace(elts[i], i);
    std::vector<char> seen(elts.size(), 0);
    for (std::size_t i = 0; i < elts.size(); ++i) {
      if (seen[i] || elts[i].is_identity())
        continue;
      reps.push_back(elts[i]);
      for (auto const &z : conjugation_orbit(elts[i], N.generators()))
        seen[index.at(z)] = 1;
    }
    return reps;
  }

  for (auto const &z : elts) {
    if (z.is_identity())
      continue;
    bool fused = false;
    for (auto const &r : reps)
      if (conjugating_element(G, r, z, opts)) {
        fused = true;
        break;
      }
    if (!fused)
      reps.push_back(z);
  }
  return reps;
}

} // namespace subn

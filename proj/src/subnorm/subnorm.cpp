#include <algorithm>
#include <thread>

#include "subn/subnorm.hpp"

namespace subn {

namespace {

bool is_power_of(std::uint64_t n, unsigned p)
{
  while (n > 1 && n % p == 0)
    n /= p;
  return n == 1;
}

// x^g in <x>
bool normalises_cyclic(Perm const &x, Perm const &xg)
{
  Perm y = x;
  for (std::uint64_t i = 1, o = x.order(); i <= o; ++i, y *= x)
    if (y == xg)
      return true;
  return false;
}

// cheap decisions for g; nullopt when the chain test is needed
std::optional<bool> quick_decision(Perm const &x, Perm const &g, unsigned p)
{
  Perm xg = conj(x, g);
  if (xg == x || normalises_cyclic(x, xg))
    return true;
  if (p) {
    // <x, x^g> lies in O_p(<x, g>) when <x> is subnormal
    if (!is_power_of((~x * xg).order(), p) || !is_power_of((x * xg).order(), p))
      return false;
  }
  return std::nullopt;
}

struct Sylow
{
  PermGroup P;
  PermGroup N;
  Perm h; // x^h lies in P
};

// a Sylow p-subgroup with normaliser, and h moving x into it
Sylow sylow_for(PermGroup const &G, Perm const &x, unsigned p, SearchOptions const &opts,
                bool need_abelian)
{
  Sylow s;
  s.P = sylow(G, p, opts);
  if (need_abelian && !s.P.is_abelian())
    throw RefusalError("Sylow " + std::to_string(p) +
                       "-subgroups are non-abelian; the formula does not apply");
  s.N = normaliser(G, s.P, opts);
  auto type = x.cycle_type();
  bool found = false;
  s.P.for_each_element([&](Perm const &y) {
    if (y.cycle_type() != type)
      return true;
    if (auto h = conjugating_element(G, x, y, opts)) {
      s.h = *h;
      found = true;
      return false;
    }
    return true;
  });
  if (!found)
    throw Error("sylow_for: no conjugate of x in the Sylow subgroup");
  return s;
}

unsigned worker_count(unsigned requested)
{
  if (requested)
    return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

char const *method_name(SubnormMethod m)
{
  return m == SubnormMethod::bruteforce ? "bruteforce" : "abelian-sylow-formula";
}

unsigned prime_of_order(Perm const &x)
{
  std::uint64_t o = x.order();
  if (o == 1)
    return 0;
  for (unsigned p = 2; static_cast<std::uint64_t>(p) * p <= o; ++p)
    if (o % p == 0)
      return is_power_of(o, p) ? p : 0;
  return static_cast<unsigned>(o);
}

bool is_subnormal(Perm const &x, PermGroup const &H)
{
  if (!H.contains(x))
    throw DomainError("is_subnormal: x is not in H");
  std::uint64_t ox = x.order();
  PermGroup N = H;
  while (N.order() != ox) {
    PermGroup next = normal_closure_by(H.degree(), N.generators(), {x});
    if (next.order() == N.order())
      return false;
    N = std::move(next);
  }
  return true;
}

bool is_subnormal_pair(Perm const &x, Perm const &g)
{
  std::uint64_t ox = x.order();
  // first step: normal closure of <x> in <g, x>
  PermGroup N = normal_closure_by(x.degree(), {g, x}, {x});
  while (N.order() != ox) {
    PermGroup next = normal_closure_by(x.degree(), N.generators(), {x});
    if (next.order() == N.order())
      return false;
    N = std::move(next);
  }
  return true;
}

SubnormResult subnormaliser_bruteforce(PermGroup const &G, Perm const &x,
                                       BruteForceOptions const &opts)
{
  if (!G.contains(x))
    throw DomainError("subnormaliser_bruteforce: x is not in G");
  if (G.order() > opts.ceiling)
    throw CeilingError("subnormaliser_bruteforce: |G| = " + G.order().str() +
                       " exceeds the enumeration ceiling " + opts.ceiling.str() +
                       "; use the abelian Sylow formula");
  SubnormResult res;
  res.x = x;
  res.ambient = G;
  res.method = SubnormMethod::bruteforce;
  unsigned p = prime_of_order(x);

  if (x.is_identity()) {
    res.subnormaliser = G;
    if (opts.exact_set)
      res.set_size = G.order();
    return res;
  }

  std::vector<Perm> accepted{x};
  PermGroup acc(G.degree(), accepted);
  Integer count = 0;
  Integer const total = G.order();
  std::size_t const chunk = std::max<std::size_t>(opts.chunk, 1);
  unsigned const width = worker_count(opts.threads);

  for (Integer start = 0; start < total;) {
    // one round: width chunks scanned in parallel against the same acc
    std::vector<std::vector<Perm>> found(width);
    std::vector<std::uint64_t> counts(width, 0);
    std::vector<std::pair<Integer, Integer>> ranges;
    for (unsigned w = 0; w < width && start < total; ++w) {
      Integer end = std::min(total, start + Integer(chunk));
      ranges.emplace_back(start, end);
      start = end;
    }
    auto scan = [&](std::size_t w) {
      G.for_each_element(
          [&](Perm const &g) {
            if (!opts.exact_set && acc.contains(g))
              return true;
            auto quick = quick_decision(x, g, p);
            bool in = quick ? *quick : is_subnormal_pair(x, g);
            if (in) {
              ++counts[w];
              if (!acc.contains(g))
                found[w].push_back(g);
            }
            return true;
          },
          ranges[w].first, ranges[w].second);
    };
    if (ranges.size() == 1) {
      scan(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < ranges.size(); ++w)
        pool.emplace_back(scan, w);
      for (auto &t : pool)
        t.join();
    }
    // merge in chunk order
    bool grown = false;
    for (std::size_t w = 0; w < ranges.size(); ++w) {
      count += counts[w];
      for (auto const &g : found[w])
        if (!acc.contains(g)) {
          accepted.push_back(g);
          acc = PermGroup(G.degree(), accepted);
          grown = true;
        }
    }
    if (!opts.exact_set && grown && acc.order() == total)
      break;
  }
  res.subnormaliser = acc;
  if (opts.exact_set)
    res.set_size = count;

  if (p) {
    PermGroup P = sylow(G, p, opts.search);
    res.sylow_normaliser_order = normaliser(G, P, opts.search).order();
    // N_G(P) lies in Sub_G(x) for P containing x, so equal orders suffice
    res.picky = res.subnormaliser.order() == res.sylow_normaliser_order;
  }
  return res;
}

SubnormResult subnormaliser_formula(PermGroup const &G, Perm const &x, unsigned p,
                                    SearchOptions const &opts)
{
  if (!G.contains(x))
    throw DomainError("subnormaliser_formula: x is not in G");
  SubnormResult res;
  res.x = x;
  res.ambient = G;
  res.method = SubnormMethod::formula;
  if (x.is_identity()) {
    res.subnormaliser = G;
    res.centraliser_order = G.order();
    return res;
  }
  if (prime_of_order(x) != p)
    throw RefusalError("subnormaliser_formula: x is not a " + std::to_string(p) + "-element");

  Sylow s = sylow_for(G, x, p, opts, true);
  Perm y = conj(x, s.h);
  PermGroup C = centraliser(G, y, opts);
  std::vector<Perm> gens = C.generators();
  gens.insert(gens.end(), s.N.generators().begin(), s.N.generators().end());
  PermGroup sub(G.degree(), gens);
  res.subnormaliser = sub.conjugate(~s.h);
  res.centraliser_order = C.order();
  res.sylow_normaliser_order = s.N.order();
  res.picky = s.N.contains_all(C.generators());
  return res;
}

bool picky_test(PermGroup const &G, Perm const &x, unsigned p, SearchOptions const &opts)
{
  if (prime_of_order(x) != p)
    throw RefusalError("picky_test: x is not a nontrivial " + std::to_string(p) + "-element");
  Sylow s = sylow_for(G, x, p, opts, true);
  Perm y = conj(x, s.h);
  PermGroup C = centraliser(G, y, opts);
  for (auto const &c : C.generators())
    for (auto const &u : s.P.generators())
      if (!s.P.contains(conj(u, c)))
        return false;
  return true;
}

} // namespace subn

#include <algorithm>
#include <numeric>

#include "subn/algorithms.hpp"
#include "subn/classical.hpp"
#include "subn/common.hpp"

namespace subn {

namespace {

// Scales v so that the log of its leading entry is reduced modulo
// (|F*| / k), which picks one vector per coset of the order-k scalars.
void canonicalise(Field const &f, std::vector<Elt> &v, unsigned k)
{
  unsigned m = (f.size() - 1) / k;
  for (Elt &lead : v) {
    if (lead == 0)
      continue;
    unsigned l = f.log(lead);
    unsigned shift = l - l % m;
    if (shift) {
      Elt s = f.power_of_generator(-static_cast<long long>(shift));
      for (Elt &x : v)
        x = f.mul(x, s);
    }
    return;
  }
  throw DomainError("canonicalise: zero vector");
}

std::uint64_t encode(std::vector<Elt> const &v, unsigned q)
{
  std::uint64_t c = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    c = c * q + *it;
  return c;
}

std::vector<Elt> times(Field const &f, std::vector<Elt> const &v, Matrix const &m)
{
  unsigned n = m.dim();
  std::vector<Elt> r(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (v[i] == 0)
      continue;
    for (unsigned j = 0; j < n; ++j)
      r[j] = f.add(r[j], f.mul(v[i], m(i, j)));
  }
  return r;
}

void check_inputs(std::vector<Matrix> const &gens, unsigned k)
{
  if (gens.empty())
    throw Error("perm_action: no generators");
  auto const &f = gens.front().field();
  for (auto const &g : gens)
    if (g.field() != f || g.dim() != gens.front().dim())
      throw Error("perm_action: generators over different fields or dimensions");
  if (k == 0 || (f->size() - 1) % k)
    throw Error("perm_action: scalar subgroup order must divide q-1");
}

} // namespace

Perm act(PermAction const &action, Matrix const &m)
{
  auto const &f = *m.field();
  std::vector<point> img(action.degree);
  for (point i = 0; i < action.degree; ++i) {
    auto w = times(f, action.points[i], m);
    canonicalise(f, w, action.scalar_subgroup_order);
    auto it = action.index.find(encode(w, f.size()));
    if (it == action.index.end())
      throw Error("perm_action: point set is not invariant under the matrix");
    img[i] = it->second;
  }
  return Perm(std::move(img));
}

PermAction perm_action(std::vector<Matrix> const &gens, ActionKind kind,
                       unsigned scalar_subgroup_order, std::size_t point_ceiling)
{
  unsigned q0 = gens.empty() ? 2 : gens.front().field()->size();
  unsigned k = kind == ActionKind::nonzero_vectors     ? 1
               : kind == ActionKind::projective_points ? q0 - 1
                                                       : scalar_subgroup_order;
  check_inputs(gens, k);
  auto const &f = *gens.front().field();
  unsigned n = gens.front().dim();
  unsigned q = f.size();
  unsigned m = (q - 1) / k;

  // m * (q^n - 1) / (q - 1) points
  Integer count = 0, qn = 1;
  for (unsigned i = 0; i < n; ++i)
    qn *= q;
  count = Integer(m) * ((qn - 1) / (q - 1));
  if (count > point_ceiling)
    throw CeilingError("perm_action: " + count.str() + " points exceed the ceiling of " +
                       std::to_string(point_ceiling) +
                       (kind == ActionKind::projective_points
                            ? std::string()
                            : std::string("; use the projective-points action")));

  PermAction action;
  action.scalar_subgroup_order = k;
  action.degree = static_cast<unsigned>(count);
  action.points.reserve(action.degree);
  for (unsigned lead = 0; lead < n; ++lead) {
    std::uint64_t tail_count = 1;
    for (unsigned j = lead + 1; j < n; ++j)
      tail_count *= q;
    for (unsigned l = 0; l < m; ++l)
      for (std::uint64_t t = 0; t < tail_count; ++t) {
        std::vector<Elt> v(n, 0);
        v[lead] = l + 1;
        std::uint64_t rest = t;
        for (unsigned j = lead + 1; j < n; ++j) {
          v[j] = static_cast<Elt>(rest % q);
          rest /= q;
        }
        action.index.emplace(encode(v, q), static_cast<point>(action.points.size()));
        action.points.push_back(std::move(v));
      }
  }
  for (auto const &g : gens)
    action.gens.push_back(act(action, g));
  return action;
}

PermAction orbit_action(std::vector<Matrix> const &gens, std::vector<Elt> const &start,
                        unsigned scalar_subgroup_order, std::size_t point_ceiling)
{
  check_inputs(gens, scalar_subgroup_order);
  auto const &f = *gens.front().field();
  PermAction action;
  action.scalar_subgroup_order = scalar_subgroup_order;
  auto v = start;
  canonicalise(f, v, scalar_subgroup_order);
  action.index.emplace(encode(v, f.size()), 0);
  action.points.push_back(v);
  for (std::size_t i = 0; i < action.points.size(); ++i)
    for (auto const &g : gens) {
      auto w = times(f, action.points[i], g);
      canonicalise(f, w, scalar_subgroup_order);
      if (action.index.emplace(encode(w, f.size()), static_cast<point>(action.points.size()))
              .second) {
        action.points.push_back(std::move(w));
        if (action.points.size() > point_ceiling)
          throw CeilingError("orbit_action: orbit exceeds the point ceiling");
      }
    }
  action.degree = static_cast<unsigned>(action.points.size());
  for (auto const &g : gens)
    action.gens.push_back(act(action, g));
  return action;
}

std::optional<Matrix> lift_to_matrix(PermAction const &action, MatrixGroup const &mg,
                                     Perm const &x)
{
  auto const &f = *mg.field;
  unsigned n = mg.dim, q = f.size(), k = action.scalar_subgroup_order;
  std::vector<Elt> scalars;
  for (unsigned j = 0; j < k; ++j)
    scalars.push_back(f.power_of_generator(static_cast<long long>(j) * ((q - 1) / k)));

  auto point_of = [&](std::vector<Elt> v) {
    canonicalise(f, v, k);
    auto it = action.index.find(encode(v, q));
    if (it == action.index.end())
      throw Error("lift_to_matrix: vector outside the point set");
    return it->second;
  };
  auto unit = [&](unsigned i) {
    std::vector<Elt> v(n, 0);
    v[i] = Field::one();
    return v;
  };
  auto scaled = [&](std::vector<Elt> v, Elt c) {
    for (auto &e : v)
      e = f.mul(e, c);
    return v;
  };

  // rows up to one scalar each, then fixed relative to row 0 through e_0 + e_i
  std::vector<std::vector<Elt>> rows(n);
  for (unsigned i = 0; i < n; ++i)
    rows[i] = action.points[x[point_of(unit(i))]];
  for (unsigned i = 1; i < n; ++i) {
    auto sum = unit(0);
    sum[i] = Field::one();
    point target = x[point_of(sum)];
    bool found = false;
    for (Elt z : scalars) {
      auto w = scaled(rows[i], z);
      std::vector<Elt> u(n);
      for (unsigned j = 0; j < n; ++j)
        u[j] = f.add(rows[0][j], w[j]);
      if (point_of(u) == target) {
        rows[i] = w;
        found = true;
        break;
      }
    }
    if (!found)
      throw Error("lift_to_matrix: the permutation is not induced by a matrix");
  }

  bool special = std::all_of(mg.gens.begin(), mg.gens.end(),
                             [](Matrix const &g) { return g.det() == Field::one(); });
  for (Elt c : scalars) {
    std::vector<Elt> e;
    for (auto const &r : rows)
      for (Elt v : r)
        e.push_back(f.mul(v, c));
    Matrix m(mg.field, n, std::move(e));
    if (special && m.det() != Field::one())
      continue;
    if (mg.form.kind != FormKind::none && !preserves_form(m, mg.form))
      continue;
    if (act(action, m) != x)
      continue;
    return m;
  }
  return std::nullopt;
}

unsigned faithful_scalar_quotient(GroupSpec const &spec)
{
  unsigned field_size = spec.q;
  if (spec.family == Family::SU || spec.family == Family::GU)
    field_size = spec.q * spec.q;
  unsigned k = field_size - 1;
  unsigned z = spec.scalar_order();
  for (unsigned g; (g = std::gcd(k, z)) > 1;)
    k /= g;
  return k;
}

PermGroup build_group(GroupSpec const &spec, std::size_t point_ceiling)
{
  switch (spec.family) {
  case Family::Sym:
    return PermGroup::symmetric(spec.n);
  case Family::Alt:
    return PermGroup::alternating(spec.n);
  case Family::Sporadic: {
    auto pf = named_generators(spec.name);
    return PermGroup(pf.degree, pf.gens);
  }
  case Family::OmegaOdd:
  case Family::OmegaEvenPlus:
  case Family::OmegaEvenMinus: {
    GroupSpec so = spec;
    so.family = spec.family == Family::OmegaOdd        ? Family::SOodd
                : spec.family == Family::OmegaEvenPlus ? Family::SOevenPlus
                                                       : Family::SOevenMinus;
    return derived_subgroup(build_group(so, point_ceiling));
  }
  default:
    break;
  }
  auto mg = matrix_generators(spec);
  auto action = perm_action(mg.gens, ActionKind::reduced_scalars,
                            faithful_scalar_quotient(spec), point_ceiling);
  return PermGroup(action.degree, action.gens);
}

} // namespace subn

#include <algorithm>
#include <numeric>
#include <ostream>

#include "internal.hpp"

namespace subn {

namespace {

Integer ipow(Integer b, unsigned e)
{
  Integer r = 1;
  while (e--)
    r *= b;
  return r;
}

Integer factorial(unsigned n)
{
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

std::string str(unsigned v) { return std::to_string(v); }

std::vector<unsigned> prime_factors(unsigned n)
{
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

struct Ctx
{
  GroupSpec spec;
  unsigned n = 0, q = 0, d = 0, e = 0, a = 0, r = 0;
  TorusData t;
  LeviShape shape;

  bool q_odd() const { return q % 2 == 1; }
  // 2ae/d even, i.e. d odd or a even
  bool plus_block() const { return d % 2 == 1 || a % 2 == 0; }
  bool minimal() const
  {
    return shape.s == r && shape.parts.size() == a &&
           std::all_of(shape.parts.begin(), shape.parts.end(), [](unsigned m) { return m == 1; });
  }
  // L(n_1, ..., n_t; r) with n_1 > 1
  bool big_levi() const { return shape.s == r && !shape.parts.empty() && shape.parts[0] > 1; }
  // L(1, ..., 1; e) with a-1 parts
  bool wreath_shape() const
  {
    return a >= 1 && shape.s == e && shape.parts.size() == a - 1 &&
           std::all_of(shape.parts.begin(), shape.parts.end(), [](unsigned m) { return m == 1; });
  }
  bool shape_is(std::vector<unsigned> const &parts, unsigned s) const
  {
    return shape.parts == parts && shape.s == s;
  }
  Integer order() const { return order_value(spec); }
};

using Guard = bool (*)(Ctx const &);
using Build = Prediction (*)(Ctx const &);

struct Clause
{
  char const *tag;
  char const *guard_text;
  char const *structure;
  Guard guard; // nullptr: "otherwise"
  Build build;
};

Prediction make(std::string structure, Integer order, bool exact = true)
{
  Prediction p;
  p.structure = std::move(structure);
  p.order = std::move(order);
  p.order_exact = exact;
  return p;
}

Prediction normaliser_prediction(Ctx const &c)
{
  Prediction p = make("N_G(S_" + str(c.d) + ")", c.t.group_normaliser_order);
  p.picky = true;
  return p;
}

Prediction whole_group(Ctx const &c)
{
  Prediction p = make("G", c.order());
  p.whole_group = true;
  return p;
}

std::string go(int sign, unsigned dim, std::string const &field = "")
{
  return std::string("GO") + (sign > 0 ? "+" : sign < 0 ? "-" : "") + "_" + str(dim) + "(" +
         field + ")";
}

// (GO^{s1}_{2ae}(q) x GO^{s2}_{2r}(q)) cap G; the determinant (or Dickson
// invariant) is onto on each factor, so the intersection has index 2
Prediction go_product(Ctx const &c, int s1, int s2)
{
  std::string fq = str(c.q);
  Prediction p = make("(" + go(s1, 2 * c.a * c.e, fq) + " x " + go(s2, 2 * c.r, fq) + ") cap G",
                      order_go_even(c.a * c.e, s1, c.q) * order_go_even(c.r, s2, c.q) / 2);
  return p;
}

Prediction go_wreath(Ctx const &c, int s)
{
  return make("(" + go(s, 2 * c.e, str(c.q)) + " wr S_" + str(c.a) + ") cap G",
              ipow(order_go_even(c.e, s, c.q), c.a) * factorial(c.a) / 2);
}

std::vector<Clause> const &clauses_for(Family f)
{
  static std::vector<Clause> const sl = {
      {"subn-SL(1)", "C = C_G(S_d)", "N_G(S_d)", [](Ctx const &c) { return c.minimal(); },
       normaliser_prediction},
      {"subn-SL(2)", "r > 0 and C = L_d(n_1,...,n_t;r) with some n_i > 1",
       "(GL_{ad}(q) x GL_r(q)) cap G", [](Ctx const &c) { return c.r > 0 && c.big_levi(); },
       [](Ctx const &c) {
         return make("(GL_" + str(c.a * c.d) + "(" + str(c.q) + ") x GL_" + str(c.r) + "(" +
                         str(c.q) + ")) cap G",
                     order_gl(c.a * c.d, c.q) * order_gl(c.r, c.q) / (c.q - 1));
       }},
      {"subn-SL(3)", "r = 0, d > 1, a > 1 and C = L_d(1,...,1;d)", "(GL_d(q) wr S_a) cap G",
       [](Ctx const &c) { return c.r == 0 && c.d > 1 && c.a > 1 && c.wreath_shape(); },
       [](Ctx const &c) {
         return make("(GL_" + str(c.d) + "(" + str(c.q) + ") wr S_" + str(c.a) + ") cap G",
                     ipow(order_gl(c.d, c.q), c.a) * factorial(c.a) / (c.q - 1));
       }},
      {"subn-SL(4)", "otherwise", "G", nullptr, whole_group}};

  static std::vector<Clause> const su = {
      {"subn-SU(1)", "C = C_G(S_d)", "N_G(S_d)", [](Ctx const &c) { return c.minimal(); },
       normaliser_prediction},
      {"subn-SU(2)", "r > 0 and C = L_e(n_1,...,n_t;r) with some n_i > 1",
       "(GU_{ae}(q) x GU_r(q)) cap G", [](Ctx const &c) { return c.r > 0 && c.big_levi(); },
       [](Ctx const &c) {
         return make("(GU_" + str(c.a * c.e) + "(" + str(c.q) + ") x GU_" + str(c.r) + "(" +
                         str(c.q) + ")) cap G",
                     order_gu(c.a * c.e, c.q) * order_gu(c.r, c.q) / (c.q + 1));
       }},
      {"subn-SU(3)", "r = 0, e > 1, a > 1 and C = L_e(1,...,1;e)", "(GU_e(q) wr S_a) cap G",
       [](Ctx const &c) { return c.r == 0 && c.e > 1 && c.a > 1 && c.wreath_shape(); },
       [](Ctx const &c) {
         return make("(GU_" + str(c.e) + "(" + str(c.q) + ") wr S_" + str(c.a) + ") cap G",
                     ipow(order_gu(c.e, c.q), c.a) * factorial(c.a) / (c.q + 1));
       }},
      {"subn-SU(4)", "otherwise", "G", nullptr, whole_group}};

  static std::vector<Clause> const sp = {
      {"subn-Sp(1)", "C = C_G(S_d)", "N_G(S_d)", [](Ctx const &c) { return c.minimal(); },
       normaliser_prediction},
      {"subn-Sp(2)", "r > 0, q odd and C = L_d(n_1,...,n_t;r) with n_1 > 1",
       "Sp_{2ae}(q) x Sp_{2r}(q)",
       [](Ctx const &c) { return c.r > 0 && c.q_odd() && c.big_levi(); },
       [](Ctx const &c) {
         return make("Sp_" + str(2 * c.a * c.e) + "(" + str(c.q) + ") x Sp_" + str(2 * c.r) +
                         "(" + str(c.q) + ")",
                     order_sp(c.a * c.e, c.q) * order_sp(c.r, c.q));
       }},
      {"subn-Sp(3)", "q even, 2ae/d even and C = L_d(n_1,...,n_t;r) with n_1 > 1",
       "GO+_{2ae}(q) x Sp_{2r}(q)",
       [](Ctx const &c) { return !c.q_odd() && c.plus_block() && c.big_levi(); },
       [](Ctx const &c) {
         return make(go(1, 2 * c.a * c.e, str(c.q)) + " x Sp_" + str(2 * c.r) + "(" + str(c.q) +
                         ")",
                     order_go_even(c.a * c.e, 1, c.q) * order_sp(c.r, c.q));
       }},
      {"subn-Sp(4)", "q even, 2ae/d odd and C = L_d(n_1,...,n_t;r) with n_1 > 1",
       "GO-_{2ae}(q) x Sp_{2r}(q)",
       [](Ctx const &c) { return !c.q_odd() && !c.plus_block() && c.big_levi(); },
       [](Ctx const &c) {
         return make(go(-1, 2 * c.a * c.e, str(c.q)) + " x Sp_" + str(2 * c.r) + "(" +
                         str(c.q) + ")",
                     order_go_even(c.a * c.e, -1, c.q) * order_sp(c.r, c.q));
       }},
      {"subn-Sp(5)", "r = 0, a > 1 and C = L_d(1,...,1;e)", "Sp_{2e}(q) wr S_a",
       [](Ctx const &c) { return c.r == 0 && c.a > 1 && c.wreath_shape(); },
       [](Ctx const &c) {
         return make("Sp_" + str(2 * c.e) + "(" + str(c.q) + ") wr S_" + str(c.a),
                     ipow(order_sp(c.e, c.q), c.a) * factorial(c.a));
       }},
      {"subn-Sp(6)", "otherwise", "G", nullptr, whole_group}};

  static std::vector<Clause> const so_odd = {
      {"subn-SOodd(1)", "C = C_G(S_d)", "N_G(S_d)", [](Ctx const &c) { return c.minimal(); },
       normaliser_prediction},
      {"subn-SOodd(2)", "2ae/d even and C = L_d(n_1,...,n_t;r) with n_1 > 1",
       "(GO+_{2ae}(q) x GO_{2r+1}(q)) cap G",
       [](Ctx const &c) { return c.plus_block() && c.big_levi(); },
       [](Ctx const &c) {
         // GO_{2r+1} = SO_{2r+1} x <-1>, so the intersection is GO+ x SO
         return make("(" + go(1, 2 * c.a * c.e, str(c.q)) + " x " + go(0, 2 * c.r + 1, str(c.q)) +
                         ") cap G",
                     order_go_even(c.a * c.e, 1, c.q) * order_so_odd(c.r, c.q));
       }},
      {"subn-SOodd(3)", "2ae/d odd and C = L_d(n_1,...,n_t;r) with n_1 > 1",
       "(GO-_{2ae}(q) x GO_{2r+1}(q)) cap G",
       [](Ctx const &c) { return !c.plus_block() && c.big_levi(); },
       [](Ctx const &c) {
         return make("(" + go(-1, 2 * c.a * c.e, str(c.q)) + " x " +
                         go(0, 2 * c.r + 1, str(c.q)) + ") cap G",
                     order_go_even(c.a * c.e, -1, c.q) * order_so_odd(c.r, c.q));
       }},
      {"subn-SOodd(4)", "otherwise", "G", nullptr, whole_group}};

  static std::vector<Clause> const so_plus = {
      {"subn-SO+(1)", "C = C_G(S_d)", "N_G(S_d)", [](Ctx const &c) { return c.minimal(); },
       normaliser_prediction},
      {"subn-SO+(2)", "r > 0, 2ae/d even and C = L_d(n_1,...,n_t;r) with n_1 > 1",
       "(GO+_{2ae}(q) x GO+_{2r}(q)) cap G",
       [](Ctx const &c) { return c.r > 0 && c.plus_block() && c.big_levi(); },
       [](Ctx const &c) { return go_product(c, 1, 1); }},
      {"subn-SO+(3)", "r > 0, 2ae/d odd and C = L_d(n_1,...,n_t;r) with n_1 > 1",
       "(GO-_{2ae}(q) x GO-_{2r}(q)) cap G",
       [](Ctx const &c) { return c.r > 0 && !c.plus_block() && c.big_levi(); },
       [](Ctx const &c) { return go_product(c, -1, -1); }},
      {"subn-SO+(4)", "r = 0, a > 1, d odd and C = L_d(1,...,1;e)",
       "(GO+_{2e}(q) wr S_a) cap G",
       [](Ctx const &c) { return c.r == 0 && c.a > 1 && c.d % 2 == 1 && c.wreath_shape(); },
       [](Ctx const &c) { return go_wreath(c, 1); }},
      {"subn-SO+(5)", "r = 0, a even, d even and C = L_d(1,...,1;e)",
       "(GO-_{2e}(q) wr S_a) cap G",
       [](Ctx const &c) {
         return c.r == 0 && c.a % 2 == 0 && c.d % 2 == 0 && c.wreath_shape();
       },
       [](Ctx const &c) { return go_wreath(c, -1); }},
      {"subn-SO+(6)", "e = d = n/2 odd and C = L_d(2;0)", "GL_n(q).2",
       [](Ctx const &c) {
         return c.e == c.d && c.d % 2 == 1 && c.n == 2 * c.d && c.shape_is({2}, 0);
       },
       [](Ctx const &c) {
         return make("GL_" + str(c.n) + "(" + str(c.q) + ").2", 2 * order_gl(c.n, c.q));
       }},
      {"subn-SO+(7)", "e = d/2 = n/2 odd and C = L_d(2;0)", "GU_n(q).2",
       [](Ctx const &c) {
         return c.d % 2 == 0 && c.e % 2 == 1 && c.n == 2 * c.e && c.shape_is({2}, 0);
       },
       [](Ctx const &c) {
         return make("GU_" + str(c.n) + "(" + str(c.q) + ").2", 2 * order_gu(c.n, c.q));
       }},
      {"subn-SO+(8)", "n = d = 0 mod 4 and C = L_d(2;0)", "GO+_n(q^2).2 cap G",
       [](Ctx const &c) { return c.n == c.d && c.d % 4 == 0 && c.shape_is({2}, 0); },
       [](Ctx const &c) {
         // index in GO+_n(q^2).2 left to computation
         return make(go(1, c.n, str(c.q) + "^2") + ".2 cap G",
                     2 * order_go_even(c.n / 2, 1, Integer(c.q) * c.q), false);
       }},
      {"subn-SO+(9)", "otherwise", "G", nullptr, whole_group}};

  static std::vector<Clause> const so_minus = {
      {"subn-SO-(1)", "C = C_G(S_d)", "N_G(S_d)", [](Ctx const &c) { return c.minimal(); },
       normaliser_prediction},
      {"subn-SO-(2)", "r > 0, 2ae/d even and C = L_d(n_1,...,n_t;r) with n_1 > 1",
       "(GO+_{2ae}(q) x GO-_{2r}(q)) cap G",
       [](Ctx const &c) { return c.r > 0 && c.plus_block() && c.big_levi(); },
       [](Ctx const &c) { return go_product(c, 1, -1); }},
      {"subn-SO-(3)", "r > 0, 2ae/d odd and C = L_d(n_1,...,n_t;r) with n_1 > 1",
       "(GO-_{2ae}(q) x GO+_{2r}(q)) cap G",
       [](Ctx const &c) { return c.r > 0 && !c.plus_block() && c.big_levi(); },
       [](Ctx const &c) { return go_product(c, -1, 1); }},
      {"subn-SO-(4)", "r = 0, a odd, d even and C = L_d(1,...,1;e)",
       "(GO-_{2e}(q) wr S_a) cap G",
       [](Ctx const &c) {
         return c.r == 0 && c.a % 2 == 1 && c.d % 2 == 0 && c.wreath_shape();
       },
       [](Ctx const &c) { return go_wreath(c, -1); }},
      {"subn-SO-(5)", "otherwise", "G", nullptr, whole_group}};

  switch (f) {
  case Family::SL:
    return sl;
  case Family::SU:
    return su;
  case Family::Sp:
    return sp;
  case Family::SOodd:
    return so_odd;
  case Family::SOevenPlus:
    return so_plus;
  case Family::SOevenMinus:
    return so_minus;
  default:
    throw RefusalError(std::string("no subnormaliser formula for family ") + family_name(f));
  }
}

// family-specific rank hypotheses of the overgroup and subnormaliser results
void check_family_hypotheses(GroupSpec const &spec)
{
  unsigned n = spec.n, q = spec.q;
  switch (spec.family) {
  case Family::SL:
    if (n < 2)
      throw RefusalError("hypothesis violated: SL needs n >= 2");
    break;
  case Family::SU:
    if (n < 3)
      throw RefusalError("hypothesis violated: SU needs n >= 3");
    break;
  case Family::Sp:
    if (n < 2 || (n == 2 && q == 2))
      throw RefusalError("hypothesis violated: Sp_2n needs n >= 2 and (n,q) != (2,2)");
    break;
  case Family::SOodd:
    if (n < 3 || q % 2 == 0)
      throw RefusalError("hypothesis violated: SO_{2n+1} needs n >= 3 and q odd");
    break;
  case Family::SOevenPlus:
  case Family::SOevenMinus:
    if (n < 4)
      throw RefusalError("hypothesis violated: SO_2n needs n >= 4");
    break;
  default:
    throw RefusalError(std::string("no classification for family ") + family_name(spec.family));
  }
}

// prime ell, not the characteristic, abelian Sylow; returns d
unsigned check_prime(GroupSpec const &spec, unsigned ell)
{
  if (!is_prime(ell))
    throw RefusalError("hypothesis violated: " + std::to_string(ell) + " is not prime");
  if (ell == 2)
    throw RefusalError("hypothesis violated: Sylow 2-subgroups are non-abelian here");
  if (spec.q % ell == 0)
    throw RefusalError("hypothesis violated: ell divides q");
  if (!sylow_abelian(spec, ell))
    throw RefusalError("hypothesis violated: Sylow " + std::to_string(ell) +
                       "-subgroups are non-abelian");
  unsigned d = e_ell(ell, spec.q);
  if (order_polynomial(spec).multiplicity(d) == 0)
    throw RefusalError("hypothesis violated: " + std::to_string(ell) + " does not divide |G|");
  return d;
}

Ctx make_ctx(GroupSpec const &spec, unsigned d, LeviShape const &shape)
{
  Ctx c;
  c.spec = spec;
  c.n = spec.n;
  c.q = spec.q;
  c.d = d;
  c.t = torus_decomposition(spec, d);
  c.e = c.t.e;
  c.a = c.t.a;
  c.r = c.t.r;
  c.shape = shape;
  return c;
}

void check_shape(GroupSpec const &spec, unsigned d, LeviShape const &shape)
{
  for (auto const &le : dsplit_levis(spec, d))
    if (le.shape.parts == shape.parts && le.shape.s == shape.s &&
        (shape.sign == 0 || shape.sign == le.shape.sign))
      return;
  throw RefusalError("invalid shape " + shape.str() + " for " + spec.str() + ", d = " +
                     std::to_string(d));
}

void add_class_s(std::vector<Overgroup> &out, GroupSpec const &spec, unsigned d, unsigned ell)
{
  Family key = spec.family;
  if (key == Family::SOodd)
    key = Family::OmegaOdd;
  else if (key == Family::SOevenPlus)
    key = Family::OmegaEvenPlus;
  else if (key == Family::SOevenMinus)
    key = Family::OmegaEvenMinus;
  for (auto const &row : tables().class_s) {
    if (parse_family(row.family) != key || row.n != spec.n || row.q != spec.q)
      continue;
    for (auto const &[rd, rl] : row.d_ell)
      if (rd == d && rl == ell) {
        out.push_back({"class-S", row.subgroup});
        break;
      }
  }
}

} // namespace

std::ostream &operator<<(std::ostream &os, Prediction const &p)
{
  os << p.case_tag << '\t' << p.structure << '\t' << p.order;
  if (!p.order_exact)
    os << " (index to resolve)";
  if (p.picky)
    os << "\tpicky";
  return os;
}

LeviShape minimal_shape(GroupSpec const &spec, unsigned d)
{
  TorusData t = torus_decomposition(spec, d);
  LeviShape s;
  s.parts.assign(t.a, 1);
  s.s = t.r;
  s.sign = t.h_sign;
  return s;
}

std::vector<ClauseInfo> subnormaliser_clauses(Family f)
{
  std::vector<ClauseInfo> out;
  for (auto const &c : clauses_for(f))
    out.push_back({c.tag, c.guard_text, c.structure});
  return out;
}

std::vector<std::string> matching_clauses(GroupSpec const &spec, unsigned ell,
                                          LeviShape const &shape)
{
  unsigned d = check_prime(spec, ell);
  check_shape(spec, d, shape);
  Ctx c = make_ctx(spec, d, shape);
  std::vector<std::string> tags;
  Clause const *fallback = nullptr;
  for (auto const &cl : clauses_for(spec.family)) {
    if (!cl.guard)
      fallback = &cl;
    else if (cl.guard(c))
      tags.push_back(cl.tag);
  }
  if (tags.empty() && fallback)
    tags.push_back(fallback->tag);
  return tags;
}

Prediction predict_subnormaliser(GroupSpec const &spec, unsigned ell, LeviShape const &shape)
{
  clauses_for(spec.family); // refuses unsupported families first
  unsigned d = check_prime(spec, ell);
  check_shape(spec, d, shape);
  Ctx c = make_ctx(spec, d, shape);

  // rank one: every nontrivial ell-element is picky
  if (order_polynomial(spec).multiplicity(d) == 1 && c.minimal()) {
    Prediction p = normaliser_prediction(c);
    p.case_tag = "cyclic";
    return p;
  }
  check_family_hypotheses(spec);

  Clause const *hit = nullptr;
  Clause const *fallback = nullptr;
  for (auto const &cl : clauses_for(spec.family)) {
    if (!cl.guard) {
      fallback = &cl;
      continue;
    }
    if (cl.guard(c)) {
      if (hit)
        throw Error(std::string("clauses ") + hit->tag + " and " + cl.tag + " both match " +
                    shape.str());
      hit = &cl;
    }
  }
  if (!hit)
    hit = fallback;
  Prediction p = hit->build(c);
  p.case_tag = hit->tag;
  return p;
}

std::vector<Overgroup> predict_overgroups(GroupSpec const &spec, unsigned d, unsigned ell)
{
  if (spec.is_exceptional())
    return detail::exceptional_overgroups(spec, d, ell);
  check_family_hypotheses(spec);
  unsigned de = check_prime(spec, ell);
  if (de != d)
    throw RefusalError("hypothesis violated: d = " + std::to_string(d) + " but e_ell(q) = " +
                       std::to_string(de));
  TorusData t = torus_decomposition(spec, d);
  unsigned n = spec.n, q = spec.q, e = t.e, a = t.a, r = t.r;
  std::string fq = str(q);
  std::vector<Overgroup> out;
  auto add = [&out](std::string tag, std::string s) { out.push_back({std::move(tag), std::move(s)}); };

  switch (spec.family) {
  case Family::SL:
    if (r > 0) {
      add("over-SL(1)", "P_" + str(a * d));
      add("over-SL(1)", "P_" + str(r));
    }
    if (n == a * d && a > 1)
      add("over-SL(2)", "(GL_" + str(d) + "(" + fq + ") wr S_" + str(a) + ") cap G");
    if (n == d)
      for (unsigned tp : prime_factors(n))
        add("over-SL(3)", "GL_" + str(n / tp) + "(" + fq + "^" + str(tp) + ")." + str(tp) +
                              " cap G");
    if (n > 2 && n % 2 == 0 && q == 2 && d == 2)
      add("over-SL(4)", "Sp_" + str(n) + "(2)");
    if (n >= 3 && q == 4 && d == 1)
      add("over-SL(5)", "SU_" + str(n) + "(2)");
    break;
  case Family::SU:
    if (r > 0)
      add("over-SU(1)",
          "(GU_" + str(a * e) + "(" + fq + ") x GU_" + str(r) + "(" + fq + ")) cap G");
    if (n == a * e && a > 1)
      add("over-SU(2)", "(GU_" + str(e) + "(" + fq + ") wr S_" + str(a) + ") cap G");
    if (n == e && n % 2 == 0)
      add("over-SU(3)", "GL_" + str(n / 2) + "(" + fq + "^2).2 cap G");
    if (n == e)
      for (unsigned tp : prime_factors(n))
        if (tp > 2)
          add("over-SU(4)", "GU_" + str(n / tp) + "(" + fq + "^" + str(tp) + ")." + str(tp) +
                                " cap G");
    if (n == 4 && d == 4 && q <= 3)
      add("over-SU(5)", "Sp_4(" + fq + ")." + str(std::gcd(q - 1, 2u)));
    break;
  case Family::Sp:
    if (r > 0)
      add("over-Sp(1)", "Sp_" + str(2 * a * e) + "(" + fq + ") x Sp_" + str(2 * r) + "(" + fq +
                            ")");
    if (n == a * e && a > 1)
      add("over-Sp(2)", "Sp_" + str(2 * e) + "(" + fq + ") wr S_" + str(a));
    if (n == d && d % 2 == 1 && q % 2 == 1)
      add("over-Sp(3)", "GL_" + str(n) + "(" + fq + ").2");
    if (n == e)
      for (unsigned tp : prime_factors(n))
        add("over-Sp(4)", "Sp_" + str(2 * n / tp) + "(" + fq + "^" + str(tp) + ")." +
                              str(std::gcd(std::gcd(q - 1, 2u), tp)));
    if (n == e && d == 2 * e && n % 2 == 1 && q % 2 == 1)
      add("over-Sp(5)", "GU_" + str(n) + "(" + fq + ").2");
    if (q == 4 && d == 1)
      add("over-Sp(6)", "Sp_" + str(2 * n) + "(2)");
    if (q % 2 == 0 && n == a * e && n > 2) {
      bool plus = (2 * n / d) % 2 == 0;
      add(plus ? "over-Sp(7)" : "over-Sp(8)", go(plus ? 1 : -1, 2 * n, fq));
    }
    break;
  case Family::SOodd:
    if (d % 2 == 1 || a % 2 == 0)
      add("over-SOodd(1)", "(" + go(1, 2 * a * e, fq) + " x " + go(0, 2 * r + 1, fq) + ") cap G");
    else
      add("over-SOodd(2)",
          "(" + go(-1, 2 * a * e, fq) + " x " + go(0, 2 * r + 1, fq) + ") cap G");
    break;
  case Family::SOevenPlus: {
    bool plus = a % 2 == 0 || d % 2 == 1;
    if (r > 0 && plus)
      add("over-SO+(1)", "(" + go(1, 2 * a * e, fq) + " x " + go(1, 2 * r, fq) + ") cap G");
    if (r > 0 && !plus)
      add("over-SO+(2)", "(" + go(-1, 2 * a * e, fq) + " x " + go(-1, 2 * r, fq) + ") cap G");
    if (q == 2 && r == 1 && (a % 2 == 0 || (d > 1 && d % 2 == 1)))
      add("over-SO+(3)", "Sp_" + str(2 * n - 2) + "(2)");
    // for e = 1 these two coincide with the torus normaliser itself
    if (r == 0 && a > 1 && d % 2 == 1 && e > 1)
      add("over-SO+(4)", "(" + go(1, 2 * e, fq) + " wr S_" + str(a) + ") cap G");
    if (r == 0 && a % 2 == 0 && d % 2 == 0 && e > 1)
      add("over-SO+(5)", "(" + go(-1, 2 * e, fq) + " wr S_" + str(a) + ") cap G");
    if (e == d && d % 2 == 1 && (n == e + 1 || n == 2 * e))
      add("over-SO+(6)", "GL_" + str(n) + "(" + fq + ").2");
    if (d % 2 == 0 && e % 2 == 1 && (n == e + 1 || n == 2 * e))
      add("over-SO+(7)", "GU_" + str(n) + "(" + fq + ").2");
    if (n == d && d % 2 == 1)
      for (unsigned tp : prime_factors(n))
        if (tp > 2 && 2 * n / tp >= 4)
          add("over-SO+(8)", go(1, 2 * n / tp, fq + "^" + str(tp)) + "." + str(tp) + " cap G");
    if (n == d && d % 4 == 0)
      add("over-SO+(9)", go(1, n, fq + "^2") + ".2 cap G");
    if (q == 4 && d == 1)
      add(n % 2 == 0 ? "over-SO+(10)" : "over-SO+(11)", go(n % 2 == 0 ? 1 : -1, 2 * n, "2"));
    break;
  }
  case Family::SOevenMinus: {
    bool plus = a % 2 == 0 || d % 2 == 1;
    if (r > 0 && plus)
      add("over-SO-(1)", "(" + go(1, 2 * a * e, fq) + " x " + go(-1, 2 * r, fq) + ") cap G");
    if (r > 0 && !plus)
      add("over-SO-(2)", "(" + go(-1, 2 * a * e, fq) + " x " + go(1, 2 * r, fq) + ") cap G");
    if (q == 2 && r == 1 && a % 2 == 1 && d % 2 == 0)
      add("over-SO-(3)", "Sp_" + str(2 * n - 2) + "(2)");
    if (r == 0 && a % 2 == 1 && d % 2 == 0 && e > 1)
      add("over-SO-(4)", "(" + go(-1, 2 * e, fq) + " wr S_" + str(a) + ") cap G");
    if (n == e && d == 2 * e && n % 2 == 1)
      add("over-SO-(5)", "GU_" + str(n) + "(" + fq + ")");
    if (q == 3 && d % 4 == 0 && n == d / 2 + 1)
      add("over-SO-(6)", go(0, n, "9"));
    if (n == e && d == 2 * e)
      for (unsigned tp : prime_factors(n))
        if (2 * n / tp >= 4 && (2 * n / tp) % 2 == 0)
          add("over-SO-(7)", go(-1, 2 * n / tp, fq + "^" + str(tp)) + "." + str(tp) + " cap G");
    break;
  }
  default:
    break;
  }
  add_class_s(out, spec, d, ell);
  return out;
}

} // namespace subn

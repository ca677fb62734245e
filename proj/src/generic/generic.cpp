#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>

#include "subn/generic.hpp"

namespace subn {

namespace {

Integer ipow(Integer const &b, unsigned e)
{
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i)
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

std::vector<unsigned> divisors(unsigned n)
{
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= n; ++i)
    if (n % i == 0)
      out.push_back(i);
  return out;
}

// q^m - sign as a product of cyclotomic factors, added into phi
void add_binomial(std::map<unsigned, unsigned> &phi, unsigned m, int sign)
{
  if (sign > 0) {
    for (unsigned d : divisors(m))
      ++phi[d];
  } else {
    // q^m + 1 = (q^2m - 1) / (q^m - 1)
    for (unsigned d : divisors(2 * m))
      if (m % d)
        ++phi[d];
  }
}

struct ExceptionalRow
{
  unsigned q_exponent;
  std::map<unsigned, unsigned> phi;
};

std::map<std::string, ExceptionalRow> load_exceptional()
{
  std::string path = data_dir() + "/order_polynomials.txt";
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  std::map<std::string, ExceptionalRow> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ss(line);
    std::string name, item;
    ExceptionalRow row;
    ss >> name >> row.q_exponent;
    while (ss >> item) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw ParseError("order_polynomials: bad entry '" + item + "'");
      row.phi[std::stoul(item.substr(0, colon))] = std::stoul(item.substr(colon + 1));
    }
    out[name] = row;
  }
  return out;
}

std::map<std::string, ExceptionalRow> const &exceptional_rows()
{
  static auto const rows = load_exceptional();
  return rows;
}

int even_sign(Family f)
{
  switch (f) {
  case Family::SOevenPlus:
  case Family::OmegaEvenPlus:
  case Family::GOplus:
    return 1;
  case Family::SOevenMinus:
  case Family::OmegaEvenMinus:
  case Family::GOminus:
    return -1;
  default:
    return 0;
  }
}

enum class Kind
{
  linear,
  unitary,
  symplectic,
  odd_orthogonal,
  even_orthogonal,
  other
};

Kind kind_of(Family f)
{
  switch (f) {
  case Family::SL:
  case Family::GL:
    return Kind::linear;
  case Family::SU:
  case Family::GU:
    return Kind::unitary;
  case Family::Sp:
    return Kind::symplectic;
  case Family::SOodd:
  case Family::OmegaOdd:
    return Kind::odd_orthogonal;
  case Family::SOevenPlus:
  case Family::SOevenMinus:
  case Family::OmegaEvenPlus:
  case Family::OmegaEvenMinus:
  case Family::GOplus:
  case Family::GOminus:
    return Kind::even_orthogonal;
  default:
    return Kind::other;
  }
}

} // namespace

Integer cyclotomic_value(unsigned d, long long q)
{
  if (d == 0)
    throw DomainError("cyclotomic_value: d must be positive");
  Integer num = ipow(Integer(q), d) - 1;
  for (unsigned e : divisors(d))
    if (e < d)
      num /= cyclotomic_value(e, q);
  return num;
}

unsigned e_ell(unsigned ell, long long q)
{
  long long r = ((q % static_cast<long long>(ell)) + ell) % ell;
  if (r == 0)
    throw DomainError("e_ell: " + std::to_string(ell) + " divides " + std::to_string(q));
  unsigned e = 1;
  long long x = r;
  while (x != 1) {
    x = x * r % ell;
    ++e;
  }
  return e;
}

bool is_prime(unsigned long long n)
{
  if (n < 2)
    return false;
  for (unsigned long long p = 2; p * p <= n && p < 1000; ++p)
    if (n % p == 0)
      return n == p;
  return boost::multiprecision::miller_rabin_test(Integer(n), 25);
}

std::optional<unsigned> zsigmondy(unsigned d, unsigned q)
{
  if (d == 0 || q < 2)
    return std::nullopt;
  // primes dividing Phi_d(q) but not primitive divide d
  Integer n = cyclotomic_value(d, q);
  for (unsigned p = 2; p <= d; ++p)
    if (d % p == 0)
      while (n % p == 0)
        n /= p;
  while (n % 2 == 0)
    n /= 2;
  if (n == 1)
    return std::nullopt;
  if (boost::multiprecision::miller_rabin_test(n, 25)) {
    if (n > Integer(0xffffffffu))
      throw UnsupportedError("zsigmondy: primitive prime exceeds 32 bits");
    return static_cast<unsigned>(n);
  }
  // every primitive prime is 1 mod d
  unsigned step = d % 2 ? 2 * d : d;
  for (unsigned long long l = step + 1; Integer(l) * l <= n; l += step) {
    if (l > 0xffffffffull)
      throw UnsupportedError("zsigmondy: prime search exceeded 32 bits");
    if (n % l == 0)
      return static_cast<unsigned>(l);
  }
  if (n > Integer(0xffffffffu))
    throw UnsupportedError("zsigmondy: primitive prime exceeds 32 bits");
  return static_cast<unsigned>(n);
}

Integer OrderPolynomial::evaluate(unsigned q) const
{
  Integer r = ipow(Integer(q), q_exponent) * constant;
  for (auto const &[d, m] : phi)
    r *= ipow(cyclotomic_value(d, q), m);
  if (halve_for_odd_q && q % 2)
    r /= 2;
  return r;
}

std::vector<unsigned> OrderPolynomial::degrees() const
{
  std::vector<unsigned> out;
  for (auto const &[d, m] : phi)
    if (m)
      out.push_back(d);
  return out;
}

unsigned OrderPolynomial::multiplicity(unsigned d) const
{
  auto it = phi.find(d);
  return it == phi.end() ? 0 : it->second;
}

std::string OrderPolynomial::str() const
{
  std::ostringstream ss;
  bool first = true;
  auto sep = [&] {
    if (!first)
      ss << ' ';
    first = false;
  };
  if (constant != 1) {
    sep();
    ss << constant;
  }
  if (halve_for_odd_q) {
    sep();
    ss << "(1/2 for odd q)";
  }
  if (q_exponent) {
    sep();
    ss << "q^" << q_exponent;
  }
  for (auto const &[d, m] : phi) {
    if (!m)
      continue;
    sep();
    ss << "Phi" << d;
    if (m > 1)
      ss << '^' << m;
  }
  if (first)
    ss << '1';
  return ss.str();
}

OrderPolynomial order_polynomial(GroupSpec const &spec)
{
  OrderPolynomial p;
  unsigned n = spec.n;
  switch (spec.family) {
  case Family::SL:
  case Family::GL:
    p.q_exponent = n * (n - 1) / 2;
    for (unsigned i = 2; i <= n; ++i)
      add_binomial(p.phi, i, 1);
    if (spec.family == Family::GL)
      ++p.phi[1];
    break;
  case Family::SU:
  case Family::GU:
    p.q_exponent = n * (n - 1) / 2;
    for (unsigned i = 2; i <= n; ++i)
      add_binomial(p.phi, i, i % 2 ? -1 : 1);
    if (spec.family == Family::GU)
      ++p.phi[2];
    break;
  case Family::Sp:
  case Family::SOodd:
  case Family::OmegaOdd:
    p.q_exponent = n * n;
    for (unsigned i = 1; i <= n; ++i)
      add_binomial(p.phi, 2 * i, 1);
    p.halve_for_odd_q = spec.family == Family::OmegaOdd;
    break;
  case Family::SOevenPlus:
  case Family::SOevenMinus:
  case Family::OmegaEvenPlus:
  case Family::OmegaEvenMinus:
  case Family::GOplus:
  case Family::GOminus:
    p.q_exponent = n * (n - 1);
    add_binomial(p.phi, n, even_sign(spec.family));
    for (unsigned i = 1; i < n; ++i)
      add_binomial(p.phi, 2 * i, 1);
    if (spec.family == Family::GOplus || spec.family == Family::GOminus)
      p.constant = 2;
    p.halve_for_odd_q =
        spec.family == Family::OmegaEvenPlus || spec.family == Family::OmegaEvenMinus;
    break;
  case Family::G2:
  case Family::D4_3:
  case Family::F4:
  case Family::E6:
  case Family::E6_2:
  case Family::E7:
  case Family::E8: {
    auto const &rows = exceptional_rows();
    auto it = rows.find(family_name(spec.family));
    if (it == rows.end())
      throw UnsupportedError(std::string("no order polynomial for ") + family_name(spec.family));
    p.q_exponent = it->second.q_exponent;
    p.phi = it->second.phi;
    break;
  }
  default:
    throw UnsupportedError("no order polynomial for " + spec.str());
  }
  return p;
}

Integer order_value(GroupSpec const &spec)
{
  switch (spec.family) {
  case Family::Sym:
    return factorial(spec.n);
  case Family::Alt:
    return spec.n < 2 ? Integer(1) : factorial(spec.n) / 2;
  case Family::Sporadic:
    for (auto const &e : catalogue())
      if (e.name == spec.name)
        return e.order;
    throw UnsupportedError("no catalogued order for " + spec.name);
  default:
    return order_polynomial(spec).evaluate(spec.q);
  }
}

bool order_bounds_check(GroupSpec const &spec)
{
  Integer order = order_value(spec);
  Integer q = spec.q;
  unsigned n = spec.n;
  switch (kind_of(spec.family)) {
  case Kind::linear:
    return order > (q - 1) * ipow(q, n * n - 2);
  case Kind::symplectic:
  case Kind::odd_orthogonal:
    return order > (q * q - 1) * (q * q - 1) * ipow(q, 2 * n * n + n - 4);
  case Kind::even_orthogonal:
    return 2 * order > ipow(q, 2 * n * n - n);
  default:
    throw UnsupportedError("order_bounds_check: no bound for " + spec.str());
  }
}

Integer order_gl(unsigned n, Integer const &q)
{
  Integer r = ipow(q, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i)
    r *= ipow(q, i) - 1;
  return r;
}

Integer order_gu(unsigned n, Integer const &q)
{
  Integer r = ipow(q, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i)
    r *= i % 2 ? ipow(q, i) + 1 : ipow(q, i) - 1;
  return r;
}

Integer order_sp(unsigned n, Integer const &q)
{
  Integer r = ipow(q, n * n);
  for (unsigned i = 1; i <= n; ++i)
    r *= ipow(q, 2 * i) - 1;
  return r;
}

Integer order_so_odd(unsigned n, Integer const &q) { return order_sp(n, q); }

Integer order_go_even(unsigned n, int sign, Integer const &q)
{
  if (n == 0) {
    if (sign < 0)
      throw DomainError("order_go_even: no minus type in dimension 0");
    return 1;
  }
  Integer r = 2 * ipow(q, n * (n - 1)) * (ipow(q, n) - sign);
  for (unsigned i = 1; i < n; ++i)
    r *= ipow(q, 2 * i) - 1;
  return r;
}

Integer imprimitive_reflection_order(unsigned m, unsigned a)
{
  return ipow(Integer(m), a) * factorial(a);
}

TorusData torus_decomposition(GroupSpec const &spec, unsigned d)
{
  if (d == 0)
    throw DomainError("torus_decomposition: d must be positive");
  Kind kind = kind_of(spec.family);
  if (kind == Kind::other)
    throw UnsupportedError("torus_decomposition: not a classical family: " + spec.str());
  auto degrees = order_polynomial(spec).degrees();
  if (std::find(degrees.begin(), degrees.end(), d) == degrees.end())
    throw DomainError("torus_decomposition: Phi_" + std::to_string(d) + " does not divide |" +
                      spec.str() + "|");

  TorusData t;
  t.d = d;
  unsigned n = spec.n;
  Integer q = spec.q;
  switch (kind) {
  case Kind::linear: {
    t.e = d;
    t.a = n / d;
    t.r = n % d;
    t.torus_centraliser_order = ipow(ipow(q, d) - 1, t.a) * order_gl(t.r, q);
    t.relative_weyl_order = imprimitive_reflection_order(d, t.a);
    t.torus_normaliser_order = t.torus_centraliser_order * t.relative_weyl_order;
    t.group_normaliser_order = t.torus_normaliser_order;
    if (spec.family == Family::SL)
      t.group_normaliser_order /= q - 1;
    break;
  }
  case Kind::unitary: {
    t.e = d % 2 ? 2 * d : d % 4 == 2 ? d / 2 : d;
    t.a = n / t.e;
    t.r = n % t.e;
    Integer torus = t.e % 2 ? ipow(q, t.e) + 1 : ipow(q, t.e) - 1;
    t.torus_centraliser_order = ipow(torus, t.a) * order_gu(t.r, q);
    t.relative_weyl_order = imprimitive_reflection_order(t.e, t.a);
    t.torus_normaliser_order = t.torus_centraliser_order * t.relative_weyl_order;
    t.group_normaliser_order = t.torus_normaliser_order;
    if (spec.family == Family::SU)
      t.group_normaliser_order /= q + 1;
    break;
  }
  case Kind::symplectic:
  case Kind::odd_orthogonal: {
    t.e = d % 2 ? d : d / 2;
    t.a = n / t.e;
    t.r = n % t.e;
    Integer torus = d % 2 ? ipow(q, t.e) - 1 : ipow(q, t.e) + 1;
    t.torus_centraliser_order = ipow(torus, t.a) * order_sp(t.r, q);
    t.relative_weyl_order = imprimitive_reflection_order(2 * t.e, t.a);
    t.torus_normaliser_order = t.torus_centraliser_order * t.relative_weyl_order;
    t.group_normaliser_order = t.torus_normaliser_order;
    if (spec.family == Family::OmegaOdd)
      t.group_normaliser_order /= 2;
    break;
  }
  case Kind::even_orthogonal: {
    int eps = even_sign(spec.family);
    t.e = d % 2 ? d : d / 2;
    bool special = false;
    if ((2 * n) % d == 0) {
      unsigned k = 2 * n / d;
      special = (eps > 0 && k % 2 == 1) || (eps < 0 && k % 2 == 0);
    }
    if (special) {
      t.special_case = true;
      t.a = n / t.e - 1;
      t.r = t.e;
    } else {
      t.a = n / t.e;
      t.r = n % t.e;
    }
    t.h_sign = (d % 2 == 0 && t.a % 2 == 1) ? -eps : eps;
    Integer torus = d % 2 ? ipow(q, t.e) - 1 : ipow(q, t.e) + 1;
    t.torus_centraliser_order = ipow(torus, t.a) * order_go_even(t.r, t.h_sign, q);
    t.relative_weyl_order = imprimitive_reflection_order(2 * t.e, t.a);
    t.torus_normaliser_order = t.torus_centraliser_order * t.relative_weyl_order;
    // GO/SO has order 2 and the torus normaliser meets both cosets
    t.group_normaliser_order = t.torus_normaliser_order;
    if (spec.family != Family::GOplus && spec.family != Family::GOminus)
      t.group_normaliser_order /= 2;
    // Omega has index 2 in SO for odd q and all Sylow tori are conjugate in it
    if ((spec.family == Family::OmegaEvenPlus || spec.family == Family::OmegaEvenMinus) &&
        spec.q % 2)
      t.group_normaliser_order /= 2;
    break;
  }
  default:
    break;
  }
  return t;
}

NormaliserBound normaliser_bound(GroupSpec const &spec, unsigned d)
{
  TorusData t = torus_decomposition(spec, d);
  Integer q = spec.q;
  unsigned n = spec.n;
  NormaliserBound b;
  switch (kind_of(spec.family)) {
  case Kind::linear:
    b.value = t.group_normaliser_order;
    b.bound = ipow(q, n - 1);
    break;
  case Kind::symplectic:
  case Kind::odd_orthogonal:
    b.value = t.group_normaliser_order;
    b.bound = ipow(Integer(2), t.a) * ipow(q, n);
    break;
  case Kind::even_orthogonal:
    // |N| >= 2^(a-2) q^n, scaled by 4
    b.value = 4 * t.group_normaliser_order;
    b.bound = ipow(Integer(2), t.a) * ipow(q, n);
    break;
  default:
    throw UnsupportedError("normaliser_bound: no bound for " + spec.str());
  }
  return b;
}

Integer ell_part(Integer n, unsigned ell)
{
  Integer r = 1;
  while (n != 0 && n % ell == 0) {
    n /= ell;
    r *= ell;
  }
  return r;
}

bool sylow_abelian(GroupSpec const &spec, unsigned ell)
{
  if (ell <= 2)
    throw DomainError("sylow_abelian: needs an odd prime");
  if (spec.q % ell == 0)
    throw DomainError("sylow_abelian: " + std::to_string(ell) + " is the characteristic");
  auto poly = order_polynomial(spec);
  unsigned d = e_ell(ell, spec.q);
  Integer whole = ell_part(poly.evaluate(spec.q), ell);
  Integer torus = ell_part(ipow(cyclotomic_value(d, spec.q), poly.multiplicity(d)), ell);
  return whole == torus;
}

std::string LeviShape::str() const
{
  std::ostringstream ss;
  ss << '(';
  for (std::size_t i = 0; i < parts.size(); ++i)
    ss << (i ? "," : "") << parts[i];
  ss << ';' << s << ')';
  if (sign > 0)
    ss << '+';
  else if (sign < 0)
    ss << '-';
  return ss.str();
}

LeviShape LeviShape::parse(std::string const &text)
{
  LeviShape sh;
  auto open = text.find('('), semi = text.find(';'), close = text.find(')');
  if (open == std::string::npos || semi == std::string::npos || close == std::string::npos ||
      !(open < semi && semi < close))
    throw ParseError("bad Levi shape '" + text + "'");
  std::string parts = text.substr(open + 1, semi - open - 1);
  std::replace(parts.begin(), parts.end(), ',', ' ');
  std::istringstream ps(parts);
  for (unsigned x; ps >> x;)
    sh.parts.push_back(x);
  try {
    sh.s = static_cast<unsigned>(std::stoul(text.substr(semi + 1, close - semi - 1)));
  } catch (std::exception const &) {
    throw ParseError("bad Levi shape '" + text + "'");
  }
  std::string rest = text.substr(close + 1);
  if (rest == "+")
    sh.sign = 1;
  else if (rest == "-")
    sh.sign = -1;
  else if (!rest.empty())
    throw ParseError("bad Levi shape '" + text + "'");
  if (!std::is_sorted(sh.parts.rbegin(), sh.parts.rend()))
    std::sort(sh.parts.rbegin(), sh.parts.rend());
  return sh;
}

unsigned LeviShape::part_sum() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

std::vector<LeviEntry> dsplit_levis(GroupSpec const &spec, unsigned d)
{
  TorusData t = torus_decomposition(spec, d);
  Kind kind = kind_of(spec.family);
  Integer q = spec.q;
  unsigned n = spec.n, e = t.e;
  int eps = even_sign(spec.family);

  // block field: GL_m(q^e) or GU_m(q^e)
  bool unitary_blocks = false;
  switch (kind) {
  case Kind::linear:
    break;
  case Kind::unitary:
    unitary_blocks = e % 2 == 1;
    break;
  default:
    unitary_blocks = d % 2 == 0;
  }
  Integer qe = ipow(q, e);
  auto block = [&](unsigned m) { return unitary_blocks ? order_gu(m, qe) : order_gl(m, qe); };

  std::vector<LeviEntry> out;
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> partitions = [&](unsigned left, unsigned max) {
    if (left == 0) {
      unsigned sum = std::accumulate(parts.begin(), parts.end(), 0u);
      LeviEntry le;
      le.shape.parts = parts;
      le.shape.s = n - e * sum;
      Integer order = 1;
      for (unsigned m : parts)
        order *= block(m);
      unsigned s = le.shape.s;
      switch (kind) {
      case Kind::linear:
        order *= order_gl(s, q);
        break;
      case Kind::unitary:
        order *= order_gu(s, q);
        break;
      case Kind::symplectic:
      case Kind::odd_orthogonal:
        order *= order_sp(s, q);
        break;
      case Kind::even_orthogonal: {
        int sign = (d % 2 == 0 && sum % 2 == 1) ? -eps : eps;
        if (s == 0 && sign < 0)
          return;
        le.shape.sign = sign;
        order *= order_go_even(s, sign, q);
        break;
      }
      default:
        break;
      }
      le.order = order;
      out.push_back(std::move(le));
      return;
    }
    for (unsigned m = std::min(left, max); m >= 1; --m) {
      parts.push_back(m);
      partitions(left - m, m);
      parts.pop_back();
    }
  };
  for (unsigned sum = n / e; sum >= 1; --sum)
    partitions(sum, sum);

  std::stable_sort(out.begin(), out.end(), [](LeviEntry const &x, LeviEntry const &y) {
    if (x.shape.parts.size() != y.shape.parts.size())
      return x.shape.parts.size() > y.shape.parts.size();
    return x.shape.parts > y.shape.parts;
  });
  return out;
}

std::string factor_string(Integer n)
{
  if (n <= 1)
    return n.str();
  std::ostringstream ss;
  bool first = true;
  for (unsigned long long p = 2; Integer(p) * p <= n; ++p) {
    unsigned m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (m) {
      ss << (first ? "" : " * ") << p;
      if (m > 1)
        ss << '^' << m;
      first = false;
    }
  }
  if (n > 1)
    ss << (first ? "" : " * ") << n;
  return ss.str();
}

} // namespace subn

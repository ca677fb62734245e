#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

#include "subn/common.hpp"
#include "subn/field.hpp"

namespace subn {

namespace {

unsigned ipow(unsigned b, unsigned e)
{
  unsigned r = 1;
  while (e--)
    r *= b;
  return r;
}

bool is_prime(unsigned n)
{
  if (n < 2)
    return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

Field::Field(unsigned p, unsigned k, std::vector<unsigned> modulus)
  : p_(p), k_(k), modulus_(std::move(modulus))
{
  if (!is_prime(p) || k == 0)
    throw Error("field: need a prime characteristic and positive degree");
  if (modulus_.size() != k)
    throw Error("field: modulus has wrong degree");

  unsigned long long q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 16))
      throw UnsupportedError("field: log tables limited to 2^16 elements");
  }
  q_ = static_cast<unsigned>(q);

  auto pack = [&](std::vector<unsigned> const &c) {
    std::uint32_t v = 0;
    for (unsigned i = k; i-- > 0;)
      v = v * p + c[i];
    return v;
  };

  poly_of_log_.assign(q_ - 1, 0);
  log_of_poly_.assign(q_, 0);

  // walk the powers of x modulo the modulus
  std::vector<unsigned> cur(k, 0);
  cur[0] = 1;
  for (unsigned i = 0; i < q_ - 1; ++i) {
    std::uint32_t packed = pack(cur);
    if (i > 0 && packed == 1)
      throw Error("field: modulus is not primitive");
    if (log_of_poly_[packed] != 0)
      throw Error("field: modulus is not irreducible");
    poly_of_log_[i] = packed;
    log_of_poly_[packed] = i + 1;

    unsigned top = cur[k - 1];
    for (unsigned j = k - 1; j > 0; --j)
      cur[j] = cur[j - 1];
    cur[0] = 0;
    for (unsigned j = 0; j < k; ++j)
      cur[j] = (cur[j] + (p - modulus_[j]) * top) % p;
  }
  if (pack(cur) != 1)
    throw Error("field: modulus is not primitive");

  zech_.assign(q_ - 1, 0);
  for (unsigned i = 0; i < q_ - 1; ++i) {
    std::uint32_t v = poly_of_log_[i];
    // add 1 to the constant coefficient
    unsigned c0 = v % p;
    v = v - c0 + (c0 + 1) % p;
    zech_[i] = log_of_poly_[v];
  }

  minus_one_ = (p == 2) ? 1 : (q_ - 1) / 2 + 1;
}

std::shared_ptr<const Field> Field::get(unsigned p, unsigned k)
{
  static std::mutex mtx;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Field>> cache;
  static std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table;
  static bool loaded = false;

  std::lock_guard<std::mutex> lock(mtx);

  auto key = std::make_pair(p, k);
  if (auto it = cache.find(key); it != cache.end())
    return it->second;

  if (!loaded) {
    std::ifstream in(data_dir() + "/moduli.txt");
    if (!in)
      throw Error("field: cannot open " + data_dir() + "/moduli.txt");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#')
        continue;
      std::istringstream ss(line);
      unsigned pp, kk;
      ss >> pp >> kk;
      std::vector<unsigned> c(kk);
      for (auto &x : c)
        ss >> x;
      table[{pp, kk}] = c;
    }
    loaded = true;
  }

  auto it = table.find(key);
  if (it == table.end())
    throw UnsupportedError("field: no bundled modulus for GF(" + std::to_string(p) +
                           "^" + std::to_string(k) + ")");
  auto f = std::make_shared<const Field>(p, k, it->second);
  cache[key] = f;
  return f;
}

std::shared_ptr<const Field> Field::of_size(unsigned q)
{
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p)
      continue;
    unsigned k = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1)
      break;
    return get(p, k);
  }
  throw Error("field: " + std::to_string(q) + " is not a prime power");
}

Elt Field::add(Elt a, Elt b) const
{
  if (a == 0)
    return b;
  if (b == 0)
    return a;
  unsigned n = q_ - 1;
  unsigned d = (b + n - a) % n;
  Elt z = zech_[d];
  return z == 0 ? 0 : mul(a, z);
}

Elt Field::neg(Elt a) const { return mul(a, minus_one_); }

Elt Field::inv(Elt a) const
{
  if (a == 0)
    throw DomainError("field: inverse of zero");
  unsigned n = q_ - 1;
  return (n - (a - 1)) % n + 1;
}

Elt Field::pow(Elt a, long long e) const
{
  if (a == 0) {
    if (e < 0)
      throw DomainError("field: negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long long n = q_ - 1;
  long long l = ((static_cast<long long>(a - 1) * (e % n)) % n + n) % n;
  return static_cast<Elt>(l + 1);
}

Elt Field::frobenius(Elt a, unsigned times) const
{
  return pow(a, ipow(p_, times % k_));
}

Elt Field::involution(Elt a) const
{
  if (k_ % 2)
    throw Error("field: involution needs even degree");
  return frobenius(a, k_ / 2);
}

Elt Field::from_int(long long n) const
{
  long long r = ((n % p_) + p_) % p_;
  return log_of_poly_[r];
}

std::vector<unsigned> Field::to_poly(Elt a) const
{
  std::vector<unsigned> c(k_, 0);
  if (a == 0)
    return c;
  std::uint32_t v = poly_of_log_[a - 1];
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Elt Field::from_poly(std::vector<unsigned> const &coeffs) const
{
  std::uint32_t v = 0;
  for (unsigned i = k_; i-- > 0;)
    v = v * p_ + (i < coeffs.size() ? coeffs[i] % p_ : 0);
  return log_of_poly_[v];
}

Elt Field::power_of_generator(long long e) const { return pow(generator(), e); }

unsigned Field::multiplicative_order(Elt a) const
{
  if (a == 0)
    throw DomainError("field: zero has no multiplicative order");
  unsigned n = q_ - 1, l = a - 1;
  unsigned g = n, x = l;
  while (x) {
    unsigned t = g % x;
    g = x;
    x = t;
  }
  return n / g;
}

unsigned Field::absolute_trace(Elt a) const
{
  Elt t = 0, cur = a;
  for (unsigned i = 0; i < k_; ++i) {
    t = add(t, cur);
    cur = frobenius(cur);
  }
  return to_poly(t)[0];
}

} // namespace subn

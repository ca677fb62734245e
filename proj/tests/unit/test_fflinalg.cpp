#include <random>
#include <sstream>

#include "doctest.h"
#include "subn/common.hpp"
#include "subn/matrix.hpp"

using namespace subn;

namespace {

// polynomials over GF(p) as coefficient vectors, reduced by a monic modulus
std::vector<unsigned> poly_mulmod(std::vector<unsigned> a, std::vector<unsigned> b, unsigned p,
                                  std::vector<unsigned> const &mod_low)
{
  unsigned k = static_cast<unsigned>(mod_low.size());
  std::vector<unsigned> r(2 * k, 0);
  a.resize(k, 0);
  b.resize(k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (unsigned d = 2 * k - 1; d >= k; --d) {
    unsigned c = r[d];
    if (!c)
      continue;
    r[d] = 0;
    // x^k = -sum mod_low[i] x^i
    for (unsigned i = 0; i < k; ++i)
      r[d - k + i] = (r[d - k + i] + p * p - c * mod_low[i]) % p;
  }
  r.resize(k);
  return r;
}

Elt naive_det(Field const &f, std::vector<std::vector<Elt>> m)
{
  std::size_t n = m.size();
  if (n == 1)
    return m[0][0];
  Elt acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Elt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Elt> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c)
          row.push_back(m[i][j]);
      minor.push_back(row);
    }
    Elt term = f.mul(m[0][c], naive_det(f, minor));
    acc = c % 2 ? f.sub(acc, term) : f.add(acc, term);
  }
  return acc;
}

} // namespace

TEST_CASE("prime field arithmetic agrees with integers mod p")
{
  for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
    auto f = Field::of_size(p);
    for (unsigned a = 0; a < p; ++a)
      for (unsigned b = 0; b < p; ++b) {
        Elt ea = f->from_int(a), eb = f->from_int(b);
        CHECK(f->add(ea, eb) == f->from_int((a + b) % p));
        CHECK(f->mul(ea, eb) == f->from_int((a * b) % p));
      }
  }
}

TEST_CASE("extension field products match polynomial arithmetic")
{
  for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    auto f = Field::of_size(q);
    unsigned p = f->characteristic();
    for (Elt a = 0; a < q; ++a)
      for (Elt b = 0; b < q; ++b) {
        auto expect = poly_mulmod(f->to_poly(a), f->to_poly(b), p, f->modulus());
        CHECK(f->to_poly(f->mul(a, b)) == expect);
      }
  }
}

TEST_CASE("field axioms")
{
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    auto f = Field::of_size(q);
    for (Elt a = 1; a < q; ++a) {
      CHECK(f->mul(a, f->inv(a)) == Field::one());
      CHECK(f->add(a, f->neg(a)) == Field::zero());
      CHECK(f->pow(a, q - 1) == Field::one());
      CHECK(f->frobenius(a, f->degree()) == a);
    }
    CHECK(f->multiplicative_order(f->power_of_generator(1)) == q - 1);
  }
}

TEST_CASE("determinant and inverse")
{
  auto f = Field::of_size(5);
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    unsigned n = 1 + t % 4;
    std::vector<Elt> e(n * n);
    std::vector<std::vector<Elt>> rows(n, std::vector<Elt>(n));
    for (unsigned i = 0; i < n * n; ++i) {
      e[i] = rng() % 5;
      rows[i / n][i % n] = e[i];
    }
    Matrix m(f, n, e);
    CHECK(m.det() == naive_det(*f, rows));
    if (m.det() != 0)
      CHECK((m * m.inverse()).is_identity());
    else
      CHECK_THROWS_AS(m.inverse(), DomainError);
  }
}

TEST_CASE("matrix text round trip")
{
  auto f = Field::of_size(9);
  Matrix a(f, 2, {1, 2, 3, 4});
  Matrix b = Matrix::identity(f, 2);
  std::stringstream ss;
  write_matrices(ss, {a, b});
  auto back = read_matrices(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == a);
  CHECK(back[1] == b);
}

#ifndef GUARD_SUBN_FIELD_H
#define GUARD_SUBN_FIELD_H

#include <cstdint>
#include <memory>
#include <vector>

namespace subn {

// Element of GF(p^k) in log form: 0 is zero, i > 0 stands for g^(i-1)
// where g is the root of the field's primitive modulus.
using Elt = std::uint32_t;

class Field
{
public:
  // modulus: monic, low degree first, without the leading 1
  Field(unsigned p, unsigned k, std::vector<unsigned> modulus);

  // looks up the bundled modulus for (p, k)
  static std::shared_ptr<const Field> get(unsigned p, unsigned k);
  static std::shared_ptr<const Field> of_size(unsigned q);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  unsigned size() const { return q_; }
  const std::vector<unsigned> &modulus() const { return modulus_; }

  static constexpr Elt zero() { return 0; }
  static constexpr Elt one() { return 1; }
  Elt generator() const { return q_ > 2 ? 2 : 1; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const
  {
    if (a == 0 || b == 0)
      return 0;
    std::uint32_t s = (a - 1) + (b - 1);
    if (s >= q_ - 1)
      s -= q_ - 1;
    return s + 1;
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long long e) const;
  Elt frobenius(Elt a, unsigned times = 1) const;

  // embedding of the integers through the prime field
  Elt from_int(long long n) const;
  // coefficient vector over GF(p), low degree first
  std::vector<unsigned> to_poly(Elt a) const;
  Elt from_poly(const std::vector<unsigned> &coeffs) const;

  // g^e
  Elt power_of_generator(long long e) const;
  unsigned log(Elt a) const { return a - 1; }
  unsigned multiplicative_order(Elt a) const;

  // the field automorphism of order 2 (x -> x^sqrt(q)); needs even degree
  Elt involution(Elt a) const;
  // trace to GF(p)
  unsigned absolute_trace(Elt a) const;

private:
  unsigned p_, k_, q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> poly_of_log_; // index = log, value = packed poly
  std::vector<std::uint32_t> log_of_poly_; // index = packed poly, value = Elt
  std::vector<std::uint32_t> zech_;        // 1 + g^i = g^zech[i]
  Elt minus_one_;
};

using FieldPtr = std::shared_ptr<const Field>;

} // namespace subn

#endif // GUARD_SUBN_FIELD_H

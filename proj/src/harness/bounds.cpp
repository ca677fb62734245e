#include "subn/harness.hpp"

namespace subn {

namespace {

bool prime_power(unsigned q)
{
  if (q < 2)
    return false;
  unsigned p = 2;
  while (q % p)
    ++p;
  while (q % p == 0)
    q /= p;
  return q == 1;
}

struct Range
{
  Family family;
  unsigned min_n;
  bool odd_q_only;
};

} // namespace

std::vector<BoundCheck> check_bounds(unsigned max_n, unsigned max_q)
{
  static Range const ranges[] = {{Family::SL, 2, false},
                                 {Family::Sp, 2, false},
                                 {Family::SOodd, 3, true},
                                 {Family::SOevenPlus, 4, false},
                                 {Family::SOevenMinus, 4, false}};
  std::vector<BoundCheck> out;
  for (auto const &rg : ranges)
    for (unsigned q = 2; q <= max_q; ++q) {
      if (!prime_power(q) || (rg.odd_q_only && q % 2 == 0))
        continue;
      for (unsigned n = rg.min_n; n <= max_n; ++n) {
        GroupSpec spec;
        spec.family = rg.family;
        spec.n = n;
        spec.q = q;

        BoundCheck oc;
        oc.what = "order-bound";
        oc.spec = spec;
        oc.value = order_value(spec);
        oc.holds = order_bounds_check(spec);
        out.push_back(oc);

        OrderPolynomial poly = order_polynomial(spec);
        for (unsigned d : poly.degrees()) {
          if (!zsigmondy(d, q))
            continue;
          BoundCheck nc;
          nc.what = "normaliser-bound";
          nc.spec = spec;
          nc.d = d;
          NormaliserBound b = normaliser_bound(spec, d);
          nc.value = b.value;
          nc.bound = b.bound;
          nc.holds = b.holds();
          out.push_back(nc);
        }
      }
    }
  return out;
}

} // namespace subn

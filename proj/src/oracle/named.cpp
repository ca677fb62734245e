#include <map>

#include "internal.hpp"

namespace subn {

namespace {

Integer factorial(unsigned n)
{
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

Integer ipow(Integer b, unsigned e)
{
  Integer r = 1;
  while (e--)
    r *= b;
  return r;
}

// Sylow normaliser orders for the picky rows: M9:2 in M11 and 5^2:D12 in J2
Integer picky_normaliser_order(std::string const &name, unsigned p)
{
  static std::map<std::pair<std::string, unsigned>, unsigned> const orders = {
      {{"M11", 3}, 144}, {{"J2", 5}, 300}};
  auto it = orders.find({name, p});
  return it == orders.end() ? Integer(0) : Integer(it->second);
}

} // namespace

Prediction predict_symmetric(unsigned n, unsigned p, unsigned k, bool alternating)
{
  if (!is_prime(p))
    throw RefusalError(std::to_string(p) + " is not prime");
  if (alternating && p == 2)
    throw RefusalError("the alternating rule needs p > 2");
  unsigned a = n / p, r = n % p;
  if (a == 0)
    throw RefusalError(std::to_string(p) + " does not divide " + std::to_string(n) + "!");
  if (a > p - 1)
    throw RefusalError("Sylow " + std::to_string(p) + "-subgroups of S_" + std::to_string(n) +
                       " are non-abelian (a = " + std::to_string(a) + " >= p)");
  if (k > a)
    throw RefusalError("no element of cycle type (" + std::to_string(p) + ")^" +
                       std::to_string(k) + " in S_" + std::to_string(n));

  Prediction pr;
  if (k == a) {
    pr.case_tag = "symm(1)";
    pr.structure = "(C_" + std::to_string(p) + ".C_" + std::to_string(p - 1) + ") wr S_" +
                   std::to_string(a) + " x S_" + std::to_string(r);
    pr.order = ipow(Integer(p) * (p - 1), a) * factorial(a) * factorial(r);
    pr.picky = true;
  } else if (r == 0 && k + 1 == a && k >= 1) {
    pr.case_tag = "symm(2)";
    pr.structure = "S_" + std::to_string(p) + " wr S_" + std::to_string(a);
    pr.order = ipow(factorial(p), a) * factorial(a);
  } else {
    pr.case_tag = "symm(3)";
    pr.structure = "S_" + std::to_string(n);
    pr.order = factorial(n);
    pr.whole_group = true;
  }
  if (alternating) {
    pr.case_tag += "-alt";
    pr.structure = "(" + pr.structure + ") cap A_" + std::to_string(n);
    pr.order /= 2;
    pr.order_exact = false;
  }
  return pr;
}

Prediction predict_sporadic(std::string const &name, unsigned p, Integer const &centraliser_order)
{
  SporadicAbelian const *entry = nullptr;
  for (auto const &s : sporadic_abelian())
    if (s.name == name && s.p == p)
      entry = &s;
  if (!entry)
    throw RefusalError("(" + name + ", " + std::to_string(p) +
                       ") is not a sporadic case with abelian, non-prime-cyclic Sylow subgroups");

  Prediction pr;
  for (auto const &row : tables().sporadic) {
    if (row.group != name || row.p != p)
      continue;
    if (centraliser_order != 0 && Integer(row.centraliser_order) != centraliser_order)
      break;
    pr.case_tag = "spor-table";
    if (row.subnormaliser == "picky") {
      pr.structure = "N_G(P)";
      pr.picky = true;
      pr.order = picky_normaliser_order(name, p);
      pr.order_exact = pr.order != 0;
    } else {
      pr.structure = row.subnormaliser;
      pr.order = structure_order(row.subnormaliser, 0, 0);
      pr.order_exact = pr.order != 0;
    }
    return pr;
  }
  pr.case_tag = "spor-otherwise";
  pr.structure = "G";
  pr.order = entry->order;
  pr.whole_group = true;
  return pr;
}

} // namespace subn

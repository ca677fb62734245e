#ifndef GUARD_SUBN_GENERIC_H
#define GUARD_SUBN_GENERIC_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "classical.hpp"
#include "common.hpp"

namespace subn {

// Phi_d(q) by the divisor recursion; q may be negative
Integer cyclotomic_value(unsigned d, long long q);

// multiplicative order of q modulo ell; throws DomainError if ell | q
unsigned e_ell(unsigned ell, long long q);

// smallest prime ell > 2 with e_ell(q) = d
std::optional<unsigned> zsigmondy(unsigned d, unsigned q);

bool is_prime(unsigned long long n);

// q^N * prod Phi_d^{a_d}, times a constant, halved for odd q when flagged
struct OrderPolynomial
{
  unsigned q_exponent = 0;
  std::map<unsigned, unsigned> phi;
  unsigned constant = 1;
  bool halve_for_odd_q = false;

  Integer evaluate(unsigned q) const;
  // cyclotomic degrees with nonzero multiplicity
  std::vector<unsigned> degrees() const;
  unsigned multiplicity(unsigned d) const;
  // e.g. "q^6 Phi1^2 Phi2^2 Phi3 Phi6"
  std::string str() const;
};

// throws UnsupportedError for Sym, Alt and sporadic groups
OrderPolynomial order_polynomial(GroupSpec const &spec);

// exact order of the group the constructors build, for every family
Integer order_value(GroupSpec const &spec);

// strict lower bounds |SL_n(q)| > (q-1)q^(n^2-2), |Sp_2n(q)| > (q^2-1)^2
// q^(2n^2+n-4), |SO^+-_2n(q)| > q^(2n^2-n)/2
bool order_bounds_check(GroupSpec const &spec);

enum class AmbientLevel
{
  full_similitude,
  determinant_one
};

// Sylow d-torus data. The centraliser, normaliser and Weyl orders are at the
// full level (GL, GU, Sp, SO_{2n+1}, GO^+-_{2n}); group_normaliser_order is
// the order inside the group itself where the index is forced (SL, SU, SO
// even), and equal to the full order otherwise.
struct TorusData
{
  unsigned d = 0, e = 0, a = 0, r = 0;
  // even orthogonal case n = (a+1)e, r = e
  bool special_case = false;
  // sign of the even orthogonal factor H_r, 0 for other families
  int h_sign = 0;
  Integer torus_centraliser_order;
  Integer torus_normaliser_order;
  Integer relative_weyl_order;
  Integer group_normaliser_order;
  AmbientLevel ambient = AmbientLevel::full_similitude;
};

TorusData torus_decomposition(GroupSpec const &spec, unsigned d);

// the lower bound for |N_G(S_d)| used against class S subgroups:
// q^(n-1) for SL, 2^a q^n for Sp and SO odd, 2^(a-2) q^n for SO even;
// returns the pair (|N|, bound) scaled to integers
struct NormaliserBound
{
  Integer value;
  Integer bound;
  bool holds() const { return value >= bound; }
};
NormaliserBound normaliser_bound(GroupSpec const &spec, unsigned d);

// ell-part of |G| equals the ell-part of Phi_d(q)^{a_d}, d = e_ell(q)
bool sylow_abelian(GroupSpec const &spec, unsigned ell);

// ell-part of an integer
Integer ell_part(Integer n, unsigned ell);

struct LeviShape
{
  std::vector<unsigned> parts; // weakly decreasing
  unsigned s = 0;
  int sign = 0; // epsilon' for even orthogonal type, 0 otherwise

  std::string str() const; // "(1,1;0)", "(2;0)+"
  static LeviShape parse(std::string const &text);
  unsigned part_sum() const;
  bool operator==(LeviShape const &o) const
  {
    return parts == o.parts && s == o.s && sign == o.sign;
  }
};

struct LeviEntry
{
  LeviShape shape;
  Integer order; // full level
};

// proper d-split Levi shapes e*sum(parts) + s = n, in a fixed order (by
// number of parts descending, then lexicographically)
std::vector<LeviEntry> dsplit_levis(GroupSpec const &spec, unsigned d);

// |G(m,1,a)| = m^a a!
Integer imprimitive_reflection_order(unsigned m, unsigned a);

// orders of the classical building blocks
Integer order_gl(unsigned n, Integer const &q);
Integer order_gu(unsigned n, Integer const &q);
Integer order_sp(unsigned n, Integer const &q);           // Sp_{2n}
Integer order_so_odd(unsigned n, Integer const &q);       // SO_{2n+1}
Integer order_go_even(unsigned n, int sign, Integer const &q); // GO^sign_{2n}

// plain-text report helpers
std::string factor_string(Integer n);

} // namespace subn

#endif // GUARD_SUBN_GENERIC_H

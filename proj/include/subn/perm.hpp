#ifndef GUARD_SUBN_PERM_H
#define GUARD_SUBN_PERM_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace subn {

using point = std::uint32_t;

// Permutation of {0, ..., degree-1}. Points act on the right and products
// compose left to right: i^(a*b) = (i^a)^b. Text forms are 1-based.
class Perm
{
public:
  Perm() = default;
  explicit Perm(unsigned degree);
  explicit Perm(std::vector<point> images);

  // 0-based cycles
  static Perm from_cycles(unsigned degree, std::vector<std::vector<point>> const &cycles);
  // parses "(1,2,3)(4,5)" or "(1 2 3)(4 5)"; "()" is the identity
  static Perm parse(unsigned degree, std::string const &text);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  point operator[](point i) const { return img_[i]; }
  std::vector<point> const &images() const { return img_; }

  Perm operator*(Perm const &rhs) const;
  Perm &operator*=(Perm const &rhs);
  // inverse
  Perm operator~() const;
  Perm pow(long long e) const;

  bool operator==(Perm const &rhs) const { return img_ == rhs.img_; }
  bool operator!=(Perm const &rhs) const { return img_ != rhs.img_; }
  bool operator<(Perm const &rhs) const { return img_ < rhs.img_; }

  bool is_identity() const;
  // lcm of cycle lengths
  std::uint64_t order() const;
  std::vector<std::vector<point>> cycles() const;
  // lengths of the nontrivial cycles, sorted descending
  std::vector<unsigned> cycle_type() const;
  unsigned support_size() const;
  bool is_even() const;

  std::string str() const;
  std::size_t hash() const;

private:
  std::vector<point> img_;
};

// g^-1 x g
Perm conj(Perm const &x, Perm const &g);
// x^-1 y^-1 x y
Perm comm(Perm const &x, Perm const &y);

std::ostream &operator<<(std::ostream &os, Perm const &p);

struct PermHash
{
  std::size_t operator()(Perm const &p) const { return p.hash(); }
};

// Text format: header `degree n`, then one generator per line in 1-based
// cycle notation; '#' starts a comment.
struct PermFile
{
  unsigned degree = 0;
  std::vector<Perm> gens;
};

PermFile read_perms(std::istream &in);
PermFile read_perms_file(std::string const &path);
void write_perms(std::ostream &out, unsigned degree, std::vector<Perm> const &gens);

} // namespace subn

#endif // GUARD_SUBN_PERM_H

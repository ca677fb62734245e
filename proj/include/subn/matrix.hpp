#ifndef GUARD_SUBN_MATRIX_H
#define GUARD_SUBN_MATRIX_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace subn {

enum class FormKind
{
  none,
  symplectic,
  unitary,
  quadratic_plus,
  quadratic_minus,
  quadratic_odd
};

char const *form_kind_name(FormKind k);

// Square matrix over a finite field. Vectors are rows; matrices act on the
// right (v -> vM), so products read left to right like permutations.
class Matrix
{
public:
  Matrix() = default;
  Matrix(FieldPtr f, unsigned n);
  Matrix(FieldPtr f, unsigned n, std::vector<Elt> entries);

  static Matrix identity(FieldPtr f, unsigned n);
  static Matrix diagonal(FieldPtr f, std::vector<Elt> const &d);

  FieldPtr const &field() const { return field_; }
  unsigned dim() const { return n_; }

  Elt operator()(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
  Elt &operator()(unsigned i, unsigned j) { return a_[i * n_ + j]; }
  std::vector<Elt> const &entries() const { return a_; }

  FormKind tag() const { return tag_; }
  void set_tag(FormKind t) { tag_ = t; }

  Matrix operator*(Matrix const &rhs) const;
  Matrix operator+(Matrix const &rhs) const;
  bool operator==(Matrix const &rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }
  bool operator!=(Matrix const &rhs) const { return !(*this == rhs); }

  Elt det() const;
  unsigned rank() const;
  // throws DomainError when singular
  Matrix inverse() const;
  Matrix transpose() const;
  // transpose composed with the order-2 field automorphism
  Matrix conj_transpose() const;
  Matrix frobenius(unsigned times = 1) const;
  Matrix pow(long long e) const;

  bool is_identity() const;
  bool is_scalar() const;

  std::vector<Elt> apply(std::vector<Elt> const &row) const;

private:
  FieldPtr field_;
  unsigned n_ = 0;
  std::vector<Elt> a_;
  FormKind tag_ = FormKind::none;
};

// Bilinear/sesquilinear Gram matrix plus, for orthogonal kinds, the
// quadratic form as an upper triangular matrix Q with Q(v) = v Q v^T.
struct FormDescriptor
{
  FormKind kind = FormKind::none;
  Matrix gram;
  std::optional<Matrix> quadratic;
};

// v Q v^T for an upper triangular Q
Elt quadratic_value(Matrix const &quad, std::vector<Elt> const &v);
// B(u, v) = u J v^T (with v conjugated for unitary forms)
Elt form_value(FormDescriptor const &form, std::vector<Elt> const &u,
               std::vector<Elt> const &v);

bool preserves_form(Matrix const &m, FormDescriptor const &form);

// Text format: `field p k`, `dim n`, then n rows of element indices per
// matrix; blank lines separate matrices.
std::vector<Matrix> read_matrices(std::istream &in);
std::vector<Matrix> read_matrices_file(std::string const &path);
void write_matrices(std::ostream &out, std::vector<Matrix> const &ms);

} // namespace subn

#endif // GUARD_SUBN_MATRIX_H

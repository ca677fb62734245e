#include <fstream>
#include <sstream>

#include "subn/common.hpp"
#include "subn/matrix.hpp"

namespace subn {

char const *form_kind_name(FormKind k)
{
  switch (k) {
  case FormKind::none: return "none";
  case FormKind::symplectic: return "symplectic";
  case FormKind::unitary: return "unitary";
  case FormKind::quadratic_plus: return "quadratic-plus";
  case FormKind::quadratic_minus: return "quadratic-minus";
  case FormKind::quadratic_odd: return "quadratic-odd";
  }
  return "?";
}

Matrix::Matrix(FieldPtr f, unsigned n) : field_(std::move(f)), n_(n), a_(n * n, 0) {}

Matrix::Matrix(FieldPtr f, unsigned n, std::vector<Elt> entries)
  : field_(std::move(f)), n_(n), a_(std::move(entries))
{
  if (a_.size() != n_ * n_)
    throw Error("matrix: entry count does not match dimension");
  for (Elt e : a_)
    if (e >= field_->size())
      throw Error("matrix: entry outside the field");
}

Matrix Matrix::identity(FieldPtr f, unsigned n)
{
  Matrix m(std::move(f), n);
  for (unsigned i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(FieldPtr f, std::vector<Elt> const &d)
{
  Matrix m(std::move(f), static_cast<unsigned>(d.size()));
  for (unsigned i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

Matrix Matrix::operator*(Matrix const &rhs) const
{
  if (n_ != rhs.n_ || field_ != rhs.field_)
    throw Error("matrix: incompatible operands");
  Field const &F = *field_;
  Matrix r(field_, n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned k = 0; k < n_; ++k) {
      Elt x = (*this)(i, k);
      if (!x)
        continue;
      for (unsigned j = 0; j < n_; ++j) {
        Elt y = rhs(k, j);
        if (y)
          r(i, j) = F.add(r(i, j), F.mul(x, y));
      }
    }
  }
  r.tag_ = tag_ == rhs.tag_ ? tag_ : FormKind::none;
  return r;
}

Matrix Matrix::operator+(Matrix const &rhs) const
{
  if (n_ != rhs.n_)
    throw Error("matrix: dimension mismatch");
  Matrix r(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_->add(a_[i], rhs.a_[i]);
  return r;
}

Elt Matrix::det() const
{
  Field const &F = *field_;
  std::vector<Elt> a = a_;
  Elt d = 1;
  for (unsigned c = 0; c < n_; ++c) {
    unsigned piv = c;
    while (piv < n_ && a[piv * n_ + c] == 0)
      ++piv;
    if (piv == n_)
      return 0;
    if (piv != c) {
      for (unsigned j = 0; j < n_; ++j)
        std::swap(a[piv * n_ + j], a[c * n_ + j]);
      d = F.neg(d);
    }
    Elt p = a[c * n_ + c];
    d = F.mul(d, p);
    Elt pinv = F.inv(p);
    for (unsigned i = c + 1; i < n_; ++i) {
      Elt f = F.mul(a[i * n_ + c], pinv);
      if (!f)
        continue;
      for (unsigned j = c; j < n_; ++j)
        a[i * n_ + j] = F.sub(a[i * n_ + j], F.mul(f, a[c * n_ + j]));
    }
  }
  return d;
}

unsigned Matrix::rank() const
{
  Field const &F = *field_;
  std::vector<Elt> a = a_;
  unsigned r = 0;
  for (unsigned c = 0; c < n_ && r < n_; ++c) {
    unsigned piv = r;
    while (piv < n_ && a[piv * n_ + c] == 0)
      ++piv;
    if (piv == n_)
      continue;
    for (unsigned j = 0; j < n_; ++j)
      std::swap(a[piv * n_ + j], a[r * n_ + j]);
    Elt pinv = F.inv(a[r * n_ + c]);
    for (unsigned i = r + 1; i < n_; ++i) {
      Elt f = F.mul(a[i * n_ + c], pinv);
      if (!f)
        continue;
      for (unsigned j = c; j < n_; ++j)
        a[i * n_ + j] = F.sub(a[i * n_ + j], F.mul(f, a[r * n_ + j]));
    }
    ++r;
  }
  return r;
}

Matrix Matrix::inverse() const
{
  Field const &F = *field_;
  std::vector<Elt> a = a_;
  Matrix inv = identity(field_, n_);
  auto &b = inv.a_;
  for (unsigned c = 0; c < n_; ++c) {
    unsigned piv = c;
    while (piv < n_ && a[piv * n_ + c] == 0)
      ++piv;
    if (piv == n_)
      throw DomainError("matrix: inverse of a singular matrix");
    if (piv != c) {
      for (unsigned j = 0; j < n_; ++j) {
        std::swap(a[piv * n_ + j], a[c * n_ + j]);
        std::swap(b[piv * n_ + j], b[c * n_ + j]);
      }
    }
    Elt pinv = F.inv(a[c * n_ + c]);
    for (unsigned j = 0; j < n_; ++j) {
      a[c * n_ + j] = F.mul(a[c * n_ + j], pinv);
      b[c * n_ + j] = F.mul(b[c * n_ + j], pinv);
    }
    for (unsigned i = 0; i < n_; ++i) {
      if (i == c)
        continue;
      Elt f = a[i * n_ + c];
      if (!f)
        continue;
      for (unsigned j = 0; j < n_; ++j) {
        a[i * n_ + j] = F.sub(a[i * n_ + j], F.mul(f, a[c * n_ + j]));
        b[i * n_ + j] = F.sub(b[i * n_ + j], F.mul(f, b[c * n_ + j]));
      }
    }
  }
  inv.tag_ = tag_;
  return inv;
}

Matrix Matrix::transpose() const
{
  Matrix t(field_, n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj_transpose() const
{
  Matrix t = transpose();
  for (auto &x : t.a_)
    x = field_->involution(x);
  return t;
}

Matrix Matrix::frobenius(unsigned times) const
{
  Matrix t = *this;
  for (auto &x : t.a_)
    x = field_->frobenius(x, times);
  return t;
}

Matrix Matrix::pow(long long e) const
{
  Matrix base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? -e : e;
  Matrix r = identity(field_, n_);
  while (k) {
    if (k & 1)
      r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Matrix::is_identity() const
{
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u))
        return false;
  return true;
}

bool Matrix::is_scalar() const
{
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? (*this)(0, 0) : 0u))
        return false;
  return true;
}

std::vector<Elt> Matrix::apply(std::vector<Elt> const &row) const
{
  Field const &F = *field_;
  std::vector<Elt> r(n_, 0);
  for (unsigned k = 0; k < n_; ++k) {
    Elt x = row[k];
    if (!x)
      continue;
    for (unsigned j = 0; j < n_; ++j)
      r[j] = F.add(r[j], F.mul(x, (*this)(k, j)));
  }
  return r;
}

Elt quadratic_value(Matrix const &quad, std::vector<Elt> const &v)
{
  Field const &F = *quad.field();
  Elt s = 0;
  unsigned n = quad.dim();
  for (unsigned i = 0; i < n; ++i) {
    if (!v[i])
      continue;
    for (unsigned j = i; j < n; ++j)
      if (quad(i, j) && v[j])
        s = F.add(s, F.mul(quad(i, j), F.mul(v[i], v[j])));
  }
  return s;
}

Elt form_value(FormDescriptor const &form, std::vector<Elt> const &u,
               std::vector<Elt> const &v)
{
  Field const &F = *form.gram.field();
  std::vector<Elt> w = v;
  if (form.kind == FormKind::unitary)
    for (auto &x : w)
      x = F.involution(x);
  std::vector<Elt> uj = form.gram.apply(u);
  Elt s = 0;
  for (unsigned i = 0; i < uj.size(); ++i)
    s = F.add(s, F.mul(uj[i], w[i]));
  return s;
}

bool preserves_form(Matrix const &m, FormDescriptor const &form)
{
  if (form.kind == FormKind::none)
    return true;
  if (form.gram.dim() != m.dim())
    throw Error("preserves_form: dimension mismatch");

  // M J M^* = J, with * the conjugate transpose for unitary forms
  Matrix mt = form.kind == FormKind::unitary ? m.conj_transpose() : m.transpose();
  if (m * form.gram * mt != form.gram)
    return false;

  bool orthogonal = form.kind == FormKind::quadratic_plus ||
                    form.kind == FormKind::quadratic_minus ||
                    form.kind == FormKind::quadratic_odd;
  if (orthogonal && form.quadratic) {
    // Q(e_i M) = Q(e_i); together with the polarization check above this
    // forces Q(vM) = Q(v) for all v
    unsigned n = m.dim();
    for (unsigned i = 0; i < n; ++i) {
      std::vector<Elt> row(m.entries().begin() + i * n, m.entries().begin() + (i + 1) * n);
      std::vector<Elt> e(n, 0);
      e[i] = 1;
      if (quadratic_value(*form.quadratic, row) != quadratic_value(*form.quadratic, e))
        return false;
    }
  }
  return true;
}

std::vector<Matrix> read_matrices(std::istream &in)
{
  std::vector<Matrix> out;
  std::string line, word;
  FieldPtr F;
  unsigned n = 0;
  std::vector<Elt> cur;

  auto flush = [&]() {
    if (cur.empty())
      return;
    if (cur.size() != n * n)
      throw ParseError("matrix file: incomplete matrix");
    out.emplace_back(F, n, cur);
    cur.clear();
  };

  while (std::getline(in, line)) {
    std::istringstream ss(line);
    if (!(ss >> word)) {
      flush();
      continue;
    }
    if (word[0] == '#')
      continue;
    if (word == "field") {
      flush();
      unsigned p, k;
      if (!(ss >> p >> k))
        throw ParseError("matrix file: bad field line");
      F = Field::get(p, k);
      continue;
    }
    if (word == "dim") {
      flush();
      if (!(ss >> n) || n == 0)
        throw ParseError("matrix file: bad dim line");
      continue;
    }
    if (!F || !n)
      throw ParseError("matrix file: entries before header");
    std::istringstream row(line);
    unsigned x, count = 0;
    while (row >> x) {
      if (x >= F->size())
        throw ParseError("matrix file: entry index out of range");
      cur.push_back(x);
      ++count;
    }
    if (count != n)
      throw ParseError("matrix file: row length differs from dim");
    if (cur.size() == n * n)
      flush();
  }
  flush();
  return out;
}

std::vector<Matrix> read_matrices_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  return read_matrices(in);
}

void write_matrices(std::ostream &out, std::vector<Matrix> const &ms)
{
  if (ms.empty())
    return;
  auto const &F = *ms.front().field();
  out << "field " << F.characteristic() << ' ' << F.degree() << '\n';
  out << "dim " << ms.front().dim() << '\n';
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (k)
      out << '\n';
    unsigned n = ms[k].dim();
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j)
        out << (j ? " " : "") << ms[k](i, j);
      out << '\n';
    }
  }
}

} // namespace subn

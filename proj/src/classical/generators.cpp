#include <numeric>

#include "subn/classical.hpp"
#include "subn/common.hpp"

namespace subn {

namespace {

// additive basis of the subfield of order p^(k/step) inside f, as powers of
// its generator g^step'
std::vector<Elt> subfield_basis(Field const &f, unsigned sub_degree)
{
  unsigned q = f.size();
  unsigned qs = 1;
  for (unsigned i = 0; i < sub_degree; ++i)
    qs *= f.characteristic();
  long long step = (q - 1) / (qs - 1);
  std::vector<Elt> out;
  for (unsigned i = 0; i < sub_degree; ++i)
    out.push_back(f.power_of_generator(step * i));
  return out;
}

Matrix elementary(FieldPtr const &f, unsigned n, unsigned i, unsigned j, Elt t)
{
  Matrix m = Matrix::identity(f, n);
  m(i, j) = t;
  return m;
}

// x -> x + c B(x, v) v, with B given by its Gram matrix (conjugated in the
// second argument when unitary)
Matrix transvection(Matrix const &gram, bool unitary, std::vector<Elt> const &v, Elt c)
{
  auto const &f = *gram.field();
  unsigned n = gram.dim();
  Matrix m = Matrix::identity(gram.field(), n);
  for (unsigned r = 0; r < n; ++r) {
    Elt b = 0; // B(e_r, v)
    for (unsigned j = 0; j < n; ++j)
      b = f.add(b, f.mul(gram(r, j), unitary ? f.involution(v[j]) : v[j]));
    Elt s = f.mul(c, b);
    for (unsigned col = 0; col < n; ++col)
      m(r, col) = f.add(m(r, col), f.mul(s, v[col]));
  }
  return m;
}

std::vector<Elt> unit(unsigned n, unsigned i, Elt c = 1)
{
  std::vector<Elt> v(n, 0);
  v[i] = c;
  return v;
}

std::vector<Elt> unit2(unsigned n, unsigned i, unsigned j, Elt cj = 1)
{
  std::vector<Elt> v(n, 0);
  v[i] = 1;
  v[j] = cj;
  return v;
}

Elt bilinear(Matrix const &gram, std::vector<Elt> const &u, std::vector<Elt> const &v)
{
  auto const &f = *gram.field();
  Elt s = 0;
  for (unsigned i = 0; i < gram.dim(); ++i)
    for (unsigned j = 0; j < gram.dim(); ++j)
      if (u[i] && v[j] && gram(i, j))
        s = f.add(s, f.mul(f.mul(u[i], gram(i, j)), v[j]));
  return s;
}

void tag_all(MatrixGroup &mg)
{
  for (auto &m : mg.gens)
    m.set_tag(mg.form.kind);
}

MatrixGroup linear(unsigned n, unsigned q, bool general)
{
  MatrixGroup mg;
  mg.field = Field::of_size(q);
  mg.dim = n;
  mg.form.kind = FormKind::none;
  auto basis = subfield_basis(*mg.field, mg.field->degree());
  for (unsigned i = 0; i + 1 < n; ++i)
    for (Elt t : basis) {
      mg.gens.push_back(elementary(mg.field, n, i, i + 1, t));
      mg.gens.push_back(elementary(mg.field, n, i + 1, i, t));
    }
  if (general && q > 2) {
    std::vector<Elt> d(n, 1);
    d[0] = mg.field->generator();
    mg.gens.push_back(Matrix::diagonal(mg.field, d));
  }
  return mg;
}

// basis e_1..e_m, f_m..f_1 with B(e_i, f_i) = 1
MatrixGroup symplectic(unsigned m, unsigned q)
{
  MatrixGroup mg;
  mg.field = Field::of_size(q);
  auto const &f = *mg.field;
  unsigned n = 2 * m;
  mg.dim = n;
  mg.form.kind = FormKind::symplectic;
  mg.form.gram = Matrix(mg.field, n);
  for (unsigned i = 0; i < n; ++i)
    mg.form.gram(i, n - 1 - i) = i < m ? f.one() : f.neg(f.one());

  auto basis = subfield_basis(f, f.degree());
  std::vector<std::vector<Elt>> vs;
  for (unsigned i = 0; i < n; ++i)
    vs.push_back(unit(n, i));
  for (unsigned i = 0; i + 1 < m; ++i) {
    vs.push_back(unit2(n, i, i + 1));
    vs.push_back(unit2(n, n - 1 - i, n - 2 - i));
  }
  for (auto const &v : vs)
    for (Elt t : basis)
      mg.gens.push_back(transvection(mg.form.gram, false, v, t));
  tag_all(mg);
  return mg;
}

// Hermitian form with antidiagonal Gram matrix over GF(q^2)
MatrixGroup unitary(unsigned n, unsigned q, bool general)
{
  MatrixGroup mg;
  mg.field = Field::of_size(q * q);
  auto const &f = *mg.field;
  mg.dim = n;
  mg.form.kind = FormKind::unitary;
  mg.form.gram = Matrix(mg.field, n);
  for (unsigned i = 0; i < n; ++i)
    mg.form.gram(i, n - 1 - i) = f.one();

  // a + bar(a) = 0 exactly for a in omega * GF(q)
  Elt omega = q % 2 ? f.power_of_generator((q + 1) / 2) : f.one();
  std::vector<Elt> coeffs;
  for (Elt t : subfield_basis(f, f.degree() / 2))
    coeffs.push_back(f.mul(omega, t));

  std::vector<std::vector<Elt>> vs;
  for (unsigned i = 0; i < n; ++i)
    if (2 * i + 1 != n)
      vs.push_back(unit(n, i));
  for (unsigned i = 0; i + 2 < n - 1 - i; ++i) {
    vs.push_back(unit2(n, i, i + 1));
    vs.push_back(unit2(n, n - 1 - i, n - 2 - i));
  }
  if (n % 2 == 1 && n > 1) {
    // e_1 + e_mid + d e_n with trace(d) = -1
    unsigned mid = n / 2;
    for (Elt d = 1; d < f.size(); ++d)
      if (f.add(f.add(d, f.involution(d)), f.one()) == 0) {
        auto v = unit2(n, 0, mid);
        v[n - 1] = d;
        vs.push_back(v);
        auto w = unit2(n, n - 1, mid);
        w[0] = d;
        vs.push_back(w);
        break;
      }
  }
  for (auto const &v : vs)
    for (Elt c : coeffs)
      mg.gens.push_back(transvection(mg.form.gram, true, v, c));

  // torus element of determinant 1
  Elt g = f.generator();
  Elt gb = f.involution(g);
  if (n >= 3) {
    std::vector<Elt> d(n, 1);
    d[0] = g;
    d[n - 1] = f.inv(gb);
    if (n % 2 == 1) {
      d[n / 2] = f.mul(gb, f.inv(g));
    } else {
      d[1] = gb;
      d[n - 2] = f.inv(g);
    }
    mg.gens.push_back(Matrix::diagonal(mg.field, d));
  }
  if (n % 2 == 1 && n >= 3) {
    // a root element of the anisotropic middle and the Weyl element on
    // coordinates (1, mid, n); for q = 2 the transvections above are not
    // enough
    unsigned mid = n / 2;
    Matrix w = Matrix::identity(mg.field, n);
    w(0, 0) = w(n - 1, n - 1) = 0;
    w(0, n - 1) = w(n - 1, 0) = f.one();
    w(mid, mid) = f.neg(f.one());
    mg.gens.push_back(w);
    for (Elt alpha : subfield_basis(f, f.degree())) {
      bool found = false;
      for (Elt c = 1; c < f.size() && !found; ++c)
        for (Elt b = 0; b < f.size() && !found; ++b) {
          Matrix x = Matrix::identity(mg.field, n);
          x(0, mid) = alpha;
        x(0, n - 1) = b;
        x(mid, n - 1) = c;
          if (preserves_form(x, mg.form)) {
            mg.gens.push_back(x);
            found = true;
          }
        }
    }
  }
  if (general && n >= 1) {
    std::vector<Elt> d(n, 1);
    if (n == 1) {
      d[0] = f.power_of_generator(q - 1);
    } else {
      d[0] = g;
      d[n - 1] = f.inv(gb);
    }
    mg.gens.push_back(Matrix::diagonal(mg.field, d));
  }
  tag_all(mg);
  return mg;
}

enum class OrthoType
{
  plus,
  minus,
  odd
};

enum class OrthoLevel
{
  omega,
  special,
  general
};

// Hyperbolic pairs (i, dim-1-i) with Q = sum x_i x_{dim-1-i}; the minus type
// replaces the middle pair by an anisotropic plane x^2 + xy + c y^2, the odd
// type adds a middle coordinate with Q = x^2.
MatrixGroup orthogonal(unsigned m, unsigned q, OrthoType type, OrthoLevel level)
{
  MatrixGroup mg;
  mg.field = Field::of_size(q);
  auto const &f = *mg.field;
  unsigned n = type == OrthoType::odd ? 2 * m + 1 : 2 * m;
  unsigned pairs = type == OrthoType::minus ? m - 1 : m;
  if (pairs == 0)
    throw UnsupportedError("orthogonal group without isotropic vectors");
  mg.dim = n;
  mg.form.kind = type == OrthoType::plus    ? FormKind::quadratic_plus
                 : type == OrthoType::minus ? FormKind::quadratic_minus
                                            : FormKind::quadratic_odd;
  Matrix Q(mg.field, n);
  for (unsigned i = 0; i < pairs; ++i)
    Q(i, n - 1 - i) = f.one();
  if (type == OrthoType::odd) {
    Q(m, m) = f.one();
  } else if (type == OrthoType::minus) {
    Elt c = 0;
    for (Elt t = 1; t < f.size() && !c; ++t) {
      bool irreducible = true;
      for (Elt x = 0; x < f.size(); ++x)
        if (f.add(f.add(f.mul(x, x), x), t) == 0)
          irreducible = false;
      if (irreducible)
        c = t;
    }
    Q(m - 1, m - 1) = f.one();
    Q(m - 1, m) = f.one();
    Q(m, m) = c;
  }
  mg.form.quadratic = Q;
  mg.form.gram = Q + Q.transpose();
  Matrix const &B = mg.form.gram;

  auto basis = subfield_basis(f, f.degree());

  // Eichler transformation x -> x + B(x,u)v - B(x,v)u - Q(v)B(x,u)u
  auto eichler = [&](std::vector<Elt> const &u, std::vector<Elt> const &v) {
    Matrix e = Matrix::identity(mg.field, n);
    Elt qv = quadratic_value(Q, v);
    for (unsigned r = 0; r < n; ++r) {
      auto er = unit(n, r);
      Elt bu = bilinear(B, er, u);
      Elt bv = bilinear(B, er, v);
      for (unsigned c = 0; c < n; ++c) {
        Elt s = f.mul(bu, v[c]);
        s = f.sub(s, f.mul(bv, u[c]));
        s = f.sub(s, f.mul(f.mul(qv, bu), u[c]));
        e(r, c) = f.add(e(r, c), s);
      }
    }
    return e;
  };
  // x -> x - B(x,a)/Q(a) a
  auto reflection = [&](std::vector<Elt> const &a) {
    Elt c = f.neg(f.inv(quadratic_value(Q, a)));
    Matrix r = Matrix::identity(mg.field, n);
    for (unsigned row = 0; row < n; ++row) {
      Elt s = f.mul(c, bilinear(B, unit(n, row), a));
      for (unsigned col = 0; col < n; ++col)
        r(row, col) = f.add(r(row, col), f.mul(s, a[col]));
    }
    return r;
  };

  // Siegel transformations for the first hyperbolic pair generate Omega
  for (unsigned u : {0u, n - 1})
    for (unsigned j = 1; j + 1 < n; ++j)
      for (Elt t : basis)
        mg.gens.push_back(eichler(unit(n, u), unit(n, j, t)));

  bool odd_q = q % 2 == 1;
  auto a = unit2(n, 0, n - 1);
  if (level != OrthoLevel::omega && odd_q) {
    // two reflections with spinor norms of different square class
    auto b = unit2(n, 0, n - 1, f.generator());
    mg.gens.push_back(reflection(a) * reflection(b));
  }
  if (level == OrthoLevel::general)
    mg.gens.push_back(reflection(a));
  tag_all(mg);
  return mg;
}

// Column-convention root derivations of the split octonions in Zorn
// vector-matrix form, coordinates (a, u1, u2, u3, v1, v2, v3, b). Both are
// short roots, opposite to each other; D^3 = 0 and D^2/2 is integral.
struct Entry
{
  int r, c, v;
};
Entry const zorn_short_root_pos[] = {{0, 3, -1}, {1, 5, -1}, {2, 4, 1},
                                     {6, 0, 1},  {6, 7, -1}, {7, 3, 1}};
Entry const zorn_short_root_neg[] = {{0, 6, -1}, {3, 0, 1}, {3, 7, -1},
                                     {4, 2, -1}, {5, 1, 1}, {7, 6, 1}};

// 8x8 row-convention matrix of exp(tD)
std::vector<Elt> zorn_root_element(Field const &f, Entry const *entries, Elt t)
{
  int d[8][8] = {};
  for (unsigned i = 0; i < 6; ++i)
    d[entries[i].r][entries[i].c] = entries[i].v;
  int d2[8][8] = {};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k)
        d2[i][j] += d[i][k] * d[k][j];
  Elt t2 = f.mul(t, t);
  std::vector<Elt> m(64, 0);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Elt x = i == j ? f.one() : f.zero();
      x = f.add(x, f.mul(t, f.from_int(d[i][j])));
      x = f.add(x, f.mul(t2, f.from_int(d2[i][j] / 2)));
      m[j * 8 + i] = x; // transpose to act on rows
    }
  return m;
}

// 8x8 row-convention matrix of (a, u, v, b) -> (a, ug, v g^-T, b)
std::vector<Elt> zorn_sl3_element(Matrix const &g)
{
  Matrix git = g.inverse().transpose();
  std::vector<Elt> m(64, 0);
  m[0] = 1;
  m[63] = 1;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      m[(1 + i) * 8 + 1 + j] = g(i, j);
      m[(4 + i) * 8 + 4 + j] = git(i, j);
    }
  return m;
}

// Restricts an automorphism of the octonions to the trace-zero part: the
// 6-dimensional quotient by the identity when q is even, the 7-dimensional
// module with basis u, v, (1,0,0,-1) when q is odd.
Matrix zorn_reduce(FieldPtr const &fp, std::vector<Elt> const &m8)
{
  auto const &f = *fp;
  bool even = f.characteristic() == 2;
  unsigned n = even ? 6 : 7;
  Matrix r(fp, n);
  auto image = [&](std::vector<Elt> const &x) {
    std::vector<Elt> y(8, 0);
    for (unsigned i = 0; i < 8; ++i)
      if (x[i])
        for (unsigned j = 0; j < 8; ++j)
          y[j] = f.add(y[j], f.mul(x[i], m8[i * 8 + j]));
    return y;
  };
  for (unsigned row = 0; row < n; ++row) {
    std::vector<Elt> x(8, 0);
    if (row < 6) {
      x[1 + row] = 1;
    } else {
      x[0] = 1;
      x[7] = f.neg(f.one());
    }
    auto y = image(x);
    for (unsigned c = 0; c < 6; ++c)
      r(row, c) = y[1 + c];
    if (!even)
      r(row, 6) = y[0];
  }
  return r;
}

MatrixGroup g2(unsigned q)
{
  MatrixGroup mg;
  mg.field = Field::of_size(q);
  auto const &f = *mg.field;
  bool even = q % 2 == 0;
  mg.dim = even ? 6 : 7;

  // norm form a b - u.v, restricted to the trace-zero part
  Matrix Q(mg.field, mg.dim);
  for (unsigned i = 0; i < 3; ++i)
    Q(i, 3 + i) = f.neg(f.one());
  if (even) {
    mg.form.kind = FormKind::symplectic;
    mg.form.gram = Q + Q.transpose();
  } else {
    Q(6, 6) = f.neg(f.one());
    mg.form.kind = FormKind::quadratic_odd;
    mg.form.quadratic = Q;
    mg.form.gram = Q + Q.transpose();
  }

  for (auto const &g : linear(3, q, false).gens)
    mg.gens.push_back(zorn_reduce(mg.field, zorn_sl3_element(g)));
  for (Elt t : subfield_basis(f, f.degree())) {
    mg.gens.push_back(zorn_reduce(mg.field, zorn_root_element(f, zorn_short_root_pos, t)));
    mg.gens.push_back(zorn_reduce(mg.field, zorn_root_element(f, zorn_short_root_neg, t)));
  }
  tag_all(mg);
  return mg;
}

} // namespace

MatrixGroup matrix_generators(GroupSpec const &spec)
{
  if (!spec.is_matrix_family())
    throw UnsupportedError("no matrix construction for " + spec.str());
  if (spec.dimension() > 16 || spec.q > 9)
    throw UnsupportedError("matrix construction limited to dimension 16 and q <= 9: " +
                           spec.str());
  unsigned n = spec.n, q = spec.q;
  switch (spec.family) {
  case Family::SL:
    return linear(n, q, false);
  case Family::GL:
    return linear(n, q, true);
  case Family::SU:
    return unitary(n, q, false);
  case Family::GU:
    return unitary(n, q, true);
  case Family::Sp:
    return symplectic(n, q);
  case Family::SOodd:
    if (q % 2 == 0)
      throw UnsupportedError("odd-dimensional orthogonal groups need odd q");
    return orthogonal(n, q, OrthoType::odd, OrthoLevel::special);
  case Family::SOevenPlus:
    return orthogonal(n, q, OrthoType::plus, OrthoLevel::special);
  case Family::SOevenMinus:
    return orthogonal(n, q, OrthoType::minus, OrthoLevel::special);
  case Family::GOplus:
    return orthogonal(n, q, OrthoType::plus, OrthoLevel::general);
  case Family::GOminus:
    return orthogonal(n, q, OrthoType::minus, OrthoLevel::general);
  case Family::G2:
    return g2(q);
  default:
    throw UnsupportedError(spec.str() + " is built as a derived subgroup, not from matrices");
  }
}

} // namespace subn

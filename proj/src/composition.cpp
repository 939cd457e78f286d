#include "supermagic/composition.hpp"

#include <array>
#include <stdexcept>

namespace supermagic {

std::string to_string(CompositionKind k) {
  switch (k) {
    case CompositionKind::S1: return "S1";
    case CompositionKind::S2: return "S2";
    case CompositionKind::S4: return "S4";
    case CompositionKind::S8: return "S8";
    case CompositionKind::S12: return "S12";
    case CompositionKind::S42: return "S42";
  }
  return "?";
}

CompositionKind composition_kind_from_name(const std::string& name) {
  for (auto k : kAllCompositionKinds)
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown composition algebra: " + name);
}

bool is_super(CompositionKind k) { return k == CompositionKind::S12 || k == CompositionKind::S42; }

HurwitzSuperalgebra::HurwitzSuperalgebra(SuperAlgebra a, Vector u) : algebra(std::move(a)), unit(std::move(u)) {
  if (!algebra.form()) throw std::invalid_argument(algebra.name() + ": Hurwitz superalgebra needs a norm");
  if (rank(*algebra.form()) != algebra.dim())
    throw std::invalid_argument(algebra.name() + ": norm is degenerate");
  if (unit.size() != algebra.dim()) throw std::invalid_argument(algebra.name() + ": unit has wrong size");
}

SymplecticPlane::SymplecticPlane() : gram(2, 2) {
  gram << Scalar(0), Scalar(1), Scalar(-1), Scalar(0);
}

Matrix SymplecticPlane::involution(const Matrix& f) const {
  // gram^{-1} f^T gram; for 2x2 this is the adjugate
  Matrix adj(2, 2);
  adj << f(1, 1), -f(0, 1), -f(1, 0), f(0, 0);
  return adj;
}

namespace {

// 2x2 matrices, basis E11, E12, E21, E22 (index 2r + c)
Matrix mat2(const Vector& x, Index offset = 0) {
  Matrix m(2, 2);
  m << x(offset), x(offset + 1), x(offset + 2), x(offset + 3);
  return m;
}

void put_mat2(Vector& out, const Matrix& m, Index offset = 0) {
  out(offset) += m(0, 0);
  out(offset + 1) += m(0, 1);
  out(offset + 2) += m(1, 0);
  out(offset + 3) += m(1, 1);
}

Matrix basis_mat2(Index k) {
  Matrix m = Matrix::Zero(2, 2);
  m(k / 2, k % 2) = Scalar(1);
  return m;
}

Scalar trace_form(const Matrix& f, const Matrix& g) {
  return f.trace() * g.trace() - (f * g).trace();
}

Matrix mat2_gram() {
  Matrix g(4, 4);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) g(i, j) = trace_form(basis_mat2(i), basis_mat2(j));
  return g;
}

SuperSpace even_space(std::initializer_list<const char*> labels) {
  SuperSpace s;
  for (const char* l : labels) {
    s.labels.emplace_back(l);
    s.parity.push_back(0);
  }
  return s;
}

HurwitzSuperalgebra make_k() {
  Matrix g(1, 1);
  g << Scalar(2);
  auto a = SuperAlgebra::from_products("k", even_space({"1"}), Kind::composition,
                                       [](Index, Index) { return Vector::Constant(1, Scalar(1)); }, g);
  return {a, Vector::Constant(1, Scalar(1))};
}

HurwitzSuperalgebra make_kxk() {
  // 1 = (1,1), u = (1,-1): u*u = 1, q(1) = 1, q(u) = -1
  Matrix g(2, 2);
  g << Scalar(2), Scalar(0), Scalar(0), Scalar(-2);
  auto a = SuperAlgebra::from_products("kxk", even_space({"1", "u"}), Kind::composition,
                                       [](Index i, Index j) {
                                         Vector v = Vector::Zero(2);
                                         v((i + j) % 2) = Scalar(1);
                                         return v;
                                       },
                                       g);
  Vector unit = Vector::Zero(2);
  unit(0) = Scalar(1);
  return {a, unit};
}

HurwitzSuperalgebra make_mat2() {
  auto a = SuperAlgebra::from_products("Mat2", even_space({"E11", "E12", "E21", "E22"}), Kind::composition,
                                       [](Index i, Index j) {
                                         Vector v = Vector::Zero(4);
                                         put_mat2(v, basis_mat2(i) * basis_mat2(j));
                                         return v;
                                       },
                                       mat2_gram());
  Vector unit = Vector::Zero(4);
  unit(0) = unit(3) = Scalar(1);
  return {a, unit};
}

HurwitzSuperalgebra make_cayley() {
  // Cayley-Dickson double of Mat2 with mu = 1:
  // (a,b)(c,d) = (ac + d̄b, da + bc̄), q(a,b) = q(a) - q(b).
  SymplecticPlane plane;
  SuperSpace s = even_space({"E11", "E12", "E21", "E22", "lE11", "lE12", "lE21", "lE22"});
  Matrix g = Matrix::Zero(8, 8);
  g.topLeftCorner(4, 4) = mat2_gram();
  g.bottomRightCorner(4, 4) = -mat2_gram();
  auto a = SuperAlgebra::from_products("Cayley", s, Kind::composition,
                                       [&](Index i, Index j) {
                                         Vector x = Vector::Zero(8), y = Vector::Zero(8);
                                         x(i) = Scalar(1);
                                         y(j) = Scalar(1);
                                         Matrix xa = mat2(x, 0), xb = mat2(x, 4);
                                         Matrix yc = mat2(y, 0), yd = mat2(y, 4);
                                         Vector out = Vector::Zero(8);
                                         put_mat2(out, xa * yc + plane.involution(yd) * xb, 0);
                                         put_mat2(out, yd * xa + xb * plane.involution(yc), 4);
                                         return out;
                                       },
                                       g);
  Vector unit = Vector::Zero(8);
  unit(0) = unit(3) = Scalar(1);
  return {a, unit};
}

void require_char3(const char* what) {
  if (gf::modulus() != 3)
    throw std::invalid_argument(std::string(what) + " is a Hurwitz superalgebra only in characteristic 3 (p = " +
                                std::to_string(gf::modulus()) + ")");
}

HurwitzSuperalgebra make_b12() {
  require_char3("B(1,2)");
  SuperSpace s{{"1", "u", "v"}, {0, 1, 1}};
  Matrix g(3, 3);
  g << Scalar(2), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(-1), Scalar(0);
  auto a = SuperAlgebra::from_products("B12", s, Kind::composition,
                                       [](Index i, Index j) {
                                         Vector v = Vector::Zero(3);
                                         if (i == 0) v(j) = Scalar(1);
                                         else if (j == 0) v(i) = Scalar(1);
                                         else if (i == 1 && j == 2) v(0) = Scalar(1);   // uv = <u|v>1
                                         else if (i == 2 && j == 1) v(0) = Scalar(-1);  // vu = <v|u>1
                                         return v;
                                       },
                                       g);
  Vector unit = Vector::Zero(3);
  unit(0) = Scalar(1);
  return {a, unit};
}

HurwitzSuperalgebra make_b42() {
  require_char3("B(4,2)");
  SymplecticPlane plane;
  SuperSpace s{{"E11", "E12", "E21", "E22", "u", "v"}, {0, 0, 0, 0, 1, 1}};
  Matrix g = Matrix::Zero(6, 6);
  g.topLeftCorner(4, 4) = mat2_gram();
  g.bottomRightCorner(2, 2) = plane.gram;
  auto odd_vec = [](Index i) {
    Vector w = Vector::Zero(2);
    w(i - 4) = Scalar(1);
    return w;
  };
  auto a = SuperAlgebra::from_products("B42", s, Kind::composition,
                                       [&](Index i, Index j) {
                                         Vector out = Vector::Zero(6);
                                         const bool oi = i >= 4, oj = j >= 4;
                                         if (!oi && !oj) {
                                           put_mat2(out, basis_mat2(i) * basis_mat2(j));
                                         } else if (oi && !oj) {
                                           out.tail(2) = basis_mat2(j) * odd_vec(i);  // w·f = f(w)
                                         } else if (!oi && oj) {
                                           out.tail(2) = plane.involution(basis_mat2(i)) * odd_vec(j);  // f·w = f̄(w)
                                         } else {
                                           // x·y = <.|x> y : w -> <w|x> y
                                           Matrix m = odd_vec(j) * (plane.gram * odd_vec(i)).transpose();
                                           put_mat2(out, m);
                                         }
                                         return out;
                                       },
                                       g);
  Vector unit = Vector::Zero(6);
  unit(0) = unit(3) = Scalar(1);
  return {a, unit};
}

}  // namespace

HurwitzSuperalgebra make_hurwitz(CompositionKind k) {
  switch (k) {
    case CompositionKind::S1: return make_k();
    case CompositionKind::S2: return make_kxk();
    case CompositionKind::S4: return make_mat2();
    case CompositionKind::S8: return make_cayley();
    case CompositionKind::S12: return make_b12();
    case CompositionKind::S42: return make_b42();
  }
  throw std::invalid_argument("unknown composition kind");
}

Vector standard_involution(const HurwitzSuperalgebra& c, const Vector& x) {
  return c.algebra.bilinear(x, c.unit) * c.unit - x;
}

Matrix standard_involution_matrix(const HurwitzSuperalgebra& c) {
  Matrix m(c.dim(), c.dim());
  for (Index i = 0; i < c.dim(); ++i) m.col(i) = standard_involution(c, c.algebra.unit_vector(i));
  return m;
}

SymmetricComposition para_hurwitz(const HurwitzSuperalgebra& c, const std::string& name) {
  const Matrix bar = standard_involution_matrix(c);
  const SuperAlgebra& a = c.algebra;
  auto s = SuperAlgebra::from_products(name.empty() ? "para(" + a.name() + ")" : name, a.space(), Kind::composition,
                                       [&](Index i, Index j) { return a.multiply(bar.col(i), bar.col(j)); },
                                       a.form());
  return {s};
}

SymmetricComposition make_symmetric(CompositionKind k) {
  return para_hurwitz(make_hurwitz(k), to_string(k));
}

HurwitzSuperalgebra opposite(const HurwitzSuperalgebra& c, const std::string& name) {
  const SuperAlgebra& a = c.algebra;
  if (a.graded_dim().odd != 0) throw std::invalid_argument("opposite: only ordinary algebras are supported");
  auto op = SuperAlgebra::from_products(name, a.space(), a.kind(),
                                        [&](Index i, Index j) { return a.basis_product(j, i); }, a.form());
  return {op, c.unit};
}

Report check_composition(const SuperAlgebra& c) {
  if (!c.form()) throw std::invalid_argument(c.name() + ": composition check needs a form");
  const Matrix& g = *c.form();
  if (rank(g) != c.dim()) throw std::invalid_argument(c.name() + ": form is degenerate");
  Report r;
  r.check = "composition:" + c.name();
  r.dims = to_string(c.graded_dim());
  ReportTimer timer(r);
  const Index n = c.dim();
  const auto& lab = c.space().labels;
  // column x*n+y holds the product b_x b_y
  Matrix prods(n, n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) prods.col(x * n + y) = c.basis_product(x, y);
  const Matrix bp = prods.transpose() * g * prods;  // b(b_x b_y, b_z b_t)

  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        for (Index t = 0; t < n; ++t) {
          const int px = c.parity(x), py = c.parity(y), pz = c.parity(z);
          const Scalar s = gf::sign(px, py) * gf::sign(px, pz) * gf::sign(py, pz);
          const Scalar lhs = bp(x * n + y, z * n + t) + s * bp(z * n + y, x * n + t);
          const Scalar rhs = gf::sign(py, pz) * g(x, z) * g(y, t);
          if (lhs != rhs)
            r.fail("b(xy,zt) identity fails at (" + lab[x] + "," + lab[y] + "," + lab[z] + "," + lab[t] + ")");
        }

  // q(xy) = q(x)q(y) and b(xy,xz) = q(x)b(y,z) = b(yx,zx) on even elements
  // (basis vectors and pairwise sums, so the quadratic identities are
  // tested beyond their values on single basis vectors).
  std::vector<Vector> evens;
  for (Index i = 0; i < n; ++i)
    if (c.parity(i) == 0) evens.push_back(c.unit_vector(i));
  const std::size_t ne = evens.size();
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = i + 1; j < ne; ++j) evens.push_back(evens[i] + evens[j]);
  const Scalar half = gf::half();
  auto q = [&](const Vector& v) { return c.bilinear(v, v) * half; };
  for (const auto& x : evens) {
    for (const auto& y : evens)
      if (q(c.multiply(x, y)) != q(x) * q(y)) r.fail("q(xy) = q(x)q(y) fails on even elements");
    for (Index yi = 0; yi < n; ++yi)
      for (Index zi = 0; zi < n; ++zi) {
        const Vector y = c.unit_vector(yi), z = c.unit_vector(zi);
        const Scalar mid = q(x) * g(yi, zi);
        if (c.bilinear(c.multiply(x, y), c.multiply(x, z)) != mid ||
            c.bilinear(c.multiply(y, x), c.multiply(z, x)) != mid)
          r.fail("b(xy,xz) = q(x)b(y,z) fails at (" + lab[yi] + "," + lab[zi] + ")");
      }
  }
  return r;
}

Report check_hurwitz(const HurwitzSuperalgebra& c) {
  Report r = check_composition(c.algebra);
  r.check = "hurwitz:" + c.algebra.name();
  for (Index i = 0; i < c.dim(); ++i) {
    const Vector x = c.algebra.unit_vector(i);
    if (c.algebra.multiply(c.unit, x) != x || c.algebra.multiply(x, c.unit) != x)
      r.fail("unit fails on " + c.algebra.space().labels[i]);
  }
  return r;
}

Report check_symmetric(const SymmetricComposition& s) {
  Report r = check_composition(s.algebra);
  r.check = "symmetric:" + s.algebra.name();
  const Matrix& g = *s.algebra.form();
  const Index n = s.dim();
  const auto& lab = s.algebra.space().labels;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        const Scalar lhs = (s.algebra.basis_product(x, y).transpose() * g.col(z))(0, 0);
        const Scalar rhs = (g.row(x) * s.algebra.basis_product(y, z))(0, 0);
        if (lhs != rhs) r.fail("associativity of b fails at (" + lab[x] + "," + lab[y] + "," + lab[z] + ")");
      }
  return r;
}

}  // namespace supermagic

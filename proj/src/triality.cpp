#include "supermagic/triality.hpp"

#include <stdexcept>

namespace supermagic {

TrialityElement TrialityElement::zero(Index n, int parity) {
  return {{Matrix::Zero(n, n), Matrix::Zero(n, n), Matrix::Zero(n, n)}, parity};
}

TrialityElement TrialityElement::operator+(const TrialityElement& o) const {
  return {{d[0] + o.d[0], d[1] + o.d[1], d[2] + o.d[2]}, parity};
}

TrialityElement TrialityElement::operator-(const TrialityElement& o) const {
  return {{d[0] - o.d[0], d[1] - o.d[1], d[2] - o.d[2]}, parity};
}

TrialityElement operator*(Scalar c, const TrialityElement& t) {
  return {{c * t.d[0], c * t.d[1], c * t.d[2]}, t.parity};
}

bool TrialityElement::operator==(const TrialityElement& o) const {
  return d[0] == o.d[0] && d[1] == o.d[1] && d[2] == o.d[2];
}

bool TrialityElement::is_zero() const { return all_zero(d[0]) && all_zero(d[1]) && all_zero(d[2]); }

Vector flatten_triple(const TrialityElement& t) {
  const Index n = t.d[0].rows();
  Matrix m = Matrix::Zero(3 * n, 3 * n);
  for (int i = 0; i < 3; ++i) m.block(i * n, i * n, n, n) = t.d[i];
  return flatten(m);
}

TrialityElement unflatten_triple(const Vector& v, Index n, int parity) {
  Matrix m = unflatten(v, 3 * n, 3 * n);
  TrialityElement t;
  t.parity = parity;
  for (int i = 0; i < 3; ++i) t.d[i] = m.block(i * n, i * n, n, n);
  return t;
}

SuperSpace triple_space(const SuperSpace& s) {
  SuperSpace out;
  for (int i = 0; i < 3; ++i)
    for (Index k = 0; k < s.dim(); ++k) {
      out.labels.push_back(std::to_string(i) + ":" + s.labels[k]);
      out.parity.push_back(s.parity[k]);
    }
  return out;
}

TrialityElement TrialityAlgebra::element(Index k) const {
  return unflatten_triple(span.vector(k), S.dim(), span.parity(k));
}

Vector TrialityAlgebra::coordinates(const TrialityElement& t) const {
  return span.coordinates_or_throw(flatten_triple(t), "tri(" + S.algebra.name() + ")");
}

namespace {

// Unknowns: entries (block, row, col) of the operators of a given parity.
struct Unknowns {
  Index n = 0;
  int blocks = 1;
  std::vector<Index> index;  // (block*n + r)*n + c -> column or -1
  Index count = 0;

  Unknowns(const SuperSpace& s, int parity, int nblocks) : n(s.dim()), blocks(nblocks) {
    index.assign(static_cast<std::size_t>(nblocks * n * n), -1);
    for (int b = 0; b < nblocks; ++b)
      for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c)
          if (entry_parity(s, r, s, c) == parity) index[pos(b, r, c)] = count++;
  }
  std::size_t pos(int b, Index r, Index c) const { return static_cast<std::size_t>((b * n + r) * n + c); }
  Index col(int b, Index r, Index c) const { return index[pos(b, r, c)]; }
};

struct RowBuilder {
  std::vector<Vector> rows;
  Index cols;
  explicit RowBuilder(Index c) : cols(c) {}
  Vector& fresh() {
    rows.push_back(Vector::Zero(cols));
    return rows.back();
  }
  Matrix matrix() const {
    Matrix m = Matrix::Zero(std::max<Index>(1, static_cast<Index>(rows.size())), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
    return m;
  }
};

void add_if(Vector& row, Index col, Scalar c) {
  if (col >= 0) row(col) += c;
}

// b(d_b x, y) + (-1)^{|d||x|} b(x, d_b y) = 0 for all basis x, y
void osp_equations(RowBuilder& rb, const Unknowns& u, const SuperSpace& s, const Matrix& g, int parity, int block) {
  const Index n = s.dim();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Vector& row = rb.fresh();
      const Scalar sg = gf::sign(parity, s.parity_of(x));
      for (Index r = 0; r < n; ++r) {
        if (!g(r, y).is_zero()) add_if(row, u.col(block, r, x), g(r, y));
        if (!g(x, r).is_zero()) add_if(row, u.col(block, r, y), sg * g(x, r));
      }
    }
}

GradedSpan solve_operators(const SuperSpace& s, const std::function<void(RowBuilder&, const Unknowns&, int)>& eqs,
                           int nblocks, const std::vector<std::uint8_t>& ambient_parity,
                           const std::function<Vector(const Vector&, Index)>& embed) {
  std::vector<Vector> found;
  for (int parity = 0; parity < 2; ++parity) {
    Unknowns u(s, parity, nblocks);
    if (u.count == 0) continue;
    RowBuilder rb(u.count);
    eqs(rb, u, parity);
    auto ker = kernel_basis(rb.matrix());
    for (Index k = 0; k < ker.dim(); ++k) {
      Vector full = Vector::Zero(nblocks * s.dim() * s.dim());
      const Vector kv = ker.vector(k);
      for (std::size_t p = 0; p < u.index.size(); ++p)
        if (u.index[p] >= 0) full(static_cast<Index>(p)) = kv(u.index[p]);
      found.push_back(embed(full, s.dim()));
    }
  }
  return GradedSpan::of(found, ambient_parity);
}

Vector identity_embed(const Vector& v, Index) { return v; }

Vector triple_embed(const Vector& v, Index n) {
  TrialityElement t;
  for (int b = 0; b < 3; ++b) t.d[b] = unflatten(v.segment(b * n * n, n * n), n, n);
  return flatten_triple(t);
}

}  // namespace

GradedSpan osp_basis(const SuperSpace& space, const Matrix& gram) {
  if (rank(gram) != space.dim()) throw std::invalid_argument("osp: degenerate form");
  return solve_operators(
      space, [&](RowBuilder& rb, const Unknowns& u, int parity) { osp_equations(rb, u, space, gram, parity, 0); }, 1,
      operator_entry_parities(space), identity_embed);
}

bool in_osp(const SymmetricComposition& s, const Matrix& d, int parity) {
  const Matrix& g = *s.algebra.form();
  const Index n = s.dim();
  const Matrix gd = d.transpose() * g;  // (r, y) -> b(d b_r, b_y)
  const Matrix dg = g * d;              // (x, c) -> b(b_x, d b_c)
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (gd(x, y) + gf::sign(parity, s.algebra.parity(x)) * dg(x, y) != Scalar(0)) return false;
  return true;
}

bool in_tri(const SymmetricComposition& s, const TrialityElement& t) {
  const SuperAlgebra& a = s.algebra;
  const Index n = s.dim();
  for (int i = 0; i < 3; ++i) {
    if (operator_parity(t.d[i], a.space(), a.space()).value_or(t.parity) != t.parity) return false;
    if (!in_osp(s, t.d[i], t.parity)) return false;
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Vector ex = a.unit_vector(x), ey = a.unit_vector(y);
      const Vector lhs = t.d[0] * a.basis_product(x, y);
      const Vector rhs =
          a.multiply(t.d[1] * ex, ey) + gf::sign(t.parity, a.parity(x)) * a.multiply(ex, t.d[2] * ey);
      if (lhs != rhs) return false;
    }
  return true;
}

TrialityAlgebra tri_basis(const SymmetricComposition& s) {
  const SuperAlgebra& a = s.algebra;
  const SuperSpace& sp = a.space();
  const Matrix& g = *a.form();
  const Index n = s.dim();
  // column products: P(x,y) = x∙y
  auto eqs = [&](RowBuilder& rb, const Unknowns& u, int parity) {
    for (int b = 0; b < 3; ++b) osp_equations(rb, u, sp, g, parity, b);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const Vector xy = a.basis_product(x, y);
        const Scalar sg = gf::sign(parity, sp.parity_of(x));
        for (Index k = 0; k < n; ++k) {
          Vector& row = rb.fresh();
          // d0(x∙y)_k
          for (Index m = 0; m < n; ++m)
            if (!xy(m).is_zero()) add_if(row, u.col(0, k, m), xy(m));
          // - d1(x)∙y
          for (Index r = 0; r < n; ++r) {
            const auto& ry = a.product(r, y);
            for (const auto& t : ry)
              if (t.index == k) add_if(row, u.col(1, r, x), -t.coeff);
          }
          // - sg x∙d2(y)
          for (Index r = 0; r < n; ++r) {
            const auto& xr = a.product(x, r);
            for (const auto& t : xr)
              if (t.index == k) add_if(row, u.col(2, r, y), -sg * t.coeff);
          }
        }
      }
  };
  const SuperSpace ts = triple_space(sp);
  GradedSpan span = solve_operators(sp, eqs, 3, operator_entry_parities(ts), triple_embed);
  SuperAlgebra lie = operator_lie_algebra("tri(" + a.name() + ")", span, ts, "t");
  return {s, std::move(span), std::move(lie)};
}

TrialityElement theta(const TrialityElement& t, int times) {
  TrialityElement out = t;
  for (int k = 0; k < ((times % 3) + 3) % 3; ++k) {
    TrialityElement prev = out;
    out.d[0] = prev.d[2];
    out.d[1] = prev.d[0];
    out.d[2] = prev.d[1];
  }
  return out;
}

Matrix sigma_xy(const SymmetricComposition& s, const Vector& x, int px, const Vector& y, int py) {
  const SuperAlgebra& a = s.algebra;
  const Index n = s.dim();
  const Matrix& g = *a.form();
  Matrix m(n, n);
  const Vector bx = g.transpose() * x;  // (z) -> b(x, b_z)
  const Vector by = g.transpose() * y;
  for (Index z = 0; z < n; ++z) {
    const int pz = a.parity(z);
    m.col(z) = gf::sign(py, pz) * bx(z) * y - gf::sign(px, py + pz) * by(z) * x;
  }
  return m;
}

TrialityElement t_xy(const SymmetricComposition& s, const Vector& x, int px, const Vector& y, int py) {
  const SuperAlgebra& a = s.algebra;
  const Index n = s.dim();
  const Scalar hb = gf::half() * a.bilinear(x, y);
  TrialityElement t;
  t.parity = (px + py) & 1;
  t.d[0] = sigma_xy(s, x, px, y, py);
  t.d[1] = Matrix(n, n);
  t.d[2] = Matrix(n, n);
  for (Index z = 0; z < n; ++z) {
    const int pz = a.parity(z);
    const Vector ez = a.unit_vector(z);
    // r_x l_y (z) = (-1)^{|x|(|y|+|z|)} (y∙z)∙x
    const Vector rl = gf::sign(px, py + pz) * a.multiply(a.multiply(y, ez), x);
    // l_x r_y (z) = (-1)^{|y||z|} x∙(z∙y)
    const Vector lr = gf::sign(py, pz) * a.multiply(x, a.multiply(ez, y));
    t.d[1].col(z) = hb * ez - rl;
    t.d[2].col(z) = hb * ez - lr;
  }
  return t;
}

TrialityElement t_basis(const SymmetricComposition& s, Index i, Index j) {
  const SuperAlgebra& a = s.algebra;
  return t_xy(s, a.unit_vector(i), a.parity(i), a.unit_vector(j), a.parity(j));
}

GradedSpan t_span(const SymmetricComposition& s) {
  const Index n = s.dim();
  std::vector<Vector> vs;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const TrialityElement t = t_basis(s, i, j);
      for (int k = 0; k < 3; ++k) vs.push_back(flatten_triple(theta(t, k)));
    }
  return GradedSpan::of(vs, operator_entry_parities(triple_space(s.algebra.space())));
}

SymmetricComposition para_quaternion(const HurwitzSuperalgebra& q) {
  return para_hurwitz(opposite(q, q.algebra.name() + "op"), q.algebra.name() + "bar");
}

TrialityElement quaternion_kernel_element(const HurwitzSuperalgebra& q, int r, const Vector& a) {
  const Matrix l = q.algebra.left_mult(a), rm = q.algebra.right_mult(a);
  const Index n = q.dim();
  TrialityElement t = TrialityElement::zero(n);
  const int i1 = (r + 1) % 3, i2 = (r + 2) % 3;
  t.d[i1] = -rm;
  t.d[i2] = l;
  return t;
}

QuaternionTriDecomposition quaternion_tri_decomposition(const HurwitzSuperalgebra& q) {
  SymmetricComposition qbar = para_quaternion(q);
  TrialityAlgebra tri = tri_basis(qbar);
  const Index n = q.dim();
  Report rep;
  rep.check = "tri-decomposition:" + q.algebra.name();
  // traceless part: kernel of x -> b(x, 1)
  const Matrix trace_row = (q.form() * q.unit).transpose();
  const Subspace traceless = kernel_basis(trace_row);
  std::array<Subspace, 3> kernels;
  for (int r = 0; r < 3; ++r) {
    std::vector<Vector> gens;
    for (Index k = 0; k < traceless.dim(); ++k) {
      TrialityElement t = quaternion_kernel_element(q, r, traceless.vector(k));
      if (!in_tri(qbar, t)) rep.fail("ker pi" + std::to_string(r) + " generator " + std::to_string(k) + " not in tri");
      gens.push_back(flatten_triple(t));
    }
    kernels[r] = Subspace::span(gens, 9 * n * n);
    if (kernels[r].dim() != 3) rep.fail("ker pi" + std::to_string(r) + " has dimension " + std::to_string(kernels[r].dim()));
    // independent description: elements of tri with vanishing r-th component
    Matrix proj(tri.dim(), n * n);
    for (Index k = 0; k < tri.dim(); ++k) proj.row(k) = flatten(tri.element(k).d[r]).transpose();
    const Subspace coeffs = kernel_basis(proj.transpose().eval());
    std::vector<Vector> solved;
    for (Index k = 0; k < coeffs.dim(); ++k) {
      Vector v = Vector::Zero(9 * n * n);
      for (Index m = 0; m < tri.dim(); ++m) v += coeffs.vector(k)(m) * tri.span.vector(m);
      solved.push_back(v);
    }
    if (!(Subspace::span(solved, 9 * n * n) == kernels[r]))
      rep.fail("ker pi" + std::to_string(r) + " differs from the closed form");
  }
  Subspace total = sum(sum(kernels[0], kernels[1]), kernels[2]);
  for (int r = 0; r < 3; ++r)
    if (intersect(kernels[r], kernels[(r + 1) % 3]).dim() != 0) rep.fail("kernels intersect");
  if (total.dim() != 9 || !(total == tri.span.whole())) rep.fail("kernels do not sum to tri");
  rep.dims = to_string(tri.graded_dim());
  return {std::move(qbar), std::move(tri), std::move(kernels), std::move(rep)};
}

}  // namespace supermagic

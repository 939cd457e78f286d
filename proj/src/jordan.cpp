#include "supermagic/jordan.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace supermagic {

Vector H3Algebra::iota_vec(int i, const Vector& a) const {
  Vector v = Vector::Zero(J.dim());
  v.segment(iota(i, 0), n()) = a;
  return v;
}

Vector H3Algebra::unit() const {
  Vector v = Vector::Zero(J.dim());
  v(0) = v(1) = v(2) = Scalar(1);
  return v;
}

H3Algebra make_H3(const HurwitzSuperalgebra& c, const std::string& name) {
  SymmetricComposition s = para_hurwitz(c);
  const Index n = c.dim();
  const Index dim = 3 + 3 * n;
  SuperSpace space;
  for (int i = 0; i < 3; ++i) {
    space.labels.push_back("e" + std::to_string(i));
    space.parity.push_back(0);
  }
  for (int i = 0; i < 3; ++i)
    for (Index a = 0; a < n; ++a) {
      space.labels.push_back("i" + std::to_string(i) + "(" + c.algebra.space().labels[a] + ")");
      space.parity.push_back(static_cast<std::uint8_t>(c.algebra.parity(a)));
    }
  const Scalar half = gf::half();
  auto iota = [&](int i, Index a) { return 3 + i * n + a; };
  auto decode = [&](Index k) { return std::pair<int, Index>{static_cast<int>((k - 3) / n), (k - 3) % n}; };
  const SuperAlgebra& sa = s.algebra;
  auto product = [&](Index p, Index q) {
    Vector out = Vector::Zero(dim);
    if (p < 3 && q < 3) {
      if (p == q) out(p) = Scalar(1);
      return out;
    }
    if (p < 3 || q < 3) {
      const Index e = p < 3 ? p : q;
      const auto [i, a] = decode(p < 3 ? q : p);
      if (e == (i + 1) % 3 || e == (i + 2) % 3) out(iota(i, a)) = half;
      return out;
    }
    const auto [i, a] = decode(p);
    const auto [j, b] = decode(q);
    if (j == (i + 1) % 3) {
      for (const auto& t : sa.product(a, b)) out(iota((i + 2) % 3, t.index)) += t.coeff;
    } else if (i == (j + 1) % 3) {
      // ι_{j+1}(a)∘ι_j(b) = (-1)^{|a||b|} ι_j(b)∘ι_{j+1}(a)
      const Scalar sg = gf::sign(sa.parity(a), sa.parity(b));
      for (const auto& t : sa.product(b, a)) out(iota((j + 2) % 3, t.index)) += sg * t.coeff;
    } else {
      const Scalar v = Scalar(2) * s.b(a, b);
      out((i + 1) % 3) += v;
      out((i + 2) % 3) += v;
    }
    return out;
  };
  SuperAlgebra j = SuperAlgebra::from_products(name.empty() ? "H3(" + c.algebra.name() + ")" : name, space,
                                               Kind::jordan, product);
  return {c, std::move(s), std::move(j)};
}

H3Algebra make_H3(CompositionKind k) { return make_H3(make_hurwitz(k), "H3:" + to_string(k)); }

SuperAlgebra make_K3() {
  const Scalar h = gf::half();
  Matrix g(3, 3);
  g << Scalar(2), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(-1), Scalar(0);
  return SuperAlgebra::from_products("K3", SuperSpace{{"e", "x", "y"}, {0, 1, 1}}, Kind::jordan,
                                     [&](Index i, Index j) {
                                       Vector v = Vector::Zero(3);
                                       if (i == 0 && j == 0) v(0) = Scalar(1);
                                       else if (i == 0 || j == 0) v(i + j) = h;
                                       else if (i == 1 && j == 2) v(0) = Scalar(1);
                                       else if (i == 2 && j == 1) v(0) = Scalar(-1);
                                       return v;
                                     },
                                     g);
}

SuperAlgebra make_K9() {
  SuperAlgebra k3 = make_K3();
  return graded_tensor(k3, k3).renamed("K9").with_kind(Kind::jordan);
}

const GradedSpan& derivations_cached(const SuperAlgebra& a) {
  using Key = std::tuple<std::string, std::uint32_t, Index, std::uint64_t>;
  static std::map<Key, GradedSpan> cache;
  static std::mutex mu;
  std::uint64_t fp = 1469598103934665603ULL;  // FNV-1a over the structure constants
  auto mix = [&](std::uint64_t v) { fp = (fp ^ v) * 1099511628211ULL; };
  for (Index i = 0; i < a.dim(); ++i) {
    mix(static_cast<std::uint64_t>(a.parity(i)));
    for (Index j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j)) {
        mix(static_cast<std::uint64_t>((i * a.dim() + j) * a.dim() + t.index));
        mix(t.coeff.value());
      }
  }
  const Key key{a.name(), gf::modulus(), a.dim(), fp};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  GradedSpan d = derivations(a);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(d)).first->second;
}

Matrix D_from_tri(const H3Algebra& h, const TrialityElement& t) {
  const Index n = h.n();
  Matrix m = Matrix::Zero(h.J.dim(), h.J.dim());
  for (int i = 0; i < 3; ++i) m.block(h.iota(i, 0), h.iota(i, 0), n, n) = t.d[i];
  return m;
}

Matrix D_i(const H3Algebra& h, int i, const Vector& a, int pa) {
  const Matrix la = h.J.left_mult(h.iota_vec(i, a));
  const Matrix le = h.J.left_mult_basis(h.e((i + 1) % 3));
  return Scalar(2) * supercommutator(la, pa, le, 0);
}

Matrix D_i_closed_form(const H3Algebra& h, int i, const Vector& a, int pa) {
  const Index n = h.n();
  const SuperAlgebra& s = h.S.algebra;
  const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
  const Scalar half = gf::half();
  Matrix m = Matrix::Zero(h.J.dim(), h.J.dim());
  m.col(h.e(i1)) = half * h.iota_vec(i, a);
  m.col(h.e(i2)) = -half * h.iota_vec(i, a);
  for (Index b = 0; b < n; ++b) {
    const Vector eb = s.unit_vector(b);
    m.col(h.iota(i1, b)) = -h.iota_vec(i2, s.multiply(a, eb));
    m.col(h.iota(i2, b)) = gf::sign(pa, s.parity(b)) * h.iota_vec(i1, s.multiply(eb, a));
    const Scalar v = Scalar(2) * s.bilinear(a, eb);
    m(h.e(i1), h.iota(i, b)) = -v;
    m(h.e(i2), h.iota(i, b)) = v;
  }
  return m;
}

DerJGrading derJ_grading(const H3Algebra& h) {
  DerJGrading out;
  Report& r = out.report;
  r.check = "der-grading:" + h.J.name();
  ReportTimer timer(r);
  out.der = derivations_cached(h.J);
  const auto ops_parity = operator_entry_parities(h.J.space());
  TrialityAlgebra tri = tri_basis(h.S);
  std::vector<Vector> tv;
  for (Index k = 0; k < tri.dim(); ++k) tv.push_back(flatten(D_from_tri(h, tri.element(k))));
  out.tri_part = GradedSpan::of(tv, ops_parity);
  if (out.tri_part.graded_dim() != tri.graded_dim()) r.fail("D is not injective on tri(S)");
  for (int i = 0; i < 3; ++i) {
    std::vector<Vector> dv;
    for (Index a = 0; a < h.n(); ++a)
      dv.push_back(flatten(D_i(h, i, h.S.algebra.unit_vector(a), h.S.algebra.parity(a))));
    out.d_parts[i] = GradedSpan::of(dv, ops_parity);
  }
  GradedDim total = out.tri_part.graded_dim();
  Subspace sum_all = out.tri_part.whole();
  for (const auto& p : out.d_parts) {
    total = total + p.graded_dim();
    sum_all = sum(sum_all, p.whole());
  }
  auto in_der = [&](const GradedSpan& part, const std::string& what) {
    for (Index k = 0; k < part.dim(); ++k)
      if (!out.der.contains(part.vector(k))) {
        r.fail(what + " element " + std::to_string(k) + " is not a derivation");
        return;
      }
  };
  in_der(out.tri_part, "D_tri");
  for (int i = 0; i < 3; ++i) in_der(out.d_parts[i], "D_" + std::to_string(i));
  if (sum_all.dim() != total.total()) r.fail("components are not independent");
  if (!(sum_all == out.der.whole())) r.fail("components do not span der J");
  r.dims = to_string(out.der.graded_dim());
  r.note("tri", to_string(out.tri_part.graded_dim()));
  for (int i = 0; i < 3; ++i) r.note("D" + std::to_string(i), to_string(out.d_parts[i].graded_dim()));
  return out;
}

Report check_D_identities(const H3Algebra& h) {
  Report r;
  r.check = "D-identities:" + h.J.name();
  ReportTimer timer(r);
  const SuperAlgebra& s = h.S.algebra;
  for (int i = 0; i < 3; ++i)
    for (Index a = 0; a < h.n(); ++a) {
      const Vector av = s.unit_vector(a);
      const int pa = s.parity(a);
      const std::string at = "i=" + std::to_string(i) + ", a=" + s.space().labels[a];
      const Matrix la = h.J.left_mult(h.iota_vec(i, av));
      const Matrix d = D_i(h, i, av, pa);
      if (d != D_i_closed_form(h, i, av, pa)) r.fail("closed form differs at " + at);
      if (!all_zero(supercommutator(la, pa, h.J.left_mult_basis(h.e(i)), 0)))
        r.fail("[L_iota_i(a), L_e_i] != 0 at " + at);
      if (d != Scalar(-2) * supercommutator(la, pa, h.J.left_mult_basis(h.e((i + 2) % 3)), 0))
        r.fail("2[L, L_e(i+1)] != -2[L, L_e(i+2)] at " + at);
    }
  return r;
}

SuperAlgebra der_lie(const SuperAlgebra& j) {
  return operator_lie_algebra("der " + j.name(), derivations_cached(j), j.space(), "d");
}

StructurePair make_str_pstr(const SuperAlgebra& j, const std::optional<Vector>& unit) {
  StructurePair out;
  out.der = derivations_cached(j);
  std::vector<Vector> ops;
  for (Index k = 0; k < out.der.dim(); ++k) ops.push_back(out.der.vector(k));
  for (Index k = 0; k < j.dim(); ++k) ops.push_back(flatten(j.left_mult_basis(k)));
  out.str_ops = GradedSpan::of(ops, operator_entry_parities(j.space()));
  if (out.str_ops.dim() != out.der.dim() + j.dim())
    throw std::logic_error("str " + j.name() + ": der J and L_J are not independent");
  out.str = operator_lie_algebra("str " + j.name(), out.str_ops, j.space(), "s");
  if (!unit) return out;
  if (j.left_mult(*unit) != Matrix::Identity(j.dim(), j.dim()))
    throw std::invalid_argument(j.name() + ": the given element is not a unit");
  out.identity_coords = out.str_ops.coordinates_or_throw(flatten(j.left_mult(*unit)), "L_1 in str");
  Matrix row(1, out.str.dim());
  row.row(0) = out.identity_coords.transpose();
  out.center_line = Subspace::span(row);
  out.pstr = quotient(out.str, out.center_line);
  out.pstr->algebra = out.pstr->algebra.renamed("pstr " + j.name());
  return out;
}

}  // namespace supermagic

#include "supermagic/isomaps.hpp"

#include "supermagic/jordan.hpp"
#include "supermagic/square.hpp"
#include "supermagic/tkk.hpp"
#include "supermagic/toolbox.hpp"

#include <stdexcept>

namespace supermagic {

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::phi1: return "phi1";
    case Theorem::phi2: return "phi2";
    case Theorem::phi3: return "phi3";
    case Theorem::psi: return "psi";
    case Theorem::psi_restricted: return "psi-restricted";
  }
  return "?";
}

Theorem theorem_from_name(const std::string& name) {
  for (auto t : {Theorem::phi1, Theorem::phi2, Theorem::phi3, Theorem::psi, Theorem::psi_restricted})
    if (to_string(t) == name) return t;
  if (name == "psi_restricted") return Theorem::psi_restricted;
  throw std::invalid_argument("unknown theorem: " + name);
}

bool NamedIsomorphism::passed() const {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return !reports.empty();
}

Report NamedIsomorphism::summary() const {
  Report s;
  s.check = "verify:" + name;
  s.dims = to_string(domain.graded_dim()) + " -> " + to_string(codomain.graded_dim());
  for (const auto& r : reports) {
    s.absorb(r);
    s.seconds += r.seconds;
  }
  if (reports.empty()) s.fail("no checks ran");
  return s;
}

namespace {

// hom_check plus the bijectivity requirement, as one report.
Report iso_report(const GradedLinearMap& f, const SuperAlgebra& a, const SuperAlgebra& b,
                  const std::optional<Subspace>& mod, const std::string& name) {
  HomReport h = hom_check(f, a, b, mod, name);
  Report r = h.report;
  if (a.graded_dim() != b.graded_dim() && !mod)
    r.fail("graded dimensions differ: " + to_string(a.graded_dim()) + " vs " + to_string(b.graded_dim()));
  if (!h.injective) r.fail("not injective");
  if (!h.surjective) r.fail("not surjective");
  return r;
}

GradedLinearMap linear_map(const SuperAlgebra& a, const SuperAlgebra& b, Matrix m) {
  return {a.space(), b.space(), std::move(m), 0};
}

// Coordinates of the S2 triality element (α0σ, α1σ, α2σ): α_i is the
// u-coefficient of d_i(1).
std::array<Scalar, 3> s2_alphas(const TrialityElement& t) {
  return {t.d[0](1, 0), t.d[1](1, 0), t.d[2](1, 0)};
}

// Embedding g(S1,S) -> g(S',S) for S' containing the para-unit 1 at index 0
// with tri(S1) = 0: tri(S) block to tri(S) block, ι_i(1⊗a) to ι_i(1⊗a).
Matrix s1_embedding(const MagicCell& small, const MagicCell& big) {
  Matrix m = Matrix::Zero(big.g.dim(), small.g.dim());
  for (Index k = 0; k < small.tri_prime.dim(); ++k) m(big.tri_prime_begin() + k, small.tri_prime_begin() + k) = Scalar(1);
  const Index n = small.S_prime().dim();
  for (int i = 0; i < 3; ++i)
    for (Index a = 0; a < n; ++a) m(big.iota(i, 0, a), small.iota(i, 0, a)) = Scalar(1);
  return m;
}

Report unit_embedding_report(const SymmetricComposition& s) {
  Report r;
  r.check = "para-unit";
  // 1∙1 = 1 for the basis vector 1 used by the S1 embedding
  if (s.algebra.basis_product(0, 0) != s.algebra.unit_vector(0)) r.fail("1∙1 != 1 in " + s.algebra.name());
  if (s.b(0, 0) != Scalar(2)) r.fail("b(1,1) != 2 in " + s.algebra.name());
  return r;
}

// Φ as a matrix from g(S1,S) into the coordinates of der J.
Matrix phi_matrix(const MagicCell& cell, const H3Algebra& h, const GradedSpan& der) {
  Matrix m = Matrix::Zero(der.dim(), cell.g.dim());
  for (Index k = 0; k < cell.tri_prime.dim(); ++k)
    m.col(cell.tri_prime_begin() + k) =
        der.coordinates_or_throw(flatten(D_from_tri(h, cell.tri_prime.element(k))), "D_tri in der J");
  const SuperAlgebra& s = h.S.algebra;
  for (int i = 0; i < 3; ++i)
    for (Index a = 0; a < s.dim(); ++a)
      m.col(cell.iota(i, 0, a)) =
          der.coordinates_or_throw(flatten(D_i(h, i, s.unit_vector(a), s.parity(a))), "D_i(a) in der J");
  return m;
}

}  // namespace

NamedIsomorphism build_phi1(CompositionKind kind) {
  H3Algebra h = make_H3(kind);
  MagicCell cell = build_g(make_symmetric(CompositionKind::S1), h.S);
  SuperAlgebra der = der_lie(h.J);
  const GradedSpan& ders = derivations_cached(h.J);
  NamedIsomorphism iso{"phi1:" + to_string(kind), linear_map(cell.g, der, phi_matrix(cell, h, ders)), cell.g, der,
                       std::nullopt, {}};
  iso.reports.push_back(iso_report(iso.map, iso.domain, iso.codomain, std::nullopt, iso.name));
  return iso;
}

NamedIsomorphism build_phi2(CompositionKind kind) {
  H3Algebra h = make_H3(kind);
  MagicCell cell = build_g(make_symmetric(CompositionKind::S2), h.S);
  StructurePair sp = make_str_pstr(h.J, h.unit());
  const Index n = h.n();
  const SuperAlgebra& s = h.S.algebra;
  auto str_coords = [&](const Matrix& op, const std::string& what) {
    return sp.str_ops.coordinates_or_throw(flatten(op), what + " in str J");
  };
  auto lmul = [&](const Vector& v) { return h.J.left_mult(v); };
  auto e = [&](int i) { return h.J.unit_vector(i); };

  Matrix m = Matrix::Zero(sp.str.dim(), cell.g.dim());
  Report reps;
  reps.check = "phi2-representatives:" + to_string(kind);
  const Matrix id = Matrix::Identity(h.J.dim(), h.J.dim());
  for (Index k = 0; k < cell.tri.dim(); ++k) {
    const auto a = s2_alphas(cell.tri.element(k));
    const Matrix l0 = lmul(a[2] * e(1) - a[1] * e(2));
    const Matrix l1 = lmul(a[1] * e(0) - a[0] * e(1));
    const Matrix l2 = lmul(a[0] * e(2) - a[2] * e(0));
    for (const Matrix* other : {&l1, &l2}) {
      const Matrix diff = l0 - *other;
      const Scalar c = diff(0, 0);
      if (diff != c * id) reps.fail("representatives differ by a non-scalar operator at tri(S2) basis " + std::to_string(k));
    }
    // the element is (α0σ, α1σ, α2σ) with Σα = 0
    if (a[0] + a[1] + a[2] != Scalar(0)) reps.fail("tri(S2) element with nonzero α sum");
    // 2 L_{α2e1 - α1e2}
    m.col(cell.tri_begin() + k) = Scalar(2) * str_coords(l0, "L_{a2 e1 - a1 e2}");
  }
  for (Index k = 0; k < cell.tri_prime.dim(); ++k)
    m.col(cell.tri_prime_begin() + k) = str_coords(D_from_tri(h, cell.tri_prime.element(k)), "D_tri");
  for (int i = 0; i < 3; ++i)
    for (Index a = 0; a < n; ++a) {
      const Vector av = s.unit_vector(a);
      m.col(cell.iota(i, 0, a)) = str_coords(D_i(h, i, av, s.parity(a)), "D_i(a)");
      m.col(cell.iota(i, 1, a)) = str_coords(lmul(h.iota_vec(i, av)), "L_iota_i(a)");
    }

  // spot check: [ι0(1⊗a), ι0(u⊗b)] = b(a,b) t_{1,u} maps to 2b(a,b) L_{e2 - e1} modulo kI
  Report spot;
  spot.check = "phi2-spot:" + to_string(kind);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Vector br = cell.g.basis_product(cell.iota(0, 0, a), cell.iota(0, 1, b));
      Vector got = m * br;
      Vector want = Scalar(2) * s.bilinear(s.unit_vector(a), s.unit_vector(b)) * str_coords(lmul(e(2) - e(1)), "L_{e2-e1}");
      if (!sp.center_line.contains(Vector(got - want)))
        spot.fail("[i0(1⊗" + s.space().labels[a] + "), i0(u⊗" + s.space().labels[b] + ")]");
    }

  NamedIsomorphism iso{"phi2:" + to_string(kind), linear_map(cell.g, sp.str, m), cell.g, sp.pstr->algebra,
                       sp.center_line, {}};
  // into str modulo kI
  HomReport into_str = hom_check(iso.map, cell.g, sp.str, sp.center_line, iso.name + "->str");
  if (!into_str.surjective) into_str.report.fail("not surjective modulo kI");
  iso.reports.push_back(into_str.report);
  // the induced map into pstr
  GradedLinearMap induced = linear_map(cell.g, sp.pstr->algebra, sp.pstr->projection * m);
  iso.reports.push_back(iso_report(induced, cell.g, sp.pstr->algebra, std::nullopt, iso.name + "->pstr"));
  iso.reports.push_back(reps);
  iso.reports.push_back(spot);
  iso.map = induced;
  return iso;
}

NamedIsomorphism build_phi3(CompositionKind kind) {
  H3Algebra h = make_H3(kind);
  QuaternionBasis q = make_split_quaternion();
  QuaternionTriDecomposition dec = quaternion_tri_decomposition(q.Q);
  MagicCell cell = build_g(dec.qbar, h.S);
  TitsAlgebra t = make_tits(q, h.J);
  const Index n = h.n();
  const SuperAlgebra& s = h.S.algebra;
  const Scalar half = gf::half();

  Matrix m = Matrix::Zero(t.T.dim(), cell.g.dim());
  // g(S1,S) part: Φ into der J ⊂ T(Q,J)
  for (Index k = 0; k < cell.tri_prime.dim(); ++k)
    m.col(cell.tri_prime_begin() + k) = t.der_element(D_from_tri(h, cell.tri_prime.element(k)));
  for (int i = 0; i < 3; ++i)
    for (Index a = 0; a < n; ++a) m.col(cell.iota(i, 0, a)) = t.der_element(D_i(h, i, s.unit_vector(a), s.parity(a)));
  // tri(Q̄): expand each basis element over the generators (r, e_j) -> e_j ⊗ e_r
  Matrix gens(cell.tri.span.ambient(), 9);
  Matrix images = Matrix::Zero(t.T.dim(), 9);
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < 3; ++j) {
      const Index g = r * 3 + j;
      gens.col(g) = flatten_triple(quaternion_kernel_element(q.Q, r, q.e_vec(j)));
      images(t.qh(j, h.e(r)), g) = Scalar(1);
    }
  for (Index k = 0; k < cell.tri.dim(); ++k) {
    auto c = solve(gens, cell.tri.span.vector(k));
    if (!c) throw std::logic_error("phi3: tri(Q̄) is not spanned by the kernel generators");
    m.col(cell.tri_begin() + k) = images * *c;
  }
  // ι_i(e_j ⊗ x) -> -½ e_j ⊗ ι_i(x)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (Index x = 0; x < n; ++x) m(t.qh(j, h.iota(i, x)), cell.iota(i, q.e(j), x)) = -half;

  NamedIsomorphism iso{"phi3:" + to_string(kind), linear_map(cell.g, t.T, m), cell.g, t.T, std::nullopt, {}};
  iso.reports.push_back(iso_report(iso.map, cell.g, t.T, std::nullopt, iso.name));
  iso.reports.push_back(dec.report);

  // restriction to g(S1,S) is Φ followed by der J ⊂ T(Q,J)
  Report nat;
  nat.check = "phi3-restriction:" + to_string(kind);
  MagicCell small = build_g(make_symmetric(CompositionKind::S1), h.S);
  const Matrix emb = s1_embedding(small, cell);
  HomReport eh = hom_check(linear_map(small.g, cell.g, emb), small.g, cell.g, std::nullopt, "g(S1,S) in g(Q̄,S)");
  nat.absorb(eh.report);
  if (!eh.injective) nat.fail("embedding of g(S1,S) is not injective");
  const GradedSpan& ders = derivations_cached(h.J);
  Matrix incl = Matrix::Zero(t.T.dim(), ders.dim());
  incl.bottomRows(ders.dim()) = Matrix::Identity(ders.dim(), ders.dim());
  if (m * emb != incl * phi_matrix(small, h, ders)) nat.fail("restriction of phi3 differs from phi");
  iso.reports.push_back(nat);
  iso.reports.push_back(unit_embedding_report(dec.qbar));
  return iso;
}

namespace {

struct PsiParts {
  MagicCell cell;
  TitsAlgebra t;
  Matrix m;
};

PsiParts psi_parts() {
  if (gf::modulus() != 3) throw std::invalid_argument("psi needs characteristic 3");
  SymmetricComposition s12 = make_symmetric(CompositionKind::S12);
  MagicCell cell = build_g(s12, s12);
  SuperAlgebra k3 = make_K3();
  TitsAlgebra t = make_tits(make_split_quaternion(), make_K9());
  const SuperSpace& sp = k3.space();
  const Matrix id = Matrix::Identity(3, 3);
  Matrix m = Matrix::Zero(t.T.dim(), cell.g.dim());
  for (Index k = 0; k < cell.tri.dim(); ++k) {
    const TrialityElement d = cell.tri.element(k);
    m.col(cell.tri_begin() + k) = t.der_element(operator_tensor(d.d[0], id, 0, sp, sp));
  }
  for (Index k = 0; k < cell.tri_prime.dim(); ++k) {
    const TrialityElement d = cell.tri_prime.element(k);
    m.col(cell.tri_prime_begin() + k) = t.der_element(operator_tensor(id, d.d[0], d.parity, sp, sp));
  }
  for (int i = 0; i < 3; ++i)
    for (Index x = 0; x < 3; ++x)
      for (Index xp = 0; xp < 3; ++xp) m(t.qh(i, x * 3 + xp), cell.iota(i, x, xp)) = Scalar(1);
  return {std::move(cell), std::move(t), std::move(m)};
}

}  // namespace

NamedIsomorphism build_psi() {
  PsiParts p = psi_parts();
  const MagicCell& cell = p.cell;
  const TitsAlgebra& t = p.t;
  NamedIsomorphism iso{"psi", linear_map(cell.g, t.T, p.m), cell.g, t.T, std::nullopt, {}};
  iso.reports.push_back(iso_report(iso.map, cell.g, t.T, std::nullopt, iso.name));

  // Ψ[ι0(x⊗x'), ι0(y⊗y')] = (-1)^{|x'||y|}(σ_{x,y}⊗b(x',y')I + b(x,y)I⊗σ_{x',y'}) = -[L_{x⊗x'}, L_{y⊗y'}]
  Report key;
  key.check = "psi-key-identity";
  const SymmetricComposition& s = cell.S();
  const SuperAlgebra& k9 = t.H;
  const SuperSpace& sp = s.algebra.space();
  const Matrix id = Matrix::Identity(3, 3);
  const Index m9 = t.h_dim();
  for (Index x = 0; x < 3; ++x)
    for (Index xp = 0; xp < 3; ++xp)
      for (Index y = 0; y < 3; ++y)
        for (Index yp = 0; yp < 3; ++yp) {
          const int px = s.algebra.parity(x), pxp = s.algebra.parity(xp), py = s.algebra.parity(y),
                    pyp = s.algebra.parity(yp);
          const Vector img = p.m * cell.g.basis_product(cell.iota(0, x, xp), cell.iota(0, y, yp));
          const std::string at = "(" + sp.labels[x] + "," + sp.labels[xp] + "," + sp.labels[y] + "," + sp.labels[yp] + ")";
          if (!all_zero(img.head(3 * m9))) {
            key.fail("image leaves der K9 at " + at);
            continue;
          }
          Matrix op = Matrix::Zero(9, 9);
          for (Index k = 0; k < t.der.dim(); ++k)
            if (!img(t.der_begin() + k).is_zero()) op += img(t.der_begin() + k) * unflatten(t.der.vector(k), 9, 9);
          const Matrix sxy = sigma_xy(s, s.algebra.unit_vector(x), px, s.algebra.unit_vector(y), py);
          const Matrix sxyp = sigma_xy(s, s.algebra.unit_vector(xp), pxp, s.algebra.unit_vector(yp), pyp);
          const Matrix want = gf::sign(pxp, py) * (operator_tensor(sxy, s.b(xp, yp) * id, 0, sp, sp) +
                                                   operator_tensor(s.b(x, y) * id, sxyp, (pxp + pyp) & 1, sp, sp));
          if (op != want) key.fail("sigma form differs at " + at);
          const Matrix lcomm = supercommutator(k9.left_mult_basis(x * 3 + xp), (px + pxp) & 1,
                                               k9.left_mult_basis(y * 3 + yp), (py + pyp) & 1);
          if (op != -lcomm) key.fail("-[L, L] form differs at " + at);
        }
  iso.reports.push_back(key);
  return iso;
}

NamedIsomorphism build_psi_restricted() {
  if (gf::modulus() != 3) throw std::invalid_argument("psi-restricted needs characteristic 3");
  SymmetricComposition s12 = make_symmetric(CompositionKind::S12);
  MagicCell cell = build_g(make_symmetric(CompositionKind::S1), s12);
  TitsAlgebra t = tkk(make_K3());
  Matrix m = Matrix::Zero(t.T.dim(), cell.g.dim());
  for (Index k = 0; k < cell.tri_prime.dim(); ++k) m.col(cell.tri_prime_begin() + k) = t.der_element(cell.tri_prime.element(k).d[0]);
  for (int i = 0; i < 3; ++i)
    for (Index x = 0; x < 3; ++x) m(t.qh(i, x), cell.iota(i, 0, x)) = Scalar(1);
  NamedIsomorphism iso{"psi-restricted", linear_map(cell.g, t.T, m), cell.g, t.T, std::nullopt, {}};
  iso.reports.push_back(iso_report(iso.map, cell.g, t.T, std::nullopt, iso.name));

  // agreement with Ψ through g(S1,S12) ⊂ g(S12,S12) and e⊗K3 ⊂ K9
  Report cross;
  cross.check = "psi-restricted-vs-psi";
  PsiParts full = psi_parts();
  const Matrix emb = s1_embedding(cell, full.cell);
  HomReport eh = hom_check(linear_map(cell.g, full.cell.g, emb), cell.g, full.cell.g, std::nullopt, "g(S1,S12) in g(S12,S12)");
  cross.absorb(eh.report);
  if (!eh.injective) cross.fail("embedding is not injective");
  const SuperSpace& sp = s12.algebra.space();
  const Matrix id = Matrix::Identity(3, 3);
  Matrix eta = Matrix::Zero(full.t.T.dim(), t.T.dim());
  for (int i = 0; i < 3; ++i)
    for (Index x = 0; x < 3; ++x) eta(full.t.qh(i, 0 * 3 + x), t.qh(i, x)) = Scalar(1);
  for (Index k = 0; k < t.der.dim(); ++k) {
    const Matrix d = unflatten(t.der.vector(k), 3, 3);
    eta.col(t.der_begin() + k) = full.t.der_element(operator_tensor(id, d, t.der.parity(k), sp, sp));
  }
  if (full.m * emb != eta * m) cross.fail("restriction of psi differs from the direct map");
  iso.reports.push_back(cross);
  iso.reports.push_back(unit_embedding_report(s12));
  return iso;
}

NamedIsomorphism verify_theorem(Theorem t, CompositionKind s) {
  switch (t) {
    case Theorem::phi1: return build_phi1(s);
    case Theorem::phi2: return build_phi2(s);
    case Theorem::phi3: return build_phi3(s);
    case Theorem::psi: return build_psi();
    case Theorem::psi_restricted: return build_psi_restricted();
  }
  throw std::invalid_argument("unknown theorem");
}

}  // namespace supermagic

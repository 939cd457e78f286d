#include "supermagic/tkk.hpp"

#include "supermagic/jordan.hpp"
#include "supermagic/toolbox.hpp"

#include <stdexcept>

namespace supermagic {

QuaternionBasis make_split_quaternion() {
  SuperSpace s{{"1", "e0", "e1", "e2"}, {0, 0, 0, 0}};
  Matrix g = Matrix::Zero(4, 4);
  for (Index i = 0; i < 4; ++i) g(i, i) = Scalar(2);
  auto a = SuperAlgebra::from_products("Q", s, Kind::composition,
                                       [](Index x, Index y) {
                                         Vector v = Vector::Zero(4);
                                         if (x == 0) v(y) = Scalar(1);
                                         else if (y == 0) v(x) = Scalar(1);
                                         else if (x == y) v(0) = Scalar(-1);
                                         else {
                                           const Index i = x - 1, j = y - 1;
                                           const Index k = 3 - i - j;
                                           // e_i e_{i+1} = -e_{i+2}, e_{i+1} e_i = e_{i+2}
                                           v(1 + k) = (j == (i + 1) % 3) ? Scalar(-1) : Scalar(1);
                                         }
                                         return v;
                                       },
                                       g);
  Vector unit = Vector::Zero(4);
  unit(0) = Scalar(1);
  return {HurwitzSuperalgebra(a, unit)};
}

Report check_quaternion(const QuaternionBasis& q) {
  Report r = check_hurwitz(q.Q);
  r.check = "quaternion";
  const SuperAlgebra& a = q.Q.algebra;
  for (Index x = 0; x < 4; ++x)
    for (Index y = 0; y < 4; ++y)
      for (Index z = 0; z < 4; ++z)
        if (a.multiply(a.basis_product(x, y), a.unit_vector(z)) != a.multiply(a.unit_vector(x), a.basis_product(y, z)))
          r.fail("associativity fails at (" + a.space().labels[x] + "," + a.space().labels[y] + "," +
                 a.space().labels[z] + ")");
  std::vector<Vector> comms;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Vector c = a.multiply(q.e_vec(i), q.e_vec(j)) - a.multiply(q.e_vec(j), q.e_vec(i));
      if (!c(0).is_zero()) r.fail("[e_i, e_j] leaves Q0");
      comms.push_back(c);
    }
  if (Subspace::span(comms, 4).dim() != 3) r.fail("[Q0, Q0] != Q0");
  return r;
}

Vector TitsAlgebra::der_element(const Matrix& d) const {
  Vector v = Vector::Zero(T.dim());
  v.tail(der.dim()) = der.coordinates_or_throw(flatten(d), "der " + H.name());
  return v;
}

TitsAlgebra make_tits(const QuaternionBasis& q, const SuperAlgebra& h) {
  const GradedSpan& der = derivations_cached(h);
  const Index m = h.dim(), nd = der.dim(), N = 3 * m + nd;
  const SuperAlgebra& qa = q.Q.algebra;

  SuperSpace space;
  for (int i = 0; i < 3; ++i)
    for (Index k = 0; k < m; ++k) {
      space.labels.push_back("e" + std::to_string(i) + "⊗" + h.space().labels[k]);
      space.parity.push_back(static_cast<std::uint8_t>(h.parity(k)));
    }
  for (Index k = 0; k < nd; ++k) {
    space.labels.push_back("d" + std::to_string(k));
    space.parity.push_back(static_cast<std::uint8_t>(der.parity(k)));
  }

  std::vector<Matrix> dops, lops;
  for (Index k = 0; k < nd; ++k) dops.push_back(unflatten(der.vector(k), m, m));
  for (Index k = 0; k < m; ++k) lops.push_back(h.left_mult_basis(k));
  // d_{x,y} in der coordinates
  std::vector<Vector> dxy(static_cast<std::size_t>(m * m));
  for (Index x = 0; x < m; ++x)
    for (Index y = 0; y < m; ++y) {
      const Matrix c = supercommutator(lops[x], h.parity(x), lops[y], h.parity(y));
      dxy[static_cast<std::size_t>(x * m + y)] = der.coordinates_or_throw(flatten(c), "d_{x,y} in der " + h.name());
    }
  // [e_i, e_j] in Q, as coefficients on e0, e1, e2
  auto qcomm = [&](int i, int j) {
    return Vector(qa.multiply(q.e_vec(i), q.e_vec(j)) - qa.multiply(q.e_vec(j), q.e_vec(i)));
  };

  auto bracket = [&](Index a, Index b) {
    Vector out = Vector::Zero(N);
    const bool da = a >= 3 * m, db = b >= 3 * m;
    if (da && db) {
      const Index ka = a - 3 * m, kb = b - 3 * m;
      const Matrix c = supercommutator(dops[ka], der.parity(ka), dops[kb], der.parity(kb));
      out.tail(nd) = der.coordinates_or_throw(flatten(c), "der " + h.name() + " bracket");
    } else if (da || db) {
      const Index dk = (da ? a : b) - 3 * m;
      const Index o = da ? b : a;
      const int i = static_cast<int>(o / m);
      const Index x = o % m;
      Vector v = Vector::Zero(N);
      v.segment(i * m, m) = dops[dk].col(x);
      if (da) out = v;
      else out = -gf::sign(der.parity(dk), h.parity(x)) * v;  // [a⊗x, d] = -(-1)^{|d||x|}[d, a⊗x]
    } else {
      const int i = static_cast<int>(a / m), j = static_cast<int>(b / m);
      const Index x = a % m, y = b % m;
      const Vector c = qcomm(i, j);
      const Vector xy = h.basis_product(x, y);
      for (int k = 0; k < 3; ++k)
        if (!c(1 + k).is_zero()) out.segment(k * m, m) += c(1 + k) * xy;
      const Scalar bq = q.b_q(q.e_vec(i), q.e_vec(j));
      if (!bq.is_zero()) out.tail(nd) -= Scalar(2) * bq * dxy[static_cast<std::size_t>(x * m + y)];
    }
    return out;
  };
  SuperAlgebra t = SuperAlgebra::from_products("T(Q," + h.name() + ")", space, Kind::lie, bracket);
  return {q, h, der, std::move(t)};
}

TitsAlgebra tkk(const SuperAlgebra& j) { return make_tits(make_split_quaternion(), j); }

Report check_tits_blocks(const TitsAlgebra& t) {
  Report r;
  r.check = "tits-blocks:" + t.T.name();
  const Index m = t.h_dim(), N = t.T.dim();
  for (Index a = t.der_begin(); a < N; ++a)
    for (Index b = 0; b < N; ++b)
      for (const auto& term : t.T.product(a, b)) {
        const bool into_der = term.index >= t.der_begin();
        if (b >= t.der_begin() && !into_der) r.fail("[der, der] leaves der H at " + t.T.space().labels[b]);
        if (b < t.der_begin() && into_der) r.fail("[der, Q0⊗H] leaves Q0⊗H at " + t.T.space().labels[b]);
      }
  (void)m;
  return r;
}

}  // namespace supermagic

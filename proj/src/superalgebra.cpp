#include "supermagic/superalgebra.hpp"

#include <set>
#include <stdexcept>

namespace supermagic {

std::string to_string(const GradedDim& d) {
  return std::to_string(d.even) + "|" + std::to_string(d.odd);
}

GradedDim SuperSpace::graded_dim() const {
  GradedDim d;
  for (auto p : parity) (p ? d.odd : d.even)++;
  return d;
}

void SuperSpace::validate() const {
  if (labels.size() != parity.size())
    throw std::invalid_argument("superspace: labels and parities differ in length");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw std::invalid_argument("superspace: duplicate label " + l);
  for (auto p : parity)
    if (p > 1) throw std::invalid_argument("superspace: parity must be 0 or 1");
}

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) s.push_back({k, v(k)});
  return s;
}

Vector to_dense(const SparseVec& s, Index n) {
  Vector v = Vector::Zero(n);
  for (const auto& t : s) v(t.index) += t.coeff;
  return v;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::lie: return "lie";
    case Kind::jordan: return "jordan";
    case Kind::composition: return "composition";
    case Kind::plain: return "plain";
  }
  return "plain";
}

Kind kind_from_string(const std::string& s) {
  if (s == "lie") return Kind::lie;
  if (s == "jordan") return Kind::jordan;
  if (s == "composition") return Kind::composition;
  if (s == "plain") return Kind::plain;
  throw std::invalid_argument("unknown algebra kind: " + s);
}

SuperAlgebra::SuperAlgebra(std::string name, SuperSpace space, Kind kind,
                           std::vector<SparseVec> table, std::optional<Matrix> form)
    : name_(std::move(name)),
      space_(std::move(space)),
      kind_(kind),
      table_(std::move(table)),
      form_(std::move(form)) {
  space_.validate();
  const Index n = space_.dim();
  if (static_cast<Index>(table_.size()) != n * n)
    throw std::invalid_argument(name_ + ": structure table has wrong size");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& t : product(i, j)) {
        if (t.index < 0 || t.index >= n)
          throw std::invalid_argument(name_ + ": structure index out of range");
        if (t.coeff.is_zero()) continue;
        if (((parity(i) + parity(j)) & 1) != parity(t.index))
          throw std::invalid_argument(name_ + ": product " + space_.labels[i] + "*" +
                                      space_.labels[j] + " is not parity-homogeneous");
      }
  for (auto& s : table_)
    std::erase_if(s, [](const Term& t) { return t.coeff.is_zero(); });
  if (form_) {
    const Matrix& g = *form_;
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument(name_ + ": form has wrong shape");
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        if (parity(i) != parity(j) && !g(i, j).is_zero())
          throw std::invalid_argument(name_ + ": bilinear form is not even");
        if (g(i, j) != gf::sign(parity(i), parity(j)) * g(j, i))
          throw std::invalid_argument(name_ + ": bilinear form is not supersymmetric");
      }
  }
}

SuperAlgebra SuperAlgebra::from_products(std::string name, SuperSpace space, Kind kind,
                                         const ProductFn& product, std::optional<Matrix> form) {
  const Index n = space.dim();
  std::vector<SparseVec> table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) table[static_cast<std::size_t>(i * n + j)] = to_sparse(product(i, j));
  return SuperAlgebra(std::move(name), std::move(space), kind, std::move(table), std::move(form));
}

Vector SuperAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw std::invalid_argument(name_ + ": multiply dimension mismatch");
  Vector out = Vector::Zero(dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < dim(); ++j) {
      if (y(j).is_zero()) continue;
      const Scalar c = x(i) * y(j);
      for (const auto& t : product(i, j)) out(t.index) += c * t.coeff;
    }
  }
  return out;
}

Vector SuperAlgebra::unit_vector(Index i) const {
  Vector v = Vector::Zero(dim());
  v(i) = Scalar(1);
  return v;
}

Matrix SuperAlgebra::left_mult(const Vector& x) const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < dim(); ++j)
      for (const auto& t : product(i, j)) m(t.index, j) += x(i) * t.coeff;
  }
  return m;
}

Matrix SuperAlgebra::right_mult(const Vector& x) const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < dim(); ++j)
      for (const auto& t : product(j, i)) m(t.index, j) += x(i) * t.coeff;
  }
  return m;
}

Matrix SuperAlgebra::left_mult_basis(Index i) const { return left_mult(unit_vector(i)); }
Matrix SuperAlgebra::right_mult_basis(Index i) const { return right_mult(unit_vector(i)); }

Scalar SuperAlgebra::bilinear(const Vector& x, const Vector& y) const {
  if (!form_) throw std::logic_error(name_ + " carries no bilinear form");
  return (x.transpose() * (*form_) * y)(0, 0);
}

std::size_t SuperAlgebra::nonzeros() const {
  std::size_t n = 0;
  for (const auto& s : table_) n += s.size();
  return n;
}

SuperAlgebra SuperAlgebra::renamed(std::string name) const {
  SuperAlgebra a = *this;
  a.name_ = std::move(name);
  return a;
}

SuperAlgebra SuperAlgebra::with_kind(Kind kind) const {
  SuperAlgebra a = *this;
  a.kind_ = kind;
  return a;
}

SuperAlgebra SuperAlgebra::with_entry(Index i, Index j, Index k, Scalar c) const {
  std::vector<SparseVec> table = table_;
  auto& s = table[static_cast<std::size_t>(i * dim() + j)];
  std::erase_if(s, [k](const Term& t) { return t.index == k; });
  if (!c.is_zero()) s.push_back({k, c});
  return SuperAlgebra(name_, space_, kind_, std::move(table), form_);
}

bool structurally_equal(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.dim() != b.dim() || a.space_.parity != b.space_.parity || a.kind_ != b.kind_) return false;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
  if (a.form_.has_value() != b.form_.has_value()) return false;
  return !a.form_ || *a.form_ == *b.form_;
}

std::optional<int> operator_parity(const Matrix& m, const SuperSpace& domain,
                                   const SuperSpace& codomain) {
  bool has_even = false, has_odd = false;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      (entry_parity(codomain, r, domain, c) ? has_odd : has_even) = true;
    }
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? 1 : 0;
}

Matrix supercommutator(const Matrix& a, int pa, const Matrix& b, int pb) {
  Matrix ab = a * b;
  Matrix ba = b * a;
  if (pa & pb & 1) return ab + ba;
  return ab - ba;
}

Vector flatten(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unflatten(const Vector& v, Index rows, Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

GradedSpan::GradedSpan(std::vector<std::uint8_t> ambient_parity, Subspace even, Subspace odd)
    : ambient_parity_(std::move(ambient_parity)), even_(std::move(even)), odd_(std::move(odd)) {}

GradedSpan GradedSpan::of(const std::vector<Vector>& vectors, std::vector<std::uint8_t> ambient_parity) {
  const Index n = static_cast<Index>(ambient_parity.size());
  std::vector<Vector> ev, od;
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("graded span: ambient mismatch");
    bool e = false, o = false;
    for (Index i = 0; i < n; ++i)
      if (!v(i).is_zero()) (ambient_parity[static_cast<std::size_t>(i)] ? o : e) = true;
    if (e && o) throw std::invalid_argument("graded span: vector is not homogeneous");
    if (o) od.push_back(v);
    else if (e) ev.push_back(v);
  }
  return GradedSpan(std::move(ambient_parity), Subspace::span(ev, n), Subspace::span(od, n));
}

Vector GradedSpan::vector(Index k) const {
  return k < even_.dim() ? even_.vector(k) : odd_.vector(k - even_.dim());
}

std::optional<Vector> GradedSpan::coordinates(const Vector& v) const {
  if (v.size() != ambient()) throw std::invalid_argument("graded span: ambient mismatch");
  Vector c(dim());
  for (Index k = 0; k < even_.dim(); ++k) c(k) = v(even_.pivots()[k]);
  for (Index k = 0; k < odd_.dim(); ++k) c(even_.dim() + k) = v(odd_.pivots()[k]);
  Vector back = Vector::Zero(ambient());
  if (even_.dim() > 0) back += even_.basis().transpose() * c.head(even_.dim());
  if (odd_.dim() > 0) back += odd_.basis().transpose() * c.tail(odd_.dim());
  if (back != v) return std::nullopt;
  return c;
}

Vector GradedSpan::coordinates_or_throw(const Vector& v, const std::string& what) const {
  auto c = coordinates(v);
  if (!c) throw std::logic_error(what + ": vector lies outside the span");
  return *c;
}

Subspace GradedSpan::whole() const { return sum(even_, odd_); }

std::vector<std::uint8_t> operator_entry_parities(const SuperSpace& space) {
  const Index n = space.dim();
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n * n));
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      out[static_cast<std::size_t>(r * n + c)] = static_cast<std::uint8_t>(entry_parity(space, r, space, c));
  return out;
}

Matrix span_operator(const GradedSpan& ops, Index k, Index n) {
  return unflatten(ops.vector(k), n, n);
}

SuperAlgebra operator_lie_algebra(const std::string& name, const GradedSpan& ops,
                                  const SuperSpace& space, const std::string& label_prefix) {
  const Index n = space.dim();
  const Index d = ops.dim();
  std::vector<Matrix> mats;
  mats.reserve(static_cast<std::size_t>(d));
  SuperSpace lie_space;
  for (Index k = 0; k < d; ++k) {
    mats.push_back(span_operator(ops, k, n));
    lie_space.labels.push_back(label_prefix + std::to_string(k));
    lie_space.parity.push_back(static_cast<std::uint8_t>(ops.parity(k)));
  }
  return SuperAlgebra::from_products(name, lie_space, Kind::lie, [&](Index i, Index j) {
    Matrix c = supercommutator(mats[i], ops.parity(i), mats[j], ops.parity(j));
    return ops.coordinates_or_throw(flatten(c), name + " bracket closure");
  });
}

}  // namespace supermagic

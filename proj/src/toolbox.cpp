#include "supermagic/toolbox.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace supermagic {

unsigned worker_count() {
  if (const char* env = std::getenv("SUPERMAGIC_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return static_cast<unsigned>(w);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

/// Dense int64 accumulator with a touched-index list, reduced mod p lazily.
class Accumulator {
 public:
  explicit Accumulator(Index n) : acc_(static_cast<std::size_t>(n), 0), seen_(static_cast<std::size_t>(n), 0) {}

  void add(Index k, std::int64_t v) {
    auto ks = static_cast<std::size_t>(k);
    if (!seen_[ks]) {
      seen_[ks] = 1;
      touched_.push_back(k);
    }
    acc_[ks] += v;
  }

  /// acc += sign * (x * y) for sparse x, y.
  void add_product(const SuperAlgebra& a, const SparseVec& x, const SparseVec& y, std::int64_t sign) {
    for (const auto& tx : x)
      for (const auto& ty : y) {
        const std::int64_t c = sign * static_cast<std::int64_t>(tx.coeff.value()) * ty.coeff.value() % p_;
        for (const auto& t : a.product(tx.index, ty.index)) add(t.index, c * t.coeff.value());
      }
  }

  bool is_zero() const {
    for (Index k : touched_)
      if (acc_[static_cast<std::size_t>(k)] % p_ != 0) return false;
    return true;
  }

  SparseVec take() {
    SparseVec out;
    std::sort(touched_.begin(), touched_.end());
    for (Index k : touched_) {
      auto ks = static_cast<std::size_t>(k);
      const Scalar v(acc_[ks]);
      if (!v.is_zero()) out.push_back({k, v});
      acc_[ks] = 0;
      seen_[ks] = 0;
    }
    touched_.clear();
    return out;
  }

  void clear() { take(); }

 private:
  std::int64_t p_ = gf::modulus();
  std::vector<std::int64_t> acc_;
  std::vector<std::uint8_t> seen_;
  std::vector<Index> touched_;
};

SparseVec unit_sparse(Index i) { return {{i, Scalar(1)}}; }

std::int64_t sgn(int a, int b) { return (a & b & 1) ? -1 : 1; }

std::string triple_label(const SuperAlgebra& a, Index x, Index y, Index z) {
  const auto& l = a.space().labels;
  return "(" + l[x] + ", " + l[y] + ", " + l[z] + ")";
}

/// Basis kept in semi-echelon form: each row is zero at the pivots of the
/// rows inserted before it, so sequential reduction decides membership.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(Index n) : n_(n) {}

  /// Adds v if independent; returns true when added.
  bool insert(Vector v) {
    reduce(v);
    Index piv = -1;
    for (Index i = 0; i < n_; ++i)
      if (!v(i).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    v *= v(piv).inverse();
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  void reduce(Vector& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar f = v(pivots_[k]);
      if (!f.is_zero()) detail::axpy_sub(v.data(), rows_[k].data(), f, n_);
    }
  }

  Index dim() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Vector>& rows() const { return rows_; }
  Subspace subspace() const { return Subspace::span(rows_, n_); }

 private:
  Index n_;
  std::vector<Vector> rows_;
  std::vector<Index> pivots_;
};

Subspace spin(const Vector& v, const std::vector<Matrix>& gens, Index n) {
  IncrementalBasis b(n);
  std::vector<Vector> queue;
  if (b.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vector u = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      Vector w = g * u;
      if (b.insert(w)) queue.push_back(w);
    }
    if (b.dim() == n) break;
  }
  return b.subspace();
}

}  // namespace

// ---------------------------------------------------------------------------
// identity checkers

Report check_super_jacobi(const SuperAlgebra& a, const JacobiOptions& opt) {
  Report r;
  r.check = "super_jacobi:" + a.name();
  r.seed = opt.seed;
  r.dims = to_string(a.graded_dim());
  ReportTimer timer(r);
  const Index n = a.dim();

  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      Vector lhs = a.basis_product(i, j);
      Vector rhs = a.basis_product(j, i) * (-gf::sign(a.parity(i), a.parity(j)));
      if (lhs != rhs) r.fail("anticommutativity fails at (" + a.space().labels[i] + ", " + a.space().labels[j] + ")");
    }

  const bool exhaustive = opt.mode == JacobiOptions::Mode::exhaustive ||
                          (opt.mode == JacobiOptions::Mode::automatic && n <= opt.exhaustive_limit);
  r.note("mode", exhaustive ? "exhaustive" : "sampled");

  auto jacobi_at = [&](Accumulator& acc, Index x, Index y, Index z) {
    const int px = a.parity(x), py = a.parity(y), pz = a.parity(z);
    // (-1)^{xz}[x,[y,z]] + (-1)^{yx}[y,[z,x]] + (-1)^{zy}[z,[x,y]]
    acc.add_product(a, unit_sparse(x), a.product(y, z), sgn(px, pz));
    acc.add_product(a, unit_sparse(y), a.product(z, x), sgn(py, px));
    acc.add_product(a, unit_sparse(z), a.product(x, y), sgn(pz, py));
    const bool ok = acc.is_zero();
    acc.clear();
    return ok;
  };

  std::mutex mu;
  std::vector<std::tuple<Index, Index, Index>> bad;
  std::uint64_t checked = 0;
  if (exhaustive && n > 0) {
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(n));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        Accumulator acc(n);
        std::vector<std::tuple<Index, Index, Index>> local;
        for (Index x = w; x < n; x += workers)
          for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
              if (!jacobi_at(acc, x, y, z) && local.size() < 16) local.emplace_back(x, y, z);
        std::lock_guard lock(mu);
        bad.insert(bad.end(), local.begin(), local.end());
      });
    for (auto& t : pool) t.join();
    checked = static_cast<std::uint64_t>(n) * n * n;
  } else if (n > 0) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    Accumulator acc(n);
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      const Index x = pick(rng), y = pick(rng), z = pick(rng);
      if (!jacobi_at(acc, x, y, z) && bad.size() < 16) bad.emplace_back(x, y, z);
    }
    checked = opt.samples;
  }
  std::sort(bad.begin(), bad.end());
  for (const auto& [x, y, z] : bad) r.fail("Jacobi fails at " + triple_label(a, x, y, z));
  r.note("triples", std::to_string(checked));
  return r;
}

Report check_jordan_super(const SuperAlgebra& a) {
  Report r;
  r.check = "jordan_super:" + a.name();
  r.dims = to_string(a.graded_dim());
  ReportTimer timer(r);
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i) * gf::sign(a.parity(i), a.parity(j)))
        r.fail("supercommutativity fails at (" + a.space().labels[i] + ", " + a.space().labels[j] + ")");

  // Apply the operator identity to every basis vector w:
  // [L_u, L_z](w) = u(zw) - (-1)^{|u||z|} z(uw) with u = xy.
  Accumulator acc(n), tmp(n);
  auto commutator_term = [&](Index x, Index y, Index z, Index w, std::int64_t outer) {
    const SparseVec& u = a.product(x, y);
    const int pu = (a.parity(x) + a.parity(y)) & 1;
    acc.add_product(a, u, a.product(z, w), outer);
    tmp.add_product(a, u, unit_sparse(w), 1);
    SparseVec uw = tmp.take();
    acc.add_product(a, unit_sparse(z), uw, -outer * sgn(pu, a.parity(z)));
  };
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        for (Index w = 0; w < n; ++w) {
          const int px = a.parity(x), py = a.parity(y), pz = a.parity(z);
          commutator_term(x, y, z, w, sgn(px, pz));
          commutator_term(y, z, x, w, sgn(py, px));
          commutator_term(z, x, y, w, sgn(pz, py));
          if (!acc.is_zero())
            r.fail("Jordan identity fails at " + triple_label(a, x, y, z) + " on " + a.space().labels[w]);
          acc.clear();
        }
  return r;
}

GradedLinearMap left_mult_operator(const SuperAlgebra& a, const Vector& x) {
  GradedLinearMap m{a.space(), a.space(), a.left_mult(x), 0};
  m.parity = operator_parity(m.matrix, a.space(), a.space()).value_or(0);
  return m;
}

// ---------------------------------------------------------------------------
// substructures

Subspace derived_subalgebra(const SuperAlgebra& a) {
  std::vector<Vector> v;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      if (!a.product(i, j).empty()) v.push_back(a.basis_product(i, j));
  return Subspace::span(v, a.dim());
}

Subspace center(const SuperAlgebra& a) {
  const Index n = a.dim();
  std::vector<SparseRow<Scalar>> rows;
  // row (j, k, side): sum_i z_i c_{ij}^k = 0 and sum_i z_i c_{ji}^k = 0
  for (int side = 0; side < 2; ++side)
    for (Index j = 0; j < n; ++j) {
      std::vector<SparseRow<Scalar>> by_k(static_cast<std::size_t>(n));
      for (Index i = 0; i < n; ++i)
        for (const auto& t : side == 0 ? a.product(i, j) : a.product(j, i))
          by_k[static_cast<std::size_t>(t.index)].emplace_back(i, t.coeff);
      for (auto& row : by_k)
        if (!row.empty()) rows.push_back(std::move(row));
    }
  return sparse_kernel(rows, n);
}

Subspace ideal_closure(const SuperAlgebra& a, const Subspace& seed) {
  seed.check_ambient(a.dim());
  const Index n = a.dim();
  IncrementalBasis b(n);
  std::vector<Vector> queue;
  for (Index k = 0; k < seed.dim(); ++k)
    if (b.insert(seed.vector(k))) queue.push_back(seed.vector(k));
  while (!queue.empty() && b.dim() < n) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (Index j = 0; j < n; ++j) {
      const Vector e = a.unit_vector(j);
      for (Vector w : {a.multiply(v, e), a.multiply(e, v)})
        if (b.insert(w)) queue.push_back(w);
    }
  }
  return b.subspace();
}

bool is_ideal(const SuperAlgebra& a, const Subspace& s) {
  s.check_ambient(a.dim());
  for (Index k = 0; k < s.dim(); ++k) {
    const Vector v = s.vector(k);
    for (Index j = 0; j < a.dim(); ++j) {
      const Vector e = a.unit_vector(j);
      if (!s.contains(a.multiply(v, e)) || !s.contains(a.multiply(e, v))) return false;
    }
  }
  return true;
}

Quotient quotient(const SuperAlgebra& a, const Subspace& ideal) {
  ideal.check_ambient(a.dim());
  if (!is_ideal(a, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal of " + a.name());
  for (Index k = 0; k < ideal.dim(); ++k) {
    bool e = false, o = false;
    for (Index i = 0; i < a.dim(); ++i)
      if (!ideal.basis()(k, i).is_zero()) (a.parity(i) ? o : e) = true;
    if (e && o) throw std::invalid_argument("quotient: ideal is not graded");
  }
  Quotient q;
  q.complement = ideal.non_pivots();
  const Index m = static_cast<Index>(q.complement.size());
  q.projection = Matrix::Zero(m, a.dim());
  for (Index c = 0; c < a.dim(); ++c) {
    const Vector r = ideal.reduce(a.unit_vector(c));
    for (Index i = 0; i < m; ++i) q.projection(i, c) = r(q.complement[static_cast<std::size_t>(i)]);
  }
  SuperSpace space;
  for (Index i : q.complement) {
    space.labels.push_back(a.space().labels[static_cast<std::size_t>(i)]);
    space.parity.push_back(static_cast<std::uint8_t>(a.parity(i)));
  }
  const Matrix& proj = q.projection;
  const auto& comp = q.complement;
  q.algebra = SuperAlgebra::from_products(a.name() + "/I", space, a.kind(), [&](Index i, Index j) {
    return Vector(proj * a.basis_product(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)]));
  });
  return q;
}

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
  const Index na = a.dim(), nb = b.dim(), n = na + nb;
  SuperSpace space;
  for (Index i = 0; i < na; ++i) {
    space.labels.push_back("1:" + a.space().labels[i]);
    space.parity.push_back(static_cast<std::uint8_t>(a.parity(i)));
  }
  for (Index i = 0; i < nb; ++i) {
    space.labels.push_back("2:" + b.space().labels[i]);
    space.parity.push_back(static_cast<std::uint8_t>(b.parity(i)));
  }
  std::vector<SparseVec> table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < na; ++j) table[static_cast<std::size_t>(i * n + j)] = a.product(i, j);
  for (Index i = 0; i < nb; ++i)
    for (Index j = 0; j < nb; ++j) {
      SparseVec s = b.product(i, j);
      for (auto& t : s) t.index += na;
      table[static_cast<std::size_t>((na + i) * n + na + j)] = std::move(s);
    }
  std::optional<Matrix> form;
  if (a.form() && b.form()) {
    Matrix g = Matrix::Zero(n, n);
    g.topLeftCorner(na, na) = *a.form();
    g.bottomRightCorner(nb, nb) = *b.form();
    form = g;
  }
  const Kind kind = a.kind() == b.kind() ? a.kind() : Kind::plain;
  return SuperAlgebra(a.name() + "+" + b.name(), space, kind, std::move(table), form);
}

SuperAlgebra graded_tensor(const SuperAlgebra& a, const SuperAlgebra& b) {
  const Index na = a.dim(), nb = b.dim();
  SuperSpace space;
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < nb; ++j) {
      space.labels.push_back(a.space().labels[i] + "⊗" + b.space().labels[j]);
      space.parity.push_back(static_cast<std::uint8_t>((a.parity(i) + b.parity(j)) & 1));
    }
  const Index n = na * nb;
  std::vector<SparseVec> table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < nb; ++j)
      for (Index k = 0; k < na; ++k)
        for (Index l = 0; l < nb; ++l) {
          const Scalar s = gf::sign(b.parity(j), a.parity(k));
          SparseVec& out = table[static_cast<std::size_t>((i * nb + j) * n + k * nb + l)];
          for (const auto& ta : a.product(i, k))
            for (const auto& tb : b.product(j, l))
              out.push_back({ta.index * nb + tb.index, s * ta.coeff * tb.coeff});
        }
  const Kind kind = a.kind() == b.kind() ? a.kind() : Kind::plain;
  return SuperAlgebra(a.name() + "⊗" + b.name(), space, kind, std::move(table));
}

Matrix operator_tensor(const Matrix& f, const Matrix& g, int g_parity, const SuperSpace& first,
                       const SuperSpace& second) {
  const Index na = first.dim(), nb = second.dim();
  Matrix m = Matrix::Zero(na * nb, na * nb);
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < nb; ++j) {
      const Scalar s = gf::sign(g_parity, first.parity_of(i));
      for (Index k = 0; k < na; ++k) {
        if (f(k, i).is_zero()) continue;
        for (Index l = 0; l < nb; ++l)
          if (!g(l, j).is_zero()) m(k * nb + l, i * nb + j) += s * f(k, i) * g(l, j);
      }
    }
  return m;
}

// ---------------------------------------------------------------------------
// derivations

GradedSpan derivations(const SuperAlgebra& a) {
  const Index n = a.dim();
  std::vector<Vector> found;
  for (int pi = 0; pi < 2; ++pi) {
    // unknown index of operator entry (m, k) of parity pi
    std::vector<Index> col(static_cast<std::size_t>(n * n), -1);
    std::vector<Index> entry;
    for (Index m = 0; m < n; ++m)
      for (Index k = 0; k < n; ++k)
        if (((a.parity(m) + a.parity(k)) & 1) == pi) {
          col[static_cast<std::size_t>(m * n + k)] = static_cast<Index>(entry.size());
          entry.push_back(m * n + k);
        }
    if (entry.empty()) continue;
    auto var = [&](Index m, Index k) { return col[static_cast<std::size_t>(m * n + k)]; };

    std::vector<SparseRow<Scalar>> rows;
    std::vector<SparseRow<Scalar>> by_m(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const Scalar si = gf::sign(pi, a.parity(i));
        // d(b_i b_j)_m
        for (const auto& t : a.product(i, j))
          for (Index m = 0; m < n; ++m)
            if (var(m, t.index) >= 0) by_m[static_cast<std::size_t>(m)].emplace_back(var(m, t.index), t.coeff);
        // -(d(b_i) b_j)_m
        for (Index k = 0; k < n; ++k) {
          if (var(k, i) < 0) continue;
          for (const auto& t : a.product(k, j)) by_m[static_cast<std::size_t>(t.index)].emplace_back(var(k, i), -t.coeff);
        }
        // -(-1)^{pi|i|} (b_i d(b_j))_m
        for (Index k = 0; k < n; ++k) {
          if (var(k, j) < 0) continue;
          for (const auto& t : a.product(i, k))
            by_m[static_cast<std::size_t>(t.index)].emplace_back(var(k, j), -si * t.coeff);
        }
        for (auto& row : by_m) {
          if (!row.empty()) rows.push_back(std::move(row));
          row.clear();
        }
      }
    Subspace ker = sparse_kernel(rows, static_cast<Index>(entry.size()), 0xde51 + pi);
    for (Index b = 0; b < ker.dim(); ++b) {
      Vector v = Vector::Zero(n * n);
      for (std::size_t u = 0; u < entry.size(); ++u) v(entry[u]) = ker.basis()(b, static_cast<Index>(u));
      found.push_back(std::move(v));
    }
  }
  return GradedSpan::of(found, operator_entry_parities(a.space()));
}

bool is_derivation(const SuperAlgebra& a, const Matrix& d, int parity) {
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Vector lhs = d * a.basis_product(i, j);
      const Vector rhs = a.multiply(d.col(i), a.unit_vector(j)) +
                         gf::sign(parity, a.parity(i)) * a.multiply(a.unit_vector(i), d.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

GradedSpan inner_derivations(const SuperAlgebra& j) {
  const Index n = j.dim();
  std::vector<Matrix> ls;
  for (Index i = 0; i < n; ++i) ls.push_back(j.left_mult_basis(i));
  std::vector<Vector> v;
  for (Index x = 0; x < n; ++x)
    for (Index y = x; y < n; ++y) {
      Matrix c = supercommutator(ls[x], j.parity(x), ls[y], j.parity(y));
      if (!all_zero(c)) v.push_back(flatten(c));
    }
  return GradedSpan::of(v, operator_entry_parities(j.space()));
}

// ---------------------------------------------------------------------------
// homomorphisms

HomReport hom_check(const GradedLinearMap& f, const SuperAlgebra& a, const SuperAlgebra& b,
                    const std::optional<Subspace>& mod, const std::string& name) {
  HomReport h;
  Report& r = h.report;
  r.check = "hom:" + name;
  r.dims = to_string(a.graded_dim()) + " -> " + to_string(b.graded_dim());
  ReportTimer timer(r);
  const Matrix& m = f.matrix;
  if (m.rows() != b.dim() || m.cols() != a.dim())
    throw std::invalid_argument("hom_check: map shape does not match the algebras");
  if (mod) mod->check_ambient(b.dim());
  if (f.parity != 0) throw std::invalid_argument("hom_check: only even maps are supported");

  for (Index c = 0; c < m.cols(); ++c)
    for (Index k = 0; k < m.rows(); ++k)
      if (!m(k, c).is_zero() && ((a.parity(c) + b.parity(k) + f.parity) & 1))
        r.fail("parity not preserved: " + a.space().labels[c] + " -> " + b.space().labels[k]);

  std::vector<SparseVec> cols;
  for (Index c = 0; c < a.dim(); ++c) cols.push_back(to_sparse(m.col(c)));
  Accumulator acc(b.dim());
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      // f(x y) - f(x) f(y); for an even map no extra sign appears
      for (const auto& t : a.product(i, j))
        for (const auto& u : cols[static_cast<std::size_t>(t.index)])
          acc.add(u.index, static_cast<std::int64_t>(t.coeff.value()) * u.coeff.value());
      acc.add_product(b, cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)], -1);
      SparseVec diff = acc.take();
      if (diff.empty()) continue;
      if (mod && mod->contains(to_dense(diff, b.dim()))) continue;
      r.fail("bracket not preserved at (" + a.space().labels[i] + ", " + a.space().labels[j] + ")");
    }
  h.homomorphism = r.passed();
  h.injective = rank(m) == a.dim();
  if (mod && mod->dim() > 0) {
    Matrix aug(b.dim(), a.dim() + mod->dim());
    aug << m, mod->basis().transpose();
    h.surjective = rank(aug) == b.dim();
  } else {
    h.surjective = rank(m) == b.dim();
  }
  r.note("injective", h.injective ? "yes" : "no");
  r.note("surjective", h.surjective ? "yes" : "no");
  return h;
}

// ---------------------------------------------------------------------------
// simplicity

SimplicityVerdict meataxe(const std::vector<Matrix>& gens, Index n, const SimplicityOptions& opt) {
  SimplicityVerdict v;
  if (n == 1) {
    v.status = Status::pass;
    v.reason = "one-dimensional module";
    return v;
  }
  std::vector<Matrix> gens_t;
  for (const auto& g : gens) gens_t.push_back(g.transpose());
  std::mt19937_64 rng(opt.seed);
  const std::uint32_t p = gf::modulus();
  std::uniform_int_distribution<std::uint32_t> coef(1, p - 1);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);

  auto proper = [n](const Subspace& s) { return s.dim() > 0 && s.dim() < n; };
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    // random element of the enveloping algebra: sum of short random words
    Matrix theta = Matrix::Zero(n, n);
    for (int t = 0; t < 3; ++t) {
      Matrix word = gens[pick(rng)];
      const int len = static_cast<int>(rng() % 3);
      for (int l = 0; l < len; ++l) word = word * gens[pick(rng)];
      theta += Scalar(coef(rng)) * word;
    }
    std::vector<std::uint32_t> lambdas;
    for (std::uint32_t l = 0; l < std::min<std::uint32_t>(p, 8); ++l) lambdas.push_back(l);
    for (std::uint32_t lam : lambdas) {
      Matrix shifted = theta - Scalar(lam) * Matrix::Identity(n, n);
      Subspace null = kernel_basis(shifted);
      if (null.dim() == 0) continue;
      for (Index k = 0; k < null.dim(); ++k) {
        Subspace s = spin(null.vector(k), gens, n);
        if (proper(s)) {
          v.status = Status::fail;
          v.witness = s;
          v.reason = "proper submodule spun from a null vector";
          return v;
        }
      }
      if (null.dim() != 1) continue;
      Subspace dual_null = kernel_basis(Matrix(shifted.transpose()));
      Subspace dual = spin(dual_null.vector(0), gens_t, n);
      if (proper(dual)) {
        // annihilator of an invariant subspace of the dual is invariant
        v.status = Status::fail;
        v.witness = kernel_basis(dual.basis());
        v.reason = "proper submodule from the dual module";
        return v;
      }
      v.status = Status::pass;
      v.reason = "Norton certificate at attempt " + std::to_string(attempt);
      return v;
    }
  }
  v.status = Status::inconclusive;
  v.reason = "no certificate within " + std::to_string(opt.attempts) + " attempts";
  return v;
}

SimplicityVerdict is_simple(const SuperAlgebra& a, const SimplicityOptions& opt) {
  const Index n = a.dim();
  if (n == 0) throw std::invalid_argument("is_simple: zero algebra");
  SimplicityVerdict v;
  const Subspace derived = derived_subalgebra(a);
  if (derived.is_zero()) {
    v.status = Status::fail;
    v.reason = "A*A = 0";
    if (n > 1) v.witness = Subspace::span(Matrix(a.unit_vector(0).transpose()));
    return v;
  }
  const Subspace z = center(a);
  if (!z.is_zero()) {
    v.status = Status::fail;
    v.witness = z;
    v.reason = "nonzero center";
    return v;
  }
  if (derived.dim() < n) {
    v.status = Status::fail;
    v.witness = derived;
    v.reason = "A*A is a proper ideal";
    return v;
  }
  std::vector<Matrix> gens;
  for (Index i = 0; i < n; ++i) {
    gens.push_back(a.left_mult_basis(i));
    gens.push_back(a.right_mult_basis(i));
  }
  Matrix parity = Matrix::Identity(n, n);
  for (Index i = 0; i < n; ++i)
    if (a.parity(i)) parity(i, i) = Scalar(-1);
  gens.push_back(parity);
  return meataxe(gens, n, opt);
}

}  // namespace supermagic

#include "supermagic/square.hpp"

#include <map>
#include <stdexcept>

namespace supermagic {

namespace {

// Precomputed pieces of one side of the cell.
struct Side {
  const TrialityAlgebra* tri;
  std::vector<std::array<Matrix, 3>> ops;        // d_i of each tri basis element
  std::vector<std::array<Vector, 3>> t_coords;   // θ^i(t_{x,y}) in tri coordinates, index x*n + y

  explicit Side(const TrialityAlgebra& t) : tri(&t) {
    for (Index k = 0; k < t.dim(); ++k) ops.push_back(t.element(k).d);
    const Index n = t.S.dim();
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const TrialityElement txy = t_basis(t.S, x, y);
        std::array<Vector, 3> c;
        for (int i = 0; i < 3; ++i) c[i] = t.dim() ? t.coordinates(theta(txy, i)) : Vector(0);
        t_coords.push_back(std::move(c));
      }
  }
  Index n() const { return tri->S.dim(); }
  int parity(Index x) const { return tri->S.algebra.parity(x); }
  Scalar b(Index x, Index y) const { return tri->S.b(x, y); }
};

}  // namespace

MagicCell build_g(const SymmetricComposition& s, const SymmetricComposition& sp) {
  MagicCell cell{tri_basis(s), tri_basis(sp), SuperAlgebra()};
  const Side L(cell.tri), R(cell.tri_prime);
  const Index n = L.n(), np = R.n();
  const Index nt = cell.tri.dim(), ntp = cell.tri_prime.dim();
  const Index N = nt + ntp + 3 * n * np;
  const SuperAlgebra& A = s.algebra;
  const SuperAlgebra& B = sp.algebra;

  SuperSpace space;
  for (Index k = 0; k < nt; ++k) {
    space.labels.push_back("t" + std::to_string(k));
    space.parity.push_back(static_cast<std::uint8_t>(cell.tri.span.parity(k)));
  }
  for (Index k = 0; k < ntp; ++k) {
    space.labels.push_back("t'" + std::to_string(k));
    space.parity.push_back(static_cast<std::uint8_t>(cell.tri_prime.span.parity(k)));
  }
  for (int i = 0; i < 3; ++i)
    for (Index x = 0; x < n; ++x)
      for (Index xp = 0; xp < np; ++xp) {
        space.labels.push_back("i" + std::to_string(i) + "(" + A.space().labels[x] + "⊗" + B.space().labels[xp] + ")");
        space.parity.push_back(static_cast<std::uint8_t>((L.parity(x) + R.parity(xp)) & 1));
      }

  // decode a basis index of an ι block
  struct Iota {
    int i;
    Index x, xp;
  };
  auto iota_of = [&](Index a) {
    const Index off = a - nt - ntp;
    return Iota{static_cast<int>(off / (n * np)), (off % (n * np)) / np, off % np};
  };
  auto block = [&](Index a) { return a < nt ? 0 : (a < nt + ntp ? 1 : 2); };

  std::vector<Vector> table(static_cast<std::size_t>(N * N));
  std::vector<char> done(static_cast<std::size_t>(N * N), 0);
  auto at = [&](Index a, Index b) -> Vector& { return table[static_cast<std::size_t>(a * N + b)]; };

  auto clause = [&](Index a, Index b) -> std::optional<Vector> {
    Vector out = Vector::Zero(N);
    const int ba = block(a), bb = block(b);
    if (ba == 0 && bb == 0) {
      for (const auto& t : cell.tri.as_lie.product(a, b)) out(t.index) += t.coeff;
      return out;
    }
    if (ba == 1 && bb == 1) {
      for (const auto& t : cell.tri_prime.as_lie.product(a - nt, b - nt)) out(nt + t.index) += t.coeff;
      return out;
    }
    if (ba < 2 && bb < 2) return out;  // [tri(S), tri(S')] = 0
    if (ba == 0 && bb == 2) {
      const Iota v = iota_of(b);
      const Matrix& d = L.ops[static_cast<std::size_t>(a)][v.i];
      for (Index r = 0; r < n; ++r)
        if (!d(r, v.x).is_zero()) out(cell.iota(v.i, r, v.xp)) += d(r, v.x);
      return out;
    }
    if (ba == 1 && bb == 2) {
      const Iota v = iota_of(b);
      const Matrix& d = R.ops[static_cast<std::size_t>(a - nt)][v.i];
      const Scalar sg = gf::sign(space.parity_of(a), L.parity(v.x));
      for (Index r = 0; r < np; ++r)
        if (!d(r, v.xp).is_zero()) out(cell.iota(v.i, v.x, r)) += sg * d(r, v.xp);
      return out;
    }
    if (ba == 2 && bb == 2) {
      const Iota u = iota_of(a), v = iota_of(b);
      const int px = L.parity(u.x), pxp = R.parity(u.xp), py = L.parity(v.x), pyp = R.parity(v.xp);
      if (v.i == (u.i + 1) % 3) {
        const Scalar sg = gf::sign(pxp, py);
        const auto& xy = A.product(u.x, v.x);
        const auto& xyp = B.product(u.xp, v.xp);
        const int k = (u.i + 2) % 3;
        for (const auto& t : xy)
          for (const auto& tp : xyp) out(cell.iota(k, t.index, tp.index)) += sg * t.coeff * tp.coeff;
        return out;
      }
      if (v.i == u.i) {
        const Scalar bp = R.b(u.xp, v.xp), bb_ = L.b(u.x, v.x);
        if (!bp.is_zero()) {
          const Scalar sg = gf::sign(px, pxp) * gf::sign(px, pyp) * gf::sign(py, pyp);
          const Vector& c = L.t_coords[static_cast<std::size_t>(u.x * n + v.x)][u.i];
          for (Index k = 0; k < nt; ++k) out(k) += sg * bp * c(k);
        }
        if (!bb_.is_zero()) {
          const Scalar sg = gf::sign(py, pxp);
          const Vector& c = R.t_coords[static_cast<std::size_t>(u.xp * np + v.xp)][u.i];
          for (Index k = 0; k < ntp; ++k) out(nt + k) += sg * bb_ * c(k);
        }
        return out;
      }
    }
    return std::nullopt;  // determined by super-anticommutativity
  };

  for (Index a = 0; a < N; ++a)
    for (Index b = 0; b < N; ++b)
      if (auto v = clause(a, b)) {
        at(a, b) = std::move(*v);
        done[static_cast<std::size_t>(a * N + b)] = 1;
      }
  for (Index a = 0; a < N; ++a)
    for (Index b = 0; b < N; ++b) {
      const Scalar sg = -gf::sign(space.parity_of(a), space.parity_of(b));
      const bool here = done[static_cast<std::size_t>(a * N + b)], there = done[static_cast<std::size_t>(b * N + a)];
      if (here && there) {
        if (at(a, b) != sg * at(b, a))
          throw std::logic_error("g(" + A.name() + "," + B.name() + "): clauses violate super-anticommutativity at (" +
                                 space.labels[a] + "," + space.labels[b] + ")");
      } else if (!here) {
        if (!there) throw std::logic_error("g: bracket undefined at (" + space.labels[a] + "," + space.labels[b] + ")");
        at(a, b) = sg * at(b, a);
      }
    }

  std::vector<SparseVec> sparse(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) sparse[k] = to_sparse(table[k]);
  cell.g = SuperAlgebra("g(" + A.name() + "," + B.name() + ")", std::move(space), Kind::lie, std::move(sparse));
  return cell;
}

MagicCell build_g(CompositionKind a, CompositionKind b) {
  return build_g(make_symmetric(a), make_symmetric(b));
}

GradedLinearMap swap_map(const MagicCell& from, const MagicCell& to) {
  const Index nt = from.tri.dim(), ntp = from.tri_prime.dim();
  if (to.tri.dim() != ntp || to.tri_prime.dim() != nt || to.S().dim() != from.S_prime().dim() ||
      to.S_prime().dim() != from.S().dim())
    throw std::invalid_argument("swap_map: cells do not match");
  const Index N = from.g.dim();
  Matrix m = Matrix::Zero(N, N);
  // tri(S) of `from` is tri(S') of `to`; both are the same canonical basis
  for (Index k = 0; k < nt; ++k) m(to.tri_prime_begin() + k, k) = Scalar(1);
  for (Index k = 0; k < ntp; ++k) m(k, from.tri_prime_begin() + k) = Scalar(1);
  const Index n = from.S().dim(), np = from.S_prime().dim();
  for (int i = 0; i < 3; ++i)
    for (Index x = 0; x < n; ++x)
      for (Index xp = 0; xp < np; ++xp)
        m(to.iota(i, xp, x), from.iota(i, x, xp)) =
            gf::sign(from.S().algebra.parity(x), from.S_prime().algebra.parity(xp));
  return {from.g.space(), to.g.space(), m, 0};
}

std::vector<std::pair<CompositionKind, CompositionKind>> all_cells() {
  std::vector<std::pair<CompositionKind, CompositionKind>> out;
  const auto& ks = kAllCompositionKinds;
  for (std::size_t i = 0; i < std::size(ks); ++i)
    for (std::size_t j = i; j < std::size(ks); ++j) out.emplace_back(ks[i], ks[j]);
  return out;
}

std::vector<std::pair<CompositionKind, CompositionKind>> parse_cells(const std::string& list) {
  if (list == "all") return all_cells();
  std::vector<std::pair<CompositionKind, CompositionKind>> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = list.find(',', pos);
    const std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) {
      // split "SaSb" at the second 'S'
      const std::size_t second = item.find('S', 1);
      if (item[0] != 'S' || second == std::string::npos)
        throw std::invalid_argument("malformed cell: " + item);
      out.emplace_back(composition_kind_from_name(item.substr(0, second)),
                       composition_kind_from_name(item.substr(second)));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<SquareCell> square_table(const std::vector<std::pair<CompositionKind, CompositionKind>>& cells,
                                     const std::optional<JacobiOptions>& jacobi) {
  std::vector<SquareCell> out;
  for (const auto& [a, b] : cells) {
    MagicCell c = build_g(a, b);
    SquareCell sc{a, b, c.g.graded_dim(), std::nullopt};
    if (jacobi) sc.jacobi = check_super_jacobi(c.g, *jacobi);
    out.push_back(std::move(sc));
  }
  return out;
}

GradedDim expected_cell_dims(CompositionKind a, CompositionKind b) {
  using K = CompositionKind;
  static const std::map<std::pair<K, K>, GradedDim> table = {
      {{K::S1, K::S1}, {3, 0}},     {{K::S1, K::S2}, {8, 0}},     {{K::S1, K::S4}, {21, 0}},
      {{K::S1, K::S8}, {52, 0}},    {{K::S2, K::S2}, {16, 0}},    {{K::S2, K::S4}, {35, 0}},
      {{K::S2, K::S8}, {78, 0}},    {{K::S4, K::S4}, {66, 0}},    {{K::S4, K::S8}, {133, 0}},
      {{K::S8, K::S8}, {248, 0}},   {{K::S1, K::S12}, {6, 8}},    {{K::S2, K::S12}, {11, 14}},
      {{K::S4, K::S12}, {24, 26}},  {{K::S8, K::S12}, {55, 50}},  {{K::S1, K::S42}, {21, 14}},
      {{K::S2, K::S42}, {35, 20}},  {{K::S4, K::S42}, {66, 32}},  {{K::S8, K::S42}, {133, 56}},
      {{K::S12, K::S12}, {21, 16}}, {{K::S12, K::S42}, {36, 40}}, {{K::S42, K::S42}, {78, 64}},
  };
  auto it = table.find({a, b});
  if (it == table.end()) it = table.find({b, a});
  return it->second;
}

}  // namespace supermagic

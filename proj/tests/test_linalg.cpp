#include "doctest.h"
#include "supermagic/linalg.hpp"

#include <random>

using namespace supermagic;
using gf::Fp;

namespace {

MatrixX<Fp> from_ints(Index r, Index c, std::initializer_list<int> xs) {
  MatrixX<Fp> m(r, c);
  auto it = xs.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Fp(*it++);
  return m;
}

MatrixX<Fp> random_matrix(Index r, Index c, std::mt19937_64& rng, int density = 3) {
  MatrixX<Fp> m = MatrixX<Fp>::Zero(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      if (rng() % density == 0) m(i, j) = Fp(static_cast<long long>(rng() % 1000));
  return m;
}

}  // namespace

TEST_CASE("field arithmetic mod 3") {
  gf::ModulusScope scope(3);
  CHECK(Fp(2) + Fp(2) == Fp(1));
  CHECK(Fp(-1) == Fp(2));
  CHECK(Fp(2).inverse() == Fp(2));
  CHECK(gf::half() == Fp(2));
  CHECK_THROWS_AS(Fp(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(gf::set_modulus(9), std::invalid_argument);
  CHECK_THROWS_AS(gf::set_modulus(2), std::invalid_argument);
}

TEST_CASE("inverse property for every residue") {
  for (std::uint32_t p : {3u, 5u, 7u, 101u, 32749u}) {
    gf::ModulusScope scope(p);
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 2000); ++a)
      CHECK(Fp(a) * Fp(a).inverse() == Fp(1));
  }
}

TEST_CASE("rank and kernel of a small matrix over GF(3)") {
  gf::ModulusScope scope(3);
  // third row = first + second
  auto m = from_ints(3, 4, {1, 2, 0, 1, 0, 1, 1, 2, 1, 0, 1, 0});
  CHECK(rank(m) == 2);
  auto k = kernel_basis(m);
  CHECK(k.dim() == 2);
  for (Index i = 0; i < k.dim(); ++i) CHECK(all_zero(m * k.vector(i)));
}

TEST_CASE("rank plus nullity and kernel annihilation on random matrices") {
  for (std::uint32_t p : {3u, 7u}) {
    gf::ModulusScope scope(p);
    std::mt19937_64 rng(11 + p);
    for (int trial = 0; trial < 30; ++trial) {
      const Index r = 1 + static_cast<Index>(rng() % 12), c = 1 + static_cast<Index>(rng() % 12);
      auto m = random_matrix(r, c, rng);
      auto k = kernel_basis(m);
      CHECK(rank(m) + k.dim() == c);
      for (Index i = 0; i < k.dim(); ++i) CHECK(all_zero(m * k.vector(i)));
      CHECK(rank(m.transpose().eval()) == rank(m));
    }
  }
}

TEST_CASE("rref is canonical for a row space") {
  gf::ModulusScope scope(5);
  std::mt19937_64 rng(3);
  auto m = random_matrix(4, 7, rng, 1);
  auto g = random_matrix(4, 4, rng, 1);
  while (rank(g) < 4) g = random_matrix(4, 4, rng, 1);
  MatrixX<Fp> mixed = g * m;
  CHECK(BasicSubspace<Fp>::span(m) == BasicSubspace<Fp>::span(mixed));
}

TEST_CASE("solve returns a solution or nothing") {
  gf::ModulusScope scope(3);
  auto a = from_ints(2, 2, {1, 1, 1, 1});
  VectorX<Fp> b(2);
  b << Fp(1), Fp(2);
  CHECK_FALSE(solve(a, b).has_value());
  b << Fp(1), Fp(1);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
}

TEST_CASE("subspace sum and intersection dimensions") {
  gf::ModulusScope scope(7);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = BasicSubspace<Fp>::span(random_matrix(3, 8, rng, 2));
    auto v = BasicSubspace<Fp>::span(random_matrix(4, 8, rng, 2));
    auto s = sum(u, v);
    auto i = intersect(u, v);
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(s.contains(u));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
  }
}

TEST_CASE("coordinates reconstruct a vector of the subspace") {
  gf::ModulusScope scope(3);
  std::mt19937_64 rng(8);
  auto s = BasicSubspace<Fp>::span(random_matrix(4, 9, rng, 2));
  VectorX<Fp> v = VectorX<Fp>::Zero(9);
  for (Index k = 0; k < s.dim(); ++k) v += Fp(static_cast<long long>(k + 1)) * s.vector(k);
  auto c = s.coordinates(v);
  REQUIRE(c.has_value());
  for (Index k = 0; k < s.dim(); ++k) CHECK((*c)(k) == Fp(static_cast<long long>(k + 1)));
}

TEST_CASE("sparse kernel agrees with the dense kernel on a tall system") {
  gf::ModulusScope scope(3);
  std::mt19937_64 rng(21);
  const Index cols = 40, rows = 110000;  // large enough for the compressed path
  // rows drawn from a fixed 45-dimensional row space
  auto gen = random_matrix(30, cols, rng, 4);
  std::vector<SparseRow<Fp>> sparse;
  MatrixX<Fp> dense(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    VectorX<Fp> r = VectorX<Fp>::Zero(cols);
    for (int t = 0; t < 3; ++t) r += Fp(static_cast<long long>(rng() % 3)) * gen.row(static_cast<Index>(rng() % 30)).transpose();
    dense.row(i) = r.transpose();
    SparseRow<Fp> s;
    for (Index c = 0; c < cols; ++c)
      if (!r(c).is_zero()) s.emplace_back(c, r(c));
    sparse.push_back(std::move(s));
  }
  auto k1 = sparse_kernel(sparse, cols, 9);
  auto k2 = kernel_basis(dense);
  CHECK(k1 == k2);
}

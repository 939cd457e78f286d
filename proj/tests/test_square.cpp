#include "doctest.h"
#include "supermagic/square.hpp"

using namespace supermagic;

TEST_CASE("cell dimensions follow the block formula") {
  gf::ModulusScope scope(3);
  for (auto [a, b] : all_cells()) {
    auto sa = make_symmetric(a), sb = make_symmetric(b);
    const GradedDim x = sa.algebra.graded_dim(), y = sb.algebra.graded_dim();
    MagicCell c = build_g(sa, sb);
    const GradedDim formula = tri_basis(sa).graded_dim() + tri_basis(sb).graded_dim() +
                              3 * GradedDim{x.even * y.even + x.odd * y.odd, x.even * y.odd + x.odd * y.even};
    INFO(to_string(a), to_string(b));
    CHECK(c.g.graded_dim() == formula);
    CHECK(c.g.graded_dim() == expected_cell_dims(a, b));
    CHECK(expected_cell_dims(b, a) == expected_cell_dims(a, b));
  }
}

TEST_CASE("g(S,S') and g(S',S) are isomorphic by the swap") {
  gf::ModulusScope scope(3);
  for (auto [a, b] : {std::pair{CompositionKind::S2, CompositionKind::S12}, std::pair{CompositionKind::S12, CompositionKind::S42},
                      std::pair{CompositionKind::S1, CompositionKind::S4}}) {
    MagicCell ab = build_g(a, b), ba = build_g(b, a);
    auto h = hom_check(swap_map(ab, ba), ab.g, ba.g);
    INFO(h.report.render());
    CHECK(h.homomorphism);
    CHECK(h.bijective());
  }
}

TEST_CASE("a perturbed cell fails Jacobi") {
  gf::ModulusScope scope(3);
  MagicCell c = build_g(CompositionKind::S1, CompositionKind::S12);
  CHECK(check_super_jacobi(c.g).passed());
  // change [t'0, i0(1⊗u)] and keep anticommutativity by editing both orders
  const Index a = c.tri_prime_begin(), b = c.iota(0, 0, 1), k = c.iota(1, 0, 1);
  const int sg = c.g.parity(a) * c.g.parity(b);
  SuperAlgebra bad = c.g.with_entry(a, b, k, Scalar(1)).with_entry(b, a, k, Scalar(sg ? 1 : -1));
  Report r = check_super_jacobi(bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("sampled Jacobi is reproducible") {
  gf::ModulusScope scope(3);
  MagicCell c = build_g(CompositionKind::S2, CompositionKind::S42);
  JacobiOptions o;
  o.mode = JacobiOptions::Mode::sampled;
  o.samples = 5000;
  o.seed = 7;
  Report r = check_super_jacobi(c.g, o);
  CHECK(r.passed());
}

TEST_CASE("cell lists") {
  CHECK(all_cells().size() == 21);
  CHECK(parse_cells("all").size() == 21);
  auto two = parse_cells("S1S1,S4S12");
  REQUIRE(two.size() == 2);
  CHECK(two[1] == std::pair{CompositionKind::S4, CompositionKind::S12});
  CHECK(parse_cells("S12S42")[0] == std::pair{CompositionKind::S12, CompositionKind::S42});
  CHECK_THROWS(parse_cells("S1"));
  CHECK_THROWS(parse_cells("S3S1"));
  CHECK_THROWS(parse_cells("X1S1"));
}

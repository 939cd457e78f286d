#ifndef SUPERMAGIC_SQUARE_HPP
#define SUPERMAGIC_SQUARE_HPP

// The Lie superalgebras g(S,S') = tri(S) ⊕ tri(S') ⊕ ι0(S⊗S') ⊕ ι1(S⊗S') ⊕ ι2(S⊗S')
// and the Supermagic Square.
//
// Basis order: tri(S), tri(S'), then ι0, ι1, ι2, each lexicographic in (x, x').

#include "supermagic/toolbox.hpp"
#include "supermagic/triality.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supermagic {

struct MagicCell {
  TrialityAlgebra tri;
  TrialityAlgebra tri_prime;
  SuperAlgebra g;

  const SymmetricComposition& S() const { return tri.S; }
  const SymmetricComposition& S_prime() const { return tri_prime.S; }
  Index tri_begin() const { return 0; }
  Index tri_prime_begin() const { return tri.dim(); }
  Index iota_begin(int i) const { return tri.dim() + tri_prime.dim() + i * S().dim() * S_prime().dim(); }
  /// Index of ι_i(b_x ⊗ b'_{x'}).
  Index iota(int i, Index x, Index xp) const { return iota_begin(i) + x * S_prime().dim() + xp; }
};

/// Assembles g(S,S'). Throws std::logic_error if the clause-defined brackets
/// are not super-anticommutative.
MagicCell build_g(const SymmetricComposition& s, const SymmetricComposition& sp);
MagicCell build_g(CompositionKind a, CompositionKind b);

/// g(S,S') -> g(S',S): tri blocks swapped, ι_i(x⊗x') -> (-1)^{|x||x'|} ι_i(x'⊗x).
GradedLinearMap swap_map(const MagicCell& from, const MagicCell& to);

struct SquareCell {
  CompositionKind row;
  CompositionKind col;
  GradedDim dims;
  std::optional<Report> jacobi;
};

/// Upper-triangle cells (row <= col in the order S1, S2, S4, S8, S12, S42).
std::vector<std::pair<CompositionKind, CompositionKind>> all_cells();

/// Parses "all" or a comma list such as "S1S1,S4S12".
std::vector<std::pair<CompositionKind, CompositionKind>> parse_cells(const std::string& list);

/// Builds the selected cells; runs the Jacobi check when `jacobi` is given.
std::vector<SquareCell> square_table(const std::vector<std::pair<CompositionKind, CompositionKind>>& cells,
                                     const std::optional<JacobiOptions>& jacobi = std::nullopt);

/// The frozen table of graded dimensions, keyed by cell.
GradedDim expected_cell_dims(CompositionKind a, CompositionKind b);

}  // namespace supermagic

#endif  // SUPERMAGIC_SQUARE_HPP

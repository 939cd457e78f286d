#ifndef SUPERMAGIC_ISOMAPS_HPP
#define SUPERMAGIC_ISOMAPS_HPP

// The explicit isomorphisms
//   Φ  : g(S1,S)      -> der H3(C)
//   Φ2 : g(S2,S)      -> pstr H3(C)      (a map into str H3(C), modulo k·I)
//   Φ3 : g(Q̄,S)       -> T(Q, H3(C))
//   Ψ  : g(S12,S12)   -> T(Q, K9)
//   Ψ restricted : g(S1,S12) -> T(Q, K3)
// and their verification.

#include "supermagic/composition.hpp"
#include "supermagic/report.hpp"
#include "supermagic/superalgebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supermagic {

enum class Theorem { phi1, phi2, phi3, psi, psi_restricted };

std::string to_string(Theorem t);
Theorem theorem_from_name(const std::string& name);

struct NamedIsomorphism {
  std::string name;
  GradedLinearMap map;
  SuperAlgebra domain;
  SuperAlgebra codomain;
  std::optional<Subspace> mod_center;  // Φ2 only
  /// Bracket preservation and bijectivity, plus the map-specific cross-checks.
  std::vector<Report> reports;

  bool passed() const;
  Report summary() const;
};

NamedIsomorphism build_phi1(CompositionKind s);
NamedIsomorphism build_phi2(CompositionKind s);
NamedIsomorphism build_phi3(CompositionKind s);
NamedIsomorphism build_psi();
NamedIsomorphism build_psi_restricted();

/// Dispatch on the theorem; `s` is ignored for psi and psi-restricted.
NamedIsomorphism verify_theorem(Theorem t, CompositionKind s);

}  // namespace supermagic

#endif  // SUPERMAGIC_ISOMAPS_HPP

#ifndef SUPERMAGIC_REGISTRY_HPP
#define SUPERMAGIC_REGISTRY_HPP

// Algebras by name, as used on the command line.
//
//   S1 S2 S4 S8 S12 S42      symmetric composition (para-Hurwitz) algebras
//   C:<S>                    the Hurwitz algebra behind S (C:S12 is B(1,2))
//   Q                        split quaternions
//   H3:<S>  K3  K9           Jordan superalgebras
//   g:<S><S'>                Supermagic Square cell, e.g. g:S4S12
//   tri:<S>                  triality superalgebra
//   der:<A> str:<J> pstr:<H3:S> tkk:<J>
//   <path>.json              an algebra file

#include "supermagic/superalgebra.hpp"

#include <string>
#include <vector>

namespace supermagic {

/// Throws std::invalid_argument for unknown names.
SuperAlgebra algebra_by_name(const std::string& name);

/// One name of each form, for help texts and exports.
std::vector<std::string> registry_examples();

}  // namespace supermagic

#endif  // SUPERMAGIC_REGISTRY_HPP

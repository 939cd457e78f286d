#ifndef SUPERMAGIC_IO_HPP
#define SUPERMAGIC_IO_HPP

// Algebra files and machine-readable reports.
//
// An algebra file lists even_basis then odd_basis; structure indices refer to
// that concatenated order, so algebras whose basis interleaves parities are
// written even-first.

#include "supermagic/report.hpp"
#include "supermagic/superalgebra.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace supermagic {

inline constexpr int kAlgebraFormatVersion = 1;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Even basis indices followed by odd ones, each in original order.
std::vector<Index> even_first_order(const SuperSpace& s);
/// The algebra with its basis permuted to even-first order.
SuperAlgebra even_first(const SuperAlgebra& a);

nlohmann::ordered_json algebra_to_json(const SuperAlgebra& a);
std::string emit_algebra(const SuperAlgebra& a);

/// Rejects version or modulus mismatch, out-of-range indices, c = 0 entries,
/// repeated (i, j, k) entries and non-homogeneous products.
SuperAlgebra algebra_from_json(const nlohmann::json& j);
SuperAlgebra parse_algebra(const std::string& text);

/// Field modulus recorded in a file header.
std::uint32_t algebra_file_modulus(const std::string& text);

/// Timings are left out unless asked for, so output bytes are reproducible.
nlohmann::ordered_json report_to_json(const Report& r, bool timings = false);

}  // namespace supermagic

#endif  // SUPERMAGIC_IO_HPP

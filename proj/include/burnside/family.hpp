#ifndef BURNSIDE_FAMILY_HPP
#define BURNSIDE_FAMILY_HPP

// Plain-text matrix family files.
//
//   # comment
//   field GF(4)
//   subfield GF(2)
//   matrix
//   t 0
//   0 t+1
//   matrix
//   ...
//
// Keywords: `field <spec>` (required unless `quaternion`), `subfield <spec>`
// (optional), `quaternion` (entries are a+bi+cj+dk over Q), and `matrix`,
// which starts a new matrix whose rows follow one per line with entries
// separated by whitespace. Everything after '#' is ignored.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/field.hpp"
#include "burnside/linalg.hpp"
#include "burnside/quat.hpp"

namespace burnside {

struct FamilyFile {
  std::string field_spec;
  std::optional<std::string> subfield_spec;
  bool quaternion = false;
  Field field = Field::rationals();
  std::optional<Field> subfield;
  std::size_t n = 0;
  /// Over `field`; for quaternion files, the 4n x 4n rational forms.
  std::vector<Matrix> matrices;
  std::vector<QuaternionMatrix> quaternion_matrices;
};

/// Throws ParseError, UnsupportedTower or ShapeMismatch; messages carry the
/// 1-based line (and column where meaningful).
FamilyFile parse_family(std::string_view text);
FamilyFile parse_family_file(const std::filesystem::path& path);

}  // namespace burnside

#endif  // BURNSIDE_FAMILY_HPP

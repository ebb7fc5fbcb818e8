#pragma once

#include <string>

#include "defk/monoid.hpp"

namespace defk {

/// Monoid file format: JSON object with keys "elements" (array of strings),
/// "identity" (string), "table" (array of arrays of element names, row-major,
/// table[i][j] = name of element_i * element_j).
FiniteMonoid read_monoid_json(const std::string& text,
                              std::size_t max_size = kDefaultMaxMonoidSize);
FiniteMonoid load_monoid_file(const std::string& path,
                              std::size_t max_size = kDefaultMaxMonoidSize);
std::string write_monoid_json(const FiniteMonoid& m);

}  // namespace defk

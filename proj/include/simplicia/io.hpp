#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "simplicia/complex.hpp"

namespace simplicia {

// .cplx text: '#' lines are comments, "# name: X" names the complex, every
// other non-blank line is one facet given as whitespace-separated tokens.
Complex parse_cplx(std::string_view text, std::string fallback_name = {});
Complex read_cplx(const std::filesystem::path& path);

// Facets are written in natural token order (numeric tokens by value first).
std::string to_cplx(const Complex& K);
void write_cplx(const std::filesystem::path& path, const Complex& K);

// Numeric tokens by value, then everything else lexicographically.
bool token_less(const std::string& a, const std::string& b);

}  // namespace simplicia

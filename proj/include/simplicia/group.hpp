#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "simplicia/complex.hpp"

namespace simplicia {

using Permutation = std::vector<Vertex>;  // p[v] is the image of v

struct GroupAction {
    std::vector<Permutation> generators;
};

inline constexpr std::size_t kGroupCap = 10000;

Permutation identity_permutation(std::size_t n);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
bool is_identity(const Permutation& p);

// Every element of the generated group, identity first. Throws if the order
// exceeds cap.
std::vector<Permutation> expand_group(const std::vector<Permutation>& generators, std::size_t n,
                                      std::size_t cap = kGroupCap);
std::vector<std::vector<Vertex>> orbits(const std::vector<Permutation>& generators, std::size_t n);

bool is_automorphism(const Complex& K, const Permutation& p);
Simplex apply(const Permutation& p, const Simplex& s);

// Cycle notation over vertex tokens, e.g. "(1,2,3)(4,5)" or "(a b)(c d e)".
Permutation parse_cycles(std::string_view text, const Complex& K);
// One generator per non-blank, non-'#' line.
GroupAction parse_group(std::string_view text, const Complex& K);

}  // namespace simplicia

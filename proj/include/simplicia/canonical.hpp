#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simplicia/complex.hpp"
#include "simplicia/verdict.hpp"

namespace simplicia {

struct IsoCertificate {
    std::vector<Vertex> mapping;  // source vertex -> target vertex
};

struct CanonicalForm {
    Complex complex;
    std::vector<Vertex> relabeling;  // vertex of the input -> canonical id
    std::vector<std::vector<Vertex>> automorphisms;  // generators found during the search
};

// Individualization-refinement search. The returned complex depends only on
// the isomorphism class of K.
CanonicalForm canonical_form(const Complex& K);
std::uint64_t canonical_hash(const Complex& K);

std::optional<IsoCertificate> find_isomorphism(const Complex& K, const Complex& L);
// Yes carries the vertex map in values; No names the first invariant that differs.
Verdict are_isomorphic(const Complex& K, const Complex& L);
bool is_isomorphism(const Complex& K, const Complex& L, const std::vector<Vertex>& mapping);

}  // namespace simplicia

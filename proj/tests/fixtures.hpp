#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "simplicia/complex.hpp"

namespace fixtures {

// "234 245 ..." with one character per vertex.
inline simplicia::Complex words(std::string_view text, std::string name = {}) {
    std::istringstream in{std::string(text)};
    std::vector<std::vector<std::string>> facets;
    std::string w;
    while (in >> w) {
        std::vector<std::string> f;
        for (char c : w) f.emplace_back(1, c);
        facets.push_back(std::move(f));
    }
    return simplicia::from_tokens(facets, std::move(name));
}

// The three 2-spheres of the stellar-subdivision figure.
inline simplicia::Complex s1() { return words("234 245 256 236 134 136 156 145", "S1"); }
inline simplicia::Complex s2() { return words("234 245 256 134 156 145 123 126", "S2"); }
inline simplicia::Complex s3() { return words("234 245 256 134 156 145 137 167 237 267", "S3"); }

inline simplicia::Complex tetrahedron() { return words("123 124 134 234", "tetrahedron"); }

// Hemi-icosahedron written straight from its defining formula, mod 5 on u1..u5.
inline simplicia::Complex hemi_icosahedron() {
    std::vector<std::vector<std::string>> fs;
    auto u = [](int i) { return "u" + std::to_string((i - 1) % 5 + 1); };
    for (int i = 1; i <= 5; ++i) {
        fs.push_back({"u", u(i), u(i + 1)});
        fs.push_back({u(i), u(i + 1), u(i + 3)});
    }
    return simplicia::from_tokens(fs, "rp2_6");
}

inline simplicia::Complex seven_torus() {
    std::vector<std::vector<std::string>> fs;
    auto w = [](int i) { return "w" + std::to_string((i - 1) % 7 + 1); };
    for (int i = 1; i <= 7; ++i) {
        fs.push_back({w(i), w(i + 1), w(i + 3)});
        fs.push_back({w(i), w(i + 2), w(i + 3)});
    }
    return simplicia::from_tokens(fs, "torus_7");
}

inline std::set<std::vector<std::string>> token_facets(const simplicia::Complex& K) {
    std::set<std::vector<std::string>> out;
    for (const auto& f : K.facets()) {
        auto t = K.tokens(f);
        std::sort(t.begin(), t.end());
        out.insert(t);
    }
    return out;
}

inline std::vector<simplicia::Vertex> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<simplicia::Vertex> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace fixtures

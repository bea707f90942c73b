#pragma once

#include <string>
#include <vector>

#include "simplicia/complex.hpp"

namespace simplicia {

struct HomologyGroup {
    long long betti = 0;
    std::vector<long long> torsion;  // invariant factors >= 2, each dividing the next

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Unreduced integral simplicial homology in dimensions 0..dim(K).
struct HomologyProfile {
    std::vector<HomologyGroup> groups;

    std::vector<long long> betti() const;
    long long euler_characteristic() const;
    std::string to_string() const;  // "H_0 = Z, H_1 = Z_2, H_2 = 0"

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

std::string format_group(const HomologyGroup& g);  // "0", "Z", "Z^2 + Z_2"

HomologyProfile homology(const Complex& K);

// Invariant factors of an integer matrix given as dense rows (all entries, units included).
std::vector<long long> invariant_factors(const std::vector<std::vector<long long>>& rows);

// Homology of a connected d-sphere: Z in degrees 0 and d, zero elsewhere.
bool has_sphere_homology(const HomologyProfile& h, int d);

}  // namespace simplicia

#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "simplicia/complex.hpp"

namespace simplicia {

struct EnumerationReport {
    int n = 0;
    long long total = 0;
    std::map<std::string, long long> breakdown;  // homeomorphism tag -> count
    std::chrono::milliseconds elapsed{0};
    std::vector<Complex> complexes;  // canonical forms, pairwise distinct

    std::string to_json() const;
    std::string to_string() const;
};

struct EnumerationOptions {
    bool connected_only = false;
    bool extended = false;  // unlocks surfaces(9) and the neighbourly 3-sphere search
    int jobs = 0;
};

// All n-vertex complexes in which every vertex link is a cycle, up to
// isomorphism. 4 <= n <= 8, or n = 9 with options.extended.
EnumerationReport surfaces(int n, const EnumerationOptions& options = {});

// All d-pseudomanifolds on d + 3 vertices, 1 <= d <= 5. Throws Error if one
// of them is not a join of two standard spheres.
EnumerationReport pseudomanifolds_d_plus_3(int d);

// 2-neighbourly 8-vertex combinatorial 3-manifolds. Needs options.extended.
EnumerationReport neighbourly_3spheres_8(const EnumerationOptions& options);

}  // namespace simplicia

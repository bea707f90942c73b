#pragma once

#include <string>

#include "simplicia/bistellar.hpp"
#include "simplicia/complex.hpp"
#include "simplicia/verdict.hpp"

namespace simplicia {

struct SurfaceType {
    bool orientable = true;
    int genus = 0;

    // "S2", "T2", "M(2,+)", "RP2", "Klein", "M(3,-)", ...
    std::string tag() const;
    long long euler_characteristic() const;

    friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
    friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

// Ridge condition and strong connectivity. Throws on a non-pure complex.
Verdict is_pseudomanifold(const Complex& K);
// Connected links at every face of dimension <= d - 2. Throws unless pure with
// every ridge in exactly two facets; a disconnected dual graph is allowed so
// that pinched examples are reported as No with the pinch point.
Verdict is_normal_pseudomanifold(const Complex& K);
// Yes carries one sign per facet (values, aligned with K.facets()).
Verdict orientable(const Complex& K);
// Throws unless K is a connected 2-complex whose vertex links are all cycles.
SurfaceType classify_surface(const Complex& K);

// Exact for d <= 2. For d >= 3: necessary conditions, known non-spheres,
// bistellar reduction, then vertex links; Unknown when nothing decides.
Verdict is_combinatorial_sphere(const Complex& K, const Budget& budget = {}, std::uint64_t seed = 1);
// Every vertex link is a combinatorial (d-1)-sphere. Exact for d <= 3.
Verdict is_combinatorial_manifold(const Complex& K, const Budget& budget = {}, std::uint64_t seed = 1);
// Repeatedly removes vertices whose link is the boundary of a missing simplex.
Verdict is_stacked_sphere(const Complex& K);

}  // namespace simplicia

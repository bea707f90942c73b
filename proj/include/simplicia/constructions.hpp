#pragma once

#include <cstdint>
#include <vector>

#include "simplicia/complex.hpp"
#include "simplicia/group.hpp"

namespace simplicia {

// Weakly increasing positive parts.
struct Partition {
    std::vector<int> parts;

    int total() const;
    bool valid() const;
    // Even when the number of even parts is even.
    bool even() const;
};

Complex standard_sphere(int d);  // S^d_{d+2}
Complex standard_ball(int d);    // one d-simplex

// Boundary of the cyclic polytope: (d+1)-subsets of 1..n satisfying Gale's
// evenness condition.
Complex cyclic_sphere(int d, int n);
bool gale_evenness(const std::vector<int>& subset, int n);

// Boundary of the union of the (d+2)-windows of the n-cycle.
Complex kuhnel_complex(int d, int n);
// The windows complex on 3d+5 vertices folded by the partition's cycle permutation.
Complex kuhnel_partition(int d, const Partition& p);

Complex one_point_suspension(const Complex& K, Vertex u);
Complex star_in_facet(const Complex& K, const Simplex& facet);
Complex stacked_sphere(int n, int d, std::uint64_t seed);
Complex stellar_subdivide(const Complex& K, const Simplex& s);
// Vertices are the faces of K (tokens joined by '.'), facets the maximal chains.
Complex barycentric_subdivision(const Complex& K);

// Vertex v of K is merged into map[v]; throws if a facet collapses.
Complex identify(const Complex& K, const std::vector<Vertex>& map);
// Checks each generator is an automorphism and that every non-identity element
// moves every vertex to edge distance >= 3, then takes the orbit complex.
Complex quotient(const Complex& K, const GroupAction& G);

Complex real_projective_space(int d);  // 2^{d+1}-1 vertices, 1 <= d <= 6
Complex torus(int d);                  // 2^{d+1}-1 vertices, 1 <= d <= 4

// A token not already used in K, preferring the next integer.
std::string fresh_label(const Complex& K);

}  // namespace simplicia

#include "doctest.h"
#include "fixtures.hpp"
#include "simplicia/canonical.hpp"
#include "simplicia/constructions.hpp"
#include "simplicia/error.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"

using namespace simplicia;

namespace {

bool iso(const Complex& a, const Complex& b) { return are_isomorphic(a, b).status == Status::Yes; }

// Regular icosahedron: apex 0, upper ring 1..5, lower ring 6..10, bottom 11.
Complex icosahedron() {
    std::vector<std::vector<long long>> fs;
    auto up = [](int i) { return static_cast<long long>((i - 1) % 5 + 1); };
    auto lo = [](int i) { return static_cast<long long>((i - 1) % 5 + 6); };
    for (int i = 1; i <= 5; ++i) {
        fs.push_back({0, up(i), up(i + 1)});
        fs.push_back({up(i), up(i + 1), lo(i)});
        fs.push_back({up(i + 1), lo(i), lo(i + 1)});
        fs.push_back({11, lo(i), lo(i + 1)});
    }
    return from_facets(fs, "icosahedron");
}

Permutation by_tokens(const Complex& K, const std::vector<std::pair<long long, long long>>& pairs) {
    auto p = identity_permutation(static_cast<std::size_t>(K.vertex_count()));
    for (auto [a, b] : pairs)
        p[static_cast<std::size_t>(*K.find_vertex(std::to_string(a)))] = *K.find_vertex(std::to_string(b));
    return p;
}

Complex torus3_formula() {
    // Facets {c, c+2^a1, c+2^a1+2^a2, c+2^a1+2^a2+2^a3} mod 15 over permutations of 0,1,2.
    std::vector<std::vector<long long>> fs;
    std::vector<int> a{0, 1, 2};
    do {
        for (int c = 0; c < 15; ++c) {
            std::vector<long long> f{c};
            long long x = c;
            for (int e : a) {
                x += 1LL << e;
                f.push_back(x % 15);
            }
            fs.push_back(f);
        }
    } while (std::next_permutation(a.begin(), a.end()));
    return from_facets(fs, "T3_15");
}

}  // namespace

TEST_CASE("standard sphere and ball") {
    for (int d = 0; d <= 5; ++d) {
        auto S = standard_sphere(d);
        CHECK(S.vertex_count() == d + 2);
        CHECK(S.facet_count() == static_cast<std::size_t>(d + 2));
        CHECK(S.dim() == d);
        CHECK(standard_ball(d).facet_count() == 1);
    }
}

TEST_CASE("cyclic spheres") {
    for (int n = 4; n <= 12; ++n) CHECK(f_vector(cyclic_sphere(2, n)) == FVector{n, 3 * n - 6, 2 * n - 4});
    for (int n = 6; n <= 11; ++n) {
        auto C = cyclic_sphere(3, n);
        CHECK(C.facet_count() == static_cast<std::size_t>(n * (n - 3) / 2));
        CHECK(neighborliness(C) == 2);
    }
    CHECK(gale_evenness({1, 2, 4, 5}, 7));
    CHECK_FALSE(gale_evenness({1, 3, 4, 6}, 7));
    CHECK(gale_evenness({1, 2, 3, 7}, 7));
}

TEST_CASE("Kuhnel complexes") {
    for (int d = 2; d <= 4; ++d) {
        auto K = kuhnel_complex(d, 2 * d + 3);
        auto h = homology(K);
        const long long top = d % 2 == 0 ? 1 : 0;
        CHECK(h.groups[static_cast<std::size_t>(d)].betti == top);
        if (d > 2) CHECK(h.groups[1].betti == 1);
        auto L = kuhnel_complex(d, 2 * d + 4);
        CHECK(homology(L).groups[static_cast<std::size_t>(d)].betti == 1);
    }
    CHECK(homology(kuhnel_complex(3, 9)).groups[2].torsion == std::vector<long long>{2});
    CHECK_THROWS_AS(kuhnel_complex(3, 8), Error);
}

TEST_CASE("partition complexes") {
    for (int d = 2; d <= 4; ++d) {
        Partition ones{std::vector<int>(static_cast<std::size_t>(d + 1), 1)};
        CHECK(iso(kuhnel_partition(d, ones), kuhnel_complex(d, 2 * d + 4)));
    }
    const std::vector<std::vector<int>> parts4{{1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {1, 3}, {4}};
    for (const auto& parts : parts4) {
        Partition p{parts};
        auto K = kuhnel_partition(3, p);
        CHECK(K.vertex_count() == 10);
        auto h = homology(K);
        CHECK(h.groups[3].betti == (p.even() ? 1 : 0));
        CHECK(h.groups[1].betti == 1);
    }
    CHECK(Partition{{1, 1, 2}}.even() == false);
    CHECK(Partition{{2, 2}}.even() == true);
    CHECK_THROWS_AS(kuhnel_partition(3, Partition{{2, 1, 1}}), Error);
    CHECK_THROWS_AS(kuhnel_partition(3, Partition{{1, 1}}), Error);
}

TEST_CASE("stellar subdivision recovers the figure") {
    auto S1 = fixtures::s1();
    auto S3 = stellar_subdivide(S1, Simplex{*S1.find_vertex("3"), *S1.find_vertex("6")});
    CHECK(fixtures::token_facets(S3) == fixtures::token_facets(fixtures::s3()));
    CHECK_THROWS_AS(stellar_subdivide(S1, Simplex{*S1.find_vertex("1"), *S1.find_vertex("2")}), Error);
    auto T = star_in_facet(fixtures::tetrahedron(), fixtures::tetrahedron().facets()[0]);
    CHECK(f_vector(T) == FVector{5, 9, 6});
}

TEST_CASE("one-point suspension") {
    for (const auto& K : {fixtures::s1(), fixtures::seven_torus()}) {
        auto S = one_point_suspension(K, 0);
        CHECK(S.vertex_count() == K.vertex_count() + 1);
        CHECK(S.dim() == K.dim() + 1);
        const Vertex v = S.vertex_count() - 1;
        auto starred = stellar_subdivide(S, Simplex{0, v});
        auto two_points = from_facets({{1}, {2}});
        CHECK(iso(starred, join(K, two_points)));
    }
}

TEST_CASE("barycentric subdivision") {
    auto B = barycentric_subdivision(fixtures::tetrahedron());
    CHECK(f_vector(B) == FVector{14, 36, 24});
    auto C = barycentric_subdivision(standard_sphere(3));
    CHECK(C.facet_count() == 5 * 24);
    CHECK(C.vertex_count() == 30);
}

TEST_CASE("quotients") {
    auto I = icosahedron();
    auto anti = by_tokens(I, {{0, 11}, {11, 0}, {1, 8}, {2, 9}, {3, 10}, {4, 6}, {5, 7},
                              {8, 1}, {9, 2}, {10, 3}, {6, 4}, {7, 5}});
    REQUIRE(is_automorphism(I, anti));
    auto Q = quotient(I, GroupAction{{anti}});
    CHECK(Q.vertex_count() == 6);
    CHECK(iso(Q, fixtures::hemi_icosahedron()));
    // link of [u] is isomorphic to link of u
    CHECK(iso(link(Q, Simplex{0}), link(I, Simplex{0})));

    auto hex = from_facets({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
    auto shift = by_tokens(hex, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
    CHECK_THROWS_WITH_AS(quotient(hex, GroupAction{{shift}}), doctest::Contains("not proper"), Error);
    auto bad = by_tokens(hex, {{1, 2}, {2, 1}});
    CHECK_THROWS_WITH_AS(quotient(hex, GroupAction{{bad}}), doctest::Contains("automorphism"), Error);
    CHECK_THROWS_AS(identify(hex, {1, 1, 2, 3, 4, 5}), Error);
}

TEST_CASE("projective spaces and tori") {
    CHECK(homology(real_projective_space(2)).to_string() == "H_0 = Z, H_1 = Z_2, H_2 = 0");
    CHECK(neighborliness(real_projective_space(2)) == 1);
    CHECK(real_projective_space(1).vertex_count() == 3);
    for (int d = 1; d <= 4; ++d) {
        CHECK(real_projective_space(d).vertex_count() == (1 << (d + 1)) - 1);
        CHECK(torus(d).vertex_count() == (1 << (d + 1)) - 1);
    }
    CHECK(iso(torus(2), fixtures::seven_torus()));
    CHECK(iso(torus(3), torus3_formula()));
    CHECK(f_vector(torus(3)) == FVector{15, 105, 180, 90});
    CHECK_THROWS_AS(real_projective_space(7), Error);
    CHECK_THROWS_AS(torus(5), Error);
}

TEST_CASE("fresh labels") {
    CHECK(fresh_label(fixtures::s1()) == "7");
    auto K = from_tokens({{"a", "b"}}, "ab");
    CHECK_FALSE(K.find_vertex(fresh_label(K)).has_value());
}

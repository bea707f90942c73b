#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "simplicia/canonical.hpp"
#include "simplicia/complex.hpp"
#include "simplicia/error.hpp"
#include "simplicia/io.hpp"

using namespace simplicia;

namespace {

Simplex vs(const Complex& K, std::initializer_list<const char*> toks) {
    std::vector<Vertex> out;
    for (auto t : toks) out.push_back(*K.find_vertex(t));
    return Simplex(out);
}

long long f_count(const Complex& K, int k) { return static_cast<long long>(K.faces(k).size()); }

}  // namespace

TEST_CASE("from_facets normalises its input") {
    auto tri = from_facets({{1, 2}, {2, 3}, {1, 3}});
    CHECK(tri.facet_count() == 3);
    CHECK(tri.dim() == 1);
    CHECK(tri.vertex_count() == 3);

    auto one = from_facets({{1, 2, 3}, {1, 2}});
    CHECK(one.facet_count() == 1);
    CHECK(one.facets()[0] == Simplex{0, 1, 2});

    auto dup = from_facets({{7, 9}, {9, 7}, {9, 11}});
    CHECK(dup.facet_count() == 2);
    CHECK(dup.label(0) == "7");
    CHECK(dup.label(2) == "11");

    CHECK_THROWS_WITH(from_facets({}), "empty complex");
    CHECK_THROWS_WITH(from_facets({{1, 2, 2}}), "degenerate facet");

    auto rp2 = fixtures::hemi_icosahedron();
    CHECK(rp2.dim() == 2);
    CHECK(rp2.vertex_count() == 6);
    CHECK(rp2.facet_count() == 10);
}

TEST_CASE("faces by dimension") {
    auto rp2 = fixtures::hemi_icosahedron();
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const auto& f : rp2.facets())
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) edges.insert({f[i], f[j]});
    CHECK(rp2.faces(1).size() == edges.size());
    CHECK(rp2.faces(1).size() == 15);
    CHECK(fixtures::tetrahedron().faces(2).size() == 4);
    CHECK(rp2.faces(-1).size() == 1);
    CHECK(rp2.faces(-1)[0].empty());
    CHECK(rp2.faces(3).empty());
    CHECK(rp2.faces(-2).empty());
}

TEST_CASE("links") {
    auto tet = fixtures::tetrahedron();
    for (Vertex v = 0; v < 4; ++v) {
        auto L = link(tet, Simplex{v});
        CHECK(L.facet_count() == 3);
        CHECK(L.dim() == 1);
        CHECK(L.vertex_count() == 3);
    }
    auto rp2 = fixtures::hemi_icosahedron();
    auto Lu = link(rp2, vs(rp2, {"u"}));
    CHECK(fixtures::token_facets(Lu) ==
          std::set<std::vector<std::string>>{{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u4", "u5"}, {"u1", "u5"}});
    CHECK_THROWS_WITH(link(rp2, Simplex{0, 1, 2, 3}), "not a simplex of K");

    auto whole = link(tet, Simplex{0, 1, 2});
    CHECK(whole.dim() == -1);
    CHECK(whole.vertex_count() == 0);
}

TEST_CASE("stars") {
    auto tet = fixtures::tetrahedron();
    CHECK(star(tet, Simplex{0}).facet_count() == 3);

    auto S1 = fixtures::s1();
    auto st = star(S1, vs(S1, {"3", "6"}));
    CHECK(fixtures::token_facets(st) == std::set<std::vector<std::string>>{{"1", "3", "6"}, {"2", "3", "6"}});

    auto rp2 = fixtures::hemi_icosahedron();
    for (int k = 0; k <= 1; ++k) {
        for (const auto& s : rp2.faces(k)) {
            auto S = star(rp2, s);
            auto L = link(rp2, s);
            CHECK(S.facet_count() == L.facet_count());
            std::set<std::vector<std::string>> joined;
            for (const auto& g : L.facets()) {
                auto t = L.tokens(g);
                auto ts = rp2.tokens(s);
                t.insert(t.end(), ts.begin(), ts.end());
                std::sort(t.begin(), t.end());
                joined.insert(t);
            }
            CHECK(joined == fixtures::token_facets(S));
        }
    }
}

TEST_CASE("joins") {
    auto s0 = Complex({Simplex{0}, Simplex{1}});
    auto square = join(s0, s0);
    CHECK(square.facet_count() == 4);
    CHECK(square.dim() == 1);
    auto oct = join(square, s0);
    CHECK(oct.vertex_count() == 6);
    CHECK(oct.faces(1).size() == 12);
    CHECK(oct.faces(2).size() == 8);

    // S^c_{c+2} * S^{d-c-1}_{d-c+1} has d+3 vertices
    for (int d = 1; d <= 5; ++d)
        for (int c = 0; c < d; ++c) {
            auto J = join(boundary_complex(static_cast<std::size_t>(c + 2)),
                          boundary_complex(static_cast<std::size_t>(d - c + 1)));
            CHECK(J.vertex_count() == d + 3);
            CHECK(J.dim() == d);
        }

    // f_k(K*L) = sum_{i+j=k-1} f_i(K) f_j(L), f_{-1} = 1
    auto K = fixtures::s1();
    auto L = Complex({Simplex{0, 1}, Simplex{1, 2}});
    auto J = join(K, L);
    for (int k = 0; k <= J.dim(); ++k) {
        long long want = 0;
        for (int i = -1; i <= K.dim(); ++i) {
            const int j = k - 1 - i;
            if (j < -1 || j > L.dim()) continue;
            want += f_count(K, i) * f_count(L, j);
        }
        CHECK(f_count(J, k) == want);
    }
}

TEST_CASE("induced subcomplexes") {
    auto c4 = from_facets({{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    auto path = induced(c4, {0, 1, 2});
    CHECK(fixtures::token_facets(path) == std::set<std::vector<std::string>>{{"1", "2"}, {"2", "3"}});
    CHECK(induced(c4, {0, 1, 2, 3}) == c4);
    CHECK_THROWS(induced(c4, {9}));

    auto rp2 = fixtures::hemi_icosahedron();
    std::vector<Vertex> ring;
    for (int i = 1; i <= 5; ++i) ring.push_back(*rp2.find_vertex("u" + std::to_string(i)));
    auto I = induced(rp2, ring);
    std::set<std::vector<std::string>> want;
    for (int i = 1; i <= 5; ++i) {
        std::vector<std::string> t{"u" + std::to_string(i), "u" + std::to_string(i % 5 + 1),
                                   "u" + std::to_string((i + 2) % 5 + 1)};
        std::sort(t.begin(), t.end());
        want.insert(t);
    }
    CHECK(fixtures::token_facets(I) == want);
}

TEST_CASE("edge graph and distances") {
    auto two = disjoint_union(fixtures::tetrahedron(), fixtures::tetrahedron());
    CHECK_FALSE(is_connected(two));
    CHECK(graph_distance(two, 0, 5) == kInfiniteDistance);
    CHECK(is_connected(fixtures::tetrahedron()));

    auto T = fixtures::seven_torus();
    for (int d : degrees(T)) CHECK(d == 6);

    auto S1 = fixtures::s1();
    CHECK(graph_distance(S1, *S1.find_vertex("1"), *S1.find_vertex("2")) == 2);
}

TEST_CASE("isomorphism") {
    auto v = are_isomorphic(fixtures::s1(), fixtures::s2());
    CHECK(v.is_no());
    CHECK(v.certificate == "degree sequences differ");

    std::mt19937_64 rng(7);
    for (const auto& K : {fixtures::s1(), fixtures::s3(), fixtures::hemi_icosahedron(), fixtures::seven_torus()}) {
        const auto base = canonical_form(K);
        CHECK(canonical_form(base.complex).complex == base.complex);
        for (int t = 0; t < 100; ++t) {
            auto P = relabel(K, fixtures::random_permutation(K.vertex_count(), rng));
            CHECK(canonical_form(P).complex == base.complex);
            auto iso = are_isomorphic(K, P);
            REQUIRE(iso.is_yes());
            std::vector<Vertex> m(iso.values.begin(), iso.values.end());
            CHECK(is_isomorphism(K, P, m));
        }
    }
}

TEST_CASE("isomorphism is an equivalence relation on a random pool") {
    std::mt19937_64 rng(11);
    std::vector<Complex> pool;
    for (const auto& K : {fixtures::s1(), fixtures::s2(), fixtures::s3(), fixtures::tetrahedron()})
        for (int t = 0; t < 3; ++t) pool.push_back(relabel(K, fixtures::random_permutation(K.vertex_count(), rng)));
    const std::size_t n = pool.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = are_isomorphic(pool[i], pool[j]).is_yes();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(r[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(r[i][j] == r[j][i]);
            CHECK(r[i][j] == (i / 3 == j / 3));
            for (std::size_t k = 0; k < n; ++k)
                if (r[i][j] && r[j][k]) CHECK(r[i][k]);
        }
    }
}

TEST_CASE("cplx round trip") {
    for (const auto& K : {fixtures::hemi_icosahedron(), fixtures::seven_torus(), fixtures::s3()}) {
        const std::string text = to_cplx(K);
        auto back = parse_cplx(text);
        CHECK(back.name() == K.name());
        CHECK(canonical_form(back).complex == canonical_form(K).complex);
        CHECK(fixtures::token_facets(back) == fixtures::token_facets(K));
        CHECK(to_cplx(back) == text);
    }
    CHECK_THROWS_AS(parse_cplx("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_cplx("1 2 2\n"), ParseError);
    auto named = parse_cplx("# name: tri\n# comment\n1 2\n\n2 3\n3 1\n");
    CHECK(named.name() == "tri");
    CHECK(named.facet_count() == 3);
    CHECK(token_less("2", "10"));
    CHECK(token_less("9", "a"));
    CHECK_FALSE(token_less("b", "a"));
}

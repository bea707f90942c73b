#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "simplicia/bistellar.hpp"
#include "simplicia/canonical.hpp"
#include "simplicia/catalog.hpp"
#include "simplicia/constructions.hpp"
#include "simplicia/error.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"

using namespace simplicia;

namespace {

Simplex vs(const Complex& K, std::initializer_list<const char*> toks) {
    std::vector<Vertex> out;
    for (auto t : toks) out.push_back(*K.find_vertex(t));
    return Simplex(out);
}

FVector minus(const FVector& a, const FVector& b) {
    FVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

std::vector<Complex> pool() {
    return {fixtures::s1(),
            fixtures::hemi_icosahedron(),
            fixtures::seven_torus(),
            catalog_get("s3_8_35").complex,
            catalog_get("rp3_11").complex,
            stacked_sphere(9, 3, 4),
            stacked_sphere(9, 4, 5),
            cyclic_sphere(4, 8)};
}

}  // namespace

TEST_CASE("a single edge flip turns S1 into S2") {
    auto K = fixtures::s1();
    Move m{vs(K, {"3", "6"}), vs(K, {"1", "2"}), 1};
    CHECK(move_problem(K, m).empty());
    auto L = apply_move(K, m);
    CHECK(fixtures::token_facets(L) == fixtures::token_facets(fixtures::s2()));
    CHECK(f_vector(L) == f_vector(K));
}

TEST_CASE("invalid moves are explained") {
    auto T = fixtures::tetrahedron();
    CHECK(move_problem(T, Move{vs(T, {"1", "2"}), vs(T, {"3", "4"}), 1}) == "b present");
    CHECK_THROWS_AS(apply_move(T, Move{vs(T, {"1", "2"}), vs(T, {"3", "4"}), 1}), Error);
    auto K = fixtures::s1();
    CHECK(!move_problem(K, Move{vs(K, {"1", "2"}), vs(K, {"3", "6"}), 1}).empty());
    CHECK_THROWS_WITH(valid_moves(from_facets({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}})),
                      "bistellar moves need a pseudomanifold");
}

TEST_CASE("f-vector changes match the move formula") {
    for (int d = 1; d <= 5; ++d) {
        for (int k = 0; k <= d; ++k) {
            auto delta = move_fvector_delta(d, k);
            CHECK(delta.size() == static_cast<std::size_t>(d + 1));
            CHECK(delta[static_cast<std::size_t>(d)] == d - 2 * k);
            CHECK(delta[0] == (k == 0 ? 1 : k == d ? -1 : 0));
        }
    }
    for (const auto& K : pool()) {
        const auto f = f_vector(K);
        for (const auto& m : valid_moves(K, true)) {
            auto L = apply_move(K, m);
            CHECK(minus(f_vector(L), f) == move_fvector_delta(K.dim(), m.k));
        }
    }
}

TEST_CASE("moves reverse") {
    for (const auto& K : pool()) {
        for (const auto& m : valid_moves(K, true)) {
            auto L = apply_move(K, m);
            auto r = reverse_move(K, m, L);
            CHECK(r.k == K.dim() - m.k);
            CHECK(move_problem(L, r).empty());
            auto back = apply_move(L, r);
            // A removed vertex comes back under a fresh token.
            if (m.k == K.dim())
                CHECK(are_isomorphic(back, K).is_yes());
            else
                CHECK(fixtures::token_facets(back) == fixtures::token_facets(K));
        }
    }
}

TEST_CASE("homology is constant along random flip traces") {
    std::mt19937_64 rng(2024);
    const auto start = pool();
    for (int trace = 0; trace < 50; ++trace) {
        Complex K = start[static_cast<std::size_t>(trace) % start.size()];
        const auto h = homology(K);
        for (int step = 0; step < 12; ++step) {
            auto moves = valid_moves(K, true);
            REQUIRE(!moves.empty());
            std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
            K = apply_move(K, moves[pick(rng)]);
            CHECK(homology(K) == h);
        }
    }
}

TEST_CASE("L(3,1) on twelve vertices admits no proper move") {
    const auto& L = catalog_get("l3_12").complex;
    int proper = 0;
    for (const auto& m : valid_moves(L))
        if (m.k > 0 && m.k < L.dim()) ++proper;
    CHECK(proper == 0);
}

TEST_CASE("eight-vertex 3-spheres reduce for every seed") {
    const auto target = boundary_complex(5);
    for (const auto& name : {"s3_8_35", "s3_8_36", "s3_8_37", "s3_8_38", "s3_8_39"}) {
        const auto& K = catalog_get(name).complex;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto r = reduce_to_sphere(K, {}, seed);
            CHECK_MESSAGE(r.verdict.is_yes(), name << " seed " << seed);
            auto end = replay(K, r.trace);
            CHECK(are_isomorphic(end, target).is_yes());
        }
    }
}

TEST_CASE("reduction is deterministic and never says no") {
    const auto& K = catalog_get("s3_8_37").complex;
    auto a = reduce_to_sphere(K, {}, 7);
    auto b = reduce_to_sphere(K, {}, 7);
    CHECK(a.trace.to_json_lines() == b.trace.to_json_lines());
    CHECK(a.restart == b.restart);

    auto done = reduce_to_sphere(boundary_complex(5));
    CHECK(done.verdict.is_yes());
    CHECK(done.trace.steps.empty());

    Budget tiny;
    tiny.restarts = 2;
    tiny.moves_per_restart = 20;
    auto poincare = reduce_to_sphere(catalog_get("h3_16").complex, tiny);
    CHECK(poincare.verdict.is_unknown());
}

TEST_CASE("traces are JSON lines") {
    auto r = reduce_to_sphere(catalog_get("s3_8_35").complex, {}, 3);
    std::istringstream in(r.trace.to_json_lines());
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.at("step").get<std::size_t>() == count + 1);
        CHECK(j.contains("a"));
        CHECK(j.contains("b"));
        CHECK(j.contains("k"));
        CHECK(j.contains("f"));
        ++count;
    }
    CHECK(count == r.trace.steps.size());
}

TEST_CASE("the 2-move on S3_8_38 leaves the neighbourly family") {
    const auto& K = catalog_get("s3_8_38").complex;
    auto L = apply_move(K, Move{vs(K, {"4", "6"}), vs(K, {"3", "5", "7"}), 2});
    CHECK(f_vector(L) == FVector{8, 27, 38, 19});
    for (const auto& name : {"s3_8_35", "s3_8_36", "s3_8_37", "s3_8_38"})
        CHECK(are_isomorphic(L, catalog_get(name).complex).is_no());
    CHECK(are_isomorphic(L, catalog_get("s3_8_39").complex).is_yes());
    CHECK(reduce_to_sphere(L).verdict.is_yes());
}

TEST_CASE("bounded equivalence search") {
    auto a = bistellar_equivalent(fixtures::s1(), fixtures::s1(), 0);
    CHECK(a.is_yes());
    CHECK(a.values == std::vector<long long>{0, 0});
    auto b = bistellar_equivalent(fixtures::s1(), fixtures::s2(), 1);
    CHECK(b.is_yes());
    CHECK(b.values[0] + b.values[1] == 1);
    CHECK(bistellar_equivalent(fixtures::s1(), fixtures::s3(), 0).is_unknown());
    CHECK(bistellar_equivalent(fixtures::s1(), fixtures::s3(), 2).is_yes());
    CHECK_THROWS_WITH(bistellar_equivalent(fixtures::s1(), boundary_complex(5), 1), "dimension mismatch");
}

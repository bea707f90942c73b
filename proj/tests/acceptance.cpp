#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "simplicia/group.hpp"
#include "properties.hpp"
#include "simplicia/canonical.hpp"
#include "simplicia/catalog.hpp"
#include "simplicia/constructions.hpp"
#include "simplicia/enumerate.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/recognition.hpp"

using namespace simplicia;

namespace {

using Clock = std::chrono::steady_clock;

// Collects failures for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string show(const FVector& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + ")";
}

const Complex& entry(const std::string& name) { return catalog_get(name).complex; }

bool iso(const Complex& a, const Complex& b) { return are_isomorphic(a, b).is_yes(); }

std::vector<std::string> manifold_entries() {
    std::vector<std::string> out;
    for (const auto& n : catalog_names())
        if (catalog_get(n).expected.manifold) out.push_back(n);
    return out;
}

// The antipode of u is the one vertex sharing no closed neighbour with u.
Permutation antipodes(const Complex& K) {
    const auto n = static_cast<std::size_t>(K.vertex_count());
    std::vector<std::set<Vertex>> closed(n);
    for (Vertex v = 0; v < K.vertex_count(); ++v) closed[static_cast<std::size_t>(v)].insert(v);
    for (const auto& e : K.faces(1)) {
        closed[static_cast<std::size_t>(e[0])].insert(e[1]);
        closed[static_cast<std::size_t>(e[1])].insert(e[0]);
    }
    Permutation p(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            bool apart = true;
            for (auto w : closed[u]) apart = apart && !closed[v].contains(w);
            if (apart) p[u] = static_cast<Vertex>(v);
        }
    return p;
}

// Boundary of an a-simplex joined with the boundary of a b-simplex.
Complex sphere_join(int a, int b) {
    std::vector<Simplex> facets;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            std::vector<Vertex> f;
            for (int x = 0; x <= a; ++x)
                if (x != i) f.push_back(x);
            for (int y = 0; y <= b; ++y)
                if (y != j) f.push_back(a + 1 + y);
            facets.emplace_back(f);
        }
    return Complex(facets);
}

void within(Check& c, Clock::time_point t0, double seconds) {
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream msg;
    msg << std::fixed << std::setprecision(2) << s << " s (limit " << seconds << " s)";
    c.expect(s < seconds, "runtime " + msg.str());
}

void catalog_fidelity(Check& c) {
    const auto t0 = Clock::now();
    for (const auto& r : catalog_verify_all(true)) {
        c.expect(r.ok, r.name + " failed verification");
        c.expect(r.undecided.empty(), r.name + " left checks undecided");
    }
    const std::vector<std::pair<std::string, FVector>> printed{
        {"cp2_9", {9, 36, 84, 90, 36}}, {"h3_16", {16, 106, 180, 90}}, {"rp4_16", {16, 120, 330, 375, 150}}};
    for (const auto& [name, f] : printed) c.expect(f_vector(entry(name)) == f, name + " f = " + show(f_vector(entry(name))));

    const auto& K3 = entry("k3_16");
    std::vector<Permutation> gens;
    for (int t : {1, 2, 4, 8}) {
        Permutation g(16);
        for (int i = 0; i < 16; ++i) g[static_cast<std::size_t>(i)] = i ^ t;
        gens.push_back(g);
    }
    const int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    Permutation A(16);
    for (int i = 0; i < 16; ++i) A[static_cast<std::size_t>(i)] = mul[3][i / 4] + 4 * (mul[3][i % 4] ^ (i / 4));
    gens.push_back(A);
    const GroupAction G{gens};
    const auto first = orbit_expand(G, {Simplex{1, 2, 3, 4, 8}}, 16).facet_count();
    const auto second = orbit_expand(G, {Simplex{1, 4, 6, 9, 10}}, 16).facet_count();
    c.expect(first == 240 && second == 48, "K3 orbit sizes " + std::to_string(first) + " + " + std::to_string(second));
    for (const auto& g : gens) c.expect(is_automorphism(K3, g), "K3 generator is not an automorphism");
    c.expect(K3.facet_count() == 288, "K3 has " + std::to_string(K3.facet_count()) + " facets");
    c.expect(euler_characteristic(K3) == 24, "chi(K3) = " + std::to_string(euler_characteristic(K3)));
    c.expect(euler_characteristic(entry("cp2_9")) == 3, "chi(CP2) = " + std::to_string(euler_characteristic(entry("cp2_9"))));
    within(c, t0, 60);
}

void homology_truth(Check& c) {
    const auto t0 = Clock::now();
    const HomologyGroup z3{0, {3}}, z2{0, {2}};
    c.expect(homology(entry("l3_12")).groups.at(1) == z3, "H_1(L3_12) = " + format_group(homology(entry("l3_12")).groups.at(1)));
    c.expect(homology(entry("rp3_11")).groups.at(1) == z2, "H_1(RP3_11) = " + format_group(homology(entry("rp3_11")).groups.at(1)));
    c.expect(has_sphere_homology(homology(entry("h3_16")), 3), "H3_16: " + homology(entry("h3_16")).to_string());
    c.expect(homology(entry("rp2_6")).groups.at(1) == z2, "H_1(RP2_6) = " + format_group(homology(entry("rp2_6")).groups.at(1)));
    c.expect(homology(entry("t3_15")).betti() == std::vector<long long>{1, 3, 3, 1}, "T3_15: " + homology(entry("t3_15")).to_string());
    within(c, t0, 30);
}

void dehn_sommerville(Check& c) {
    for (const auto& name : manifold_entries()) {
        const auto r = dehn_sommerville_residuals(entry(name));
        bool zero = true;
        for (auto v : r.values) zero = zero && v == 0;
        c.expect(r.ok && zero, name + " has a non-zero residual");
    }
}

void lower_bounds(Check& c) {
    for (const auto& name : manifold_entries()) {
        const auto& K = entry(name);
        const auto f = f_vector(K);
        const int d = K.dim();
        for (int k = 1; k <= d; ++k)
            c.expect(f[static_cast<std::size_t>(k)] >= phi(k, K.vertex_count(), d),
                     name + " f_" + std::to_string(k) + " below phi");
    }
    std::mt19937_64 rng(4);
    for (int i = 0; i < 25; ++i) {
        const int d = 3 + i % 3;
        const int n = d + 3 + static_cast<int>(rng() % 10);
        const auto S = stacked_sphere(n, d, rng());
        const auto f = oracles::brute_fvector(S);
        for (int k = 1; k <= d; ++k) {
            const long long expected = k < d ? binom(d + 2, k + 1) + (n - d - 2) * binom(d + 1, k) : (d + 2) + (n - d - 2) * d;
            const auto fk = f[static_cast<std::size_t>(k)];
            c.expect(fk == expected && fk == phi(k, n, d),
                     "stacked d=" + std::to_string(d) + " n=" + std::to_string(n) + " f_" + std::to_string(k) + " = " + std::to_string(fk));
        }
        c.expect(f_vector(S) == stacked_fvector(n, d), "stacked_fvector disagrees at d=" + std::to_string(d));
    }
    const auto& rp3 = entry("rp3_11");
    const auto w = walkup_3d_bound(rp3);
    const long long slack = f_vector(rp3)[1] - 4LL * rp3.vertex_count() - 8;
    c.notes.push_back("RP3_11: f_1 = " + std::to_string(f_vector(rp3)[1]) + ", 4n+8 = " +
                      std::to_string(4 * rp3.vertex_count() + 8) + ", slack " + std::to_string(slack));
    c.expect(w.ok && slack >= 0, "RP3_11 violates f_1 >= 4n+8 (slack " + std::to_string(slack) + ")");
}

void upper_bounds(Check& c) {
    for (const auto& name : catalog_names()) {
        const auto& e = catalog_get(name);
        const int n = e.complex.vertex_count();
        if (!e.expected.sphere || (n != 8 && n != 9)) continue;
        const auto f = f_vector(e.complex);
        const auto cyc = f_vector(cyclic_sphere(e.complex.dim(), n));
        for (std::size_t i = 0; i < f.size(); ++i)
            c.expect(f[i] <= cyc[i], name + " f_" + std::to_string(i) + " exceeds the cyclic sphere");
        c.expect(ubt_check(e.complex).ok, name + " flagged by ubt_check");
    }
    const auto r = ubt_check(entry("cp2_9"));
    const auto f2 = f_vector(entry("cp2_9"))[2];
    const auto c2 = f_vector(cyclic_sphere(4, 9))[2];
    c.expect(f2 == 84 && c2 == 74, "CP2 f_2 = " + std::to_string(f2) + ", C^4_9 f_2 = " + std::to_string(c2));
    c.expect(!r.ok && std::find(r.failed.begin(), r.failed.end(), "f_2") != r.failed.end(),
             "ubt_check does not report the f_2 violation of CP2_9");
}

void enumeration(Check& c, bool extended) {
    const auto t0 = Clock::now();
    const auto r7 = surfaces(7);
    c.expect(r7.total == 9 && r7.breakdown == std::map<std::string, long long>{{"S2", 5}, {"RP2", 3}, {"T2", 1}},
             "surfaces(7) = " + std::to_string(r7.total));
    const auto r8 = surfaces(8);
    c.expect(r8.total == 44 && r8.breakdown == std::map<std::string, long long>{{"S2", 14}, {"RP2", 16}, {"T2", 7}, {"Klein", 6}, {"disconnected", 1}},
             "surfaces(8) = " + std::to_string(r8.total));
    within(c, t0, 300);
    if (extended) {
        EnumerationOptions o;
        o.extended = true;
        o.connected_only = true;
        const auto r9 = surfaces(9, o);
        const std::map<std::string, long long> expected{{"S2", 50},     {"T2", 112},    {"RP2", 134},   {"Klein", 187},
                                                        {"M(3,-)", 133}, {"M(4,-)", 37}, {"M(5,-)", 2}};
        c.expect(r9.total == 655 && r9.breakdown == expected, "surfaces(9) connected = " + std::to_string(r9.total));
        c.notes.push_back("extended tier: surfaces(9) connected = " + std::to_string(r9.total));
    }
}

void bistellar(Check& c) {
    const auto t0 = Clock::now();
    const auto target = boundary_complex(5);
    for (const char* name : {"s3_8_35", "s3_8_36", "s3_8_37", "s3_8_38", "s3_8_39"}) {
        int ok = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto r = reduce_to_sphere(entry(name), {}, seed);
            if (r.verdict.is_yes() && iso(replay(entry(name), r.trace), target)) ++ok;
        }
        c.expect(ok == 10, std::string(name) + " reduced for " + std::to_string(ok) + "/10 seeds");
    }
    const auto& S = entry("s3_8_38");
    auto tok = [&](std::initializer_list<const char*> ts) {
        std::vector<Vertex> v;
        for (auto t : ts) v.push_back(*S.find_vertex(t));
        return Simplex(v);
    };
    const auto L = apply_move(S, Move{tok({"4", "6"}), tok({"3", "5", "7"}), 2});
    c.expect(reduce_to_sphere(L).verdict.is_yes(), "kappa(46,357) result not reduced");
    for (const char* name : {"s3_8_35", "s3_8_36", "s3_8_37", "s3_8_38"})
        c.expect(!iso(L, entry(name)), std::string("kappa(46,357) result isomorphic to ") + name);
    c.expect(f_vector(L) == FVector{8, 27, 38, 19} && iso(L, entry("s3_8_39")), "kappa(46,357) result is not s3_8_39");
    const auto& lens = entry("l3_12");
    int proper = 0;
    for (const auto& m : valid_moves(lens))
        if (m.k > 0 && m.k < lens.dim()) ++proper;
    c.expect(proper == 0, "L3_12 admits " + std::to_string(proper) + " proper moves");
    within(c, t0, 30);
}

void constructions(Check& c) {
    const auto t0 = Clock::now();
    const auto& I = entry("icosahedron");
    const auto anti = antipodes(I);
    c.expect(iso(quotient(I, GroupAction{{anti}}), entry("rp2_6")), "icosahedron / antipodal map is not RP2_6");
    c.expect(iso(torus(3), entry("t3_15")), "torus(3) is not T3_15");
    for (int d = 3; d <= 4; ++d) {
        Partition ones;
        ones.parts.assign(static_cast<std::size_t>(d + 1), 1);
        c.expect(iso(kuhnel_partition(d, ones), kuhnel_complex(d, 2 * d + 4)), "partition complex differs at d=" + std::to_string(d));
    }
    for (int d = 1; d <= 4; ++d)
        c.expect(real_projective_space(d).vertex_count() == (1 << (d + 1)) - 1, "RP^" + std::to_string(d) + " vertex count");
    for (int d = 1; d <= 5; ++d)
        c.expect(iso(one_point_suspension(standard_sphere(d), 0), standard_sphere(d + 1)),
                 "one-point suspension of S^" + std::to_string(d));
    within(c, t0, 60);
}

void complementarity(Check& c) {
    for (const auto& name : catalog_names()) {
        const auto& K = entry(name);
        if (K.vertex_count() > 12) continue;
        const bool expected = name == "rp2_6" || name == "cp2_9";
        c.expect(complementarity_check(K) == expected, name + (expected ? " is not complementary" : " is complementary"));
    }
}

void d_plus_3(Check& c) {
    const auto t0 = Clock::now();
    for (int d = 1; d <= 4; ++d) {
        const auto r = pseudomanifolds_d_plus_3(d);
        for (const auto& K : r.complexes) {
            bool join_found = false;
            for (int k = 0; k < d && !join_found; ++k) join_found = iso(K, sphere_join(k + 1, d - k));
            c.expect(join_found, "a " + std::to_string(d) + "-pseudomanifold on d+3 vertices is not a join");
        }
        c.expect(r.total == (d + 1) / 2, "d=" + std::to_string(d) + " gives " + std::to_string(r.total) + " classes");
    }
    within(c, t0, 120);
}

void property_suites(Check& c) {
    const auto pool = properties::pool();
    for (const auto& r : {properties::move_reversal(pool), properties::canonical_invariance(pool, 100, 17),
                          properties::fh_round_trip(pool), properties::homology_along_flips(pool, 50, 10, 23)})
        c.expect(r.ok, r.detail);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria, one line each"};
    int only = 0;
    bool extended = false;
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 11));
    app.add_flag("--extended", extended, "include the nine-vertex surface census");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"catalog fidelity", catalog_fidelity},
        {"homology ground truth", homology_truth},
        {"Dehn-Sommerville residuals", dehn_sommerville},
        {"lower bounds", lower_bounds},
        {"upper bounds", upper_bounds},
        {"enumeration counts", [&](Check& c) { enumeration(c, extended); }},
        {"bistellar engine", bistellar},
        {"construction cross-checks", constructions},
        {"complementarity", complementarity},
        {"d+3 classification", d_plus_3},
        {"property suites", property_suites},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
        Check c;
        const auto t0 = Clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool ok = c.failures.empty();
        all = all && ok;
        std::cout << (ok ? "PASS " : "FAIL ") << std::setw(2) << i + 1 << "  " << criteria[i].first << "  ["
                  << std::fixed << std::setprecision(2) << s << " s]";
        for (const auto& f : c.failures) std::cout << "; " << f;
        for (const auto& n : c.notes) std::cout << "; " << n;
        std::cout << "\n";
    }
    return all ? 0 : 1;
}

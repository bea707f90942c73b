#include "simplicia/catalog.hpp"

#include <map>
#include <set>
#include <sstream>

#include "catalog_data.hpp"
#include "simplicia/bistellar.hpp"
#include "simplicia/error.hpp"
#include "simplicia/io.hpp"
#include "simplicia/recognition.hpp"

namespace simplicia {

namespace {

using Tokens = std::vector<std::vector<std::string>>;

std::string sub(const std::string& base, int i, int mod) { return base + std::to_string((i - 1) % mod + 1); }

Complex icosahedron() {
    Tokens fs;
    for (int i = 1; i <= 5; ++i) {
        fs.push_back({"u", sub("u", i, 5), sub("u", i + 1, 5)});
        fs.push_back({sub("u", i, 5), sub("u", i + 1, 5), sub("v", i + 3, 5)});
        fs.push_back({sub("v", i, 5), sub("v", i + 1, 5), sub("u", i + 3, 5)});
        fs.push_back({"v", sub("v", i, 5), sub("v", i + 1, 5)});
    }
    return from_tokens(fs, "icosahedron");
}

Complex rp2_6() {
    Tokens fs;
    for (int i = 1; i <= 5; ++i) {
        fs.push_back({"u", sub("u", i, 5), sub("u", i + 1, 5)});
        fs.push_back({sub("u", i, 5), sub("u", i + 1, 5), sub("u", i + 3, 5)});
    }
    return from_tokens(fs, "rp2_6");
}

Complex torus_7() {
    Tokens fs;
    for (int i = 1; i <= 7; ++i) {
        fs.push_back({sub("w", i, 7), sub("w", i + 1, 7), sub("w", i + 3, 7)});
        fs.push_back({sub("w", i, 7), sub("w", i + 2, 7), sub("w", i + 3, 7)});
    }
    return from_tokens(fs, "torus_7");
}

Complex m_9() {
    Tokens fs;
    const int triples[7][3] = {{1, 2, 5}, {1, 3, 5}, {1, 3, 4}, {1, 8, 9}, {1, 6, 8}, {1, 2, 6}, {2, 3, 6}};
    for (int p = 0; p <= 2; ++p) {
        fs.push_back({sub("u", 1 + p, 9), sub("u", 4 + p, 9), sub("u", 7 + p, 9)});
        for (const auto& t : triples)
            fs.push_back({sub("u", t[0] + 3 * p, 9), sub("u", t[1] + 3 * p, 9), sub("u", t[2] + 3 * p, 9)});
    }
    return from_tokens(fs, "m_9");
}

Complex n_10() {
    Tokens fs;
    for (int i = 1; i <= 9; ++i) {
        fs.push_back({"u", sub("u", i, 9), sub("u", i + 1, 9)});
        fs.push_back({sub("u", i, 9), sub("u", i + 1, 9), sub("u", i + 4, 9)});
        fs.push_back({sub("u", i, 9), sub("u", i + 2, 9), sub("u", i + 4, 9)});
        fs.push_back({sub("u", i, 9), sub("u", i + 3, 9), sub("u", i + 6, 9)});
    }
    return from_tokens(fs, "n_10");
}

Complex t3_15() {
    Tokens fs;
    std::vector<int> steps{1, 2, 4};
    do {
        for (int i = 1; i <= 15; ++i) {
            std::vector<std::string> f{sub("u", i, 15)};
            int x = i;
            for (int s : steps) f.push_back(sub("u", x += s, 15));
            fs.push_back(f);
        }
    } while (std::next_permutation(steps.begin(), steps.end()));
    return from_tokens(fs, "t3_15");
}

Complex verbatim(std::string_view name) {
    for (const auto& [key, text] : detail::verbatim_lists())
        if (key == name) return parse_cplx(text, std::string(name));
    throw Error("missing stored list " + std::string(name));
}

Simplex tokens_to_simplex(const Complex& K, std::initializer_list<const char*> toks) {
    std::vector<Vertex> vs;
    for (auto t : toks) vs.push_back(*K.find_vertex(t));
    return Simplex(vs);
}

Complex s3_8_39() {
    const auto K = verbatim("s3_8_38");
    const Move m{tokens_to_simplex(K, {"4", "6"}), tokens_to_simplex(K, {"3", "5", "7"}), 2};
    return apply_move(K, m).with_name("s3_8_39");
}

// Affine plane over the field with three elements; point (a, b) is 3a + b + 1.
Complex cp2_9() {
    auto pt = [](int a, int b) { return static_cast<long long>(3 * ((a % 3 + 3) % 3) + (b % 3 + 3) % 3 + 1); };
    std::vector<std::vector<long long>> fs;
    // The parallel class a = const, in cyclic order.
    for (int i = 0; i < 3; ++i) {
        for (int x = 0; x < 3; ++x) {
            std::vector<long long> f;
            for (int b = 0; b < 3; ++b) f.push_back(pt(i + 1, b));
            for (int b = 0; b < 3; ++b)
                if (b != x) f.push_back(pt(i, b));
            fs.push_back(f);
        }
    }
    // Lines b = s a + c for slopes s = 0, 1, 2.
    auto line = [&](int s, int c) {
        std::set<long long> pts;
        for (int a = 0; a < 3; ++a) pts.insert(pt(a, s * a + c));
        return pts;
    };
    for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t)
            for (int c = 0; c < 3; ++c)
                for (int e = 0; e < 3; ++e) {
                    auto u = line(s, c);
                    const auto l2 = line(t, e);
                    u.insert(l2.begin(), l2.end());
                    fs.emplace_back(u.begin(), u.end());
                }
    Complex K = from_facets(fs, "cp2_9");
    return K;
}

std::vector<std::string> numbered(int n, int start) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(start + i));
    return out;
}

Complex rp4_16() {
    GroupAction G;
    G.generators.push_back(from_cycles(16, {{2, 7}, {4, 10}, {5, 6}, {11, 12}}));
    G.generators.push_back(from_cycles(16, {{1, 2, 3, 4, 5, 10}, {6, 8, 9}, {11, 12, 13, 14, 15, 16}}));
    std::vector<Simplex> reps{Simplex{0, 1, 3, 4, 10}, Simplex{0, 1, 3, 10, 12}};
    return orbit_expand(G, reps, 16, numbered(16, 1), "rp4_16");
}

// F_4 = {0, 1, x, y} coded 0..3, addition is xor, y = x + 1 = x^2.
int f4_mul(int a, int b) {
    static const int table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return table[a][b];
}

Complex k3_16() {
    // v_i = (c[i mod 4], c[i div 4]) with c = (0, 1, x, y).
    auto index = [](int p, int q) { return p + 4 * q; };
    GroupAction G;
    for (int t : {1, 2, 4, 8}) {
        Permutation g(16);
        for (int i = 0; i < 16; ++i) g[static_cast<std::size_t>(i)] = i ^ t;
        G.generators.push_back(g);
    }
    Permutation A(16);
    for (int i = 0; i < 16; ++i) {
        const int p = i % 4, q = i / 4;
        A[static_cast<std::size_t>(i)] = index(f4_mul(3, q), f4_mul(3, p) ^ q);
    }
    G.generators.push_back(A);
    if (expand_group(G.generators, 16).size() != 240) throw Error("K3 group has the wrong order");
    std::vector<Simplex> reps{Simplex{1, 2, 3, 4, 8}, Simplex{1, 4, 6, 9, 10}};
    return orbit_expand(G, reps, 16, numbered(16, 0), "k3_16");
}

HomologyGroup Z(long long b = 1, std::vector<long long> t = {}) { return HomologyGroup{b, std::move(t)}; }
HomologyGroup zero() { return HomologyGroup{}; }

std::vector<HomologyGroup> sphere_homology(int d) {
    std::vector<HomologyGroup> h(static_cast<std::size_t>(d + 1));
    h.front() = Z();
    h.back() = Z();
    return h;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;
    auto add = [&](std::string name, std::string title, Complex K, Expected e, bool generated = false) {
        out.push_back(CatalogEntry{name, std::move(title), K.with_name(name), std::move(e), generated});
    };
    add("icosahedron", "boundary of the icosahedron", icosahedron(),
        {12, {12, 30, 20}, 2, sphere_homology(2), true, true, true, "S^2", {}});
    add("rp2_6", "hemi-icosahedron", rp2_6(), {6, {6, 15, 10}, 1, {Z(), Z(0, {2}), zero()}, false, true, false, "RP^2", {}});
    add("torus_7", "seven-vertex torus", torus_7(), {7, {7, 21, 14}, 0, {Z(), Z(2), Z()}, true, true, false, "T^2", {}});
    add("klein_8", "eight-vertex Klein bottle", verbatim("klein_8"),
        {8, {8, 24, 16}, 0, {Z(), Z(1, {2}), zero()}, false, true, false, "Klein bottle", {}});
    add("m_9", "nine-vertex surface of Euler characteristic -3", m_9(),
        {9, {}, -3, {Z(), Z(4, {2}), zero()}, false, true, false, "M(5,-)", {}});
    add("n_10", "ten-vertex surface of Euler characteristic -5", n_10(),
        {10, {}, -5, {Z(), Z(6, {2}), zero()}, false, true, false, "M(7,-)", {}});
    for (const char* s : {"35", "36", "37", "38"}) {
        const std::string name = std::string("s3_8_") + s;
        add(name, std::string("neighbourly 8-vertex 3-sphere no. ") + s, verbatim(name),
            {8, {8, 28, 40, 20}, 0, sphere_homology(3), true, true, true, "S^3", {}});
    }
    add("s3_8_39", "8-vertex 3-sphere from s3_8_38 by the 2-move kappa(46, 357)", s3_8_39(),
        {8, {8, 27, 38, 19}, 0, sphere_homology(3), true, true, true, "S^3",
         {"the move is applied to s3_8_38; the stated source 'S^3_{8,4}' is read as s3_8_38"}},
        true);
    add("rp3_11", "eleven-vertex real projective 3-space", verbatim("rp3_11"),
        {11, {}, 0, {Z(), Z(0, {2}), zero(), Z()}, true, true, false, "RP^3", {}});
    add("l3_12", "twelve-vertex lens space L(3,1)", verbatim("l3_12"),
        {12, {}, 0, {Z(), Z(0, {3}), zero(), Z()}, true, true, false, "L(3,1)", {}});
    add("t3_15", "fifteen-vertex 3-torus", t3_15(),
        {15, {15, 105, 180, 90}, 0, {Z(), Z(3), Z(3), Z()}, true, true, false, "T^3", {}});
    add("h3_16", "sixteen-vertex Poincare homology sphere", verbatim("h3_16"),
        {16, {16, 106, 180, 90}, 0, sphere_homology(3), true, true, false, "Poincare homology 3-sphere", {}});
    add("cp2_9", "nine-vertex complex projective plane", cp2_9(),
        {9, {9, 36, 84, 90, 36}, 3, {Z(), zero(), Z(), zero(), Z()}, true, true, false, "CP^2", {}}, true);
    add("s2xs2_11", "eleven-vertex S^2 x S^2", verbatim("s2xs2_11"),
        {11, {}, 4, {Z(), zero(), Z(2), zero(), Z()}, true, true, false, "S^2 x S^2", {}});
    add("rp4_16", "sixteen-vertex real projective 4-space", rp4_16(),
        {16, {16, 120, 330, 375, 150}, 1, {Z(), Z(0, {2}), zero(), Z(0, {2}), zero()}, false, true, false, "RP^4", {}},
        true);
    add("k3_16", "sixteen-vertex K3 surface", k3_16(),
        {16, {16, 120, 560, 720, 288}, 24, {Z(), zero(), Z(22), zero(), Z()}, true, true, false, "K3 surface", {}},
        true);
    add("s3xs2_12", "twelve-vertex S^3 x S^2", verbatim("s3xs2_12"),
        {12, {}, 0, {Z(), zero(), Z(), Z(), zero(), Z()}, true, true, false, "S^3 x S^2", {}});
    return out;
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> all = build();
    return all;
}

void check(CatalogReport& r, bool ok, const std::string& what) { (ok ? r.passed : r.failed).push_back(what); }

std::string show_f(const FVector& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + std::to_string(f[i]);
    return s + ")";
}

}  // namespace

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    auto p = identity_permutation(static_cast<std::size_t>(n));
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 1 || c[i] > n) throw Error("cycle point out of range");
            p[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()] - 1;
        }
    return p;
}

Complex orbit_expand(const GroupAction& G, const std::vector<Simplex>& representatives, int vertices,
                     std::vector<std::string> labels, std::string name) {
    const auto elems = expand_group(G.generators, static_cast<std::size_t>(vertices));
    std::set<Simplex> facets;
    for (const auto& r : representatives)
        for (const auto& g : elems) facets.insert(apply(g, r));
    return Complex(std::vector<Simplex>(facets.begin(), facets.end()), std::move(labels), std::move(name));
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
}

const CatalogEntry& catalog_get(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw Error("unknown catalog entry: " + name);
}

const std::vector<Complex>& known_non_spheres() {
    static const std::vector<Complex> list{verbatim("h3_16").with_name("h3_16")};
    return list;
}

std::string CatalogReport::to_string() const {
    std::ostringstream out;
    out << name << ": " << (ok ? "ok" : "FAILED") << " (" << passed.size() << " checks passed";
    if (!undecided.empty()) out << ", " << undecided.size() << " undecided";
    out << ")\n";
    for (const auto& f : failed) out << "  failed: " << f << "\n";
    for (const auto& u : undecided) out << "  undecided: " << u << "\n";
    return out.str();
}

CatalogReport catalog_verify(const std::string& name, bool deep) {
    const auto& e = catalog_get(name);
    const auto& K = e.complex;
    const auto& x = e.expected;
    CatalogReport r;
    r.name = name;
    const auto f = f_vector(K);
    check(r, K.vertex_count() == x.n, "vertex count " + std::to_string(K.vertex_count()));
    if (!x.f.empty()) check(r, f == x.f, "f-vector " + show_f(f));
    if (x.chi) check(r, euler_characteristic(f) == *x.chi, "Euler characteristic " + std::to_string(euler_characteristic(f)));
    const auto h = homology(K);
    if (!x.homology.empty()) check(r, h.groups == x.homology, "homology " + h.to_string());
    check(r, h.euler_characteristic() == euler_characteristic(f), "homology agrees with the f-vector");
    const auto pm = is_pseudomanifold(K);
    check(r, pm.is_yes(), "pseudomanifold");
    if (x.orientable && pm.is_yes()) check(r, orientable(K).is_yes() == *x.orientable, "orientability");
    if (x.manifold) {
        check(r, dehn_sommerville_residuals(K).ok, "Dehn-Sommerville equations");
        check(r, lbt_check(K).ok, "lower bound");
    }
    if (x.sphere) check(r, ubt_check(K).ok, "upper bound");
    if (deep) {
        auto m = is_combinatorial_manifold(K);
        if (m.is_unknown()) r.undecided.push_back("combinatorial manifold: " + m.note);
        else check(r, m.is_yes() == x.manifold, "combinatorial manifold: " + m.certificate);
        if (K.dim() >= 3) {
            auto s = is_combinatorial_sphere(K);
            if (s.is_unknown()) {
                if (x.sphere) r.undecided.push_back("sphere: " + s.note);
            } else {
                check(r, s.is_yes() == x.sphere, "sphere: " + s.certificate);
            }
        }
    }
    r.ok = r.failed.empty();
    return r;
}

std::vector<CatalogReport> catalog_verify_all(bool deep) {
    std::vector<CatalogReport> out;
    for (const auto& n : catalog_names()) out.push_back(catalog_verify(n, deep));
    return out;
}

}  // namespace simplicia

#include "simplicia/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "simplicia/error.hpp"

namespace simplicia {

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::valid() const {
    if (parts.empty()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i && parts[i] < parts[i - 1]) return false;
    }
    return true;
}

bool Partition::even() const {
    const auto evens = std::count_if(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
    return evens % 2 == 0;
}

namespace {

std::vector<std::string> numeric_labels(int n, int start = 1) {
    std::vector<std::string> l;
    for (int i = 0; i < n; ++i) l.push_back(std::to_string(i + start));
    return l;
}

Simplex range_simplex(int n) {
    std::vector<Vertex> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Simplex::from_sorted(std::move(v));
}

}  // namespace

Complex standard_sphere(int d) {
    if (d < 0) throw Error("dimension must be non-negative");
    return Complex(range_simplex(d + 2).subsets(static_cast<std::size_t>(d + 1)), {},
                   "S^" + std::to_string(d) + "_" + std::to_string(d + 2));
}

Complex standard_ball(int d) {
    if (d < 0) throw Error("dimension must be non-negative");
    return Complex({range_simplex(d + 1)}, {}, "B^" + std::to_string(d));
}

bool gale_evenness(const std::vector<int>& U, int n) {
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (int u : U) in[static_cast<std::size_t>(u)] = true;
    for (int i = 1; i <= n; ++i) {
        if (in[static_cast<std::size_t>(i)]) continue;
        for (int j = i + 1; j <= n; ++j) {
            if (in[static_cast<std::size_t>(j)]) continue;
            int between = 0;
            for (int k = i + 1; k < j; ++k) between += in[static_cast<std::size_t>(k)] ? 1 : 0;
            if (between % 2) return false;
        }
    }
    return true;
}

Complex cyclic_sphere(int d, int n) {
    if (d < 1 || n < d + 2) throw Error("cyclic sphere needs d >= 1 and n >= d + 2");
    std::vector<Simplex> facets;
    for (const auto& s : range_simplex(n).subsets(static_cast<std::size_t>(d + 1))) {
        std::vector<int> U;
        for (Vertex v : s) U.push_back(v + 1);
        if (gale_evenness(U, n)) facets.push_back(s);
    }
    return Complex(std::move(facets), numeric_labels(n), "C^" + std::to_string(d) + "_" + std::to_string(n));
}

namespace {

// Windows {i, ..., i+d+1} minus one interior vertex, on vertices 0..count-1 taken mod modulus.
std::vector<Simplex> window_facets(int d, int windows, int modulus) {
    std::vector<Simplex> out;
    for (int i = 0; i < windows; ++i)
        for (int j = i + 1; j <= i + d; ++j) {
            std::vector<Vertex> f;
            for (int t = i; t <= i + d + 1; ++t)
                if (t != j) f.push_back(static_cast<Vertex>(t % modulus));
            out.emplace_back(std::move(f));
        }
    return out;
}

}  // namespace

Complex kuhnel_complex(int d, int n) {
    if (d < 2 || n < 2 * d + 3) throw Error("Kuhnel complex needs d >= 2 and n >= 2d + 3");
    return Complex(window_facets(d, n, n), numeric_labels(n), "K^" + std::to_string(d) + "_" + std::to_string(n));
}

Complex kuhnel_partition(int d, const Partition& p) {
    if (d < 2) throw Error("partition complex needs d >= 2");
    if (!p.valid() || p.total() != d + 1) throw Error("invalid partition");
    // vertex t (0-based) stands for t+1 in 1..3d+5
    const int V = 3 * d + 5;
    std::vector<Vertex> pi(static_cast<std::size_t>(d + 1));  // pi[i-1] = pi_p(i) - 1
    int s = 0;
    for (int part : p.parts) {
        for (int k = 0; k < part; ++k) pi[static_cast<std::size_t>(s + k)] = static_cast<Vertex>(s + (k + 1) % part);
        s += part;
    }
    std::vector<Vertex> map(static_cast<std::size_t>(V));
    for (int t = 0; t < V; ++t) {
        const int label = t + 1;
        map[static_cast<std::size_t>(t)] = label <= 2 * d + 4 ? t : pi[static_cast<std::size_t>(label - (2 * d + 4) - 1)];
    }
    std::vector<Simplex> facets;
    for (const auto& f : window_facets(d, 2 * d + 4, V)) {
        std::vector<Vertex> g;
        for (Vertex v : f) g.push_back(map[static_cast<std::size_t>(v)]);
        facets.emplace_back(std::move(g));
    }
    std::ostringstream name;
    name << "K^" << d << "_" << 2 * d + 4 << "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) name << (i ? "," : "") << p.parts[i];
    name << ")";
    return Complex(std::move(facets), numeric_labels(V), name.str());
}

std::string fresh_label(const Complex& K) {
    for (long long i = K.vertex_count() + 1;; ++i) {
        auto t = std::to_string(i);
        if (!K.find_vertex(t)) return t;
    }
}

namespace {

std::vector<std::string> labels_plus_fresh(const Complex& K) {
    auto l = K.labels();
    l.push_back(fresh_label(K));
    return l;
}

}  // namespace

Complex one_point_suspension(const Complex& K, Vertex u) {
    if (!K.is_pure()) throw Error("one-point suspension needs a pure complex");
    if (u < 0 || u >= K.vertex_count()) throw Error("unknown vertex");
    const Vertex v = K.vertex_count();
    std::vector<Simplex> out;
    for (const auto& a : K.facets()) {
        if (!a.contains(u)) out.push_back(a.with(u));
        out.push_back(a.with(v));
    }
    std::string name = K.name().empty() ? "" : "Sigma " + K.name();
    return Complex(std::move(out), labels_plus_fresh(K), name);
}

Complex stellar_subdivide(const Complex& K, const Simplex& s) {
    if (s.dim() < 1 || !K.is_face(s)) throw Error("invalid face");
    const Vertex a = K.vertex_count();
    std::vector<Simplex> out;
    for (const auto& f : K.facets()) {
        if (!f.contains(s)) {
            out.push_back(f);
            continue;
        }
        for (Vertex x : s) out.push_back(f.without(x).with(a));
    }
    return Complex(std::move(out), labels_plus_fresh(K), K.name());
}

Complex star_in_facet(const Complex& K, const Simplex& facet) {
    if (!K.is_facet(facet)) throw Error("not a facet");
    return stellar_subdivide(K, facet);
}

Complex stacked_sphere(int n, int d, std::uint64_t seed) {
    if (d < 1 || n < d + 2) throw Error("stacked sphere needs d >= 1 and n >= d + 2");
    std::mt19937_64 rng(seed);
    Complex K = standard_sphere(d);
    while (K.vertex_count() < n) {
        std::uniform_int_distribution<std::size_t> pick(0, K.facet_count() - 1);
        K = star_in_facet(K, K.facets()[pick(rng)]);
    }
    return K.with_name("stacked " + std::to_string(d) + "-sphere on " + std::to_string(n) + " vertices");
}

Complex barycentric_subdivision(const Complex& K) {
    std::map<Simplex, Vertex> id;
    std::vector<std::string> labels;
    for (int k = 0; k <= K.dim(); ++k)
        for (const auto& s : K.faces(k)) {
            id.emplace(s, static_cast<Vertex>(labels.size()));
            std::string t;
            for (Vertex v : s) t += (t.empty() ? "" : ".") + K.label(v);
            labels.push_back(t);
        }
    std::vector<Simplex> out;
    for (const auto& f : K.facets()) {
        std::vector<Vertex> order(f.begin(), f.end());
        do {
            std::vector<Vertex> chain;
            std::vector<Vertex> prefix;
            for (Vertex v : order) {
                prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(id.at(Simplex::from_sorted(prefix)));
            }
            out.emplace_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return Complex(std::move(out), std::move(labels), K.name().empty() ? "" : "sd " + K.name());
}

Complex identify(const Complex& K, const std::vector<Vertex>& map) {
    if (map.size() != static_cast<std::size_t>(K.vertex_count())) throw Error("identification map has wrong size");
    std::vector<Simplex> out;
    for (const auto& f : K.facets()) {
        std::vector<Vertex> g;
        for (Vertex v : f) g.push_back(map[static_cast<std::size_t>(v)]);
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end()) throw Error("identification collapses a facet");
        out.push_back(Simplex::from_sorted(std::move(g)));
    }
    return Complex(std::move(out), K.labels(), K.name());
}

Complex quotient(const Complex& K, const GroupAction& G) {
    const auto n = static_cast<std::size_t>(K.vertex_count());
    for (const auto& g : G.generators)
        if (!is_automorphism(K, g)) throw Error("generator is not an automorphism");
    const auto group = expand_group(G.generators, n);
    const auto graph = edge_graph(K);
    std::vector<std::vector<int>> dist;
    dist.reserve(n);
    for (std::size_t v = 0; v < n; ++v) dist.push_back(bfs_distances(graph, static_cast<Vertex>(v)));
    for (const auto& g : group) {
        if (is_identity(g)) continue;
        for (std::size_t u = 0; u < n; ++u)
            if (dist[u][static_cast<std::size_t>(g[u])] < 3)
                throw Error("action is not proper: vertex " + K.label(static_cast<Vertex>(u)) + " is sent to " +
                            K.label(g[u]) + " at distance " + std::to_string(dist[u][static_cast<std::size_t>(g[u])]));
    }
    std::vector<Vertex> rep(n);
    for (const auto& orbit : orbits(G.generators, n))
        for (Vertex v : orbit) rep[static_cast<std::size_t>(v)] = orbit.front();
    return identify(K, rep);
}

Complex real_projective_space(int d) {
    if (d < 1 || d > 6) throw Error("real projective space is limited to 1 <= d <= 6");
    const Complex S = standard_sphere(d);
    const Complex B = barycentric_subdivision(S);
    // vertex of B <-> proper subset U of V(S); eta(U) = V \ U
    std::map<Simplex, Vertex> of;
    std::vector<Simplex> faces_of(static_cast<std::size_t>(B.vertex_count()));
    const Simplex all = range_simplex(d + 2);
    for (int k = 0; k <= S.dim(); ++k)
        for (const auto& s : S.faces(k)) {
            std::string t;
            for (Vertex v : s) t += (t.empty() ? "" : ".") + S.label(v);
            const Vertex b = *B.find_vertex(t);
            of[s] = b;
            faces_of[static_cast<std::size_t>(b)] = s;
        }
    Permutation eta(static_cast<std::size_t>(B.vertex_count()));
    for (std::size_t b = 0; b < eta.size(); ++b) eta[b] = of.at(all.minus(faces_of[b]));
    return quotient(B, GroupAction{{eta}}).with_name("RP^" + std::to_string(d) + "_" + std::to_string((1 << (d + 1)) - 1));
}

Complex torus(int d) {
    if (d < 1 || d > 4) throw Error("torus is limited to 1 <= d <= 4");
    const int m = (1 << (d + 1)) - 1;
    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::vector<Simplex> out;
    for (int c = 0; c < m; ++c) {
        auto perm = order;
        do {
            std::vector<Vertex> f{static_cast<Vertex>(c)};
            int x = c;
            for (int a : perm) {
                x = (x + (1 << a)) % m;
                f.push_back(static_cast<Vertex>(x));
            }
            out.emplace_back(std::move(f));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return Complex(std::move(out), numeric_labels(m), "T^" + std::to_string(d) + "_" + std::to_string(m));
}

}  // namespace simplicia

#include "simplicia/recognition.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <queue>

#include "simplicia/canonical.hpp"
#include "simplicia/catalog.hpp"
#include "simplicia/error.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/parallel.hpp"

namespace simplicia {

namespace {

std::string show(const Complex& K, const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + K.label(s[i]);
    return out + "}";
}

std::map<Simplex, std::vector<std::size_t>> ridge_map(const Complex& K) {
    std::map<Simplex, std::vector<std::size_t>> ridges;
    const auto& fs = K.facets();
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (const auto& r : fs[i].boundary()) ridges[r].push_back(i);
    return ridges;
}

// Index of the first ridge not in exactly two facets, if any.
const std::pair<const Simplex, std::vector<std::size_t>>* bad_ridge(
    const std::map<Simplex, std::vector<std::size_t>>& ridges) {
    for (const auto& entry : ridges)
        if (entry.second.size() != 2) return &entry;
    return nullptr;
}

std::vector<std::size_t> dual_components(const Complex& K, const std::map<Simplex, std::vector<std::size_t>>& ridges) {
    std::vector<std::size_t> parent(K.facet_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [r, list] : ridges)
        for (std::size_t i = 1; i < list.size(); ++i) parent[find(list[i])] = find(list[0]);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(i) == i) roots.push_back(i);
    return roots;
}

void require_ridge_condition(const Complex& K, const char* what) {
    if (!K.is_pure()) throw Error(std::string(what) + " needs a pure complex");
    if (K.dim() < 0) throw Error(std::string(what) + " needs a non-empty complex");
    const auto ridges = ridge_map(K);
    if (auto bad = bad_ridge(ridges))
        throw Error(std::string(what) + " needs a pseudomanifold: ridge " + show(K, bad->first) + " lies in " +
                    std::to_string(bad->second.size()) + " facets");
}

bool is_cycle(const Complex& L) {
    if (L.dim() != 1 || !L.is_pure() || L.vertex_count() < 3) return false;
    for (int d : degrees(L))
        if (d != 2) return false;
    return is_connected(L);
}

bool is_two_points(const Complex& L) { return L.dim() == 0 && L.vertex_count() == 2; }

// Exact test in dimensions 0, 1 and 2.
Verdict low_dimensional_sphere(const Complex& K) {
    const int d = K.dim();
    if (!K.is_pure()) return Verdict::no("not pure");
    if (d == 0) {
        if (is_two_points(K)) return Verdict::yes("two points");
        return Verdict::no(std::to_string(K.vertex_count()) + " points");
    }
    if (d == 1) {
        if (is_cycle(K)) return Verdict::yes("cycle of length " + std::to_string(K.vertex_count()));
        return Verdict::no("not a single cycle");
    }
    if (!is_connected(K)) return Verdict::no("not connected");
    for (Vertex v = 0; v < K.vertex_count(); ++v)
        if (!is_cycle(link(K, Simplex{v}))) return Verdict::no("link of vertex " + K.label(v) + " is not a cycle", {Simplex{v}});
    const auto chi = euler_characteristic(K);
    if (chi != 2) return Verdict::no("surface with Euler characteristic " + std::to_string(chi));
    return Verdict::yes("connected surface with Euler characteristic 2");
}

std::optional<std::string> known_non_sphere_match(const Complex& K) {
    if (K.dim() != 3) return std::nullopt;
    const auto f = f_vector(K);
    for (const auto& N : known_non_spheres())
        if (f_vector(N) == f && are_isomorphic(K, N).is_yes()) return N.name();
    return std::nullopt;
}

Budget serial(Budget b) {
    b.jobs = 1;
    return b;
}

}  // namespace

std::string SurfaceType::tag() const {
    if (orientable) {
        if (genus == 0) return "S2";
        if (genus == 1) return "T2";
        return "M(" + std::to_string(genus) + ",+)";
    }
    if (genus == 1) return "RP2";
    if (genus == 2) return "Klein";
    return "M(" + std::to_string(genus) + ",-)";
}

long long SurfaceType::euler_characteristic() const { return orientable ? 2 - 2 * genus : 2 - genus; }

Verdict is_pseudomanifold(const Complex& K) {
    if (!K.is_pure()) throw Error("pseudomanifold check needs a pure complex");
    if (K.dim() < 0) return Verdict::no("the void complex has no facets");
    const auto ridges = ridge_map(K);
    if (auto bad = bad_ridge(ridges))
        return Verdict::no("ridge " + show(K, bad->first) + " lies in " + std::to_string(bad->second.size()) + " facets",
                           {bad->first});
    const auto roots = dual_components(K, ridges);
    if (roots.size() > 1) {
        std::vector<Simplex> reps;
        for (auto r : roots) reps.push_back(K.facets()[r]);
        return Verdict::no("dual graph has " + std::to_string(roots.size()) + " components", reps);
    }
    return Verdict::yes("every ridge lies in exactly two facets and the dual graph is connected");
}

Verdict is_normal_pseudomanifold(const Complex& K) {
    require_ridge_condition(K, "normal pseudomanifold check");
    const int d = K.dim();
    const auto& fs = K.facets();
    for (int k = 0; k <= d - 2; ++k) {
        for (const auto& s : K.faces(k)) {
            // Union-find over the vertices of the link.
            std::map<Vertex, Vertex> parent;
            auto find = [&](Vertex x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (const auto& f : fs) {
                if (!f.contains(s)) continue;
                const auto rest = f.minus(s);
                for (Vertex v : rest) parent.emplace(v, v);
                for (std::size_t i = 1; i < rest.size(); ++i) parent[find(rest[i])] = find(rest[0]);
            }
            std::size_t comps = 0;
            for (auto& [v, p] : parent)
                if (find(v) == v) ++comps;
            if (comps > 1)
                return Verdict::no("link of " + show(K, s) + " has " + std::to_string(comps) + " components", {s});
        }
    }
    const auto roots = dual_components(K, ridge_map(K));
    if (roots.size() > 1) return Verdict::no("dual graph has " + std::to_string(roots.size()) + " components");
    return Verdict::yes("links of all faces of dimension <= " + std::to_string(d - 2) + " are connected");
}

Verdict orientable(const Complex& K) {
    require_ridge_condition(K, "orientability check");
    const auto& fs = K.facets();
    const auto ridges = ridge_map(K);
    std::vector<int> sign(fs.size(), 0);
    auto position = [](const Simplex& f, Vertex v) {
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] == v) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t root = 0; root < fs.size(); ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            const auto a = q.front();
            q.pop();
            for (std::size_t i = 0; i < fs[a].size(); ++i) {
                const auto r = fs[a].without(fs[a][i]);
                for (auto b : ridges.at(r)) {
                    if (b == a) continue;
                    const int j = position(fs[b], fs[b].minus(r)[0]);
                    const int want = ((static_cast<int>(i) + j) % 2 == 0 ? -1 : 1) * sign[a];
                    if (sign[b] == 0) {
                        sign[b] = want;
                        q.push(b);
                    } else if (sign[b] != want) {
                        return Verdict::no("orientation conflict across ridge " + show(K, r), {r, fs[a], fs[b]});
                    }
                }
            }
        }
    }
    return Verdict::yes("coherent orientation of all facets", {}, std::vector<long long>(sign.begin(), sign.end()));
}

SurfaceType classify_surface(const Complex& K) {
    if (K.dim() != 2 || !K.is_pure()) throw Error("not a surface: expected a pure 2-dimensional complex");
    for (Vertex v = 0; v < K.vertex_count(); ++v)
        if (!is_cycle(link(K, Simplex{v}))) throw Error("not a surface: link of vertex " + K.label(v) + " is not a cycle");
    if (!is_connected(K)) throw Error("not a surface: not connected");
    SurfaceType t;
    t.orientable = orientable(K).is_yes();
    const auto chi = euler_characteristic(K);
    t.genus = static_cast<int>(t.orientable ? (2 - chi) / 2 : 2 - chi);
    return t;
}

Verdict is_combinatorial_sphere(const Complex& K, const Budget& budget, std::uint64_t seed) {
    const int d = K.dim();
    if (d < 0) return Verdict::no("the void complex");
    if (d <= 2) return low_dimensional_sphere(K);
    if (!K.is_pure()) return Verdict::no("not pure");
    if (auto pm = is_pseudomanifold(K); pm.is_no()) return Verdict::no("not a pseudomanifold: " + pm.certificate, pm.witnesses);
    const auto h = homology(K);
    if (!has_sphere_homology(h, d)) return Verdict::no("homology " + h.to_string() + " differs from a sphere's");
    if (auto name = known_non_sphere_match(K)) return Verdict::no("isomorphic to the non-sphere " + *name);
    if (d == 3) {
        for (Vertex v = 0; v < K.vertex_count(); ++v) {
            auto lv = low_dimensional_sphere(link(K, Simplex{v}));
            if (lv.is_no()) return Verdict::no("link of vertex " + K.label(v) + ": " + lv.certificate, {Simplex{v}});
        }
    } else {
        // Faces whose link is three-dimensional.
        for (const auto& s : K.faces(d - 4)) {
            if (auto name = known_non_sphere_match(link(K, s)))
                return Verdict::no("link of " + show(K, s) + " is the non-sphere " + *name, {s});
        }
    }
    auto red = reduce_to_sphere(K, budget, seed);
    if (red.verdict.is_yes()) return red.verdict;
    if (d >= 4) {
        for (Vertex v = 0; v < K.vertex_count(); ++v) {
            auto lv = is_combinatorial_sphere(link(K, Simplex{v}), serial(budget), seed + static_cast<std::uint64_t>(v));
            if (lv.is_no()) return Verdict::no("link of vertex " + K.label(v) + ": " + lv.certificate, {Simplex{v}});
        }
    }
    return Verdict::unknown("necessary conditions hold but " + red.verdict.note);
}

Verdict is_combinatorial_manifold(const Complex& K, const Budget& budget, std::uint64_t seed) {
    const int d = K.dim();
    if (d < 0) return Verdict::no("the void complex");
    if (!K.is_pure()) return Verdict::no("not pure");
    if (d == 0) return Verdict::yes("a finite set of points");
    const auto n = static_cast<std::size_t>(K.vertex_count());
    std::vector<Verdict> links(n);
    std::mutex mu;
    const int jobs = d >= 4 ? (budget.jobs > 0 ? budget.jobs : default_jobs()) : 1;
    run_batches(
        n, jobs,
        [&](std::size_t v) {
            Verdict r;
            try {
                r = is_combinatorial_sphere(link(K, Simplex{static_cast<Vertex>(v)}), serial(budget), seed + v);
            } catch (const std::exception& e) {
                r = Verdict::unknown(e.what());
            }
            std::lock_guard lock(mu);
            links[v] = std::move(r);
        },
        [] { return false; });
    Status worst_status = Status::Yes;
    for (const auto& l : links) worst_status = worst(worst_status, l.status);
    for (std::size_t v = 0; v < n; ++v) {
        if (links[v].is_no() && worst_status == Status::No)
            return Verdict::no("link of vertex " + K.label(static_cast<Vertex>(v)) + " is not a sphere: " +
                                   links[v].certificate,
                               {Simplex{static_cast<Vertex>(v)}});
    }
    if (worst_status == Status::Yes)
        return Verdict::yes("every vertex link is a combinatorial " + std::to_string(d - 1) + "-sphere");
    for (std::size_t v = 0; v < n; ++v)
        if (links[v].is_unknown())
            return Verdict::unknown("link of vertex " + K.label(static_cast<Vertex>(v)) + " undecided: " + links[v].note);
    return Verdict::unknown();
}

Verdict is_stacked_sphere(const Complex& K) {
    const int d = K.dim();
    if (d < 1) return Verdict::no("dimension below 1");
    if (!K.is_pure()) return Verdict::no("not pure");
    Complex X = K;
    int removed = 0;
    while (!(X.vertex_count() == d + 2 && X.facet_count() == static_cast<std::size_t>(d + 2))) {
        bool progressed = false;
        for (Vertex v = 0; v < X.vertex_count() && !progressed; ++v) {
            const auto L = link(X, Simplex{v});
            if (L.facet_count() != static_cast<std::size_t>(d + 1) || L.vertex_count() != d + 1 || L.dim() != d - 1 ||
                !L.is_pure())
                continue;
            // link tokens back to ids of X
            std::vector<Vertex> ids;
            for (Vertex w = 0; w < L.vertex_count(); ++w) ids.push_back(*X.find_vertex(L.label(w)));
            const Simplex b(ids);
            if (X.is_face(b)) continue;
            X = apply_move(X, Move{Simplex{v}, b, d});
            ++removed;
            progressed = true;
        }
        if (!progressed)
            return Verdict::no("no removable vertex after " + std::to_string(removed) + " removals (" +
                               std::to_string(X.vertex_count()) + " vertices remain)");
    }
    return Verdict::yes("reduced to the boundary of a simplex after " + std::to_string(removed) + " vertex removals",
                        {}, {removed});
}

}  // namespace simplicia

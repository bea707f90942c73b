#include "simplicia/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "simplicia/canonical.hpp"
#include "simplicia/error.hpp"
#include "simplicia/parallel.hpp"
#include "simplicia/recognition.hpp"

namespace simplicia {

std::string EnumerationReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["total"] = total;
    j["breakdown"] = breakdown;
    j["elapsed_ms"] = elapsed.count();
    return j.dump();
}

std::string EnumerationReport::to_string() const {
    std::ostringstream out;
    out << "n = " << n << ": " << total << " complexes";
    for (const auto& [tag, count] : breakdown) out << "\n  " << tag << ": " << count;
    out << "\n  elapsed: " << elapsed.count() << " ms";
    return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;
using Key = std::vector<Simplex>;

Key canonical_key(const std::vector<Simplex>& facets) {
    return canonical_form(Complex(facets)).complex.facets();
}

struct Child {
    int level = 0;
    bool terminal = false;
    Key key;
};

// Partial complexes are grouped by level (how many vertices are finished) and
// deduplicated by canonical form before they are expanded. Every child lies on
// a strictly higher level than its parent.
template <class Expand>
std::vector<Key> level_search(std::vector<Child> seeds, int max_level, int jobs, Expand expand) {
    std::vector<std::set<Key>> levels(static_cast<std::size_t>(max_level) + 1);
    std::set<Key> finished;
    auto place = [&](Child& c, int from) {
        if (c.terminal) {
            finished.insert(std::move(c.key));
            return;
        }
        if (c.level <= from || c.level > max_level) throw Error("enumeration: level did not increase");
        levels[static_cast<std::size_t>(c.level)].insert(std::move(c.key));
    };
    for (auto& s : seeds) place(s, -1);
    const int workers = jobs > 0 ? jobs : default_jobs();
    for (int L = 0; L <= max_level; ++L) {
        std::vector<Key> work(levels[static_cast<std::size_t>(L)].begin(), levels[static_cast<std::size_t>(L)].end());
        levels[static_cast<std::size_t>(L)].clear();
        if (work.empty()) continue;
        const auto width = static_cast<std::size_t>(std::clamp<std::size_t>(static_cast<std::size_t>(workers), 1, work.size()));
        std::vector<std::vector<Child>> out(width);
        run_batches(
            width, static_cast<int>(width),
            [&](std::size_t t) {
                for (std::size_t i = t; i < work.size(); i += width) expand(work[i], out[t]);
            },
            [] { return false; });
        for (auto& o : out)
            for (auto& c : o) place(c, L);
    }
    return {finished.begin(), finished.end()};
}

// ---- surfaces -------------------------------------------------------------

constexpr int kMaxSurface = 9;
using EdgeCounts = std::array<std::array<int, kMaxSurface>, kMaxSurface>;

// Link of x as a graph of maximum degree two.
struct LinkGraph {
    std::vector<std::vector<int>> adj;
    int edges = 0;
};

std::vector<LinkGraph> link_graphs(const std::vector<Simplex>& tris, int n) {
    std::vector<LinkGraph> g(static_cast<std::size_t>(n));
    for (auto& l : g) l.adj.assign(static_cast<std::size_t>(n), {});
    for (const auto& t : tris) {
        for (int i = 0; i < 3; ++i) {
            const int x = t[static_cast<std::size_t>(i)];
            const int a = t[static_cast<std::size_t>((i + 1) % 3)];
            const int b = t[static_cast<std::size_t>((i + 2) % 3)];
            auto& l = g[static_cast<std::size_t>(x)];
            l.adj[static_cast<std::size_t>(a)].push_back(b);
            l.adj[static_cast<std::size_t>(b)].push_back(a);
            ++l.edges;
        }
    }
    return g;
}

struct Pieces {
    std::vector<std::pair<int, int>> paths;  // end points
    int cycles = 0;

    bool closed() const { return paths.empty() && cycles == 1; }
    bool broken() const { return cycles > 1 || (cycles == 1 && !paths.empty()); }
};

Pieces pieces(const LinkGraph& g) {
    Pieces p;
    const auto n = g.adj.size();
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || g.adj[s].size() != 1) continue;
        int prev = -1, cur = static_cast<int>(s);
        seen[s] = true;
        for (;;) {
            int next = -1;
            for (int w : g.adj[static_cast<std::size_t>(cur)])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            seen[static_cast<std::size_t>(cur)] = true;
        }
        p.paths.emplace_back(static_cast<int>(s), cur);
    }
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || g.adj[s].empty()) continue;
        ++p.cycles;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (int w : g.adj[x])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(static_cast<std::size_t>(w));
                }
        }
    }
    return p;
}

int used_vertices(const std::vector<Simplex>& facets) {
    int used = 0;
    for (const auto& f : facets) used = std::max(used, f[f.size() - 1] + 1);
    return used;
}

// Finishes the star of one unfinished vertex in every possible way.
void expand_surface(const Key& tris, int n, std::vector<Child>& out) {
    const int used = used_vertices(tris);
    const auto graphs = link_graphs(tris, n);
    std::vector<Pieces> pcs;
    std::vector<bool> closed(static_cast<std::size_t>(n), false);
    int v = -1;
    for (int x = 0; x < used; ++x) {
        pcs.push_back(pieces(graphs[static_cast<std::size_t>(x)]));
        closed[static_cast<std::size_t>(x)] = pcs.back().closed();
        if (!closed[static_cast<std::size_t>(x)] &&
            (v < 0 || graphs[static_cast<std::size_t>(x)].edges > graphs[static_cast<std::size_t>(v)].edges))
            v = x;
    }
    if (v < 0) return;

    EdgeCounts ec{};
    for (const auto& t : tris) {
        ++ec[static_cast<std::size_t>(t[0])][static_cast<std::size_t>(t[1])];
        ++ec[static_cast<std::size_t>(t[0])][static_cast<std::size_t>(t[2])];
        ++ec[static_cast<std::size_t>(t[1])][static_cast<std::size_t>(t[2])];
    }
    auto count = [&](int a, int b) {
        return ec[static_cast<std::size_t>(std::min(a, b))][static_cast<std::size_t>(std::max(a, b))];
    };

    const auto& lv = graphs[static_cast<std::size_t>(v)];
    const auto& paths = pcs[static_cast<std::size_t>(v)].paths;
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    taken[static_cast<std::size_t>(v)] = true;
    for (int x = 0; x < n; ++x)
        if (!lv.adj[static_cast<std::size_t>(x)].empty()) taken[static_cast<std::size_t>(x)] = true;
    std::vector<bool> path_used(paths.size(), false);
    std::vector<std::pair<int, int>> added;
    const int start = paths[0].first;
    path_used[0] = true;

    auto emit = [&] {
        std::vector<Simplex> next = tris;
        for (auto [a, b] : added) next.push_back(Simplex{v, a, b});
        const int now_used = used_vertices(next);
        const auto g = link_graphs(next, n);
        int level = 0;
        for (int x = 0; x < now_used; ++x) {
            const auto p = pieces(g[static_cast<std::size_t>(x)]);
            if (p.broken()) return;
            if (p.closed()) ++level;
        }
        const bool terminal = level == now_used;
        if (terminal && now_used < n) return;
        out.push_back({level, terminal, canonical_key(next)});
    };

    std::function<void(int, int, std::size_t)> rec = [&](int cur, int next_new, std::size_t paths_left) {
        if (paths_left == 0 && count(cur, start) < 2) {
            const auto& nb = lv.adj[static_cast<std::size_t>(cur)];
            if (std::find(nb.begin(), nb.end(), start) == nb.end()) {
                added.emplace_back(cur, start);
                emit();
                added.pop_back();
            }
        }
        for (std::size_t j = 0; j < paths.size(); ++j) {
            if (path_used[j]) continue;
            for (int side = 0; side < 2; ++side) {
                const int in = side == 0 ? paths[j].first : paths[j].second;
                const int exit = side == 0 ? paths[j].second : paths[j].first;
                if (count(cur, in) >= 2) continue;
                path_used[j] = true;
                added.emplace_back(cur, in);
                rec(exit, next_new, paths_left - 1);
                added.pop_back();
                path_used[j] = false;
            }
        }
        for (int y = 0; y < used; ++y) {
            if (taken[static_cast<std::size_t>(y)] || closed[static_cast<std::size_t>(y)] || count(cur, y) >= 2) continue;
            taken[static_cast<std::size_t>(y)] = true;
            added.emplace_back(cur, y);
            rec(y, next_new, paths_left);
            added.pop_back();
            taken[static_cast<std::size_t>(y)] = false;
        }
        if (next_new < n) {
            added.emplace_back(cur, next_new);
            rec(next_new, next_new + 1, paths_left);
            added.pop_back();
        }
    };
    rec(paths[0].second, used, paths.size() - 1);
}

std::vector<Complex> connected_surfaces(int n, int jobs) {
    std::vector<Child> seeds;
    for (int deg = 3; deg < n; ++deg) {
        std::vector<Simplex> star;
        for (int i = 1; i <= deg; ++i) star.push_back(Simplex{0, i, i % deg + 1});
        seeds.push_back({1, false, canonical_key(star)});
    }
    auto keys = level_search(std::move(seeds), n, jobs, [n](const Key& k, std::vector<Child>& out) {
        expand_surface(k, n, out);
    });
    std::vector<Complex> result;
    for (auto& k : keys) result.emplace_back(std::move(k));
    return result;
}

// Multisets of connected surfaces, at least two, on n vertices in total.
void disconnected_surfaces(int n, int jobs, std::vector<Complex>& result) {
    std::map<int, std::vector<Complex>> by_size;
    for (int m = 4; m + 4 <= n; ++m) by_size[m] = connected_surfaces(m, jobs);
    std::set<Key> seen;
    std::function<void(int, int, std::size_t, const Complex*, int)> rec =
        [&](int left, int min_size, std::size_t min_index, const Complex* acc, int parts) {
            if (left == 0) {
                if (parts < 2) return;
                auto key = canonical_key(acc->facets());
                if (seen.insert(key).second) result.emplace_back(std::move(key));
                return;
            }
            for (int m = min_size; m <= left; ++m) {
                if (left - m != 0 && left - m < 4) continue;
                auto it = by_size.find(m);
                if (it == by_size.end()) continue;
                for (std::size_t i = (m == min_size ? min_index : 0); i < it->second.size(); ++i) {
                    const Complex next = acc ? disjoint_union(*acc, it->second[i]) : it->second[i];
                    rec(left - m, m, i, &next, parts + 1);
                }
            }
        };
    rec(n, 4, 0, nullptr, 0);
}

// ---- d + 3 vertices ---------------------------------------------------------

// Facets on d + 3 vertices are complements of vertex pairs, so a facet set is
// a graph G. A ridge V - {a,b,c} lies in as many facets as the triangle abc
// has edges in G; the ridge condition asks for 0 or 2.
std::vector<std::vector<std::pair<int, int>>> pair_graphs(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
    std::vector<std::vector<std::pair<int, int>>> result;
    std::vector<std::pair<int, int>> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pairs.size()) {
            if (!chosen.empty()) result.push_back(chosen);
            return;
        }
        const auto [b, c] = pairs[i];
        for (int bit = 0; bit < 2; ++bit) {
            adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = bit == 1;
            bool ok = true;
            for (int a = 0; a < b && ok; ++a) {
                const int e = adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +
                              adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] + bit;
                ok = e == 0 || e == 2;
            }
            if (!ok) continue;
            if (bit) chosen.emplace_back(b, c);
            rec(i + 1);
            if (bit) chosen.pop_back();
        }
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = false;
    };
    rec(0);
    return result;
}

// ---- neighbourly 3-manifolds on 8 vertices --------------------------------

using Mask = std::uint8_t;

Simplex mask_simplex(unsigned mask) {
    std::vector<Vertex> vs;
    for (int i = 0; i < 8; ++i)
        if (mask >> i & 1u) vs.push_back(i);
    return Simplex::from_sorted(std::move(vs));
}

unsigned simplex_mask(const Simplex& s) {
    unsigned m = 0;
    for (Vertex v : s) m |= 1u << v;
    return m;
}

// Every labelled 2-sphere with vertex set {0..7} - {v}, as sorted triangle masks.
std::vector<std::vector<Mask>> labelled_spheres(const std::vector<Complex>& types, int v) {
    std::vector<int> others;
    for (int x = 0; x < 8; ++x)
        if (x != v) others.push_back(x);
    std::set<std::vector<Mask>> found;
    for (const auto& S : types) {
        std::vector<int> perm(others);
        do {
            std::vector<Mask> tri;
            for (const auto& t : S.facets()) {
                unsigned m = 0;
                for (Vertex x : t) m |= 1u << perm[static_cast<std::size_t>(x)];
                tri.push_back(static_cast<Mask>(m));
            }
            std::sort(tri.begin(), tri.end());
            found.insert(std::move(tri));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {found.begin(), found.end()};
}

bool sphere_link(const std::vector<unsigned>& tets, int x) {
    std::vector<Simplex> tri;
    for (unsigned t : tets)
        if (t >> x & 1u) tri.push_back(mask_simplex(t & ~(1u << x)));
    return is_combinatorial_sphere(Complex(tri)).is_yes();
}

void expand_neighbourly(const Key& key, const std::vector<std::vector<std::vector<Mask>>>& spheres,
                        std::vector<Child>& out) {
    std::vector<unsigned> tets;
    for (const auto& f : key) tets.push_back(simplex_mask(f));
    std::array<int, 8> deg{};
    std::array<int, 256> tri_count{};
    for (unsigned t : tets) {
        for (int x = 0; x < 8; ++x)
            if (t >> x & 1u) {
                ++deg[static_cast<std::size_t>(x)];
                ++tri_count[t & ~(1u << x)];
            }
    }
    int v = -1;
    for (int x = 0; x < 8; ++x)
        if (deg[static_cast<std::size_t>(x)] < 10 && (v < 0 || deg[static_cast<std::size_t>(x)] > deg[static_cast<std::size_t>(v)])) v = x;
    if (v < 0) return;
    std::array<bool, 256> in_link{};
    int existing = 0;
    for (unsigned t : tets)
        if (t >> v & 1u) {
            in_link[t & ~(1u << v)] = true;
            ++existing;
        }
    for (const auto& T : spheres[static_cast<std::size_t>(v)]) {
        int hit = 0;
        for (Mask t : T) hit += in_link[t];
        if (hit != existing) continue;
        std::array<int, 8> d2 = deg;
        bool ok = true;
        std::vector<unsigned> next = tets;
        for (Mask t : T) {
            if (in_link[t]) continue;
            if (tri_count[t] >= 2) {
                ok = false;
                break;
            }
            for (int x = 0; x < 8; ++x)
                if (t >> x & 1u && ++d2[static_cast<std::size_t>(x)] > 10) ok = false;
            if (!ok) break;
            next.push_back(t | 1u << v);
        }
        if (!ok) continue;
        d2[static_cast<std::size_t>(v)] = 10;
        int level = 0;
        for (int x = 0; x < 8; ++x) {
            if (d2[static_cast<std::size_t>(x)] != 10) continue;
            if (x != v && deg[static_cast<std::size_t>(x)] != 10 && !sphere_link(next, x)) {
                ok = false;
                break;
            }
            ++level;
        }
        if (!ok) continue;
        std::vector<Simplex> facets;
        for (unsigned t : next) facets.push_back(mask_simplex(t));
        out.push_back({level, level == 8, canonical_key(facets)});
    }
}

void tally(EnumerationReport& r, const std::string& tag) { ++r.breakdown[tag]; }

}  // namespace

EnumerationReport surfaces(int n, const EnumerationOptions& options) {
    if (n < 4 || n > 9) throw Error("surfaces: n must lie in 4..9");
    if (n == 9 && !options.extended) throw Error("surfaces: n = 9 needs the extended tier");
    const auto t0 = Clock::now();
    EnumerationReport r;
    r.n = n;
    r.complexes = connected_surfaces(n, options.jobs);
    for (const auto& K : r.complexes) tally(r, classify_surface(K).tag());
    if (!options.connected_only) {
        const auto before = r.complexes.size();
        disconnected_surfaces(n, options.jobs, r.complexes);
        for (auto i = before; i < r.complexes.size(); ++i) tally(r, "disconnected");
    }
    r.total = static_cast<long long>(r.complexes.size());
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return r;
}

EnumerationReport pseudomanifolds_d_plus_3(int d) {
    if (d < 1 || d > 5) throw Error("pseudomanifolds_d_plus_3: d must lie in 1..5");
    const auto t0 = Clock::now();
    const int m = d + 3;
    std::vector<std::pair<int, Key>> joins;
    for (int c = 0; c < d; ++c)
        joins.emplace_back(c, canonical_key(join(boundary_complex(static_cast<std::size_t>(c + 2)),
                                                 boundary_complex(static_cast<std::size_t>(d - c + 1)))
                                                .facets()));
    std::set<Key> found;
    for (const auto& g : pair_graphs(m)) {
        std::vector<Simplex> facets;
        std::vector<int> cover(static_cast<std::size_t>(m), 0);
        for (auto [a, b] : g) {
            std::vector<Vertex> f;
            for (int x = 0; x < m; ++x)
                if (x != a && x != b) {
                    f.push_back(x);
                    ++cover[static_cast<std::size_t>(x)];
                }
            facets.push_back(Simplex::from_sorted(std::move(f)));
        }
        if (std::count(cover.begin(), cover.end(), 0) > 0) continue;
        const Complex K(facets);
        if (!is_pseudomanifold(K).is_yes()) continue;
        found.insert(canonical_key(K.facets()));
    }
    EnumerationReport r;
    r.n = m;
    for (const auto& k : found) {
        auto it = std::find_if(joins.begin(), joins.end(), [&](const auto& j) { return j.second == k; });
        if (it == joins.end()) throw Error("pseudomanifolds_d_plus_3: found a pseudomanifold that is not a join of standard spheres");
        const int c = std::min(it->first, d - 1 - it->first);
        tally(r, "S^" + std::to_string(c) + "*S^" + std::to_string(d - 1 - c));
        r.complexes.emplace_back(k);
    }
    r.total = static_cast<long long>(r.complexes.size());
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return r;
}

EnumerationReport neighbourly_3spheres_8(const EnumerationOptions& options) {
    if (!options.extended) throw Error("neighbourly_3spheres_8 needs the extended tier");
    const auto t0 = Clock::now();
    std::vector<Complex> types;
    for (const auto& S : connected_surfaces(7, options.jobs))
        if (classify_surface(S).tag() == "S2") types.push_back(S);
    std::vector<std::vector<std::vector<Mask>>> spheres;
    for (int v = 0; v < 8; ++v) spheres.push_back(labelled_spheres(types, v));
    std::vector<Child> seeds;
    for (const auto& S : types) {
        std::vector<Simplex> facets;
        for (const auto& t : S.facets()) facets.push_back(Simplex{0, t[0] + 1, t[1] + 1, t[2] + 1});
        seeds.push_back({1, false, canonical_key(facets)});
    }
    auto keys = level_search(std::move(seeds), 8, options.jobs, [&](const Key& k, std::vector<Child>& out) {
        expand_neighbourly(k, spheres, out);
    });
    EnumerationReport r;
    r.n = 8;
    for (auto& k : keys) {
        r.complexes.emplace_back(std::move(k));
        tally(r, is_combinatorial_manifold(r.complexes.back()).is_yes() ? "manifold" : "other");
    }
    r.total = static_cast<long long>(r.complexes.size());
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return r;
}

}  // namespace simplicia

#include "simplicia/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "simplicia/error.hpp"

namespace simplicia {

struct Complex::FaceCache {
    std::mutex mu;
    std::vector<std::unique_ptr<std::vector<Simplex>>> by_dim;
};

namespace {

const std::vector<Simplex>& empty_face_list() {
    static const std::vector<Simplex> none;
    return none;
}

const std::vector<Simplex>& void_face_list() {
    static const std::vector<Simplex> only{Simplex()};
    return only;
}

std::vector<Simplex> maximal_only(std::vector<Simplex> fs) {
    std::sort(fs.begin(), fs.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    if (fs.empty() || fs.front().size() == fs.back().size()) return fs;
    std::vector<Simplex> kept;
    for (auto& f : fs) {
        bool covered = false;
        for (const auto& g : kept) {
            if (g.size() > f.size() && g.contains(f)) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(std::move(f));
    }
    return kept;
}

}  // namespace

Complex::Complex(std::vector<Simplex> facets, std::vector<std::string> labels, std::string name)
    : name_(std::move(name)), cache_(std::make_shared<FaceCache>()) {
    if (facets.empty()) throw Error("empty complex");
    facets = maximal_only(std::move(facets));

    std::vector<Vertex> used;
    for (const auto& f : facets) used.insert(used.end(), f.begin(), f.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (!labels.empty() && !used.empty() && static_cast<std::size_t>(used.back()) >= labels.size())
        throw Error("vertex id without a label");

    const bool dense = used.empty() || static_cast<std::size_t>(used.back()) + 1 == used.size();
    if (!dense) {
        std::unordered_map<Vertex, Vertex> remap;
        for (std::size_t i = 0; i < used.size(); ++i) remap[used[i]] = static_cast<Vertex>(i);
        for (auto& f : facets) {
            std::vector<Vertex> g;
            g.reserve(f.size());
            for (Vertex v : f) g.push_back(remap[v]);
            f = Simplex::from_sorted(std::move(g));
        }
    }
    n_ = static_cast<int>(used.size());
    labels_.reserve(used.size());
    for (Vertex old : used)
        labels_.push_back(labels.empty() ? std::to_string(old + 1) : labels[static_cast<std::size_t>(old)]);
    {
        std::vector<std::string> sorted(labels_);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("duplicate vertex token");
    }

    std::sort(facets.begin(), facets.end());
    dim_ = -1;
    for (const auto& f : facets) dim_ = std::max(dim_, f.dim());
    facets_ = std::move(facets);
}

Complex Complex::void_complex() { return Complex(std::vector<Simplex>{Simplex()}); }

bool Complex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return f.dim() == dim_; });
}

std::optional<Vertex> Complex::find_vertex(std::string_view token) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == token) return static_cast<Vertex>(i);
    return std::nullopt;
}

std::vector<std::string> Complex::tokens(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(label(v));
    return out;
}

Complex Complex::with_name(std::string name) const {
    Complex c(*this);
    c.name_ = std::move(name);
    return c;
}

const std::vector<Simplex>& Complex::faces(int k) const {
    if (k == -1) return void_face_list();
    if (k < -1 || k > dim_) return empty_face_list();
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& slots = cache_->by_dim;
    if (slots.size() <= static_cast<std::size_t>(k)) slots.resize(static_cast<std::size_t>(dim_) + 1);
    auto& slot = slots[static_cast<std::size_t>(k)];
    if (!slot) {
        std::vector<Simplex> out;
        const auto want = static_cast<std::size_t>(k + 1);
        for (const auto& f : facets_) {
            if (f.size() < want) continue;
            auto subs = f.subsets(want);
            out.insert(out.end(), std::make_move_iterator(subs.begin()), std::make_move_iterator(subs.end()));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        slot = std::make_unique<std::vector<Simplex>>(std::move(out));
    }
    return *slot;
}

bool Complex::is_face(const Simplex& s) const {
    if (s.empty()) return true;
    const auto& fs = faces(s.dim());
    return std::binary_search(fs.begin(), fs.end(), s);
}

bool Complex::is_facet(const Simplex& s) const {
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

std::vector<std::vector<std::size_t>> Complex::incidence() const {
    std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < facets_.size(); ++i)
        for (Vertex v : facets_[i]) inc[static_cast<std::size_t>(v)].push_back(i);
    return inc;
}

Complex from_facets(const std::vector<std::vector<long long>>& facet_lists, std::string name) {
    if (facet_lists.empty()) throw Error("empty complex");
    std::map<long long, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<Simplex> facets;
    for (const auto& list : facet_lists) {
        if (list.empty()) throw Error("empty facet");
        std::vector<Vertex> vs;
        for (long long x : list) {
            if (x < 0) throw Error("negative vertex id");
            auto [it, fresh] = ids.emplace(x, static_cast<Vertex>(ids.size()));
            if (fresh) labels.push_back(std::to_string(x));
            vs.push_back(it->second);
        }
        facets.emplace_back(std::move(vs));
    }
    return Complex(std::move(facets), std::move(labels), std::move(name));
}

Complex from_tokens(const std::vector<std::vector<std::string>>& facet_lists, std::string name) {
    if (facet_lists.empty()) throw Error("empty complex");
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<Simplex> facets;
    for (const auto& list : facet_lists) {
        if (list.empty()) throw Error("empty facet");
        std::vector<Vertex> vs;
        for (const auto& t : list) {
            auto [it, fresh] = ids.emplace(t, static_cast<Vertex>(ids.size()));
            if (fresh) labels.push_back(t);
            vs.push_back(it->second);
        }
        facets.emplace_back(std::move(vs));
    }
    return Complex(std::move(facets), std::move(labels), std::move(name));
}

Complex closure(const Simplex& s) { return Complex({s}); }

Complex boundary_complex(std::size_t vertices) {
    std::vector<Vertex> vs(vertices);
    for (std::size_t i = 0; i < vertices; ++i) vs[i] = static_cast<Vertex>(i);
    return Complex(Simplex::from_sorted(std::move(vs)).boundary());
}

Complex link(const Complex& K, const Simplex& s) {
    if (!K.is_face(s)) throw Error("not a simplex of K");
    std::vector<Simplex> out;
    for (const auto& f : K.facets())
        if (f.contains(s)) out.push_back(f.minus(s));
    return Complex(std::move(out), K.labels());
}

Complex star(const Complex& K, const Simplex& s) {
    if (!K.is_face(s)) throw Error("not a simplex of K");
    std::vector<Simplex> out;
    for (const auto& f : K.facets())
        if (f.contains(s)) out.push_back(f);
    return Complex(std::move(out), K.labels());
}

namespace {

std::vector<std::string> merged_labels(const Complex& K, const Complex& L) {
    std::vector<std::string> labels(K.labels());
    std::unordered_set<std::string> taken(labels.begin(), labels.end());
    for (const auto& t : L.labels()) {
        std::string u = t;
        while (taken.count(u)) u += "'";
        taken.insert(u);
        labels.push_back(u);
    }
    return labels;
}

Simplex shifted(const Simplex& s, Vertex by) {
    std::vector<Vertex> vs(s.begin(), s.end());
    for (auto& v : vs) v += by;
    return Simplex::from_sorted(std::move(vs));
}

}  // namespace

Complex join(const Complex& K, const Complex& L) {
    const Vertex off = K.vertex_count();
    std::vector<Simplex> out;
    out.reserve(K.facet_count() * L.facet_count());
    for (const auto& f : K.facets())
        for (const auto& g : L.facets()) out.push_back(f.unite(shifted(g, off)));
    return Complex(std::move(out), merged_labels(K, L));
}

Complex disjoint_union(const Complex& K, const Complex& L) {
    const Vertex off = K.vertex_count();
    std::vector<Simplex> out(K.facets());
    for (const auto& g : L.facets()) out.push_back(shifted(g, off));
    return Complex(std::move(out), merged_labels(K, L));
}

Complex induced(const Complex& K, const std::vector<Vertex>& U) {
    std::vector<Vertex> u(U);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    for (Vertex v : u)
        if (v < 0 || v >= K.vertex_count()) throw Error("unknown vertex");
    const Simplex us = Simplex::from_sorted(std::move(u));
    std::vector<Simplex> out;
    for (const auto& f : K.facets()) out.push_back(f.intersect(us));
    return Complex(std::move(out), K.labels());
}

Complex relabel(const Complex& K, const std::vector<Vertex>& perm) {
    const auto n = static_cast<std::size_t>(K.vertex_count());
    if (perm.size() != n) throw Error("relabeling has wrong size");
    std::vector<std::string> labels(n);
    std::vector<bool> hit(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        const auto w = perm[v];
        if (w < 0 || static_cast<std::size_t>(w) >= n || hit[static_cast<std::size_t>(w)])
            throw Error("relabeling is not a bijection");
        hit[static_cast<std::size_t>(w)] = true;
        labels[static_cast<std::size_t>(w)] = K.labels()[v];
    }
    std::vector<Simplex> out;
    out.reserve(K.facet_count());
    for (const auto& f : K.facets()) {
        std::vector<Vertex> vs;
        vs.reserve(f.size());
        for (Vertex v : f) vs.push_back(perm[static_cast<std::size_t>(v)]);
        out.emplace_back(std::move(vs));
    }
    return Complex(std::move(out), std::move(labels), K.name());
}

Graph edge_graph(const Complex& K) {
    Graph g(static_cast<std::size_t>(K.vertex_count()));
    for (const auto& e : K.faces(1)) {
        g[static_cast<std::size_t>(e[0])].push_back(e[1]);
        g[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (auto& adj : g) std::sort(adj.begin(), adj.end());
    return g;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.size(), kInfiniteDistance);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : g[static_cast<std::size_t>(x)]) {
            if (dist[static_cast<std::size_t>(y)] != kInfiniteDistance) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            q.push(y);
        }
    }
    return dist;
}

int graph_distance(const Complex& K, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= K.vertex_count() || v >= K.vertex_count()) throw Error("unknown vertex");
    return bfs_distances(edge_graph(K), u)[static_cast<std::size_t>(v)];
}

std::vector<std::vector<Vertex>> connected_components(const Complex& K) {
    const auto g = edge_graph(K);
    std::vector<int> comp(g.size(), -1);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{static_cast<Vertex>(s)};
        comp[s] = c;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            out.back().push_back(x);
            for (Vertex y : g[static_cast<std::size_t>(x)]) {
                if (comp[static_cast<std::size_t>(y)] >= 0) continue;
                comp[static_cast<std::size_t>(y)] = c;
                stack.push_back(y);
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Complex& K) { return connected_components(K).size() <= 1; }

std::vector<int> degrees(const Complex& K) {
    const auto g = edge_graph(K);
    std::vector<int> d;
    d.reserve(g.size());
    for (const auto& adj : g) d.push_back(static_cast<int>(adj.size()));
    return d;
}

}  // namespace simplicia

#include "simplicia/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace simplicia {

namespace {

using Coloring = std::vector<int>;
using Certificate = std::vector<std::vector<int>>;

class Searcher {
public:
    explicit Searcher(const Complex& K) : n_(K.vertex_count()) {
        for (const auto& f : K.facets()) facets_.emplace_back(f.begin(), f.end());
        inc_.resize(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < facets_.size(); ++i)
            for (int v : facets_[i]) inc_[static_cast<std::size_t>(v)].push_back(i);
    }

    void run() {
        Coloring col(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> path;
        dfs(std::move(col), path);
    }

    const std::vector<int>& best_labeling() const { return best_lab_; }
    const std::vector<std::vector<Vertex>>& generators() const { return gens_; }

private:
    static int count_cells(const Coloring& col) {
        std::vector<int> c(col);
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

    void refine(Coloring& col) const {
        int cells = count_cells(col);
        const std::size_t F = facets_.size();
        std::vector<std::vector<int>> fsig(F);
        std::vector<int> frank(F);
        std::vector<std::size_t> order;
        while (cells < n_) {
            for (std::size_t i = 0; i < F; ++i) {
                auto& s = fsig[i];
                s.clear();
                for (int v : facets_[i]) s.push_back(col[static_cast<std::size_t>(v)]);
                std::sort(s.begin(), s.end());
            }
            order.resize(F);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fsig[a] < fsig[b]; });
            for (std::size_t r = 0, rank = 0; r < F; ++r) {
                if (r > 0 && fsig[order[r]] != fsig[order[r - 1]]) ++rank;
                frank[order[r]] = static_cast<int>(rank);
            }
            std::vector<std::vector<int>> vsig(static_cast<std::size_t>(n_));
            for (std::size_t v = 0; v < vsig.size(); ++v) {
                auto& s = vsig[v];
                for (std::size_t f : inc_[v]) s.push_back(frank[f]);
                std::sort(s.begin(), s.end());
                s.insert(s.begin(), col[v]);
            }
            std::vector<std::size_t> vo(vsig.size());
            std::iota(vo.begin(), vo.end(), 0);
            std::sort(vo.begin(), vo.end(), [&](std::size_t a, std::size_t b) { return vsig[a] < vsig[b]; });
            Coloring next(col.size());
            int rank = 0;
            for (std::size_t r = 0; r < vo.size(); ++r) {
                if (r > 0 && vsig[vo[r]] != vsig[vo[r - 1]]) ++rank;
                next[vo[r]] = rank;
            }
            const int now = rank + 1;
            col = std::move(next);
            if (now == cells) break;
            cells = now;
        }
        std::vector<int> vals(col);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (auto& c : col) c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
    }

    Certificate certificate(const Coloring& lab) const {
        Certificate c;
        c.reserve(facets_.size());
        for (const auto& f : facets_) {
            std::vector<int> g;
            g.reserve(f.size());
            for (int v : f) g.push_back(lab[static_cast<std::size_t>(v)]);
            std::sort(g.begin(), g.end());
            c.push_back(std::move(g));
        }
        std::sort(c.begin(), c.end());
        return c;
    }

    bool in_tried_orbit(const std::vector<Vertex>& path, const std::vector<Vertex>& tried, Vertex w) const {
        if (tried.empty() || gens_.empty()) return false;
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        bool any = false;
        for (const auto& g : gens_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return g[static_cast<std::size_t>(p)] == p; });
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(g[static_cast<std::size_t>(v)]);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        }
        if (!any) return false;
        const int rw = find(w);
        return std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return find(u) == rw; });
    }

    void automorphism(const Coloring& lab, const Coloring& other_lab, const std::vector<Vertex>& path,
                      const std::vector<Vertex>& other_path) {
        std::vector<Vertex> inv(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) inv[static_cast<std::size_t>(other_lab[static_cast<std::size_t>(v)])] = v;
        std::vector<Vertex> g(static_cast<std::size_t>(n_));
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            g[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])];
            identity = identity && g[static_cast<std::size_t>(v)] == v;
        }
        if (identity) return;
        gens_.push_back(g);
        std::size_t l = 0;
        while (l < path.size() && l < other_path.size() && path[l] == other_path[l]) ++l;
        if (l >= path.size() || l >= other_path.size()) return;
        for (std::size_t i = 0; i < l; ++i)
            if (g[static_cast<std::size_t>(path[i])] != path[i]) return;
        if (g[static_cast<std::size_t>(path[l])] != other_path[l]) return;
        backjump_ = static_cast<int>(l);
    }

    void leaf(const Coloring& lab, const std::vector<Vertex>& path) {
        Certificate c = certificate(lab);
        if (!have_) {
            have_ = true;
            first_cert_ = best_cert_ = std::move(c);
            first_lab_ = best_lab_ = lab;
            first_path_ = best_path_ = path;
            return;
        }
        if (c == first_cert_) {
            automorphism(lab, first_lab_, path, first_path_);
        } else if (c == best_cert_) {
            automorphism(lab, best_lab_, path, best_path_);
        } else if (c < best_cert_) {
            best_cert_ = std::move(c);
            best_lab_ = lab;
            best_path_ = path;
        }
    }

    void dfs(Coloring col, std::vector<Vertex>& path) {
        refine(col);
        if (count_cells(col) == n_) {
            leaf(col, path);
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(n_), 0);
        for (int c : col) ++size[static_cast<std::size_t>(c)];
        int target = -1;
        for (int c = 0; c < n_; ++c) {
            if (size[static_cast<std::size_t>(c)] > 1) {
                target = c;
                break;
            }
        }
        const int depth = static_cast<int>(path.size());
        std::vector<Vertex> tried;
        for (int w = 0; w < n_; ++w) {
            if (col[static_cast<std::size_t>(w)] != target) continue;
            if (in_tried_orbit(path, tried, w)) continue;
            tried.push_back(w);
            Coloring child(col.size());
            for (std::size_t v = 0; v < col.size(); ++v)
                child[v] = 2 * col[v] + ((col[v] == target && static_cast<int>(v) != w) ? 1 : 0);
            path.push_back(w);
            dfs(std::move(child), path);
            path.pop_back();
            if (backjump_ >= 0) {
                if (backjump_ < depth) return;
                backjump_ = -1;
            }
        }
    }

    int n_;
    std::vector<std::vector<int>> facets_;
    std::vector<std::vector<std::size_t>> inc_;

    bool have_ = false;
    Certificate first_cert_, best_cert_;
    Coloring first_lab_, best_lab_;
    std::vector<Vertex> first_path_, best_path_;
    std::vector<std::vector<Vertex>> gens_;
    int backjump_ = -1;
};

std::vector<int> sorted_degrees(const Complex& K) {
    auto d = degrees(K);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<std::size_t> facet_size_profile(const Complex& K) {
    std::vector<std::size_t> s;
    for (const auto& f : K.facets()) s.push_back(f.size());
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

CanonicalForm canonical_form(const Complex& K) {
    if (K.vertex_count() == 0) return {K, {}, {}};
    Searcher s(K);
    s.run();
    std::vector<Vertex> lab(s.best_labeling().begin(), s.best_labeling().end());
    return {relabel(K, lab), lab, s.generators()};
}

std::uint64_t canonical_hash(const Complex& K) {
    const auto c = canonical_form(K);
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 0x100000001b3ull;
    };
    mix(static_cast<std::uint64_t>(c.complex.vertex_count()));
    for (const auto& f : c.complex.facets()) {
        mix(0xffffu);
        for (Vertex v : f) mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

bool is_isomorphism(const Complex& K, const Complex& L, const std::vector<Vertex>& mapping) {
    if (K.vertex_count() != L.vertex_count() || K.facet_count() != L.facet_count()) return false;
    if (mapping.size() != static_cast<std::size_t>(K.vertex_count())) return false;
    std::vector<bool> hit(mapping.size(), false);
    for (Vertex w : mapping) {
        if (w < 0 || static_cast<std::size_t>(w) >= mapping.size() || hit[static_cast<std::size_t>(w)]) return false;
        hit[static_cast<std::size_t>(w)] = true;
    }
    for (const auto& f : K.facets()) {
        std::vector<Vertex> g;
        for (Vertex v : f) g.push_back(mapping[static_cast<std::size_t>(v)]);
        if (!L.is_facet(Simplex(std::move(g)))) return false;
    }
    return true;
}

std::optional<IsoCertificate> find_isomorphism(const Complex& K, const Complex& L) {
    if (K.vertex_count() != L.vertex_count() || K.facet_count() != L.facet_count()) return std::nullopt;
    if (facet_size_profile(K) != facet_size_profile(L) || sorted_degrees(K) != sorted_degrees(L))
        return std::nullopt;
    const auto ck = canonical_form(K);
    const auto cl = canonical_form(L);
    if (!(ck.complex == cl.complex)) return std::nullopt;
    std::vector<Vertex> inv(cl.relabeling.size());
    for (std::size_t v = 0; v < inv.size(); ++v) inv[static_cast<std::size_t>(cl.relabeling[v])] = static_cast<Vertex>(v);
    IsoCertificate cert;
    cert.mapping.resize(ck.relabeling.size());
    for (std::size_t v = 0; v < ck.relabeling.size(); ++v)
        cert.mapping[v] = inv[static_cast<std::size_t>(ck.relabeling[v])];
    return cert;
}

Verdict are_isomorphic(const Complex& K, const Complex& L) {
    if (K.vertex_count() != L.vertex_count()) return Verdict::no("vertex counts differ");
    if (K.facet_count() != L.facet_count()) return Verdict::no("facet counts differ");
    if (facet_size_profile(K) != facet_size_profile(L)) return Verdict::no("facet dimensions differ");
    if (sorted_degrees(K) != sorted_degrees(L)) return Verdict::no("degree sequences differ");
    auto iso = find_isomorphism(K, L);
    if (!iso) return Verdict::no("canonical forms differ");
    std::ostringstream os;
    os << "vertex map";
    for (std::size_t v = 0; v < iso->mapping.size(); ++v)
        os << ' ' << K.label(static_cast<Vertex>(v)) << "->" << L.label(iso->mapping[v]);
    return Verdict::yes(os.str(), {}, std::vector<long long>(iso->mapping.begin(), iso->mapping.end()));
}

}  // namespace simplicia

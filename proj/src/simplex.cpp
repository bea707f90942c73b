#include "simplicia/simplex.hpp"

#include <iterator>

#include "simplicia/error.hpp"

namespace simplicia {

Simplex::Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

Simplex::Simplex(std::vector<Vertex> vs) : vs_(std::move(vs)) {
    std::sort(vs_.begin(), vs_.end());
    if (std::adjacent_find(vs_.begin(), vs_.end()) != vs_.end()) throw Error("degenerate facet");
    if (!vs_.empty() && vs_.front() < 0) throw Error("negative vertex id");
}

Simplex Simplex::from_sorted(std::vector<Vertex> vs) {
    Simplex s;
    s.vs_ = std::move(vs);
    return s;
}

bool Simplex::contains(Vertex v) const { return std::binary_search(vs_.begin(), vs_.end(), v); }

bool Simplex::contains(const Simplex& s) const {
    return std::includes(vs_.begin(), vs_.end(), s.vs_.begin(), s.vs_.end());
}

bool Simplex::disjoint(const Simplex& s) const {
    auto i = vs_.begin();
    auto j = s.vs_.begin();
    while (i != vs_.end() && j != s.vs_.end()) {
        if (*i == *j) return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

Simplex Simplex::with(Vertex v) const {
    std::vector<Vertex> out(vs_);
    auto it = std::lower_bound(out.begin(), out.end(), v);
    if (it == out.end() || *it != v) out.insert(it, v);
    return from_sorted(std::move(out));
}

Simplex Simplex::without(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(vs_.size());
    for (Vertex x : vs_)
        if (x != v) out.push_back(x);
    return from_sorted(std::move(out));
}

Simplex Simplex::unite(const Simplex& s) const {
    std::vector<Vertex> out;
    std::set_union(vs_.begin(), vs_.end(), s.vs_.begin(), s.vs_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

Simplex Simplex::minus(const Simplex& s) const {
    std::vector<Vertex> out;
    std::set_difference(vs_.begin(), vs_.end(), s.vs_.begin(), s.vs_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

Simplex Simplex::intersect(const Simplex& s) const {
    std::vector<Vertex> out;
    std::set_intersection(vs_.begin(), vs_.end(), s.vs_.begin(), s.vs_.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
}

std::vector<Simplex> Simplex::boundary() const {
    std::vector<Simplex> out;
    out.reserve(vs_.size());
    for (std::size_t i = 0; i < vs_.size(); ++i) {
        std::vector<Vertex> f;
        f.reserve(vs_.size() - 1);
        for (std::size_t j = 0; j < vs_.size(); ++j)
            if (j != i) f.push_back(vs_[j]);
        out.push_back(from_sorted(std::move(f)));
    }
    return out;
}

std::vector<Simplex> Simplex::subsets(std::size_t k) const {
    std::vector<Simplex> out;
    const std::size_t n = vs_.size();
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Vertex> f(k);
        for (std::size_t i = 0; i < k; ++i) f[i] = vs_[idx[i]];
        out.push_back(from_sorted(std::move(f)));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Vertex v : s) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace simplicia

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace simplicia {

using Vertex = std::int32_t;

// A finite vertex set, kept sorted and free of duplicates.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<Vertex> vs);
    explicit Simplex(std::vector<Vertex> vs);

    // Caller guarantees vs is strictly increasing.
    static Simplex from_sorted(std::vector<Vertex> vs);

    int dim() const { return static_cast<int>(vs_.size()) - 1; }
    std::size_t size() const { return vs_.size(); }
    bool empty() const { return vs_.empty(); }
    Vertex operator[](std::size_t i) const { return vs_[i]; }
    auto begin() const { return vs_.begin(); }
    auto end() const { return vs_.end(); }
    const std::vector<Vertex>& vertices() const { return vs_; }

    bool contains(Vertex v) const;
    bool contains(const Simplex& s) const;
    bool disjoint(const Simplex& s) const;

    Simplex with(Vertex v) const;
    Simplex without(Vertex v) const;
    Simplex unite(const Simplex& s) const;
    Simplex minus(const Simplex& s) const;
    Simplex intersect(const Simplex& s) const;

    // Codimension-one faces, ordered by the position of the removed vertex.
    std::vector<Simplex> boundary() const;
    // All subsets of the given size.
    std::vector<Simplex> subsets(std::size_t k) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.vs_ <=> b.vs_; }

private:
    std::vector<Vertex> vs_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace simplicia

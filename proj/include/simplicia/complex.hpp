#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplicia/simplex.hpp"

namespace simplicia {

// A finite abstract simplicial complex, stored by its facets.
//
// Vertex ids are dense (0..vertex_count-1) and every vertex lies in a facet.
// Each vertex carries a display token used for I/O. Equality compares facets
// only; tokens and name are presentation.
class Complex {
public:
    // Facets over arbitrary non-negative ids. Duplicates and non-maximal sets
    // are dropped, unused ids are squeezed out preserving order. When labels
    // is non-empty it is indexed by the input ids; otherwise id i gets "i+1".
    explicit Complex(std::vector<Simplex> facets, std::vector<std::string> labels = {},
                     std::string name = {});

    // The complex {∅}: no vertices, dimension -1.
    static Complex void_complex();

    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    int vertex_count() const { return n_; }
    int dim() const { return dim_; }
    bool is_pure() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::optional<Vertex> find_vertex(std::string_view token) const;
    std::vector<std::string> tokens(const Simplex& s) const;

    const std::string& name() const { return name_; }
    Complex with_name(std::string name) const;

    // All k-faces, sorted. k = -1 gives {∅}; out-of-range k gives an empty list.
    const std::vector<Simplex>& faces(int k) const;
    bool is_face(const Simplex& s) const;
    bool is_facet(const Simplex& s) const;

    // Facet indices containing each vertex.
    std::vector<std::vector<std::size_t>> incidence() const;

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

private:
    Complex() = default;
    struct FaceCache;

    std::vector<Simplex> facets_;
    int n_ = 0;
    int dim_ = -1;
    std::vector<std::string> labels_;
    std::string name_;
    std::shared_ptr<FaceCache> cache_;
};

// Input plumbing: lists of non-negative ids, renumbered by first appearance.
Complex from_facets(const std::vector<std::vector<long long>>& facet_lists, std::string name = {});
// Same, with arbitrary string tokens as vertex names.
Complex from_tokens(const std::vector<std::vector<std::string>>& facet_lists, std::string name = {});

Complex closure(const Simplex& s);             // the full simplex on 0..|s|-1
Complex boundary_complex(std::size_t vertices); // boundary of a simplex with that many vertices

Complex link(const Complex& K, const Simplex& s);
Complex star(const Complex& K, const Simplex& s);
Complex join(const Complex& K, const Complex& L);
Complex induced(const Complex& K, const std::vector<Vertex>& U);
Complex disjoint_union(const Complex& K, const Complex& L);
// Vertex v of K becomes perm[v]; tokens travel with their vertex.
Complex relabel(const Complex& K, const std::vector<Vertex>& perm);

using Graph = std::vector<std::vector<Vertex>>;
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

Graph edge_graph(const Complex& K);
int graph_distance(const Complex& K, Vertex u, Vertex v);
std::vector<int> bfs_distances(const Graph& g, Vertex source);
bool is_connected(const Complex& K);
std::vector<std::vector<Vertex>> connected_components(const Complex& K);
std::vector<int> degrees(const Complex& K);

}  // namespace simplicia

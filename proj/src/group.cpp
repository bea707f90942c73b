#include "simplicia/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "simplicia/error.hpp"

namespace simplicia {

Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
}

bool is_identity(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<Vertex>(i)) return false;
    return true;
}

namespace {

void check_permutation(const Permutation& p, std::size_t n) {
    if (p.size() != n) throw Error("permutation has wrong size");
    std::vector<bool> hit(n, false);
    for (Vertex v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)])
            throw Error("not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace

std::vector<Permutation> expand_group(const std::vector<Permutation>& generators, std::size_t n, std::size_t cap) {
    for (const auto& g : generators) check_permutation(g, n);
    std::vector<Permutation> elems{identity_permutation(n)};
    std::set<Permutation> seen(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : generators) {
            auto h = compose(g, elems[i]);
            if (seen.insert(h).second) {
                if (seen.size() > cap) throw Error("group order exceeds cap of " + std::to_string(cap));
                elems.push_back(std::move(h));
            }
        }
    }
    return elems;
}

std::vector<std::vector<Vertex>> orbits(const std::vector<Permutation>& generators, std::size_t n) {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& g : generators) {
        check_permutation(g, n);
        for (std::size_t v = 0; v < n; ++v) {
            Vertex a = find(static_cast<Vertex>(v)), b = find(g[v]);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<std::vector<Vertex>> out;
    std::vector<int> slot(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        const auto r = static_cast<std::size_t>(find(static_cast<Vertex>(v)));
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[r])].push_back(static_cast<Vertex>(v));
    }
    return out;
}

Simplex apply(const Permutation& p, const Simplex& s) {
    std::vector<Vertex> vs;
    vs.reserve(s.size());
    for (Vertex v : s) vs.push_back(p[static_cast<std::size_t>(v)]);
    return Simplex(std::move(vs));
}

bool is_automorphism(const Complex& K, const Permutation& p) {
    if (p.size() != static_cast<std::size_t>(K.vertex_count())) return false;
    for (const auto& f : K.facets())
        if (!K.is_facet(apply(p, f))) return false;
    return true;
}

Permutation parse_cycles(std::string_view text, const Complex& K) {
    Permutation p = identity_permutation(static_cast<std::size_t>(K.vertex_count()));
    std::vector<bool> moved(p.size(), false);
    std::size_t i = 0;
    auto fail = [&](const std::string& why) { throw ParseError("bad cycle notation: " + why); };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') fail("expected '('");
        const auto close = text.find(')', i);
        if (close == std::string_view::npos) fail("missing ')'");
        std::string body(text.substr(i + 1, close - i - 1));
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        std::vector<Vertex> cyc;
        std::string tok;
        while (in >> tok) {
            auto v = K.find_vertex(tok);
            if (!v) fail("unknown vertex " + tok);
            if (moved[static_cast<std::size_t>(*v)]) fail("vertex " + tok + " repeated");
            moved[static_cast<std::size_t>(*v)] = true;
            cyc.push_back(*v);
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) p[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
        i = close + 1;
    }
    return p;
}

GroupAction parse_group(std::string_view text, const Complex& K) {
    GroupAction g;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        g.generators.push_back(parse_cycles(line, K));
    }
    return g;
}

}  // namespace simplicia

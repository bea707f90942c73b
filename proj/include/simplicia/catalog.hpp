#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplicia/complex.hpp"
#include "simplicia/group.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"

namespace simplicia {

// What the literature states about an entry. Empty fields are not stated.
struct Expected {
    int n = 0;
    FVector f;
    std::optional<long long> chi;
    std::vector<HomologyGroup> homology;
    std::optional<bool> orientable;
    bool manifold = true;
    bool sphere = false;
    std::string topology;
    std::vector<std::string> notes;
};

struct CatalogEntry {
    std::string name;
    std::string title;
    Complex complex;
    Expected expected;
    bool generated = false;  // built by a generator rather than a stored list
};

std::vector<std::string> catalog_names();
// Throws Error("unknown catalog entry: ...").
const CatalogEntry& catalog_get(const std::string& name);

struct CatalogReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> passed;
    std::vector<std::string> failed;
    std::vector<std::string> undecided;  // Unknown verdicts; do not fail the report

    std::string to_string() const;
};

// Compares the entry with its expectations. Deep verification also runs the
// manifold and sphere recognizers.
CatalogReport catalog_verify(const std::string& name, bool deep = true);
std::vector<CatalogReport> catalog_verify_all(bool deep = true);

// Union of the orbits of the representatives under the generated group.
Complex orbit_expand(const GroupAction& G, const std::vector<Simplex>& representatives, int vertices,
                     std::vector<std::string> labels = {}, std::string name = {});

// Permutation of 0..n-1 from cycles over 1-based points.
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

// Catalog entries with the homology of a sphere that are not spheres.
const std::vector<Complex>& known_non_spheres();

}  // namespace simplicia

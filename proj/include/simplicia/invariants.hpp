#pragma once

#include <string>
#include <vector>

#include "simplicia/complex.hpp"

namespace simplicia {

using FVector = std::vector<long long>;  // f_0..f_d, f_{-1} = 1 implied
using HVector = std::vector<long long>;  // h_0..h_{d+1}

// Exact binomial coefficient; throws on 64-bit overflow. Zero outside 0 <= k <= n.
long long binom(long long n, long long k);

FVector f_vector(const Complex& K);
long long euler_characteristic(const FVector& f);
long long euler_characteristic(const Complex& K);

HVector h_vector(const Complex& K);
// h_j = sum_{i=-1}^{j-1} (-1)^{j-i-1} C(d-i, j-i-1) f_i
HVector h_from_f(const FVector& f);
// f_{i-1} = sum_{j=0}^{i} C(d+1-j, i-j) h_j
FVector f_from_h(const HVector& h);

int neighborliness(const Complex& K);

// A named predicate evaluated item by item.
struct BoundReport {
    std::string predicate;
    std::vector<std::string> items;
    std::vector<long long> values;  // residuals or slacks, aligned with items
    bool ok = true;
    std::vector<std::string> failed;
};

// Dehn-Sommerville relations for combinatorial manifolds; every value is a residual.
BoundReport dehn_sommerville_residuals(const Complex& K);

// phi_k(n, d+1) for a d-dimensional complex on n vertices, 1 <= k <= d.
long long phi(int k, long long n, int d);
FVector stacked_fvector(long long n, int d);
// f_k - phi_k(n, d+1) for k = 1..d.
BoundReport lbt_check(const Complex& K);
// f_i(C^d_n) - f_i(K) for i = 0..d.
BoundReport ubt_check(const Complex& K);

// True iff for every proper non-empty vertex subset exactly one of U and
// V \ U spans a face. Limited to 20 vertices.
bool complementarity_check(const Complex& K);

// Smallest n with n >= (7 + sqrt(49 - 24 chi)) / 2.
int surface_vertex_bound(long long chi);
// Bound plus the known exceptions where one more vertex is needed.
int surface_minimal_vertices(long long chi, bool orientable);

// 10(chi - 2) <= C(n - 4, 3); the report's single value is the slack.
BoundReport kuhnel_4d_report(const Complex& K);
bool kuhnel_4d_bound(const Complex& K);
// f_1 >= 5n - (15/2) chi, compared as 2 f_1 >= 10 n - 15 chi.
BoundReport walkup_4d_bound(const Complex& K);
// f_1 >= 4n + 8 for three-dimensional complexes.
BoundReport walkup_3d_bound(const Complex& K);

}  // namespace simplicia

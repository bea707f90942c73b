#include "simplicia/invariants.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>

#include "simplicia/constructions.hpp"
#include "simplicia/error.hpp"

namespace simplicia {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow");
    return r;
}

long long sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// f_i with f_{-1} = 1 and zero beyond the top dimension.
long long f_at(const FVector& f, long long i) {
    if (i == -1) return 1;
    if (i < -1 || i >= static_cast<long long>(f.size())) return 0;
    return f[static_cast<std::size_t>(i)];
}

void record(BoundReport& r, std::string item, long long value, bool holds) {
    if (!holds) {
        r.ok = false;
        r.failed.push_back(item);
    }
    r.items.push_back(std::move(item));
    r.values.push_back(value);
}

void require_pure(const Complex& K, const char* what) {
    if (!K.is_pure()) throw Error(std::string(what) + " needs a pure complex");
}

}  // namespace

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step
        const long long num = n - k + i;
        const long long g = std::gcd(r, i);
        r = checked_mul(r / g, num / (i / g));
    }
    return r;
}

FVector f_vector(const Complex& K) {
    FVector f;
    for (int k = 0; k <= K.dim(); ++k) f.push_back(static_cast<long long>(K.faces(k).size()));
    return f;
}

long long euler_characteristic(const FVector& f) {
    long long chi = 0;
    for (std::size_t i = 0; i < f.size(); ++i) chi = checked_add(chi, sign(static_cast<long long>(i)) * f[i]);
    return chi;
}

long long euler_characteristic(const Complex& K) { return euler_characteristic(f_vector(K)); }

HVector h_from_f(const FVector& f) {
    const long long d = static_cast<long long>(f.size()) - 1;
    HVector h;
    for (long long j = 0; j <= d + 1; ++j) {
        long long s = 0;
        for (long long i = -1; i <= j - 1; ++i)
            s = checked_add(s, checked_mul(sign(j - i - 1) * binom(d - i, j - i - 1), f_at(f, i)));
        h.push_back(s);
    }
    return h;
}

FVector f_from_h(const HVector& h) {
    const long long d = static_cast<long long>(h.size()) - 2;
    FVector f;
    for (long long i = 1; i <= d + 1; ++i) {
        long long s = 0;
        for (long long j = 0; j <= i; ++j)
            s = checked_add(s, checked_mul(binom(d + 1 - j, i - j), h[static_cast<std::size_t>(j)]));
        f.push_back(s);
    }
    return f;
}

HVector h_vector(const Complex& K) {
    require_pure(K, "h-vector");
    return h_from_f(f_vector(K));
}

int neighborliness(const Complex& K) {
    const auto f = f_vector(K);
    if (f.empty()) return 0;
    int k = 0;
    while (k + 1 <= static_cast<int>(f.size()) && f[static_cast<std::size_t>(k)] == binom(f[0], k + 1)) ++k;
    return k;
}

BoundReport dehn_sommerville_residuals(const Complex& K) {
    require_pure(K, "Dehn-Sommerville check");
    BoundReport r;
    r.predicate = "dehn-sommerville";
    const auto f = f_vector(K);
    const auto h = h_from_f(f);
    const long long d = K.dim();
    const long long chi = euler_characteristic(f);
    const bool even = d % 2 == 0;

    if (!even) record(r, "chi", chi, chi == 0);
    if (even) {
        for (long long j = 1; j <= d / 2; ++j) {
            long long s = 0;
            for (long long i = 2 * j - 1; i <= d; ++i) s = checked_add(s, checked_mul(sign(i) * binom(i + 1, 2 * j - 1), f_at(f, i)));
            record(r, "alternating f-sum j=" + std::to_string(j), s, s == 0);
        }
        for (long long j = 0; j <= d / 2; ++j) {
            const long long rhs = checked_mul(sign(d + 1 - j) * binom(d + 1, j), chi - 2);
            const long long v = h[static_cast<std::size_t>(j)] - h[static_cast<std::size_t>(d + 1 - j)] - rhs;
            record(r, "h_j - h_(d+1-j) j=" + std::to_string(j), v, v == 0);
        }
    } else {
        for (long long j = 1; j <= (d - 1) / 2; ++j) {
            long long s = 0;
            for (long long i = 2 * j; i <= d; ++i) s = checked_add(s, checked_mul(sign(i) * binom(i + 1, 2 * j), f_at(f, i)));
            record(r, "alternating f-sum j=" + std::to_string(j), s, s == 0);
        }
        const long long k = (d + 1) / 2;
        for (long long j = 0; j <= k - 1; ++j) {
            const long long v = h[static_cast<std::size_t>(j)] - h[static_cast<std::size_t>(d + 1 - j)];
            record(r, "h_j - h_(d+1-j) j=" + std::to_string(j), v, v == 0);
        }
    }
    return r;
}

long long phi(int k, long long n, int d) {
    if (d < 1 || k < 1 || k > d || n < d + 2) throw Error("phi: parameters out of range");
    if (k == d) return checked_add(checked_mul(d, n), -static_cast<long long>(d + 2) * (d - 1));
    return checked_add(checked_mul(binom(d + 1, k), n), -checked_mul(binom(d + 2, k + 1), k));
}

FVector stacked_fvector(long long n, int d) {
    if (d < 1 || n < d + 2) throw Error("stacked f-vector: parameters out of range");
    FVector f{n};
    for (int k = 1; k <= d; ++k) f.push_back(phi(k, n, d));
    return f;
}

BoundReport lbt_check(const Complex& K) {
    require_pure(K, "lower bound check");
    BoundReport r;
    r.predicate = "lbt";
    const auto f = f_vector(K);
    const int d = K.dim();
    const long long n = K.vertex_count();
    for (int k = 1; k <= d; ++k) {
        const long long s = f[static_cast<std::size_t>(k)] - phi(k, n, d);
        record(r, "f_" + std::to_string(k), s, s >= 0);
    }
    return r;
}

BoundReport ubt_check(const Complex& K) {
    require_pure(K, "upper bound check");
    const int d = K.dim();
    const int n = K.vertex_count();
    if (n < d + 2) throw Error("upper bound check needs n >= d + 2");
    const auto c = f_vector(cyclic_sphere(d, n));
    const auto f = f_vector(K);
    BoundReport r;
    r.predicate = "ubt";
    for (int i = 0; i <= d; ++i) {
        const long long s = c[static_cast<std::size_t>(i)] - f[static_cast<std::size_t>(i)];
        record(r, "f_" + std::to_string(i), s, s >= 0);
    }
    return r;
}

bool complementarity_check(const Complex& K) {
    const int n = K.vertex_count();
    if (n > 20) throw Error("complementarity check limit");
    if (n < 2) return false;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<bool> face(static_cast<std::size_t>(full) + 1, false);
    for (const auto& f : K.facets()) {
        std::uint32_t m = 0;
        for (Vertex v : f) m |= 1u << v;
        // every submask of a facet is a face
        for (std::uint32_t s = m;; s = (s - 1) & m) {
            if (face[s]) {
                if (s == 0) break;
                continue;
            }
            face[s] = true;
            if (s == 0) break;
        }
    }
    for (std::uint32_t u = 1; u < full; ++u)
        if (face[u] == face[full ^ u]) return false;
    return true;
}

int surface_vertex_bound(long long chi) {
    if (chi > 2) throw Error("no closed surface has Euler characteristic above 2");
    const long long disc = 49 - 24 * chi;
    int n = 4;
    while (2LL * n - 7 < 0 || (2LL * n - 7) * (2LL * n - 7) < disc) ++n;
    return n;
}

int surface_minimal_vertices(long long chi, bool orientable) {
    if (orientable && chi % 2 != 0) throw Error("orientable surfaces have even Euler characteristic");
    const int n = surface_vertex_bound(chi);
    const bool klein = !orientable && chi == 0;
    const bool double_torus = orientable && chi == -2;
    const bool m3 = !orientable && chi == -1;
    return n + ((klein || double_torus || m3) ? 1 : 0);
}

namespace {

void require_dim(const Complex& K, int d) {
    if (K.dim() != d) throw Error("dimension mismatch: expected " + std::to_string(d));
}

}  // namespace

BoundReport kuhnel_4d_report(const Complex& K) {
    require_dim(K, 4);
    BoundReport r;
    r.predicate = "kuhnel-4d";
    const long long n = K.vertex_count();
    const long long chi = euler_characteristic(K);
    const long long s = binom(n - 4, 3) - 10 * (chi - 2);
    record(r, "C(n-4,3) - 10(chi-2)", s, s >= 0);
    return r;
}

bool kuhnel_4d_bound(const Complex& K) { return kuhnel_4d_report(K).ok; }

BoundReport walkup_4d_bound(const Complex& K) {
    require_dim(K, 4);
    BoundReport r;
    r.predicate = "walkup-4d";
    const auto f = f_vector(K);
    const long long n = f[0];
    const long long chi = euler_characteristic(f);
    const long long s = 2 * f[1] - 10 * n + 15 * chi;
    record(r, "2 f_1 - 10n + 15chi", s, s >= 0);
    return r;
}

BoundReport walkup_3d_bound(const Complex& K) {
    require_dim(K, 3);
    BoundReport r;
    r.predicate = "walkup-3d";
    const auto f = f_vector(K);
    const long long s = f[1] - 4 * f[0] - 8;
    record(r, "f_1 - 4n - 8", s, s >= 0);
    return r;
}

}  // namespace simplicia

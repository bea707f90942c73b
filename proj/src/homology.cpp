#include "simplicia/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <sstream>

#include "simplicia/error.hpp"

namespace simplicia {

namespace {

using Big = boost::multiprecision::cpp_int;

struct Overflow {};

long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
long long sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
Big mul(const Big& a, const Big& b) { return a * b; }
Big add(const Big& a, const Big& b) { return a + b; }
Big sub(const Big& a, const Big& b) { return a - b; }

template <class T>
bool is_unit(const T& x) {
    return x == 1 || x == -1;
}

template <class T>
T magnitude(const T& x) {
    return x < 0 ? T(-x) : x;
}

// Result of reducing one matrix: number of unit pivots plus the remaining
// diagonal after Smith reduction of the non-unit core.
template <class T>
struct Reduction {
    long long unit_rank = 0;
    std::vector<T> diagonal;
};

template <class T>
std::vector<T> dense_snf(std::vector<std::vector<T>> a) {
    std::vector<T> diag;
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < m && t < n) {
        // smallest non-zero entry of the trailing block becomes the pivot
        std::size_t pr = m, pc = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (pr == m || magnitude(a[i][j]) < magnitude(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == m) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                T q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j) a[i][j] = sub(a[i][j], mul(q, a[t][j]));
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                T q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < m; ++i) a[i][j] = sub(a[i][j], mul(q, a[i][t]));
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    again = true;
                }
            }
            if (again) continue;
            // divisibility: fold an offending row into the pivot row
            for (std::size_t i = t + 1; i < m && !again; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t c = t; c < n; ++c) a[t][c] = add(a[t][c], a[i][c]);
                        again = true;
                        break;
                    }
        }
        diag.push_back(magnitude(a[t][t]));
        ++t;
    }
    return diag;
}

template <class T>
Reduction<T> reduce(const std::vector<std::map<int, long long>>& input, int cols) {
    std::vector<std::map<int, T>> rows(input.size());
    std::vector<std::set<int>> in_col(static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < input.size(); ++r)
        for (const auto& [c, v] : input[r]) {
            rows[r][c] = T(v);
            in_col[static_cast<std::size_t>(c)].insert(static_cast<int>(r));
        }
    std::vector<bool> row_alive(rows.size(), true);
    Reduction<T> out;

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!row_alive[r] || rows[r].empty()) continue;
            int best = -1;
            for (const auto& [c, v] : rows[r])
                if (is_unit(v) && (best < 0 || in_col[static_cast<std::size_t>(c)].size() <
                                                   in_col[static_cast<std::size_t>(best)].size()))
                    best = c;
            if (best < 0) continue;
            const T p = rows[r][best];
            const std::vector<int> others(in_col[static_cast<std::size_t>(best)].begin(),
                                          in_col[static_cast<std::size_t>(best)].end());
            for (int o : others) {
                if (static_cast<std::size_t>(o) == r) continue;
                auto& ro = rows[static_cast<std::size_t>(o)];
                const T factor = mul(ro[best], p);  // p is its own inverse
                for (const auto& [c, v] : rows[r]) {
                    T nv = sub(ro.count(c) ? ro[c] : T(0), mul(factor, v));
                    if (nv == 0) {
                        ro.erase(c);
                        in_col[static_cast<std::size_t>(c)].erase(o);
                    } else {
                        ro[c] = nv;
                        in_col[static_cast<std::size_t>(c)].insert(o);
                    }
                }
            }
            for (const auto& [c, v] : rows[r]) in_col[static_cast<std::size_t>(c)].erase(static_cast<int>(r));
            rows[r].clear();
            row_alive[r] = false;
            ++out.unit_rank;
            progress = true;
        }
    }

    std::vector<int> live_cols;
    for (int c = 0; c < cols; ++c)
        if (!in_col[static_cast<std::size_t>(c)].empty()) live_cols.push_back(c);
    std::vector<std::vector<T>> dense;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!row_alive[r] || rows[r].empty()) continue;
        std::vector<T> row(live_cols.size(), T(0));
        for (const auto& [c, v] : rows[r])
            row[static_cast<std::size_t>(std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin())] = v;
        dense.push_back(std::move(row));
    }
    out.diagonal = dense_snf(std::move(dense));
    return out;
}

struct MatrixSummary {
    long long rank = 0;
    std::vector<long long> torsion;
};

MatrixSummary summarize(const std::vector<std::map<int, long long>>& rows, int cols) {
    MatrixSummary s;
    try {
        auto red = reduce<long long>(rows, cols);
        s.rank = red.unit_rank + static_cast<long long>(red.diagonal.size());
        for (auto d : red.diagonal)
            if (d > 1) s.torsion.push_back(d);
    } catch (const Overflow&) {
        auto red = reduce<Big>(rows, cols);
        s.rank = red.unit_rank + static_cast<long long>(red.diagonal.size());
        for (const auto& d : red.diagonal) {
            if (d <= 1) continue;
            if (d > Big(std::numeric_limits<long long>::max())) throw Error("torsion coefficient exceeds 64 bits");
            s.torsion.push_back(static_cast<long long>(d));
        }
    }
    std::sort(s.torsion.begin(), s.torsion.end());
    return s;
}

}  // namespace

std::vector<long long> invariant_factors(const std::vector<std::vector<long long>>& dense_rows) {
    std::vector<std::map<int, long long>> rows;
    int cols = 0;
    for (const auto& r : dense_rows) {
        cols = std::max(cols, static_cast<int>(r.size()));
        std::map<int, long long> m;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) m[static_cast<int>(c)] = r[c];
        rows.push_back(std::move(m));
    }
    auto s = summarize(rows, cols);
    std::vector<long long> out(static_cast<std::size_t>(s.rank) - s.torsion.size(), 1);
    out.insert(out.end(), s.torsion.begin(), s.torsion.end());
    return out;
}

std::vector<long long> HomologyProfile::betti() const {
    std::vector<long long> b;
    for (const auto& g : groups) b.push_back(g.betti);
    return b;
}

long long HomologyProfile::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) chi += (i % 2 ? -1 : 1) * groups[i].betti;
    return chi;
}

std::string format_group(const HomologyGroup& g) {
    std::vector<std::string> parts;
    if (g.betti == 1) parts.push_back("Z");
    if (g.betti > 1) parts.push_back("Z^" + std::to_string(g.betti));
    for (auto t : g.torsion) parts.push_back("Z_" + std::to_string(t));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

std::string HomologyProfile::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < groups.size(); ++i) os << (i ? ", " : "") << "H_" << i << " = " << format_group(groups[i]);
    return os.str();
}

HomologyProfile homology(const Complex& K) {
    HomologyProfile h;
    const int d = K.dim();
    if (d < 0) return h;
    std::vector<MatrixSummary> bd(static_cast<std::size_t>(d) + 2);
    for (int k = 1; k <= d; ++k) {
        const auto& lower = K.faces(k - 1);
        const auto& upper = K.faces(k);
        std::vector<std::map<int, long long>> rows(lower.size());
        for (std::size_t c = 0; c < upper.size(); ++c) {
            const auto parts = upper[c].boundary();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const auto r = std::lower_bound(lower.begin(), lower.end(), parts[i]) - lower.begin();
                rows[static_cast<std::size_t>(r)][static_cast<int>(c)] = (i % 2 ? -1 : 1);
            }
        }
        bd[static_cast<std::size_t>(k)] = summarize(rows, static_cast<int>(upper.size()));
    }
    for (int k = 0; k <= d; ++k) {
        HomologyGroup g;
        const long long ck = static_cast<long long>(K.faces(k).size());
        g.betti = ck - bd[static_cast<std::size_t>(k)].rank - bd[static_cast<std::size_t>(k) + 1].rank;
        g.torsion = bd[static_cast<std::size_t>(k) + 1].torsion;
        h.groups.push_back(std::move(g));
    }
    return h;
}

bool has_sphere_homology(const HomologyProfile& h, int d) {
    if (static_cast<int>(h.groups.size()) != d + 1) return false;
    for (int i = 0; i <= d; ++i) {
        const auto& g = h.groups[static_cast<std::size_t>(i)];
        if (!g.torsion.empty()) return false;
        const long long want = (i == 0 || i == d) ? 1 : 0;
        if (d == 0 && i == 0) {
            if (g.betti != 2) return false;
            continue;
        }
        if (g.betti != want) return false;
    }
    return true;
}

}  // namespace simplicia

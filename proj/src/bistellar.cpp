#include "simplicia/bistellar.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <unordered_map>

#include "json.hpp"
#include "simplicia/canonical.hpp"
#include "simplicia/constructions.hpp"
#include "simplicia/error.hpp"
#include "simplicia/parallel.hpp"

namespace simplicia {

namespace {

void require_pseudomanifold(const Complex& K) {
    if (!K.is_pure()) throw Error("bistellar moves need a pure complex");
    if (K.dim() < 1) throw Error("bistellar moves need dimension >= 1");
    std::unordered_map<Simplex, int, SimplexHash> ridges;
    for (const auto& f : K.facets())
        for (const auto& r : f.boundary()) ++ridges[r];
    for (const auto& [r, c] : ridges)
        if (c != 2) throw Error("bistellar moves need a pseudomanifold");
}

std::vector<std::string> sorted_tokens(const Complex& K, const Simplex& s) {
    auto t = K.tokens(s);
    std::sort(t.begin(), t.end());
    return t;
}

Simplex by_tokens(const Complex& K, const std::vector<std::string>& toks) {
    std::vector<Vertex> vs;
    for (const auto& t : toks) {
        auto v = K.find_vertex(t);
        if (!v) throw Error("unknown vertex " + t);
        vs.push_back(*v);
    }
    return Simplex(std::move(vs));
}

// First nonzero entry of the f-vector change, read from f_d downwards.
int energy_sign(int d, int k) {
    const auto delta = move_fvector_delta(d, k);
    for (int j = d; j >= 0; --j) {
        const auto x = delta[static_cast<std::size_t>(j)];
        if (x != 0) return x < 0 ? -1 : 1;
    }
    return 0;
}

bool is_standard(const Complex& K) {
    const int d = K.dim();
    return K.vertex_count() == d + 2 && K.facet_count() == static_cast<std::size_t>(d + 2);
}

}  // namespace

std::string MoveTrace::to_json_lines() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        nlohmann::json j;
        j["step"] = i + 1;
        j["a"] = steps[i].a;
        j["b"] = steps[i].b;
        j["k"] = steps[i].k;
        j["f"] = steps[i].f;
        out += j.dump() + "\n";
    }
    return out;
}

FVector move_fvector_delta(int d, int k) {
    FVector delta(static_cast<std::size_t>(d + 1), 0);
    for (int j = 0; j <= d; ++j)
        delta[static_cast<std::size_t>(j)] = binom(d + 1 - k, j - k) - binom(k + 1, j - d + k);
    return delta;
}

std::vector<Move> valid_moves(const Complex& K, bool include_zero_moves) {
    require_pseudomanifold(K);
    const int d = K.dim();
    std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> containing;
    const auto& facets = K.facets();
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t m = 1; m <= static_cast<std::size_t>(d); ++m)
            for (auto& a : facets[i].subsets(m)) containing[std::move(a)].push_back(i);

    std::vector<Move> moves;
    for (const auto& [a, list] : containing) {
        const int k = d + 1 - static_cast<int>(a.size());
        if (list.size() != static_cast<std::size_t>(k + 1)) continue;
        Simplex b;
        for (auto i : list) b = b.unite(facets[i].minus(a));
        if (b.size() != static_cast<std::size_t>(k + 1) || K.is_face(b)) continue;
        moves.push_back(Move{a, b, k});
    }
    if (include_zero_moves)
        for (const auto& f : facets) moves.push_back(Move{f, Simplex{K.vertex_count()}, 0});
    std::sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) {
        if (x.k != y.k) return x.k < y.k;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return moves;
}

std::string move_problem(const Complex& K, const Move& m) {
    const int d = K.dim();
    if (!K.is_pure()) return "complex is not pure";
    if (m.k < 0 || m.k > d) return "k out of range";
    if (m.a.size() != static_cast<std::size_t>(d + 1 - m.k)) return "a has the wrong dimension";
    if (m.b.size() != static_cast<std::size_t>(m.k + 1)) return "b has the wrong dimension";
    if (!m.a.disjoint(m.b)) return "a and b intersect";
    if (m.k == 0) {
        if (!K.is_facet(m.a)) return "a is not a facet";
        if (m.b[0] < K.vertex_count()) return "b present";
        return {};
    }
    if (!K.is_face(m.a)) return "a is not a face";
    if (K.is_face(m.b)) return "b present";
    std::size_t around = 0;
    for (const auto& f : K.facets())
        if (f.contains(m.a)) ++around;
    if (around != m.b.size()) return "link mismatch";
    for (Vertex x : m.b)
        if (!K.is_facet(m.a.unite(m.b.without(x)))) return "link mismatch";
    return {};
}

Complex apply_move(const Complex& K, const Move& m) {
    if (auto why = move_problem(K, m); !why.empty()) throw Error("invalid move: " + why);
    Simplex b = m.k == 0 ? Simplex{K.vertex_count()} : m.b;
    std::vector<Simplex> out;
    for (const auto& f : K.facets())
        if (!f.contains(m.a)) out.push_back(f);
    for (Vertex y : m.a) out.push_back(m.a.without(y).unite(b));
    auto labels = K.labels();
    if (m.k == 0) labels.push_back(fresh_label(K));
    return Complex(std::move(out), std::move(labels), K.name());
}

Move reverse_move(const Complex& K, const Move& m, const Complex& after) {
    const int d = K.dim();
    Simplex b = m.k == 0 ? by_tokens(after, {fresh_label(K)}) : by_tokens(after, K.tokens(m.b));
    if (m.k == d) return Move{b, Simplex{after.vertex_count()}, 0};
    return Move{b, by_tokens(after, K.tokens(m.a)), d - m.k};
}

TraceStep describe(const Complex& K, const Move& m, const FVector& f_after) {
    TraceStep s;
    s.a = sorted_tokens(K, m.a);
    s.b = m.k == 0 ? std::vector<std::string>{fresh_label(K)} : sorted_tokens(K, m.b);
    s.k = m.k;
    s.f = f_after;
    return s;
}

Complex replay(const Complex& start, const MoveTrace& trace) {
    Complex K = start;
    for (const auto& s : trace.steps) {
        Move m{by_tokens(K, s.a), s.k == 0 ? Simplex{K.vertex_count()} : by_tokens(K, s.b), s.k};
        K = apply_move(K, m);
    }
    return K;
}

namespace {

struct Attempt {
    bool success = false;
    MoveTrace trace;
};

Attempt anneal(const Complex& start, const Budget& budget, std::uint64_t seed) {
    Attempt out;
    const int d = start.dim();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> sign(static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) sign[static_cast<std::size_t>(k)] = energy_sign(d, k);

    Complex K = start;
    double T = budget.initial_temperature;
    std::deque<std::vector<std::string>> tabu;
    auto pick = [&](const std::vector<const Move*>& from) {
        return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
    };
    for (int step = 0; step < budget.moves_per_restart; ++step) {
        if (is_standard(K)) {
            out.success = true;
            return out;
        }
        const auto moves = valid_moves(K);
        if (moves.empty()) return out;
        std::vector<const Move*> removals, down, other;
        for (const auto& m : moves) {
            const bool banned = std::find(tabu.begin(), tabu.end(), sorted_tokens(K, m.a)) != tabu.end();
            if (m.k == d) removals.push_back(&m);
            else if (sign[static_cast<std::size_t>(m.k)] < 0 && !banned) down.push_back(&m);
            else if (!banned) other.push_back(&m);
        }
        const Move* chosen = nullptr;
        if (!removals.empty()) chosen = pick(removals);
        else if (!down.empty() && unit(rng) >= T * 0.05) chosen = pick(down);
        else if (!other.empty()) {
            const Move* m = pick(other);
            const int s = sign[static_cast<std::size_t>(m->k)];
            if (s <= 0 || unit(rng) < std::exp(-1.0 / std::max(T, 1e-9)) || down.empty()) chosen = m;
        } else if (!down.empty()) {
            chosen = pick(down);
        }
        T *= budget.cooling;
        if (!chosen) continue;
        auto next = apply_move(K, *chosen);
        tabu.push_back(chosen->k == 0 ? std::vector<std::string>{} : sorted_tokens(K, chosen->b));
        if (tabu.size() > 2) tabu.pop_front();
        out.trace.steps.push_back(describe(K, *chosen, f_vector(next)));
        K = std::move(next);
    }
    out.success = is_standard(K);
    return out;
}

}  // namespace

Reduction reduce_to_sphere(const Complex& K, const Budget& budget, std::uint64_t seed) {
    Reduction r;
    require_pseudomanifold(K);
    if (is_standard(K)) {
        r.verdict = Verdict::yes("already the boundary of a simplex");
        r.restart = 0;
        return r;
    }
    const auto n = static_cast<std::size_t>(std::max(0, budget.restarts));
    std::vector<Attempt> attempts(n);
    std::vector<char> done(n, 0);
    std::mutex mu;
    run_batches(
        n, budget.jobs,
        [&](std::size_t i) {
            Attempt a;
            try {
                a = anneal(K, budget, seed + i);
            } catch (const std::exception&) {
                a = Attempt{};
            }
            std::lock_guard lock(mu);
            attempts[i] = std::move(a);
            done[i] = 1;
        },
        [&] {
            std::lock_guard lock(mu);
            for (std::size_t i = 0; i < n; ++i)
                if (done[i] && attempts[i].success) return true;
            return false;
        });
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i] && attempts[i].success) {
            r.trace = std::move(attempts[i].trace);
            r.restart = static_cast<int>(i);
            r.verdict = Verdict::yes("reduced to the boundary of a simplex in " + std::to_string(r.trace.steps.size()) +
                                     " moves (restart " + std::to_string(i) + ")");
            return r;
        }
    }
    r.verdict = Verdict::unknown("no reduction found within " + std::to_string(n) + " restarts of " +
                                 std::to_string(budget.moves_per_restart) + " moves");
    return r;
}

namespace {

struct Node {
    Complex K;
    std::vector<Simplex> parent;  // canonical key of the predecessor; empty at the root
    TraceStep step;               // move from the parent, in the parent's tokens
    int depth = 0;
};

using Side = std::map<std::vector<Simplex>, Node>;

std::vector<Simplex> key_of(const Complex& K) { return canonical_form(K).complex.facets(); }

std::vector<TraceStep> path_to(const Side& side, std::vector<Simplex> key) {
    std::vector<TraceStep> path;
    while (true) {
        const auto& node = side.at(key);
        if (node.parent.empty()) break;
        path.push_back(node.step);
        key = node.parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::string render(const TraceStep& s) {
    std::string out = "kappa(";
    for (const auto& t : s.a) out += t + (t.size() > 1 ? " " : "");
    out += ", ";
    for (const auto& t : s.b) out += t + (t.size() > 1 ? " " : "");
    return out + ") k=" + std::to_string(s.k);
}

}  // namespace

Verdict bistellar_equivalent(const Complex& K, const Complex& L, int depth, bool with_zero_moves) {
    if (!K.is_pure() || !L.is_pure()) throw Error("bistellar equivalence needs pure complexes");
    if (K.dim() != L.dim()) throw Error("dimension mismatch");
    Side side[2];
    std::vector<std::vector<Simplex>> frontier[2];
    for (int s = 0; s < 2; ++s) {
        const Complex& X = s == 0 ? K : L;
        auto key = key_of(X);
        side[s].emplace(key, Node{X, {}, {}, 0});
        frontier[s].push_back(std::move(key));
    }
    auto meet = [&]() -> std::optional<std::vector<Simplex>> {
        for (const auto& [key, node] : side[0])
            if (side[1].count(key)) return key;
        return std::nullopt;
    };
    auto joint = [&](const std::vector<Simplex>& key) {
        auto left = path_to(side[0], key);
        auto right = path_to(side[1], key);
        std::string cert = "K";
        for (const auto& s : left) cert += " -> " + render(s);
        cert += " ~= meeting complex";
        for (auto it = right.rbegin(); it != right.rend(); ++it) cert += " <- " + render(*it);
        cert += " <- L (" + std::to_string(left.size() + right.size()) + " moves)";
        Verdict v = Verdict::yes(cert);
        v.values = {static_cast<long long>(left.size()), static_cast<long long>(right.size())};
        return v;
    };
    if (auto k = meet()) return joint(*k);
    for (int level = 0; level < depth; ++level) {
        const int s = level % 2;
        std::vector<std::vector<Simplex>> next;
        for (const auto& key : frontier[s]) {
            const Complex X = side[s].at(key).K;
            const int dep = side[s].at(key).depth;
            for (const auto& m : valid_moves(X, with_zero_moves)) {
                auto Y = apply_move(X, m);
                auto ykey = key_of(Y);
                if (side[s].count(ykey)) continue;
                side[s].emplace(ykey, Node{Y, key, describe(X, m, f_vector(Y)), dep + 1});
                if (side[1 - s].count(ykey)) return joint(ykey);
                next.push_back(std::move(ykey));
            }
        }
        frontier[s] = std::move(next);
    }
    return Verdict::unknown("no bistellar path of length <= " + std::to_string(depth) + " found");
}

}  // namespace simplicia

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simplicia/complex.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/verdict.hpp"

namespace simplicia {

// kappa(a, b) on a pure d-complex: dim a = d - k, dim b = k. For k = 0, b is a
// single vertex id not present in K (conventionally vertex_count()).
struct Move {
    Simplex a;
    Simplex b;
    int k = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

struct TraceStep {
    std::vector<std::string> a;
    std::vector<std::string> b;
    int k = 0;
    FVector f;  // after the move
};

struct MoveTrace {
    std::vector<TraceStep> steps;

    // One JSON object per line: {"step", "a", "b", "k", "f"}.
    std::string to_json_lines() const;
};

// Change of f_j caused by a k-move in dimension d, j = 0..d.
FVector move_fvector_delta(int d, int k);

// All proper moves and vertex removals; facet starrings only when asked.
std::vector<Move> valid_moves(const Complex& K, bool include_zero_moves = false);
// Why m is not valid in K, or empty when it is.
std::string move_problem(const Complex& K, const Move& m);
Complex apply_move(const Complex& K, const Move& m);
// kappa(b, a) expressed in the vertex ids of `after` = apply_move(K, m).
Move reverse_move(const Complex& K, const Move& m, const Complex& after);
// Token-level description of a move in K.
TraceStep describe(const Complex& K, const Move& m, const FVector& f_after);
// Applies a recorded trace by tokens.
Complex replay(const Complex& start, const MoveTrace& trace);

struct Budget {
    int restarts = 16;
    int moves_per_restart = 3000;
    double initial_temperature = 1.5;
    double cooling = 0.999;
    int jobs = 0;  // 0: use the process-wide default
};

struct Reduction {
    Verdict verdict;
    MoveTrace trace;
    int restart = -1;  // index of the successful restart
};

// Simulated annealing towards the boundary of a simplex. Never answers No.
Reduction reduce_to_sphere(const Complex& K, const Budget& budget = {}, std::uint64_t seed = 1);

// Bounded bidirectional breadth-first search over isomorphism classes.
Verdict bistellar_equivalent(const Complex& K, const Complex& L, int depth, bool with_zero_moves = true);

}  // namespace simplicia

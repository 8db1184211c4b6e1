#ifndef LRCKIT_CODE_HPP
#define LRCKIT_CODE_HPP

#include "lrckit/designs.hpp"
#include "lrckit/field.hpp"
#include "lrckit/matrix.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lrc {

/// Parameters of the polynomial construction: q, locality r, delta >= 2,
/// 1 <= v <= r information symbols in the last repair set, w repair sets.
/// Derived: n = w(r+delta-1), k = (w-1)r + v.
struct LrcParams {
    std::uint32_t q = 0;
    std::uint32_t r = 0;
    std::uint32_t delta = 0;
    std::uint32_t v = 0;
    std::uint32_t w = 0;

    std::size_t n() const { return static_cast<std::size_t>(w) * (r + delta - 1); }
    std::size_t k() const { return static_cast<std::size_t>(w - 1) * r + v; }
    std::size_t set_size() const { return r + delta - 1; }
    void validate() const;
};

/// Evaluation points: r-v distinct alphas and w sets of r+delta-1 distinct
/// elements, all sets disjoint from the alphas.
struct EvaluationPlan {
    std::vector<Elem> alphas;
    std::vector<std::vector<Elem>> sets;

    bool empty() const { return alphas.empty() && sets.empty(); }
    std::string describe() const;
};

struct LrcCode {
    Field field;
    std::uint32_t r = 0;
    std::uint32_t delta = 0;
    std::uint32_t v = 0; // 0 when the construction tie k=(w-1)r+v does not apply
    std::uint32_t w = 0;
    EvaluationPlan plan; // empty for derived codes (reductions, fixtures)
    Matrix G;            // k x n
    Matrix H;            // (n-k) x n, G H^T = 0
    std::vector<std::vector<std::uint32_t>> repair_sets; // partition of 0..n-1
    std::uint32_t claimed_d = 0;

    std::size_t length() const { return G.cols; }
    std::size_t dimension() const { return G.rows; }
};

/// Builds the evaluation plan for a design on abstract points: point j maps
/// to field element j and the alphas are the smallest field elements unused
/// by the mapped sets. Takes the first `params.w` blocks.
EvaluationPlan plan_from_design(const Field &f, const LrcParams &params, const BlockFamily &design);

/// Plan with all w sets equal to {0, ..., r+delta-2}.
EvaluationPlan identical_plan(const Field &f, const LrcParams &params);

/// Runs the three construction steps on each unit information vector to
/// assemble G, derives H as an exact null-space basis, and records the
/// repair-set partition. claimed_d is the design distance r - v + delta.
LrcCode construct(const Field &f, const LrcParams &params, const EvaluationPlan &plan);

std::vector<Elem> encode(const LrcCode &code, const std::vector<Elem> &info);

struct ErasurePattern {
    std::vector<std::uint32_t> erased; // strictly ascending coordinate indices
};

struct RepairResult {
    bool ok = false;
    std::vector<Elem> word;
    std::string reason;
    std::size_t rank_deficiency = 0;
};

/// Repairs each affected repair set independently; requires at most delta-1
/// erasures per set. Erased positions of `word` are ignored on input.
RepairResult local_repair(const LrcCode &code, std::vector<Elem> word, const ErasurePattern &pattern);

/// Recovers the unique codeword agreeing with the surviving coordinates, via
/// the parity-check matrix. Fails (with the rank deficiency) when the erased
/// columns of H are not independent, and on inconsistent survivors.
RepairResult global_decode(const LrcCode &code, std::vector<Elem> word, const ErasurePattern &pattern);

/// Recomputes each set polynomial from r surviving symbols (chosen by rng)
/// and returns the r-v auxiliary check sums, all zero for valid codewords.
/// Requires a construction plan.
std::vector<Elem> global_checksums(const LrcCode &code, const std::vector<Elem> &word, std::mt19937 &rng);

/// delta > 2 reduction: canonicalizes each local parity block, applies the
/// block column transformation, and keeps one local row per set. Output is a
/// [w(r+1), k] code with all-symbol (r,2)-locality and
/// claimed_d = 2*floor((d-1)/delta) + 1.
LrcCode delta_reduce(const LrcCode &code);

/// Second reduction step: normalizes local parity rows to all-ones by column
/// scaling, then returns the matrix of per-set column differences of the
/// global parity rows ((n-k-w) x w*r).
Matrix m2_reduce(const LrcCode &code_r2);

/// Removes the first epsilon = ceil((d-1)/(r+delta-1)) - 1 repair sets from
/// an optimal code with d > r+delta and k > r; the result is optimal with
/// distance d - epsilon(r+delta-1).
LrcCode puncture_reduce(const LrcCode &code, std::uint32_t certified_d);

/// Test fixture: the [points*copies, 2] code that evaluates degree-1
/// polynomials at `points` field elements and repeats each symbol `copies`
/// times. r=1, delta=copies, d = copies*(points-1).
LrcCode replicated_rs_fixture(const Field &f, std::uint32_t points, std::uint32_t copies);

} // namespace lrc

#endif

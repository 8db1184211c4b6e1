#ifndef LRCKIT_BOUNDS_HPP
#define LRCKIT_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lrc::bounds {

/// Derived quantities shared by the length bounds. Note the convention here
/// is k = ru + v with 0 <= v < r, unlike the construction's 1 <= v <= r.
struct BoundInputs {
    std::uint64_t n = 0, k = 0, r = 0, delta = 0, q = 0;
    std::optional<std::uint64_t> d;
    std::uint64_t u = 0, v = 0;                    // k = ru + v
    std::optional<std::uint64_t> w, m;             // n = (r+delta-1)w + m
    std::optional<std::uint64_t> t, a, epsilon;    // from d

    static BoundInputs derive(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta,
                              std::uint64_t q, std::optional<std::uint64_t> d);
};

/// Singleton-type bound: n - k + 1 - (ceil(k/r) - 1)(delta - 1).
std::int64_t singleton_bound(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta);

bool is_optimal(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta, std::uint64_t d);

/// Length bound for optimal codes with (r,2)-locality, d >= 5. The four-case
/// formula (a ≡ d mod 4, a in 1..4) is evaluated exactly and floored.
std::uint64_t length_bound_delta2(std::uint64_t q, std::uint64_t r, std::uint64_t d);

/// Length bound for optimal (r,delta)-codes via the two-step parity
/// reduction; requires t = floor((d-1)/delta) >= 2. Uses v = k mod r and
/// w - u = floor((d-1+v)/(r+delta-1)).
std::uint64_t length_bound_delta_gt2(std::uint64_t q, std::uint64_t r, std::uint64_t delta, std::uint64_t d,
                                     std::uint64_t k);

/// Puncture first (epsilon whole repair sets), then bound the remainder:
/// epsilon(r+delta-1) + inner length bound at d' = d - epsilon(r+delta-1).
/// Requires d > r+delta.
std::uint64_t combined_bound(std::uint64_t q, std::uint64_t r, std::uint64_t delta, std::uint64_t d,
                             std::uint64_t k);

/// Distance floor of the delta -> 2 reduction: 2*floor((d-1)/delta) + 1.
std::uint64_t reduction_distance_floor(std::uint64_t d, std::uint64_t delta);

struct BoundReport {
    std::string name;
    bool applicable = false;
    std::uint64_t value = 0;
    std::vector<std::string> notes; // satisfied/violated hypotheses, reasons
};

/// Evaluates every bound that can be formed from the inputs, reporting
/// hypothesis flags instead of silently answering outside a bound's regime.
std::vector<BoundReport> evaluate_all(std::uint64_t q, std::uint64_t r, std::uint64_t delta, std::uint64_t k,
                                      std::optional<std::uint64_t> d);

} // namespace lrc::bounds

#endif

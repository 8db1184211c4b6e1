#include "lrckit/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace lrc::bounds {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Exact floor((A/B) * q^(num/den) + C/D) for nonnegative rationals A/B, C/D.
// The largest integer x with (x - C/D) <= (A/B) q^(num/den), i.e. with
// (x*D - C)^den * B^den <= A^den * D^den * q^num whenever x*D > C.
std::uint64_t floor_scaled_power(std::uint64_t a_num, std::uint64_t a_den, std::uint64_t c_num, std::uint64_t c_den,
                                 std::uint64_t q, std::uint64_t pow_num, std::uint64_t pow_den) {
    if (a_den == 0 || c_den == 0 || pow_den == 0)
        throw std::invalid_argument("zero denominator in bound evaluation");
    const long double approx = static_cast<long double>(a_num) / a_den *
                                   std::pow(static_cast<long double>(q),
                                            static_cast<long double>(pow_num) / pow_den) +
                               static_cast<long double>(c_num) / c_den;
    if (!(approx >= 0) || approx > 1e18L)
        throw std::invalid_argument("bound value out of representable range");
    std::uint64_t x = static_cast<std::uint64_t>(approx) + 2;
    // x fits iff x - C/E <= (A/B) q^(N/D), i.e. ((xE-C)B)^D <= (AE)^D q^N.
    const BigInt rhs = ipow(BigInt(a_num) * c_den, pow_den) * ipow(BigInt(q), pow_num);
    auto fits = [&](std::uint64_t cand) {
        BigInt lhs = BigInt(cand) * c_den - BigInt(c_num);
        if (lhs <= 0)
            return true;
        return ipow(lhs * a_den, pow_den) <= rhs;
    };
    // walk down from the float estimate; the exact comparison decides
    while (x > 0 && !fits(x))
        --x;
    // guard against a float underestimate
    while (fits(x + 1))
        ++x;
    return x;
}

} // namespace

BoundInputs BoundInputs::derive(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta,
                                std::uint64_t q, std::optional<std::uint64_t> d) {
    if (r == 0 || delta < 2)
        throw std::invalid_argument("need r >= 1 and delta >= 2");
    BoundInputs in;
    in.n = n;
    in.k = k;
    in.r = r;
    in.delta = delta;
    in.q = q;
    in.d = d;
    in.u = k / r;
    in.v = k % r;
    const std::uint64_t bs = r + delta - 1;
    if (n > 0) {
        in.w = n / bs;
        in.m = n % bs;
    }
    if (d && *d >= 1) {
        in.t = (*d - 1) / delta;
        std::uint64_t a = *d % 4;
        in.a = (a == 0) ? 4 : a;
        if (*d >= 2)
            in.epsilon = (*d - 2) / bs; // = ceil((d-1)/bs) - 1
    }
    return in;
}

std::int64_t singleton_bound(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta) {
    if (k < 1 || r < 1 || delta < 2)
        throw std::invalid_argument("singleton_bound needs k >= 1, r >= 1, delta >= 2");
    const std::uint64_t ceil_kr = (k + r - 1) / r;
    return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) + 1 -
           static_cast<std::int64_t>((ceil_kr - 1) * (delta - 1));
}

bool is_optimal(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta, std::uint64_t d) {
    return static_cast<std::int64_t>(d) == singleton_bound(n, k, r, delta);
}

std::uint64_t length_bound_delta2(std::uint64_t q, std::uint64_t r, std::uint64_t d) {
    if (d < 5)
        throw std::invalid_argument("length_bound_delta2 requires d >= 5");
    if (q < 2 || r < 1)
        throw std::invalid_argument("length_bound_delta2 requires q >= 2, r >= 1");
    std::uint64_t a = d % 4;
    if (a == 0)
        a = 4;
    if (a <= 2) {
        // (d-a)(r+1) / (4(q-1)r) * q^{4(d-2)/(d-a)}
        return floor_scaled_power((d - a) * (r + 1), 4 * (q - 1) * r, 0, 1, q, 4 * (d - 2), d - a);
    }
    // (r+1)/r * ( (d-a) / (4(q-1)) * q^{4(d-3)/(d-a)} + 1 )
    return floor_scaled_power((d - a) * (r + 1), 4 * (q - 1) * r, r + 1, r, q, 4 * (d - 3), d - a);
}

std::uint64_t length_bound_delta_gt2(std::uint64_t q, std::uint64_t r, std::uint64_t delta, std::uint64_t d,
                                     std::uint64_t k) {
    if (delta < 2 || r < 1 || q < 2)
        throw std::invalid_argument("length_bound_delta_gt2 requires q >= 2, r >= 1, delta >= 2");
    const std::uint64_t t = (d - 1) / delta;
    if (2 * t + 1 <= 4)
        throw std::invalid_argument("length bound inapplicable: t = floor((d-1)/delta) = " + std::to_string(t) +
                                    " gives 2t+1 <= 4 (length can be unbounded there)");
    const std::uint64_t v = k % r;
    const std::uint64_t wu = (d - 1 + v) / (r + delta - 1); // w - u
    if (2 * wu * r < 2 * v)
        throw std::invalid_argument("degenerate exponent in length bound");
    const std::uint64_t exp_num = 2 * wu * r - 2 * v;
    if (t % 2 == 1)
        return floor_scaled_power((t - 1) * (r + delta - 1), 2 * r * (q - 1), 0, 1, q, exp_num, t - 1);
    return floor_scaled_power(t * (r + delta - 1), 2 * r * (q - 1), 0, 1, q, exp_num, t);
}

std::uint64_t combined_bound(std::uint64_t q, std::uint64_t r, std::uint64_t delta, std::uint64_t d,
                             std::uint64_t k) {
    if (d <= r + delta)
        throw std::invalid_argument("combined_bound requires d > r+delta");
    const std::uint64_t bs = r + delta - 1;
    const std::uint64_t eps = (d - 2) / bs; // ceil((d-1)/bs) - 1, >= 1 here
    const std::uint64_t dp = d - eps * bs;
    const std::uint64_t inner = (delta == 2) ? length_bound_delta2(q, r, dp)
                                             : length_bound_delta_gt2(q, r, delta, dp, k);
    return eps * bs + inner;
}

std::uint64_t reduction_distance_floor(std::uint64_t d, std::uint64_t delta) {
    if (delta < 2 || d < 1)
        throw std::invalid_argument("reduction_distance_floor requires delta >= 2, d >= 1");
    return 2 * ((d - 1) / delta) + 1;
}

namespace {

void hypothesis_flags(std::vector<std::string> &notes, std::uint64_t r, std::uint64_t k) {
    const std::uint64_t u = k / r, v = k % r;
    notes.push_back(k > r ? "k > r: satisfied" : "k > r: violated");
    if (v == 0)
        notes.push_back("r | k: satisfied");
    else
        notes.push_back(u >= 2 * (r + 1 - v) ? "u >= 2(r+1-v): satisfied"
                                             : "r | k and u >= 2(r+1-v) both violated");
}

} // namespace

std::vector<BoundReport> evaluate_all(std::uint64_t q, std::uint64_t r, std::uint64_t delta, std::uint64_t k,
                                      std::optional<std::uint64_t> d) {
    std::vector<BoundReport> out;
    {
        BoundReport singleton{"singleton_bound", false, 0, {}};
        singleton.notes.push_back("distance bound needs n; the verify certificate reports it per code");
        out.push_back(std::move(singleton));
    }
    {
        BoundReport rep{"length_bound_delta2", false, 0, {}};
        if (!d)
            rep.notes.push_back("needs d");
        else if (delta != 2)
            rep.notes.push_back("delta != 2");
        else {
            try {
                rep.value = length_bound_delta2(q, r, *d);
                rep.applicable = true;
                hypothesis_flags(rep.notes, r, k);
                rep.notes.push_back("(r+1) | n: check against your n");
            } catch (const std::invalid_argument &e) {
                rep.notes.push_back(e.what());
            }
        }
        out.push_back(std::move(rep));
    }
    {
        BoundReport rep{"length_bound_delta_gt2", false, 0, {}};
        if (!d)
            rep.notes.push_back("needs d");
        else {
            try {
                rep.value = length_bound_delta_gt2(q, r, delta, *d, k);
                rep.applicable = true;
                hypothesis_flags(rep.notes, r, k);
            } catch (const std::invalid_argument &e) {
                rep.notes.push_back(e.what());
            }
        }
        out.push_back(std::move(rep));
    }
    {
        BoundReport rep{"combined_bound", false, 0, {}};
        if (!d)
            rep.notes.push_back("needs d");
        else {
            try {
                rep.value = combined_bound(q, r, delta, *d, k);
                rep.applicable = true;
                hypothesis_flags(rep.notes, r, k);
            } catch (const std::invalid_argument &e) {
                rep.notes.push_back(e.what());
            }
        }
        out.push_back(std::move(rep));
    }
    {
        BoundReport rep{"reduction_distance_floor", false, 0, {}};
        if (!d)
            rep.notes.push_back("needs d");
        else {
            rep.value = reduction_distance_floor(*d, delta);
            rep.applicable = true;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace lrc::bounds

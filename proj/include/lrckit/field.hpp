#ifndef LRCKIT_FIELD_HPP
#define LRCKIT_FIELD_HPP

#include <cstdint>
#include <vector>

namespace lrc {

// Canonical element encoding: an integer in [0, q) whose base-p digits are
// the coefficients of the residue polynomial, constant term first
// (value = c_0 + c_1*p + ... + c_{m-1}*p^{m-1}).
using Elem = std::uint32_t;

/// Arithmetic context for GF(p^m). Prime fields accept any p < 2^31;
/// extension fields are supported up to q <= 2^16.
class Field {
  public:
    /// Empty context; every operation throws until a real one is assigned.
    Field() = default;
    /// GF(q); q is factored as p^m and rejected if it is not a prime power.
    explicit Field(std::uint64_t q);
    /// GF(p^m) with the modulus found by deterministic search: the monic
    /// irreducible degree-m polynomial with the smallest canonical encoding.
    Field(std::uint32_t p, std::uint32_t m);
    /// GF(p^m) with an explicit monic modulus (m+1 coefficients, low first).
    /// Irreducibility is verified by exhaustive factor search.
    Field(std::uint32_t p, std::uint32_t m, std::vector<Elem> modulus);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    /// Modulus coefficients (empty for prime fields).
    const std::vector<Elem> &modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const {
        check(a);
        check(b);
        if (m_ == 1) {
            std::uint64_t s = static_cast<std::uint64_t>(a) + b;
            return static_cast<Elem>(s >= p_ ? s - p_ : s);
        }
        return add_ext(a, b);
    }

    Elem neg(Elem a) const {
        check(a);
        if (m_ == 1)
            return a == 0 ? 0 : p_ - a;
        return neg_ext(a);
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        check(a);
        check(b);
        if (a == 0 || b == 0)
            return 0;
        if (tabled_)
            return exp_[log_[a] + log_[b]];
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    }

    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    bool operator==(const Field &o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }

  private:
    void init_tables();
    void check(Elem a) const {
        if (a >= q_)
            throw_out_of_range(a);
    }
    [[noreturn]] void throw_out_of_range(Elem a) const;
    Elem add_ext(Elem a, Elem b) const;
    Elem neg_ext(Elem a) const;
    Elem slow_mul(Elem a, Elem b) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 1;
    std::uint32_t q_ = 0;
    std::vector<Elem> modulus_;
    // exp/log tables over the multiplicative group; exp_ holds 2(q-1)
    // entries so products of logs index without a reduction.
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    bool tabled_ = false;
};

bool is_prime(std::uint64_t n);
/// Smallest prime power >= n.
std::uint64_t next_prime_power(std::uint64_t n);

} // namespace lrc

#endif

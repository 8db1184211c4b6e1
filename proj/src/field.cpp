#include "lrckit/field.hpp"

#include <stdexcept>
#include <string>

namespace lrc {

namespace {

constexpr std::uint32_t kMaxExtOrder = 1u << 16;
constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

// Dense polynomials over GF(p) as digit vectors, low order first.
using Digits = std::vector<Elem>;

Digits to_digits(Elem value, std::uint32_t p, std::uint32_t m) {
    Digits d(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = value % p;
        value /= p;
    }
    return d;
}

Elem from_digits(const Digits &d, std::uint32_t p) {
    Elem v = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        v = v * p + d[i];
    return v;
}

void trim(Digits &a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Digits poly_mul_p(const Digits &a, const Digits &b, std::uint32_t p) {
    if (a.empty() || b.empty())
        return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<Elem>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return r;
}

// Remainder of a modulo monic b.
Digits poly_mod_p(Digits a, const Digits &b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const Elem lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
                a[shift + i] = static_cast<Elem>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    trim(a);
    return a;
}

bool is_irreducible(const Digits &f, std::uint32_t p) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size()) - 1;
    if (m == 0)
        return false;
    if (f[0] == 0)
        return m == 1; // divisible by x
    // Exhaustive check: no monic factor of degree 1..m/2.
    for (std::uint32_t dg = 1; dg <= m / 2; ++dg) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < dg; ++i)
            count *= p;
        for (std::uint64_t val = 0; val < count; ++val) {
            Digits g = to_digits(static_cast<Elem>(val), p, dg);
            g.push_back(1);
            if (poly_mod_p(f, g, p).empty())
                return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t next_prime_power(std::uint64_t n) {
    if (n < 2)
        return 2;
    for (std::uint64_t q = n;; ++q) {
        std::uint64_t b = q;
        // smallest prime factor
        std::uint64_t spf = 0;
        for (std::uint64_t d = 2; d * d <= b; ++d)
            if (b % d == 0) {
                spf = d;
                break;
            }
        if (spf == 0)
            return q; // prime
        while (b % spf == 0)
            b /= spf;
        if (b == 1)
            return q;
    }
}

Field::Field(std::uint64_t q) {
    if (q < 2)
        throw std::invalid_argument("field order must be at least 2");
    std::uint64_t b = q;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= b; ++d)
        if (b % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        p = q; // q itself prime
    std::uint32_t m = 0;
    while (b % p == 0) {
        b /= p;
        ++m;
    }
    if (b != 1)
        throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
    *this = (m == 1) ? Field(static_cast<std::uint32_t>(p), 1)
                     : Field(static_cast<std::uint32_t>(p), m);
}

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    if (!is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0)
        throw std::invalid_argument("extension degree must be >= 1");
    if (m == 1) {
        if (p > kMaxPrime)
            throw std::invalid_argument("prime field order too large");
        q_ = p;
        init_tables();
        return;
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxExtOrder)
            throw std::invalid_argument("extension field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    // Smallest-canonical-encoding monic irreducible modulus.
    std::uint64_t tail_count = q; // p^m candidates for the non-leading part
    for (std::uint64_t val = 0; val < tail_count; ++val) {
        Digits f = to_digits(static_cast<Elem>(val), p, m);
        f.push_back(1);
        if (is_irreducible(f, p)) {
            modulus_.assign(f.begin(), f.end());
            break;
        }
    }
    if (modulus_.empty())
        throw std::runtime_error("no irreducible modulus found"); // unreachable
    init_tables();
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<Elem> modulus) : p_(p), m_(m) {
    if (!is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 2)
        throw std::invalid_argument("explicit modulus requires extension degree >= 2");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxExtOrder)
            throw std::invalid_argument("extension field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (modulus.size() != m + 1 || modulus[m] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    for (Elem c : modulus)
        if (c >= p)
            throw std::invalid_argument("modulus coefficient out of range");
    Digits f(modulus.begin(), modulus.end());
    if (!is_irreducible(f, p))
        throw std::invalid_argument("modulus is reducible over GF(p)");
    modulus_ = std::move(modulus);
    init_tables();
}

Elem Field::slow_mul(Elem a, Elem b) const {
    if (m_ == 1)
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    Digits da = to_digits(a, p_, m_);
    Digits db = to_digits(b, p_, m_);
    trim(da);
    trim(db);
    Digits prod = poly_mul_p(da, db, p_);
    Digits mod(modulus_.begin(), modulus_.end());
    return from_digits(poly_mod_p(std::move(prod), mod, p_), p_);
}

void Field::init_tables() {
    if (q_ > kMaxExtOrder)
        return; // large prime field: direct arithmetic only
    // Find the multiplicative generator with the smallest encoding.
    const std::uint32_t ord = q_ - 1;
    for (Elem g = (q_ == 2) ? 1u : 2u; g < q_; ++g) {
        Elem x = g;
        std::uint32_t steps = 1;
        while (x != 1) {
            x = slow_mul(x, g);
            ++steps;
            if (steps > ord)
                break;
        }
        if (steps == ord) {
            exp_.assign(2 * ord, 0);
            log_.assign(q_, 0);
            Elem v = 1;
            for (std::uint32_t i = 0; i < ord; ++i) {
                exp_[i] = v;
                exp_[i + ord] = v;
                log_[v] = i;
                v = slow_mul(v, g);
            }
            tabled_ = true;
            return;
        }
    }
    throw std::runtime_error("no multiplicative generator found"); // unreachable
}

void Field::throw_out_of_range(Elem a) const {
    throw std::invalid_argument("element " + std::to_string(a) + " not in GF(" + std::to_string(q_) + ")");
}

Elem Field::add_ext(Elem a, Elem b) const {
    Elem r = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        Elem da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        Elem s = da + db;
        if (s >= p_)
            s -= p_;
        r += s * pw;
        pw *= p_;
    }
    return r;
}

Elem Field::neg_ext(Elem a) const {
    Elem r = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        Elem da = a % p_;
        a /= p_;
        r += (da == 0 ? 0 : p_ - da) * pw;
        pw *= p_;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    check(a);
    if (a == 0)
        throw std::invalid_argument("division by zero in GF(" + std::to_string(q_) + ")");
    if (tabled_) {
        std::uint32_t la = log_[a];
        return la == 0 ? 1 : exp_[(q_ - 1) - la];
    }
    return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    check(a);
    if (a == 0)
        return e == 0 ? 1 : 0;
    if (tabled_) {
        std::uint64_t le = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
        return exp_[le];
    }
    Elem r = 1, x = a;
    while (e) {
        if (e & 1)
            r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

} // namespace lrc

#include "lrckit/designs.hpp"

#include "lrckit/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

namespace {

constexpr std::uint64_t kEnumerationCap = 10'000'000;

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap)
            return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

// Visits k-subsets of [0, n) in lexicographic order until fn returns false.
template <typename Fn> void for_each_subset(std::size_t n, std::size_t k, Fn &&fn) {
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        if (!fn(idx))
            return;
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0)
                return;
        }
    }
}

std::size_t intersect_size(const std::vector<std::uint32_t> &block, const std::vector<std::uint8_t> &mark) {
    std::size_t c = 0;
    for (std::uint32_t p : block)
        c += mark[p];
    return c;
}

} // namespace

void validate(const BlockFamily &fam) {
    for (const auto &b : fam.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] >= fam.ground_size)
                throw std::invalid_argument("block point " + std::to_string(b[i]) + " outside ground set");
            if (i > 0 && b[i] <= b[i - 1])
                throw std::invalid_argument("block points must be strictly ascending");
        }
    }
}

std::size_t overlap(const BlockFamily &fam) {
    validate(fam);
    std::vector<std::uint8_t> seen(fam.ground_size, 0);
    std::size_t total = 0, distinct = 0;
    for (const auto &b : fam.blocks) {
        total += b.size();
        for (std::uint32_t p : b)
            if (!seen[p]) {
                seen[p] = 1;
                ++distinct;
            }
    }
    return total - distinct;
}

ConditionReport check_mu_condition(const BlockFamily &fam, std::size_t mu, std::size_t delta) {
    validate(fam);
    if (mu < 1)
        throw std::invalid_argument("mu must be >= 1");
    if (binomial_capped(fam.blocks.size(), mu, kEnumerationCap) > kEnumerationCap)
        throw std::invalid_argument("mu-condition enumeration exceeds cap of 10^7 subsets");

    ConditionReport rep;
    if (mu < 2 || fam.blocks.size() < mu)
        return rep; // a single block intersects an empty union in 0 < delta points
    std::vector<std::uint8_t> mark(fam.ground_size, 0);
    for_each_subset(fam.blocks.size(), mu, [&](const std::vector<std::size_t> &sel) {
        for (std::size_t out = 0; out < mu; ++out) {
            for (std::size_t i = 0; i < mu; ++i)
                if (i != out)
                    for (std::uint32_t p : fam.blocks[sel[i]])
                        mark[p] = 1;
            std::size_t inter = intersect_size(fam.blocks[sel[out]], mark);
            for (std::size_t i = 0; i < mu; ++i)
                if (i != out)
                    for (std::uint32_t p : fam.blocks[sel[i]])
                        mark[p] = 0;
            if (inter >= delta) {
                rep.pass = false;
                rep.subset = sel;
                rep.offender = sel[out];
                rep.detail = "block " + std::to_string(sel[out]) + " meets the union of the other " +
                             std::to_string(mu - 1) + " blocks in " + std::to_string(inter) + " >= delta points";
                return false;
            }
        }
        return true;
    });
    return rep;
}

ConditionReport check_uibf(const BlockFamily &fam, std::size_t s, std::size_t t, std::size_t delta) {
    validate(fam);
    if (s < 1 || t < 1)
        throw std::invalid_argument("uibf requires s, t >= 1");
    if (s + t > fam.blocks.size())
        throw std::invalid_argument("uibf requires s + t <= block count");
    std::uint64_t outer = binomial_capped(fam.blocks.size(), s + t, kEnumerationCap);
    std::uint64_t inner = binomial_capped(s + t, s, kEnumerationCap);
    if (outer > kEnumerationCap || outer * inner > kEnumerationCap)
        throw std::invalid_argument("uibf enumeration exceeds cap of 10^7 selections");

    ConditionReport rep;
    std::vector<std::uint8_t> in_a(fam.ground_size, 0), in_b(fam.ground_size, 0);
    for_each_subset(fam.blocks.size(), s + t, [&](const std::vector<std::size_t> &sel) {
        bool keep_going = true;
        for_each_subset(s + t, s, [&](const std::vector<std::size_t> &apos) {
            std::vector<std::uint8_t> is_a(s + t, 0);
            for (std::size_t i : apos)
                is_a[i] = 1;
            for (std::size_t i = 0; i < s + t; ++i)
                for (std::uint32_t p : fam.blocks[sel[i]])
                    (is_a[i] ? in_a : in_b)[p] = 1;
            std::size_t inter = 0;
            for (std::size_t i = 0; i < s + t; ++i)
                if (is_a[i])
                    for (std::uint32_t p : fam.blocks[sel[i]])
                        if (in_a[p] && in_b[p]) {
                            ++inter;
                            in_a[p] = 0; // count each point once
                        }
            for (std::size_t i = 0; i < s + t; ++i)
                for (std::uint32_t p : fam.blocks[sel[i]])
                    in_a[p] = in_b[p] = 0;
            if (inter >= delta) {
                rep.pass = false;
                rep.subset = sel;
                rep.offender = sel[apos[0]];
                rep.detail = "unions of an (s,t) selection share " + std::to_string(inter) + " >= delta points";
                keep_going = false;
                return false;
            }
            return true;
        });
        return keep_going;
    });
    return rep;
}

ConditionReport check_packing(const BlockFamily &fam, std::size_t tau_plus_1) {
    validate(fam);
    if (tau_plus_1 < 2)
        throw std::invalid_argument("packing check requires tau+1 >= 2");
    const std::size_t tau = tau_plus_1 - 1;
    ConditionReport rep;
    std::vector<std::uint8_t> mark(fam.ground_size, 0);
    for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
        for (std::uint32_t p : fam.blocks[i])
            mark[p] = 1;
        for (std::size_t j = i + 1; j < fam.blocks.size(); ++j) {
            std::size_t inter = intersect_size(fam.blocks[j], mark);
            if (inter > tau) {
                rep.pass = false;
                rep.subset = {i, j};
                rep.offender = j;
                rep.detail = "blocks " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                             std::to_string(inter) + " > tau points";
                for (std::uint32_t p : fam.blocks[i])
                    mark[p] = 0;
                return rep;
            }
        }
        for (std::uint32_t p : fam.blocks[i])
            mark[p] = 0;
    }
    return rep;
}

namespace {

std::vector<std::uint32_t> coverage_counts(const BlockFamily &fam) {
    std::vector<std::uint32_t> count(fam.ground_size, 0);
    for (const auto &b : fam.blocks)
        for (std::uint32_t p : b)
            ++count[p];
    return count;
}

bool covers(const std::vector<std::uint32_t> &count) {
    for (std::uint32_t c : count)
        if (c == 0)
            return false;
    return true;
}

bool redundant(const std::vector<std::uint32_t> &block, const std::vector<std::uint32_t> &count) {
    for (std::uint32_t p : block)
        if (count[p] < 2)
            return false;
    return true;
}

} // namespace

bool check_ecf(const BlockFamily &fam) {
    validate(fam);
    auto count = coverage_counts(fam);
    if (!covers(count))
        return false;
    for (const auto &b : fam.blocks)
        if (redundant(b, count))
            return false;
    return true;
}

BlockFamily prune_to_ecf(BlockFamily fam) {
    validate(fam);
    auto count = coverage_counts(fam);
    if (!covers(count))
        throw std::invalid_argument("prune_to_ecf: blocks do not cover the ground set");
    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t i = fam.blocks.size(); i-- > 0;) {
            if (redundant(fam.blocks[i], count)) {
                for (std::uint32_t p : fam.blocks[i])
                    --count[p];
                fam.blocks.erase(fam.blocks.begin() + static_cast<std::ptrdiff_t>(i));
                removed = true;
                break;
            }
        }
    }
    return fam;
}

BlockFamily sunflower(std::size_t w, std::size_t petal, std::size_t core) {
    BlockFamily fam;
    fam.ground_size = static_cast<std::uint32_t>(core + w * petal);
    fam.blocks.reserve(w);
    for (std::size_t i = 0; i < w; ++i) {
        std::vector<std::uint32_t> b;
        b.reserve(core + petal);
        for (std::size_t c = 0; c < core; ++c)
            b.push_back(static_cast<std::uint32_t>(c));
        for (std::size_t t = 0; t < petal; ++t)
            b.push_back(static_cast<std::uint32_t>(core + i * petal + t));
        fam.blocks.push_back(std::move(b));
    }
    return fam;
}

BlockFamily steiner_triple_bose(std::uint32_t n1) {
    if (n1 % 6 != 3)
        throw std::invalid_argument("Bose construction needs n1 ≡ 3 (mod 6), got " + std::to_string(n1));
    const std::uint32_t mm = n1 / 3; // odd group order
    const std::uint32_t half = (mm + 1) / 2;
    auto pt = [](std::uint32_t i, std::uint32_t c) { return 3 * i + c; };
    BlockFamily fam;
    fam.ground_size = n1;
    for (std::uint32_t i = 0; i < mm; ++i) {
        std::vector<std::uint32_t> b = {pt(i, 0), pt(i, 1), pt(i, 2)};
        std::sort(b.begin(), b.end());
        fam.blocks.push_back(std::move(b));
    }
    for (std::uint32_t i = 0; i < mm; ++i)
        for (std::uint32_t j = i + 1; j < mm; ++j)
            for (std::uint32_t c = 0; c < 3; ++c) {
                std::uint64_t mid = static_cast<std::uint64_t>(i + j) * half % mm;
                std::vector<std::uint32_t> b = {pt(i, c), pt(j, c), pt(static_cast<std::uint32_t>(mid), (c + 1) % 3)};
                std::sort(b.begin(), b.end());
                fam.blocks.push_back(std::move(b));
            }
    std::sort(fam.blocks.begin(), fam.blocks.end());
    return fam;
}

BlockFamily affine_plane_lines(std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("affine plane order " + std::to_string(p) + " is not prime");
    BlockFamily fam;
    fam.ground_size = p * p;
    for (std::uint32_t slope = 0; slope < p; ++slope)
        for (std::uint32_t c = 0; c < p; ++c) {
            std::vector<std::uint32_t> line;
            line.reserve(p);
            for (std::uint32_t x = 0; x < p; ++x)
                line.push_back(x * p + (slope * x + c) % p);
            std::sort(line.begin(), line.end());
            fam.blocks.push_back(std::move(line));
        }
    for (std::uint32_t c = 0; c < p; ++c) {
        std::vector<std::uint32_t> line;
        line.reserve(p);
        for (std::uint32_t y = 0; y < p; ++y)
            line.push_back(c * p + y);
        fam.blocks.push_back(std::move(line));
    }
    std::sort(fam.blocks.begin(), fam.blocks.end());
    return fam;
}

std::uint64_t johnson_bound(std::uint64_t n1, std::uint64_t block, std::uint32_t tau_plus_1) {
    if (tau_plus_1 < 2 || block < tau_plus_1)
        throw std::invalid_argument("johnson_bound requires block >= tau+1 >= 2");
    const std::uint32_t tau = tau_plus_1 - 1;
    std::uint64_t value = (n1 - tau) / (block - tau);
    for (std::uint32_t i = tau; i-- > 0;) {
        unsigned __int128 num = static_cast<unsigned __int128>(n1 - i) * value;
        value = static_cast<std::uint64_t>(num / (block - i));
    }
    return value;
}

} // namespace lrc

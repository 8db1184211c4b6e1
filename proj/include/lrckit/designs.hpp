#ifndef LRCKIT_DESIGNS_HPP
#define LRCKIT_DESIGNS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lrc {

/// Abstract combinatorial design: blocks of point indices over a ground set
/// {0, ..., ground_size-1}. Points inside a block are strictly ascending;
/// block order is preserved as given (it drives deterministic pruning).
struct BlockFamily {
    std::uint32_t ground_size = 0;
    std::vector<std::vector<std::uint32_t>> blocks;

    bool operator==(const BlockFamily &o) const = default;
};

/// Throws std::invalid_argument if points are out of range or blocks are
/// not strictly ascending.
void validate(const BlockFamily &fam);

/// Overlap D: sum of block sizes minus the size of their union.
std::size_t overlap(const BlockFamily &fam);

struct ConditionReport {
    bool pass = true;
    // On failure: the violating block subset and the offending block in it
    // (for packing checks the subset is the clashing pair).
    std::vector<std::size_t> subset;
    std::size_t offender = 0;
    std::string detail;
};

/// For every mu-subset R of blocks and every S' in R, require
/// |S' ∩ (union of R \ {S'})| < delta. Exhaustive; enumeration is capped at
/// C(blocks, mu) <= 10^7 and errors beyond.
ConditionReport check_mu_condition(const BlockFamily &fam, std::size_t mu, std::size_t delta);

/// Union-intersection-bounded family: for all disjoint selections of s and t
/// blocks, |union(A) ∩ union(B)| < delta. Same enumeration cap.
ConditionReport check_uibf(const BlockFamily &fam, std::size_t s, std::size_t t, std::size_t delta);

/// Packing: no (tau+1)-point subset inside two distinct blocks; equivalently
/// all pairwise block intersections have size <= tau.
ConditionReport check_packing(const BlockFamily &fam, std::size_t tau_plus_1);

/// Essential covering family: blocks cover the ground set and no block is
/// contained in the union of the others.
bool check_ecf(const BlockFamily &fam);

/// Repeatedly removes the highest-index block contained in the union of the
/// remaining blocks. Input must cover the ground set.
BlockFamily prune_to_ecf(BlockFamily fam);

/// w blocks sharing a common core of `core` points, with pairwise disjoint
/// petals of `petal` points each.
BlockFamily sunflower(std::size_t w, std::size_t petal, std::size_t core);

/// Bose construction of a 2-(n1, 3, 1) Steiner triple system, n1 ≡ 3 (mod 6).
BlockFamily steiner_triple_bose(std::uint32_t n1);

/// All p^2 + p lines of the affine plane AG(2, p); point (a, b) encodes as
/// a*p + b.
BlockFamily affine_plane_lines(std::uint32_t p);

/// Johnson bound on the number of blocks of a (tau+1)-(n1, block, 1)-packing:
/// nested floors with tau+1 levels.
std::uint64_t johnson_bound(std::uint64_t n1, std::uint64_t block, std::uint32_t tau_plus_1);

} // namespace lrc

#endif

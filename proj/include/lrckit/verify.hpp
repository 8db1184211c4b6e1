#ifndef LRCKIT_VERIFY_HPP
#define LRCKIT_VERIFY_HPP

#include "lrckit/code.hpp"
#include "lrckit/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lrc {

struct DistanceResult {
    bool exact = false; // false: every subset of size <= cap is independent
    std::uint32_t d = 0; // the exact distance, or the cap when !exact
};

/// Exact minimum distance by exhaustive search for the smallest linearly
/// dependent column subset of the parity-check matrix, sizes 1..cap in
/// lexicographic order with early exit. G must have full row rank.
DistanceResult min_distance(const Field &f, const Matrix &g, std::uint32_t cap, unsigned threads = 1);

/// Same search directly on a parity-check matrix.
DistanceResult min_distance_from_parity(const Field &f, const Matrix &h, std::uint32_t cap, unsigned threads = 1);

struct SetReport {
    std::size_t index = 0;
    bool pass = false;
    std::size_t size = 0;
    std::size_t rank = 0;
    std::uint32_t local_distance = 0;
    std::string detail;
};

struct LocalityReport {
    bool pass = false;
    std::vector<SetReport> sets;
};

/// Per repair set: |R| <= r+delta-1, rank(G|_R) <= r, and the punctured
/// code's exact distance is at least delta.
LocalityReport check_locality(const LrcCode &code);

struct MdsPartitionReport {
    bool pass = false;
    std::string detail;
};

/// Repair sets partition the coordinates and every punctured block is an
/// [r+delta-1, r, delta] MDS code (rank exactly r, distance exactly delta).
MdsPartitionReport check_mds_partition(const LrcCode &code);

struct OptimalityCertificate {
    std::uint32_t d = 0;
    std::int64_t bound = 0;
    bool optimal = false;
    bool distance_exact = false; // false when the search stopped at the cap
};

/// Certifies the distance with cap = singleton bound + 1 and compares.
OptimalityCertificate certify_optimal(const LrcCode &code, unsigned threads = 1);

} // namespace lrc

#endif

#include "lrckit/verify.hpp"

#include "lrckit/bounds.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace lrc {

namespace {

// Searches for a linearly dependent subset of exactly `target` parity
// columns, visiting subsets in lexicographic order. Shared prefixes keep
// their eliminated pivot columns, so each visited subset costs one
// incremental reduction instead of a fresh rank computation.
class DependenceSearch {
  public:
    DependenceSearch(const Field &f, const Matrix &h) : f_(f), rows_(h.rows), n_(h.cols), cols_(h.rows * h.cols) {
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < rows_; ++i)
                cols_[j * rows_ + i] = h.at(i, j);
    }

    // True iff some `target`-subset of columns is dependent. `first_residue`
    // restricts the first column index to a residue class for work splitting.
    bool round(std::uint32_t target, unsigned stride, unsigned residue, const std::atomic<bool> &stop) const {
        if (target > n_)
            return false;
        Workspace ws;
        ws.piv.assign(target > 0 ? target - 1 : 0, std::vector<Elem>(rows_));
        ws.pivrow.assign(target > 0 ? target - 1 : 0, 0);
        ws.pivinv.assign(target > 0 ? target - 1 : 0, 0);
        ws.buf.assign(rows_, 0);
        for (std::size_t c0 = residue; c0 + (target - 1) < n_; c0 += stride) {
            if (stop.load(std::memory_order_relaxed))
                return false;
            if (descend(ws, 0, c0, target))
                return true;
        }
        return false;
    }

  private:
    struct Workspace {
        std::vector<std::vector<Elem>> piv;
        std::vector<std::size_t> pivrow;
        std::vector<Elem> pivinv;
        std::vector<Elem> buf;
    };

    // Reduces column c against the first `depth` pivots; returns the pivot
    // row of the residue or rows_ if it vanished (dependence witness).
    std::size_t reduce(Workspace &ws, std::size_t depth, std::size_t c) const {
        Elem *buf = ws.buf.data();
        const Elem *src = cols_.data() + c * rows_;
        for (std::size_t i = 0; i < rows_; ++i)
            buf[i] = src[i];
        for (std::size_t p = 0; p < depth; ++p) {
            const Elem lead = buf[ws.pivrow[p]];
            if (lead == 0)
                continue;
            const Elem factor = f_.mul(lead, ws.pivinv[p]);
            const Elem *pv = ws.piv[p].data();
            for (std::size_t i = 0; i < rows_; ++i)
                buf[i] = f_.sub(buf[i], f_.mul(factor, pv[i]));
        }
        for (std::size_t i = 0; i < rows_; ++i)
            if (buf[i] != 0)
                return i;
        return rows_;
    }

    bool descend(Workspace &ws, std::size_t depth, std::size_t c, std::uint32_t target) const {
        const std::size_t pr = reduce(ws, depth, c);
        if (pr == rows_)
            return true;
        if (depth + 1 == target)
            return false;
        ws.piv[depth] = ws.buf;
        ws.pivrow[depth] = pr;
        ws.pivinv[depth] = f_.inv(ws.buf[pr]);
        const std::size_t remaining = target - depth - 2;
        for (std::size_t nc = c + 1; nc + remaining < n_; ++nc)
            if (descend(ws, depth + 1, nc, target))
                return true;
        return false;
    }

    const Field &f_;
    std::size_t rows_;
    std::size_t n_;
    std::vector<Elem> cols_;
};

bool dependent_subset_exists(const DependenceSearch &search, std::uint32_t target, unsigned threads) {
    std::atomic<bool> stop{false};
    if (threads <= 1) {
        return search.round(target, 1, 0, stop);
    }
    std::atomic<bool> found{false};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            if (search.round(target, threads, t, stop)) {
                found.store(true);
                stop.store(true);
            }
        });
    for (auto &th : pool)
        th.join();
    return found.load();
}

} // namespace

DistanceResult min_distance_from_parity(const Field &f, const Matrix &h, std::uint32_t cap, unsigned threads) {
    DistanceResult res;
    const std::size_t n = h.cols;
    if (cap > n)
        cap = static_cast<std::uint32_t>(n);
    DependenceSearch search(f, h);
    for (std::uint32_t j = 1; j <= cap; ++j) {
        // any (rows+1)-subset is automatically dependent
        if (j > h.rows) {
            res.exact = true;
            res.d = j;
            return res;
        }
        // splitting tiny rounds across workers costs more than it saves
        const unsigned workers = (j >= 3 && n >= 40) ? threads : 1;
        if (dependent_subset_exists(search, j, workers)) {
            res.exact = true;
            res.d = j;
            return res;
        }
    }
    res.exact = false;
    res.d = cap;
    return res;
}

DistanceResult min_distance(const Field &f, const Matrix &g, std::uint32_t cap, unsigned threads) {
    if (rank(f, g) != g.rows)
        throw std::invalid_argument("min_distance requires a full-rank generator");
    return min_distance_from_parity(f, null_space(f, g), cap, threads);
}

LocalityReport check_locality(const LrcCode &code) {
    const Field &f = code.field;
    LocalityReport rep;
    rep.pass = true;
    const std::size_t max_size = static_cast<std::size_t>(code.r) + code.delta - 1;
    std::vector<std::uint8_t> covered(code.length(), 0);
    for (std::size_t si = 0; si < code.repair_sets.size(); ++si) {
        const auto &set = code.repair_sets[si];
        SetReport sr;
        sr.index = si;
        sr.size = set.size();
        for (std::uint32_t c : set)
            covered[c] = 1;
        Matrix local = take_columns(code.G, set);
        std::vector<std::size_t> piv;
        Matrix reduced = rref(f, local, &piv);
        sr.rank = piv.size();
        reduced.rows = piv.size();
        reduced.a.resize(reduced.rows * reduced.cols);
        DistanceResult dist = min_distance_from_parity(f, null_space(f, reduced), static_cast<std::uint32_t>(set.size()) + 1, 1);
        sr.local_distance = dist.d;
        sr.pass = true;
        if (set.size() > max_size) {
            sr.pass = false;
            sr.detail = "repair set larger than r+delta-1";
        } else if (sr.rank > code.r) {
            sr.pass = false;
            sr.detail = "local rank exceeds r";
        } else if (!dist.exact || dist.d < code.delta) {
            sr.pass = false;
            sr.detail = "local distance " + std::to_string(dist.d) + " below delta";
        }
        rep.pass = rep.pass && sr.pass;
        rep.sets.push_back(std::move(sr));
    }
    for (std::uint8_t c : covered)
        if (!c) {
            rep.pass = false;
            break;
        }
    return rep;
}

MdsPartitionReport check_mds_partition(const LrcCode &code) {
    const Field &f = code.field;
    MdsPartitionReport rep;
    std::vector<std::uint32_t> count(code.length(), 0);
    for (const auto &set : code.repair_sets)
        for (std::uint32_t c : set) {
            if (c >= code.length()) {
                rep.detail = "repair-set coordinate out of range";
                return rep;
            }
            ++count[c];
        }
    for (std::uint32_t c : count)
        if (c != 1) {
            rep.detail = "repair sets do not partition the coordinates";
            return rep;
        }
    const std::size_t want_size = static_cast<std::size_t>(code.r) + code.delta - 1;
    for (std::size_t si = 0; si < code.repair_sets.size(); ++si) {
        const auto &set = code.repair_sets[si];
        if (set.size() != want_size) {
            rep.detail = "repair set " + std::to_string(si) + " does not have size r+delta-1";
            return rep;
        }
        Matrix local = take_columns(code.G, set);
        std::vector<std::size_t> piv;
        Matrix reduced = rref(f, local, &piv);
        if (piv.size() != code.r) {
            rep.detail = "repair set " + std::to_string(si) + " has rank " + std::to_string(piv.size()) +
                         ", expected exactly r";
            return rep;
        }
        reduced.rows = piv.size();
        reduced.a.resize(reduced.rows * reduced.cols);
        DistanceResult dist =
            min_distance_from_parity(f, null_space(f, reduced), static_cast<std::uint32_t>(set.size()) + 1, 1);
        if (!dist.exact || dist.d != code.delta) {
            rep.detail = "repair set " + std::to_string(si) + " has local distance " + std::to_string(dist.d) +
                         ", expected exactly delta";
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

OptimalityCertificate certify_optimal(const LrcCode &code, unsigned threads) {
    OptimalityCertificate cert;
    cert.bound = bounds::singleton_bound(code.length(), code.dimension(), code.r, code.delta);
    if (cert.bound < 1)
        throw std::invalid_argument("degenerate parameters: distance bound below 1");
    DistanceResult dist = min_distance(code.field, code.G, static_cast<std::uint32_t>(cert.bound) + 1, threads);
    cert.d = dist.d;
    cert.distance_exact = dist.exact;
    cert.optimal = dist.exact && static_cast<std::int64_t>(dist.d) == cert.bound;
    return cert;
}

} // namespace lrc

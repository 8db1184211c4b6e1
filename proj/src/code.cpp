#include "lrckit/code.hpp"

#include "lrckit/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrc {

void LrcParams::validate() const {
    if (delta < 2)
        throw std::invalid_argument("delta must be >= 2");
    if (v < 1 || v > r)
        throw std::invalid_argument("v must satisfy 1 <= v <= r");
    if (w < 1)
        throw std::invalid_argument("w must be >= 1");
    if (q < 2)
        throw std::invalid_argument("q must be a prime power >= 2");
}

std::string EvaluationPlan::describe() const {
    std::string s = "alphas={";
    for (std::size_t i = 0; i < alphas.size(); ++i)
        s += (i ? "," : "") + std::to_string(alphas[i]);
    s += "} sets=[";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        s += i ? ",{" : "{";
        for (std::size_t j = 0; j < sets[i].size(); ++j)
            s += (j ? "," : "") + std::to_string(sets[i][j]);
        s += "}";
    }
    return s + "]";
}

namespace {

void validate_plan(const Field &f, const LrcParams &params, const EvaluationPlan &plan) {
    if (plan.alphas.size() != params.r - params.v)
        throw std::invalid_argument("plan has " + std::to_string(plan.alphas.size()) + " alphas, expected r-v = " +
                                    std::to_string(params.r - params.v));
    if (plan.sets.size() != params.w)
        throw std::invalid_argument("plan has " + std::to_string(plan.sets.size()) + " sets, expected w = " +
                                    std::to_string(params.w));
    std::vector<std::uint8_t> is_alpha(f.order(), 0);
    for (Elem a : plan.alphas) {
        if (a >= f.order())
            throw std::invalid_argument("alpha out of field range");
        if (is_alpha[a])
            throw std::invalid_argument("duplicate alpha " + std::to_string(a));
        is_alpha[a] = 1;
    }
    for (const auto &set : plan.sets) {
        if (set.size() != params.set_size())
            throw std::invalid_argument("evaluation set size must be r+delta-1");
        std::vector<std::uint8_t> seen(f.order(), 0);
        for (Elem x : set) {
            if (x >= f.order())
                throw std::invalid_argument("evaluation point out of field range");
            if (seen[x])
                throw std::invalid_argument("duplicate evaluation point " + std::to_string(x));
            seen[x] = 1;
            if (is_alpha[x])
                throw std::invalid_argument("evaluation set contains alpha " + std::to_string(x));
        }
    }
}

// One run of Steps 1-3 for a single information vector.
std::vector<Elem> encode_with_plan(const Field &f, const LrcParams &params, const EvaluationPlan &plan,
                                   const std::vector<Elem> &info) {
    const std::uint32_t r = params.r, v = params.v, w = params.w;
    const std::size_t rv = r - v;
    std::vector<Polynomial> polys(w);
    std::vector<Elem> check_sums(rv, 0);

    for (std::uint32_t i = 0; i + 1 < w; ++i) {
        std::vector<std::pair<Elem, Elem>> pts(r);
        for (std::uint32_t t = 0; t < r; ++t)
            pts[t] = {plan.sets[i][t], info[static_cast<std::size_t>(i) * r + t]};
        polys[i] = interpolate(f, pts);
        for (std::size_t t = 0; t < rv; ++t) {
            Elem denom = 1;
            for (Elem theta : plan.sets[i])
                denom = f.mul(denom, f.sub(plan.alphas[t], theta));
            Elem a_it = f.div(poly_eval(f, polys[i], plan.alphas[t]), denom);
            check_sums[t] = f.add(check_sums[t], a_it);
        }
    }

    // Step 3: f_w matches the last v information symbols and forces every
    // auxiliary column sum to zero; v set points plus r-v alphas give r
    // distinct interpolation nodes.
    std::vector<std::pair<Elem, Elem>> pts;
    pts.reserve(r);
    for (std::uint32_t j = 0; j < v; ++j)
        pts.push_back({plan.sets[w - 1][j], info[static_cast<std::size_t>(w - 1) * r + j]});
    for (std::size_t t = 0; t < rv; ++t) {
        Elem denom = 1;
        for (Elem theta : plan.sets[w - 1])
            denom = f.mul(denom, f.sub(plan.alphas[t], theta));
        pts.push_back({plan.alphas[t], f.mul(f.neg(check_sums[t]), denom)});
    }
    polys[w - 1] = interpolate(f, pts);

    std::vector<Elem> word;
    word.reserve(params.n());
    for (std::uint32_t i = 0; i < w; ++i)
        for (Elem theta : plan.sets[i])
            word.push_back(poly_eval(f, polys[i], theta));
    return word;
}

std::vector<std::vector<std::uint32_t>> contiguous_blocks(std::size_t w, std::size_t block) {
    std::vector<std::vector<std::uint32_t>> sets(w);
    for (std::size_t i = 0; i < w; ++i) {
        sets[i].resize(block);
        std::iota(sets[i].begin(), sets[i].end(), static_cast<std::uint32_t>(i * block));
    }
    return sets;
}

} // namespace

EvaluationPlan plan_from_design(const Field &f, const LrcParams &params, const BlockFamily &design) {
    params.validate();
    validate(design);
    if (design.blocks.size() < params.w)
        throw std::invalid_argument("design has " + std::to_string(design.blocks.size()) + " blocks, need w = " +
                                    std::to_string(params.w));
    if (design.ground_size > f.order())
        throw std::invalid_argument("design ground set larger than the field");
    EvaluationPlan plan;
    plan.sets.reserve(params.w);
    std::vector<std::uint8_t> used(f.order(), 0);
    for (std::uint32_t i = 0; i < params.w; ++i) {
        const auto &b = design.blocks[i];
        if (b.size() != params.set_size())
            throw std::invalid_argument("design block size " + std::to_string(b.size()) +
                                        " != r+delta-1 = " + std::to_string(params.set_size()));
        plan.sets.emplace_back(b.begin(), b.end());
        for (std::uint32_t p : b)
            used[p] = 1;
    }
    for (Elem x = 0; x < f.order() && plan.alphas.size() < params.r - params.v; ++x)
        if (!used[x])
            plan.alphas.push_back(x);
    if (plan.alphas.size() != params.r - params.v)
        throw std::invalid_argument("field too small: no room for r-v alphas outside the evaluation sets");
    return plan;
}

EvaluationPlan identical_plan(const Field &f, const LrcParams &params) {
    params.validate();
    BlockFamily fam;
    fam.ground_size = static_cast<std::uint32_t>(params.set_size());
    if (fam.ground_size > f.order())
        throw std::invalid_argument("field too small for an evaluation set of size r+delta-1");
    std::vector<std::uint32_t> block(params.set_size());
    std::iota(block.begin(), block.end(), 0u);
    fam.blocks.assign(params.w, block);
    return plan_from_design(f, params, fam);
}

LrcCode construct(const Field &f, const LrcParams &params, const EvaluationPlan &plan) {
    params.validate();
    if (f.order() != params.q)
        throw std::invalid_argument("field order does not match params.q");
    validate_plan(f, params, plan);

    // The Step-3 interpolation nodes must give a nonsingular system; with a
    // valid plan they are r distinct points, but verify rather than assume.
    {
        Matrix vand(params.r, params.r);
        std::vector<Elem> nodes;
        for (std::uint32_t j = 0; j < params.v; ++j)
            nodes.push_back(plan.sets[params.w - 1][j]);
        for (Elem a : plan.alphas)
            nodes.push_back(a);
        for (std::uint32_t i = 0; i < params.r; ++i) {
            Elem p = 1;
            for (std::uint32_t j = 0; j < params.r; ++j) {
                vand.at(i, j) = p;
                p = f.mul(p, nodes[i]);
            }
        }
        if (rank(f, vand) != params.r)
            throw std::invalid_argument("singular Step-3 system for plan " + plan.describe());
    }

    const std::size_t k = params.k(), n = params.n();
    LrcCode code;
    code.field = f;
    code.r = params.r;
    code.delta = params.delta;
    code.v = params.v;
    code.w = params.w;
    code.plan = plan;
    code.G = Matrix(k, n);
    std::vector<Elem> info(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        info[i] = 1;
        std::vector<Elem> row = encode_with_plan(f, params, plan, info);
        info[i] = 0;
        std::copy(row.begin(), row.end(), code.G.a.begin() + static_cast<std::ptrdiff_t>(i * n));
    }
    if (rank(f, code.G) != k)
        throw std::runtime_error("constructed generator is rank deficient for plan " + plan.describe());
    code.H = null_space(f, code.G);
    code.repair_sets = contiguous_blocks(params.w, params.set_size());
    code.claimed_d = params.r - params.v + params.delta;
    return code;
}

std::vector<Elem> encode(const LrcCode &code, const std::vector<Elem> &info) {
    if (info.size() != code.dimension())
        throw std::invalid_argument("info length " + std::to_string(info.size()) + " != k = " +
                                    std::to_string(code.dimension()));
    const Field &f = code.field;
    std::vector<Elem> word(code.length(), 0);
    for (std::size_t i = 0; i < code.G.rows; ++i) {
        if (info[i] == 0)
            continue;
        for (std::size_t j = 0; j < code.G.cols; ++j)
            word[j] = f.add(word[j], f.mul(info[i], code.G.at(i, j)));
    }
    return word;
}

namespace {

void validate_pattern(const LrcCode &code, const ErasurePattern &pattern) {
    for (std::size_t i = 0; i < pattern.erased.size(); ++i) {
        if (pattern.erased[i] >= code.length())
            throw std::invalid_argument("erased index out of range");
        if (i > 0 && pattern.erased[i] <= pattern.erased[i - 1])
            throw std::invalid_argument("erasure indices must be strictly ascending");
    }
}

// Solves for the erased coordinates against a parity matrix whose columns
// cover `coords`; erased is given in coords-local indices.
RepairResult solve_erasures(const Field &f, const Matrix &parity, std::vector<Elem> word,
                            const std::vector<std::uint32_t> &erased_local) {
    RepairResult res;
    Matrix a(parity.rows, erased_local.size());
    std::vector<Elem> b(parity.rows, 0);
    std::vector<std::uint8_t> is_erased(parity.cols, 0);
    for (std::uint32_t e : erased_local)
        is_erased[e] = 1;
    for (std::size_t i = 0; i < parity.rows; ++i) {
        for (std::size_t j = 0; j < erased_local.size(); ++j)
            a.at(i, j) = parity.at(i, erased_local[j]);
        Elem acc = 0;
        for (std::size_t c = 0; c < parity.cols; ++c)
            if (!is_erased[c])
                acc = f.add(acc, f.mul(parity.at(i, c), word[c]));
        b[i] = f.neg(acc);
    }
    SolveResult sol = solve(f, a, b);
    if (sol.status == SolveStatus::Inconsistent) {
        res.reason = "surviving symbols are not consistent with any codeword";
        return res;
    }
    if (sol.status == SolveStatus::Underdetermined) {
        res.rank_deficiency = erased_local.size() - rank(f, a);
        res.reason = "erased columns are dependent (rank deficiency " + std::to_string(res.rank_deficiency) + ")";
        return res;
    }
    for (std::size_t j = 0; j < erased_local.size(); ++j)
        word[erased_local[j]] = sol.x[j];
    res.ok = true;
    res.word = std::move(word);
    return res;
}

} // namespace

RepairResult local_repair(const LrcCode &code, std::vector<Elem> word, const ErasurePattern &pattern) {
    if (word.size() != code.length())
        throw std::invalid_argument("word length mismatch");
    validate_pattern(code, pattern);
    const Field &f = code.field;
    RepairResult res;
    for (std::size_t si = 0; si < code.repair_sets.size(); ++si) {
        const auto &set = code.repair_sets[si];
        std::vector<std::uint32_t> local_erased;
        for (std::size_t j = 0; j < set.size(); ++j)
            if (std::binary_search(pattern.erased.begin(), pattern.erased.end(), set[j]))
                local_erased.push_back(static_cast<std::uint32_t>(j));
        if (local_erased.empty())
            continue;
        if (local_erased.size() > static_cast<std::size_t>(code.delta) - 1) {
            res.ok = false;
            res.reason = "repair set " + std::to_string(si) + " has " + std::to_string(local_erased.size()) +
                         " erasures >= delta; use global_decode";
            res.word.clear();
            return res;
        }
        Matrix local_gen = take_columns(code.G, set);
        Matrix local_parity = null_space(f, rref(f, local_gen)); // of the punctured code
        std::vector<Elem> local_word(set.size());
        for (std::size_t j = 0; j < set.size(); ++j)
            local_word[j] = word[set[j]];
        RepairResult blk = solve_erasures(f, local_parity, std::move(local_word), local_erased);
        if (!blk.ok) {
            blk.reason = "repair set " + std::to_string(si) + ": " + blk.reason;
            return blk;
        }
        for (std::size_t j = 0; j < set.size(); ++j)
            word[set[j]] = blk.word[j];
    }
    res.ok = true;
    res.word = std::move(word);
    return res;
}

RepairResult global_decode(const LrcCode &code, std::vector<Elem> word, const ErasurePattern &pattern) {
    if (word.size() != code.length())
        throw std::invalid_argument("word length mismatch");
    validate_pattern(code, pattern);
    return solve_erasures(code.field, code.H, std::move(word), pattern.erased);
}

std::vector<Elem> global_checksums(const LrcCode &code, const std::vector<Elem> &word, std::mt19937 &rng) {
    if (code.plan.empty())
        throw std::invalid_argument("code carries no construction plan");
    if (word.size() != code.length())
        throw std::invalid_argument("word length mismatch");
    const Field &f = code.field;
    const std::size_t rv = code.plan.alphas.size();
    std::vector<Elem> sums(rv, 0);
    for (std::uint32_t i = 0; i < code.w; ++i) {
        const auto &set = code.plan.sets[i];
        // pick r of the r+delta-1 symbols, recover f_i, then form its sums
        std::vector<std::size_t> idx(set.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<std::pair<Elem, Elem>> pts;
        for (std::uint32_t t = 0; t < code.r; ++t)
            pts.push_back({set[idx[t]], word[code.repair_sets[i][idx[t]]]});
        Polynomial fi = interpolate(f, pts);
        for (std::size_t t = 0; t < rv; ++t) {
            Elem denom = 1;
            for (Elem theta : set)
                denom = f.mul(denom, f.sub(code.plan.alphas[t], theta));
            sums[t] = f.add(sums[t], f.div(poly_eval(f, fi, code.plan.alphas[t]), denom));
        }
    }
    return sums;
}

namespace {

// Local parity of repair set `set` in canonical (I_{delta-1}, P) form.
Matrix canonical_local_parity(const Field &f, const LrcCode &code, const std::vector<std::uint32_t> &set,
                              std::size_t expected_rank) {
    Matrix local_gen = rref(f, take_columns(code.G, set));
    std::size_t rk = 0;
    for (std::size_t i = 0; i < local_gen.rows; ++i)
        for (std::size_t j = 0; j < local_gen.cols; ++j)
            if (local_gen.at(i, j) != 0) {
                rk = i + 1;
                break;
            }
    if (rk != expected_rank)
        throw std::invalid_argument("repair-set block has rank " + std::to_string(rk) + ", expected " +
                                    std::to_string(expected_rank));
    local_gen.rows = rk;
    local_gen.a.resize(rk * local_gen.cols);
    std::vector<std::size_t> piv;
    Matrix parity = rref(f, null_space(f, local_gen), &piv);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] != i)
            throw std::invalid_argument("repair-set block is not MDS: local parity has no canonical form");
    return parity;
}

Matrix invert_square(const Field &f, const Matrix &m) {
    Matrix aug(m.rows, 2 * m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix red = rref(f, std::move(aug), &piv);
    for (std::size_t i = 0; i < m.rows; ++i)
        if (i >= piv.size() || piv[i] != i)
            throw std::invalid_argument("matrix is singular");
    Matrix inv(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            inv.at(i, j) = red.at(i, m.cols + j);
    return inv;
}

// Extends the given independent dual rows to a full parity basis using
// null-space rows of G, in order.
Matrix complete_parity(const Field &f, const LrcCode &code, const std::vector<std::vector<Elem>> &structured) {
    const std::size_t n = code.length();
    const std::size_t want = n - code.dimension();
    Matrix p(structured.size(), n);
    for (std::size_t i = 0; i < structured.size(); ++i)
        std::copy(structured[i].begin(), structured[i].end(), p.a.begin() + static_cast<std::ptrdiff_t>(i * n));
    if (rank(f, p) != p.rows)
        throw std::invalid_argument("local parity rows are dependent; repair sets do not partition");
    for (std::size_t c = 0; c < code.H.rows && p.rows < want; ++c) {
        Matrix trial(p.rows + 1, n);
        trial.a.assign(p.a.begin(), p.a.end());
        trial.a.insert(trial.a.end(), code.H.a.begin() + static_cast<std::ptrdiff_t>(c * n),
                       code.H.a.begin() + static_cast<std::ptrdiff_t>((c + 1) * n));
        if (rank(f, trial) == trial.rows)
            p = std::move(trial);
    }
    if (p.rows != want)
        throw std::runtime_error("failed to complete the structured parity basis");
    return p;
}

void require_partition(const LrcCode &code) {
    std::vector<std::uint32_t> count(code.length(), 0);
    for (const auto &set : code.repair_sets)
        for (std::uint32_t c : set)
            ++count[c];
    for (std::uint32_t c : count)
        if (c != 1)
            throw std::invalid_argument("repair sets do not partition the coordinates");
}

} // namespace

LrcCode delta_reduce(const LrcCode &code) {
    if (code.delta <= 2)
        throw std::invalid_argument("delta_reduce requires delta > 2");
    require_partition(code);
    const Field &f = code.field;
    const std::size_t n = code.length(), k = code.dimension();
    const std::uint32_t r = code.r, delta = code.delta, w = code.w;
    const std::size_t bs = static_cast<std::size_t>(r) + delta - 1;
    const std::size_t rp1 = static_cast<std::size_t>(r) + 1;
    if (code.repair_sets.size() != w)
        throw std::invalid_argument("repair set count does not match w");

    // Canonical local parities, one per block.
    std::vector<Matrix> locals;
    locals.reserve(w);
    for (const auto &set : code.repair_sets) {
        if (set.size() != bs)
            throw std::invalid_argument("repair-set blocks must have size r+delta-1");
        locals.push_back(canonical_local_parity(f, code, set, r));
    }

    std::vector<std::vector<Elem>> structured;
    for (std::uint32_t i = 0; i < w; ++i)
        for (std::size_t row = 0; row < locals[i].rows; ++row) {
            std::vector<Elem> full(n, 0);
            for (std::size_t j = 0; j < bs; ++j)
                full[code.repair_sets[i][j]] = locals[i].at(row, j);
            structured.push_back(std::move(full));
        }
    Matrix parity = complete_parity(f, code, structured);
    const std::size_t bottom = parity.rows - static_cast<std::size_t>(w) * (delta - 1);

    // Per block: Q_{i,1} = L11 - L12 L22^{-1} L21 and the matching
    // transformation of the bottom rows, keeping the first r+1 columns.
    Matrix reduced(w + bottom, static_cast<std::size_t>(w) * rp1);
    for (std::uint32_t i = 0; i < w; ++i) {
        const Matrix &li = locals[i];
        Matrix l22(delta - 2, delta - 2), l21(delta - 2, rp1);
        for (std::size_t a = 0; a + 1 < delta - 1; ++a)
            for (std::size_t b = 0; b < bs; ++b) {
                if (b < rp1)
                    l21.at(a, b) = li.at(a + 1, b);
                else
                    l22.at(a, b - rp1) = li.at(a + 1, b);
            }
        Matrix l22inv;
        try {
            l22inv = invert_square(f, l22);
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("repair-set block " + std::to_string(i) +
                                        " is not MDS: lower-right local parity corner is singular");
        }
        Matrix corr = mat_mul(f, l22inv, l21); // (delta-2) x (r+1)
        for (std::size_t c = 0; c < rp1; ++c) {
            Elem acc = li.at(0, c);
            for (std::size_t t = 0; t + 1 < delta - 1; ++t)
                acc = f.sub(acc, f.mul(li.at(0, rp1 + t), corr.at(t, c)));
            if (acc == 0)
                throw std::invalid_argument("repair-set block " + std::to_string(i) +
                                            " is not MDS: reduced local row has a zero coordinate");
            reduced.at(i, static_cast<std::size_t>(i) * rp1 + c) = acc;
        }
        for (std::size_t bi = 0; bi < bottom; ++bi) {
            const std::size_t prow = static_cast<std::size_t>(w) * (delta - 1) + bi;
            for (std::size_t c = 0; c < rp1; ++c) {
                Elem acc = parity.at(prow, code.repair_sets[i][c]);
                for (std::size_t t = 0; t + 1 < delta - 1; ++t)
                    acc = f.sub(acc, f.mul(parity.at(prow, code.repair_sets[i][rp1 + t]), corr.at(t, c)));
                reduced.at(w + bi, static_cast<std::size_t>(i) * rp1 + c) = acc;
            }
        }
    }

    LrcCode out;
    out.field = f;
    out.r = r;
    out.delta = 2;
    out.v = code.v;
    out.w = w;
    out.G = null_space(f, reduced);
    if (out.G.rows != k)
        throw std::runtime_error("delta reduction changed the code dimension");
    out.H = null_space(f, out.G);
    out.repair_sets = contiguous_blocks(w, rp1);
    const std::uint32_t t = (code.claimed_d - 1) / delta;
    out.claimed_d = 2 * t + 1;
    return out;
}

Matrix m2_reduce(const LrcCode &code_r2) {
    require_partition(code_r2);
    const Field &f = code_r2.field;
    const std::size_t n = code_r2.length(), k = code_r2.dimension();
    const std::size_t w = code_r2.repair_sets.size();
    if (w == 0 || n <= k + w)
        throw std::invalid_argument("no global parity rows: nothing to reduce");
    const std::size_t rp1 = code_r2.repair_sets.front().size();
    if (rp1 < 2)
        throw std::invalid_argument("repair sets must have at least 2 coordinates");

    // All-ones local rows after column scaling; block rank must be r = rp1-1.
    std::vector<std::vector<Elem>> structured;
    std::vector<Elem> scale(n, 0);
    for (const auto &set : code_r2.repair_sets) {
        if (set.size() != rp1)
            throw std::invalid_argument("repair sets must share one size");
        Matrix parity = canonical_local_parity(f, code_r2, set, rp1 - 1);
        std::vector<Elem> full(n, 0);
        for (std::size_t j = 0; j < rp1; ++j) {
            if (parity.at(0, j) == 0)
                throw std::invalid_argument("local parity row has a zero coordinate; shape mismatch");
            scale[set[j]] = parity.at(0, j);
            full[set[j]] = parity.at(0, j);
        }
        structured.push_back(std::move(full));
    }
    Matrix parity = complete_parity(f, code_r2, structured);

    // In the scaled code the local rows are all-ones and a dual row h turns
    // into h / scale, columnwise.
    const std::size_t bottom = parity.rows - w;
    Matrix m2(bottom, w * (rp1 - 1));
    for (std::size_t bi = 0; bi < bottom; ++bi)
        for (std::size_t i = 0; i < w; ++i) {
            const auto &set = code_r2.repair_sets[i];
            Elem base = f.div(parity.at(w + bi, set[0]), scale[set[0]]);
            for (std::size_t j = 1; j < rp1; ++j) {
                Elem val = f.div(parity.at(w + bi, set[j]), scale[set[j]]);
                m2.at(bi, i * (rp1 - 1) + j - 1) = f.sub(val, base);
            }
        }
    return m2;
}

LrcCode puncture_reduce(const LrcCode &code, std::uint32_t certified_d) {
    require_partition(code);
    const Field &f = code.field;
    const std::size_t k = code.dimension();
    const std::uint32_t r = code.r, delta = code.delta;
    const std::size_t bs = static_cast<std::size_t>(r) + delta - 1;
    if (k <= r)
        throw std::invalid_argument("puncture_reduce requires k > r");
    if (certified_d <= r + delta)
        throw std::invalid_argument("puncture_reduce requires d > r+delta");
    // optimality w.r.t. the Singleton-type bound is a hypothesis of the reduction
    const std::uint64_t ceil_kr = (k + r - 1) / r;
    const std::int64_t bound = static_cast<std::int64_t>(code.length()) - static_cast<std::int64_t>(k) + 1 -
                               static_cast<std::int64_t>((ceil_kr - 1) * (delta - 1));
    if (static_cast<std::int64_t>(certified_d) != bound)
        throw std::invalid_argument("puncture_reduce requires an optimal code (d = " + std::to_string(certified_d) +
                                    ", bound = " + std::to_string(bound) + ")");
    const std::uint32_t eps = static_cast<std::uint32_t>((certified_d - 2) / bs); // ceil((d-1)/bs) - 1
    const std::size_t drop = static_cast<std::size_t>(eps) * bs;

    std::vector<std::uint32_t> kept_coords;
    for (std::size_t i = eps; i < code.repair_sets.size(); ++i)
        for (std::uint32_t c : code.repair_sets[i])
            kept_coords.push_back(c);
    std::sort(kept_coords.begin(), kept_coords.end());

    LrcCode out;
    out.field = f;
    out.r = r;
    out.delta = delta;
    out.v = code.v;
    out.w = static_cast<std::uint32_t>(code.repair_sets.size() - eps);
    out.G = take_columns(code.G, kept_coords);
    if (rank(f, out.G) != k)
        throw std::runtime_error("punctured generator lost rank");
    out.H = null_space(f, out.G);
    out.repair_sets = contiguous_blocks(out.w, bs);
    out.claimed_d = certified_d - static_cast<std::uint32_t>(drop);
    return out;
}

LrcCode replicated_rs_fixture(const Field &f, std::uint32_t points, std::uint32_t copies) {
    if (copies < 2)
        throw std::invalid_argument("fixture needs copies >= 2");
    if (points < 3 || points >= f.order())
        throw std::invalid_argument("fixture needs q > points >= 3");
    const std::size_t n = static_cast<std::size_t>(points) * copies;
    LrcCode code;
    code.field = f;
    code.r = 1;
    code.delta = copies;
    code.v = 0; // k = (w-1)r + v does not hold for this family
    code.w = points;
    code.G = Matrix(2, n);
    for (std::uint32_t j = 0; j < points; ++j)
        for (std::uint32_t c = 0; c < copies; ++c) {
            code.G.at(0, static_cast<std::size_t>(j) * copies + c) = 1;
            code.G.at(1, static_cast<std::size_t>(j) * copies + c) = j;
        }
    code.H = null_space(f, code.G);
    code.repair_sets = contiguous_blocks(points, copies);
    code.claimed_d = copies * (points - 1);
    return code;
}

} // namespace lrc

#include "lrckit/matrix.hpp"

#include <stdexcept>

namespace lrc {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix transpose(const Matrix &m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

Matrix mat_mul(const Field &f, const Matrix &x, const Matrix &y) {
    if (x.cols != y.rows)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t t = 0; t < x.cols; ++t) {
            const Elem xv = x.at(i, t);
            if (xv == 0)
                continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(xv, y.at(t, j)));
        }
    return r;
}

Matrix rref(const Field &f, Matrix m, std::vector<std::size_t> *pivots) {
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols && rk < m.rows; ++c) {
        std::size_t piv = rk;
        while (piv < m.rows && m.at(piv, c) == 0)
            ++piv;
        if (piv == m.rows)
            continue;
        if (piv != rk)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(rk, j));
        const Elem iv = f.inv(m.at(rk, c));
        for (std::size_t j = c; j < m.cols; ++j)
            m.at(rk, j) = f.mul(m.at(rk, j), iv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rk)
                continue;
            const Elem factor = m.at(i, c);
            if (factor == 0)
                continue;
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rk, j)));
        }
        if (pivots)
            pivots->push_back(c);
        ++rk;
    }
    return m;
}

std::size_t rank(const Field &f, Matrix m) {
    std::vector<std::size_t> piv;
    rref(f, std::move(m), &piv);
    return piv.size();
}

Matrix null_space(const Field &f, const Matrix &m) {
    std::vector<std::size_t> piv;
    Matrix r = rref(f, m, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (std::size_t c : piv)
        is_piv[c] = true;
    Matrix basis(m.cols - piv.size(), m.cols);
    std::size_t bi = 0;
    for (std::size_t fc = 0; fc < m.cols; ++fc) {
        if (is_piv[fc])
            continue;
        basis.at(bi, fc) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            basis.at(bi, piv[i]) = f.neg(r.at(i, fc));
        ++bi;
    }
    return basis;
}

Matrix take_columns(const Matrix &m, const std::vector<std::uint32_t> &idx) {
    Matrix r(m.rows, idx.size());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= m.cols)
                throw std::invalid_argument("column index out of range");
            r.at(i, j) = m.at(i, idx[j]);
        }
    return r;
}

SolveResult solve(const Field &f, const Matrix &a, const std::vector<Elem> &b) {
    if (a.rows != b.size())
        throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(f, std::move(aug), &piv);
    SolveResult res;
    if (!piv.empty() && piv.back() == a.cols) {
        res.status = SolveStatus::Inconsistent;
        return res;
    }
    res.x.assign(a.cols, 0);
    for (std::size_t i = 0; i < piv.size(); ++i)
        res.x[piv[i]] = r.at(i, a.cols);
    res.status = (piv.size() == a.cols) ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return res;
}

} // namespace lrc

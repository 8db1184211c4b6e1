#ifndef LRCKIT_POLYNOMIAL_HPP
#define LRCKIT_POLYNOMIAL_HPP

#include "lrckit/field.hpp"

#include <utility>
#include <vector>

namespace lrc {

/// Univariate polynomial; coefficients low order first, no trailing zeros.
/// An empty coefficient vector is the zero polynomial.
struct Polynomial {
    std::vector<Elem> coeffs;

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const Polynomial &o) const = default;
};

Polynomial poly_normalize(std::vector<Elem> coeffs);
Polynomial poly_add(const Field &f, const Polynomial &x, const Polynomial &y);
Polynomial poly_mul(const Field &f, const Polynomial &x, const Polynomial &y);
Polynomial poly_scale(const Field &f, const Polynomial &x, Elem c);
/// prod (X - root) over the given roots.
Polynomial poly_from_roots(const Field &f, const std::vector<Elem> &roots);
Elem poly_eval(const Field &f, const Polynomial &x, Elem at);

/// Lagrange interpolation: the unique polynomial of degree < points.size()
/// through the given (x, y) pairs. The x values must be pairwise distinct.
Polynomial interpolate(const Field &f, const std::vector<std::pair<Elem, Elem>> &points);

} // namespace lrc

#endif

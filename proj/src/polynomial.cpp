#include "lrckit/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace lrc {

Polynomial poly_normalize(std::vector<Elem> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
    return Polynomial{std::move(coeffs)};
}

Polynomial poly_add(const Field &f, const Polynomial &x, const Polynomial &y) {
    std::vector<Elem> r(std::max(x.coeffs.size(), y.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem a = i < x.coeffs.size() ? x.coeffs[i] : 0;
        Elem b = i < y.coeffs.size() ? y.coeffs[i] : 0;
        r[i] = f.add(a, b);
    }
    return poly_normalize(std::move(r));
}

Polynomial poly_mul(const Field &f, const Polynomial &x, const Polynomial &y) {
    if (x.is_zero() || y.is_zero())
        return {};
    std::vector<Elem> r(x.coeffs.size() + y.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        for (std::size_t j = 0; j < y.coeffs.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(x.coeffs[i], y.coeffs[j]));
    return poly_normalize(std::move(r));
}

Polynomial poly_scale(const Field &f, const Polynomial &x, Elem c) {
    if (c == 0)
        return {};
    std::vector<Elem> r(x.coeffs.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.mul(x.coeffs[i], c);
    return Polynomial{std::move(r)};
}

Polynomial poly_from_roots(const Field &f, const std::vector<Elem> &roots) {
    Polynomial r{{1}};
    for (Elem root : roots)
        r = poly_mul(f, r, Polynomial{{f.neg(root), 1}});
    return r;
}

Elem poly_eval(const Field &f, const Polynomial &x, Elem at) {
    Elem r = 0;
    for (std::size_t i = x.coeffs.size(); i-- > 0;)
        r = f.add(f.mul(r, at), x.coeffs[i]);
    return r;
}

Polynomial interpolate(const Field &f, const std::vector<std::pair<Elem, Elem>> &points) {
    if (points.empty())
        throw std::invalid_argument("interpolate: no points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate x value " + std::to_string(points[i].first));

    Polynomial acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        // L_i = prod_{j != i} (X - x_j) / (x_i - x_j), scaled by y_i
        if (points[i].second == 0)
            continue;
        Polynomial num{{1}};
        Elem den = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            num = poly_mul(f, num, Polynomial{{f.neg(points[j].first), 1}});
            den = f.mul(den, f.sub(points[i].first, points[j].first));
        }
        acc = poly_add(f, acc, poly_scale(f, num, f.div(points[i].second, den)));
    }
    return acc;
}

} // namespace lrc

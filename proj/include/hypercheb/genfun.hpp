#ifndef HYPERCHEB_GENFUN_HPP
#define HYPERCHEB_GENFUN_HPP

#include <vector>

#include "hypercheb/chebyshev.hpp"
#include "hypercheb/sparse_poly.hpp"

namespace hypercheb::cheb {

/// Ordinary generating function of one stream of the m = 3 system, stored
/// as numerator/denominator polynomials in z whose z^j coefficients are
/// exact integer polynomials in the constrained variables (x, x*, x**)
/// (serialised as x, xstar, xstarstar).  The denominator has constant
/// term 1, so series expansion by long division is well defined.
struct RationalGF {
    std::vector<SparsePoly> numerator;
    std::vector<SparsePoly> denominator;
};

inline const std::vector<std::string>& gf_vars() {
    static const std::vector<std::string> v = {"x", "xstar", "xstarstar"};
    return v;
}

/// Closed-form generating function for stream 0 (main), 1 or 2.  Printed
/// closed forms exist for m = 3 only; all three streams share the cubic
/// denominator 1 - 3x z + 3x* z^2 - z^3.
inline RationalGF genfun(int stream) {
    if (stream < 0 || stream > 2)
        throw std::invalid_argument("genfun: stream must be 0, 1 or 2");
    const auto& v = gf_vars();
    const SparsePoly one = SparsePoly::constant(v, 1);
    const SparsePoly x = SparsePoly::variable(v, 0);
    const SparsePoly xs = SparsePoly::variable(v, 1);
    const SparsePoly xss = SparsePoly::variable(v, 2);

    RationalGF gf;
    gf.denominator = {one, BigInt(-3) * x, BigInt(3) * xs, SparsePoly::constant(v, -1)};
    switch (stream) {
        case 0:
            gf.numerator = {one, BigInt(-2) * x, xs};
            break;
        case 1:
            gf.numerator = {x, -(BigInt(3) * (x * x) - xs), xss};
            break;
        default:
            gf.numerator = {x, -(BigInt(3) * (x * x) - xs), BigInt(3) * (x * xs) - xss - one};
            break;
    }
    return gf;
}

/// First `nterms` series coefficients by exact long division:
/// c_n = N_n - sum_{j>=1} D_j c_{n-j}.
inline std::vector<SparsePoly> gf_series_symbolic(const RationalGF& gf, int nterms) {
    if (gf.denominator.empty() || !(gf.denominator[0] == SparsePoly::constant(gf.denominator[0].vars(), 1)))
        throw std::domain_error("gf_series_symbolic: denominator constant term must be 1");
    const auto& vars = gf.denominator[0].vars();
    std::vector<SparsePoly> c;
    c.reserve(static_cast<size_t>(nterms));
    for (int n = 0; n < nterms; ++n) {
        SparsePoly cn = n < static_cast<int>(gf.numerator.size()) ? gf.numerator[static_cast<size_t>(n)]
                                                                  : SparsePoly(vars);
        for (int j = 1; j < static_cast<int>(gf.denominator.size()) && j <= n; ++j)
            cn -= gf.denominator[static_cast<size_t>(j)] * c[static_cast<size_t>(n - j)];
        c.push_back(std::move(cn));
    }
    return c;
}

/// Numeric long division after substituting values for (x, x*, x**).
inline std::vector<Complex> gf_series_numeric(const RationalGF& gf, Complex x, Complex xstar,
                                              Complex xstarstar, int nterms) {
    const std::vector<Complex> point = {x, xstar, xstarstar};
    std::vector<Complex> num(gf.numerator.size()), den(gf.denominator.size());
    for (size_t i = 0; i < num.size(); ++i) num[i] = gf.numerator[i].eval(point);
    for (size_t i = 0; i < den.size(); ++i) den[i] = gf.denominator[i].eval(point);
    if (den.empty() || std::abs(den[0] - Complex(1.0, 0.0)) > 1e-12)
        throw std::domain_error("gf_series_numeric: denominator constant term must be 1");
    std::vector<Complex> c(static_cast<size_t>(nterms), Complex(0.0, 0.0));
    for (int n = 0; n < nterms; ++n) {
        Complex cn = n < static_cast<int>(num.size()) ? num[static_cast<size_t>(n)] : Complex(0.0, 0.0);
        for (int j = 1; j < static_cast<int>(den.size()) && j <= n; ++j)
            cn -= den[static_cast<size_t>(j)] * c[static_cast<size_t>(n - j)];
        c[static_cast<size_t>(n)] = cn;
    }
    return c;
}

/// Numerator/denominator value at a numeric z (used to confirm the
/// denominator vanishes at the reciprocal characteristic roots).
inline Complex gf_poly_value(const std::vector<SparsePoly>& coeffs, Complex x, Complex xstar,
                             Complex xstarstar, Complex z) {
    const std::vector<Complex> point = {x, xstar, xstarstar};
    Complex acc(0.0, 0.0);
    for (size_t j = coeffs.size(); j-- > 0;) acc = acc * z + coeffs[j].eval(point);
    return acc;
}

}  // namespace hypercheb::cheb

#endif  // HYPERCHEB_GENFUN_HPP

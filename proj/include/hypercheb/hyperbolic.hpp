#ifndef HYPERCHEB_HYPERBOLIC_HPP
#define HYPERCHEB_HYPERBOLIC_HPP

#include <cassert>
#include <vector>

#include "hypercheb/common.hpp"
#include "hypercheb/roots_of_unity.hpp"

namespace hypercheb::hyperbolic {

/*
 * Hyperbolic functions of order m: the Z_m graded components of exp under
 * the rotation z -> w z, w = exp(2*pi*i/m),
 *
 *     h_k(z) = (1/m) sum_{j in Z_m} w^{-kj} exp(w^j z)
 *            = sum_{s >= 0} z^{ms+k} / (ms+k)!
 *
 * For m = 2 these are cosh (k=0) and sinh (k=1).  The exponential average
 * is the primary evaluation route; for |z| < 1e-2 the series is used
 * instead, where the average loses digits to cancellation for k > 0.
 */

namespace detail {

inline void check_mk(int m, int k, const char* who) {
    if (m < 2) throw std::invalid_argument(std::string(who) + ": order must be >= 2");
    if (k < 0 || k >= m) throw std::invalid_argument(std::string(who) + ": grade out of range");
}

// Direct series summation; converges fast for small |z|.
inline Complex h_series_small(int m, int k, Complex z) {
    Complex term = pow_int(z, k);
    for (int j = 2; j <= k; ++j) term /= static_cast<double>(j);
    Complex acc = term;
    const Complex zm = pow_int(z, m);
    double base = k;
    for (int s = 0; s < 64; ++s) {
        term *= zm;
        for (int j = 1; j <= m; ++j) term /= (base + j);
        base += m;
        acc += term;
        if (std::abs(term) <= 1e-18 * std::max(1.0, std::abs(acc))) break;
    }
    return acc;
}

// All m exponentials exp(w^j z); throws instead of overflowing.
inline std::vector<Complex> exp_orbit(int m, Complex z, const spectral::RootOfUnityTable& w) {
    std::vector<Complex> e(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Complex arg = w.power(j) * z;
        if (arg.real() > kExpArgLimit)
            throw std::range_error("hyperbolic: exp argument out of double range");
        e[static_cast<size_t>(j)] = std::exp(arg);
    }
    return e;
}

inline constexpr double kSeriesSwitch = 1e-2;

}  // namespace detail

/// The vector (h_0(alpha), ..., h_{m-1}(alpha)); simultaneously a point of
/// the volume-one surface and the first row of the circulant built from it.
struct HyperbolicPoint {
    int order = 0;
    Complex alpha;
    std::vector<Complex> h;
};

/// h_k(z) for order m.  Throws std::range_error when some exp(w^j z)
/// overflows double precision.
inline Complex eval_h(int m, int k, Complex z) {
    detail::check_mk(m, k, "eval_h");
    if (std::abs(z) < detail::kSeriesSwitch) return detail::h_series_small(m, k, z);
    const spectral::RootOfUnityTable w(m);
    const std::vector<Complex> e = detail::exp_orbit(m, z, w);
    Complex acc(0.0, 0.0);
    for (int j = 0; j < m; ++j)
        acc += w.power(-static_cast<long long>(k) * j) * e[static_cast<size_t>(j)];
    return acc / static_cast<double>(m);
}

/// All m components at once (shares the m exponentials).
inline HyperbolicPoint eval_point(int m, Complex alpha) {
    detail::check_mk(m, 0, "eval_point");
    HyperbolicPoint p{m, alpha, std::vector<Complex>(static_cast<size_t>(m))};
    if (std::abs(alpha) < detail::kSeriesSwitch) {
        for (int k = 0; k < m; ++k)
            p.h[static_cast<size_t>(k)] = detail::h_series_small(m, k, alpha);
    } else {
        const spectral::RootOfUnityTable w(m);
        const std::vector<Complex> e = detail::exp_orbit(m, alpha, w);
        for (int k = 0; k < m; ++k) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < m; ++j)
                acc += w.power(-static_cast<long long>(k) * j) * e[static_cast<size_t>(j)];
            p.h[static_cast<size_t>(k)] = acc / static_cast<double>(m);
        }
    }
#ifndef NDEBUG
    // Partition of exp: sum_k h_k(alpha) = exp(alpha).
    if (alpha.real() <= kExpArgLimit) {
        Complex sum(0.0, 0.0);
        for (const Complex& v : p.h) sum += v;
        assert(scaled_diff(sum, std::exp(alpha)) < 1e-9);
    }
#endif
    return p;
}

/// Residual of the addition theorem
/// h_k(a+b) = sum_i h_i(a) h_{(k-i) mod m}(b).
inline double convolution_check(int m, Complex alpha, Complex beta, int k) {
    detail::check_mk(m, k, "convolution_check");
    const HyperbolicPoint pa = eval_point(m, alpha);
    const HyperbolicPoint pb = eval_point(m, beta);
    Complex rhs(0.0, 0.0);
    for (int i = 0; i < m; ++i)
        rhs += pa.h[static_cast<size_t>(i)] * pb.h[static_cast<size_t>(mod_floor(k - i, m))];
    return std::abs(eval_h(m, k, alpha + beta) - rhs);
}

/// Residual of sum_{k in Z_m} h_0(alpha + w^k beta) = m h_0(alpha) h_0(beta).
inline double product_identity_check(int m, Complex alpha, Complex beta) {
    detail::check_mk(m, 0, "product_identity_check");
    const spectral::RootOfUnityTable w(m);
    Complex lhs(0.0, 0.0);
    for (int k = 0; k < m; ++k) lhs += eval_h(m, 0, alpha + w.power(k) * beta);
    const Complex rhs = static_cast<double>(m) * eval_h(m, 0, alpha) * eval_h(m, 0, beta);
    return std::abs(lhs - rhs);
}

}  // namespace hypercheb::hyperbolic

#endif  // HYPERCHEB_HYPERBOLIC_HPP

#ifndef HYPERCHEB_COMMON_HPP
#define HYPERCHEB_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace hypercheb {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Largest argument for which std::exp stays finite in double precision.
inline constexpr double kExpArgLimit = 709.0;

/// Residual between two values, absolute below magnitude 1 and relative
/// above it: |a - b| / max(1, |a|, |b|).  All identity checks in the
/// library report this quantity so that tolerances stay meaningful when
/// the compared values grow like e^{n|alpha|}.
inline double scaled_diff(Complex a, Complex b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

inline double scaled_diff(double a, double b) {
    return scaled_diff(Complex(a, 0.0), Complex(b, 0.0));
}

/// Integer power of a complex base by square-and-multiply.  Exact integer
/// exponent semantics (no logarithm branch involved); n may be negative
/// when base is nonzero.
inline Complex pow_int(Complex base, long long n) {
    if (n < 0) {
        if (base == Complex(0.0, 0.0))
            throw std::domain_error("pow_int: negative power of zero");
        base = Complex(1.0, 0.0) / base;
        n = -n;
    }
    Complex acc(1.0, 0.0);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

/// Nonnegative residue of a modulo m.
inline int mod_floor(long long a, int m) {
    const long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace hypercheb

#endif  // HYPERCHEB_COMMON_HPP

#ifndef HYPERCHEB_COMPANION_HPP
#define HYPERCHEB_COMPANION_HPP

#include <map>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypercheb/common.hpp"
#include "hypercheb/hyperbolic.hpp"

namespace hypercheb::companion {

using Rational = boost::multiprecision::cpp_rational;

/*
 * Companion matrices for order-m linear recurrences
 * F_{n+m} = sum_{k in Z_m} alpha_k F_{n+k}.  Two coefficient modes: exact
 * rationals (closed-form checks, Cayley-Hamilton) and complex doubles (the
 * Chebyshev generators).  State vectors are ordered newest-first,
 * (F_{n+m-1}, ..., F_n).
 */

template <class T>
struct RecurrenceSpec {
    std::vector<T> alphas;  // alpha_0 .. alpha_{m-1}
    std::vector<T> seeds;   // F_0 .. F_{m-1}

    int order() const { return static_cast<int>(alphas.size()); }
};

template <class T>
class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, T{}) {
        if (n < 1) throw std::invalid_argument("SquareMatrix: order must be >= 1");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T{1};
        return m;
    }

    int order() const { return n_; }
    T& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("SquareMatrix: dimension mismatch");
        SquareMatrix out(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const T& v = x.at(i, k);
                if (v == T{}) continue;
                for (int j = 0; j < x.n_; ++j) out.at(i, j) += v * y.at(k, j);
            }
        return out;
    }

    friend SquareMatrix operator-(SquareMatrix x, const SquareMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("SquareMatrix: dimension mismatch");
        for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }

    bool operator==(const SquareMatrix& y) const { return n_ == y.n_ && a_ == y.a_; }

    T trace() const {
        T t{};
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

private:
    int n_;
    std::vector<T> a_;
};

/// Top row (alpha_{m-1}, ..., alpha_0), ones on the subdiagonal.
template <class T>
SquareMatrix<T> build_companion(const RecurrenceSpec<T>& spec) {
    const int m = spec.order();
    if (m < 1) throw std::invalid_argument("build_companion: order must be >= 1");
    SquareMatrix<T> a(m);
    for (int j = 0; j < m; ++j) a.at(0, j) = spec.alphas[static_cast<size_t>(m - 1 - j)];
    for (int i = 1; i < m; ++i) a.at(i, i - 1) = T{1};
    return a;
}

/// One recurrence step on a newest-first window.
template <class T>
std::vector<T> step(const RecurrenceSpec<T>& spec, std::span<const T> state) {
    const int m = spec.order();
    if (static_cast<int>(state.size()) != m)
        throw std::invalid_argument("step: state length mismatch");
    T next{};
    for (int k = 0; k < m; ++k)
        next += spec.alphas[static_cast<size_t>(k)] * state[static_cast<size_t>(m - 1 - k)];
    std::vector<T> out;
    out.reserve(static_cast<size_t>(m));
    out.push_back(std::move(next));
    for (int i = 0; i + 1 < m; ++i) out.push_back(state[static_cast<size_t>(i)]);
    return out;
}

/// A^n by square-and-multiply; exact for rational coefficients.
template <class T>
SquareMatrix<T> power(SquareMatrix<T> base, long long n) {
    if (n < 0) throw std::invalid_argument("power: n must be >= 0");
    SquareMatrix<T> acc = SquareMatrix<T>::identity(base.order());
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

/// F_0 .. F_{n_max} generated by the recurrence itself.
template <class T>
std::vector<T> orbit(const RecurrenceSpec<T>& spec, int n_max) {
    const int m = spec.order();
    if (static_cast<int>(spec.seeds.size()) != m)
        throw std::invalid_argument("orbit: seed length mismatch");
    std::vector<T> f = spec.seeds;
    while (static_cast<int>(f.size()) <= n_max) {
        T next{};
        const size_t n = f.size();
        for (int k = 0; k < m; ++k)
            next += spec.alphas[static_cast<size_t>(k)] * f[n - static_cast<size_t>(m) + static_cast<size_t>(k)];
        f.push_back(std::move(next));
    }
    f.resize(static_cast<size_t>(n_max) + 1);
    return f;
}

/// A^m - sum_k alpha_k A^k; identically zero by Cayley-Hamilton.
template <class T>
SquareMatrix<T> cayley_hamilton_defect(const RecurrenceSpec<T>& spec) {
    const SquareMatrix<T> a = build_companion(spec);
    SquareMatrix<T> defect = power(a, spec.order());
    SquareMatrix<T> ak = SquareMatrix<T>::identity(a.order());
    for (int k = 0; k < spec.order(); ++k) {
        SquareMatrix<T> scaled = ak;
        for (int i = 0; i < a.order(); ++i)
            for (int j = 0; j < a.order(); ++j)
                scaled.at(i, j) = spec.alphas[static_cast<size_t>(k)] * ak.at(i, j);
        defect = defect - scaled;
        ak = ak * a;
    }
    return defect;
}

inline double matrix_max_abs(const SquareMatrix<Complex>& m) {
    double v = 0.0;
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) v = std::max(v, std::abs(m.at(i, j)));
    return v;
}

inline bool matrix_is_zero(const SquareMatrix<Rational>& m) {
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// closed-form power check
// ---------------------------------------------------------------------------

/// Result of comparing A^n against the printed closed-form matrices built
/// from the recurrence sequence.  `shift` is the uniform index offset d
/// such that the printed form at n - d reproduces A^n for every n checked
/// (the printed forms overshoot by one); `matched` is false when no uniform
/// shift in [-2, 2] works.
struct ClosedFormReport {
    int order = 0;
    bool matched = false;
    int shift = 0;
    int n_checked = 0;
};

namespace detail {

// F over all of [-3, n_max+2], via the recurrence forward and its inversion
// backward (needs alpha_0 != 0).
inline std::map<long long, Rational> extended_orbit(const RecurrenceSpec<Rational>& spec,
                                                    int n_max) {
    const int m = spec.order();
    if (spec.alphas[0] == 0)
        throw std::domain_error("closed_form_check: lowest coefficient must be nonzero");
    std::map<long long, Rational> f;
    for (int i = 0; i < m; ++i) f[i] = spec.seeds[static_cast<size_t>(i)];
    for (long long n = m; n <= n_max + 2; ++n) {
        Rational next = 0;
        for (int k = 0; k < m; ++k) next += spec.alphas[static_cast<size_t>(k)] * f[n - m + k];
        f[n] = next;
    }
    for (long long n = -1; n >= -3; --n) {
        // F_{n+m} = sum alpha_k F_{n+k}  =>  F_n = (F_{n+m} - sum_{k>=1} ...) / alpha_0
        Rational rest = f[n + m];
        for (int k = 1; k < m; ++k) rest -= spec.alphas[static_cast<size_t>(k)] * f[n + k];
        f[n] = rest / spec.alphas[0];
    }
    return f;
}

inline SquareMatrix<Rational> printed_form_m2(const std::map<long long, Rational>& f, Rational q,
                                              long long n) {
    SquareMatrix<Rational> m(2);
    m.at(0, 0) = f.at(n + 2);
    m.at(0, 1) = -q * f.at(n + 1);
    m.at(1, 0) = f.at(n + 1);
    m.at(1, 1) = -q * f.at(n);
    return m;
}

inline SquareMatrix<Rational> printed_form_m3(const std::map<long long, Rational>& f, Rational q,
                                              Rational r, long long n) {
    SquareMatrix<Rational> m(3);
    m.at(0, 0) = f.at(n + 2);
    m.at(0, 1) = q * f.at(n + 1) + r * f.at(n);
    m.at(0, 2) = r * f.at(n + 1);
    m.at(1, 0) = f.at(n + 1);
    m.at(1, 1) = q * f.at(n) + r * f.at(n - 1);
    m.at(1, 2) = r * f.at(n);
    m.at(2, 0) = f.at(n);
    m.at(2, 1) = q * f.at(n - 1) + r * f.at(n - 2);
    m.at(2, 2) = r * f.at(n - 1);
    return m;
}

}  // namespace detail

/// Exact comparison of matrix powers against the printed closed forms for
/// m = 2 (seeds 0, 1) and m = 3 (seeds 0, 1, 1).  The report states the
/// index shift that reconciles them instead of trusting the printed
/// indices; shifts in [-2, 2] are tried in order of |d|.
inline ClosedFormReport closed_form_check(const RecurrenceSpec<Rational>& spec, int n_max) {
    const int m = spec.order();
    if (m != 2 && m != 3)
        throw std::invalid_argument("closed_form_check: printed forms exist for m = 2 and m = 3");
    if (n_max < 2) throw std::invalid_argument("closed_form_check: n_max must be >= 2");
    const std::vector<Rational> want_seeds =
        (m == 2) ? std::vector<Rational>{0, 1} : std::vector<Rational>{0, 1, 1};
    if (spec.seeds != want_seeds)
        throw std::invalid_argument("closed_form_check: seeds must match the printed forms");

    const auto f = detail::extended_orbit(spec, n_max);
    // m=2 top row is (P, -Q): Q = -alpha_0.  m=3 top row is (P, Q, R).
    const Rational q = (m == 2) ? Rational(-spec.alphas[0]) : spec.alphas[1];
    const Rational r = (m == 3) ? spec.alphas[0] : Rational(0);

    const SquareMatrix<Rational> a = build_companion(spec);
    std::vector<SquareMatrix<Rational>> powers;
    powers.push_back(SquareMatrix<Rational>::identity(m));
    for (int n = 1; n <= n_max; ++n) powers.push_back(powers.back() * a);

    ClosedFormReport rep;
    rep.order = m;
    rep.n_checked = n_max;
    for (const int d : {0, 1, -1, 2, -2}) {
        bool ok = true;
        for (int n = 0; n <= n_max && ok; ++n) {
            const long long j = n - d;
            const SquareMatrix<Rational> printed =
                (m == 2) ? detail::printed_form_m2(f, q, j) : detail::printed_form_m3(f, q, r, j);
            ok = (printed == powers[static_cast<size_t>(n)]);
        }
        if (ok) {
            rep.matched = true;
            rep.shift = d;
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Chebyshev generators
// ---------------------------------------------------------------------------

/// The recurrence whose characteristic roots are exp(w^k alpha), seeded by
/// the V-type power sums; the orbit divided by m reproduces h_0(n alpha).
/// For m = 2 this is F_{n+2} = 2x F_{n+1} - F_n with x = cosh(alpha), the
/// classical first-kind pattern.
inline RecurrenceSpec<Complex> chebyshev_generator(int m, Complex alpha) {
    if (m != 2 && m != 3)
        throw std::invalid_argument("chebyshev_generator: supported orders are 2 and 3");
    RecurrenceSpec<Complex> spec;
    const Complex x = hyperbolic::eval_h(m, 0, alpha);
    if (m == 2) {
        spec.alphas = {Complex(-1.0, 0.0), 2.0 * x};  // alpha_0, alpha_1
        spec.seeds = {Complex(2.0, 0.0), 2.0 * x};
    } else {
        const Complex xstar = hyperbolic::eval_h(3, 0, -alpha);
        spec.alphas = {Complex(1.0, 0.0), -3.0 * xstar, 3.0 * x};
        spec.seeds = {Complex(3.0, 0.0), 3.0 * x,
                      3.0 * hyperbolic::eval_h(3, 0, 2.0 * alpha)};
    }
    return spec;
}

}  // namespace hypercheb::companion

#endif  // HYPERCHEB_COMPANION_HPP

#ifndef HYPERCHEB_SERIES_HPP
#define HYPERCHEB_SERIES_HPP

#include <vector>

#include "hypercheb/common.hpp"
#include "hypercheb/roots_of_unity.hpp"

namespace hypercheb::spectral {

/// Formal power series truncated at a fixed order N: coefficients
/// c_0 .. c_N, everything beyond N discarded by every operation.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order)
        : coeffs_(static_cast<size_t>(order) + 1, Complex(0.0, 0.0)) {
        if (order < 0)
            throw std::invalid_argument("TruncatedSeries: order must be >= 0");
    }

    static TruncatedSeries from_coeffs(std::vector<Complex> c) {
        if (c.empty())
            throw std::invalid_argument("TruncatedSeries: need at least c_0");
        TruncatedSeries s(static_cast<int>(c.size()) - 1);
        s.coeffs_ = std::move(c);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    Complex coeff(int j) const { return coeffs_.at(static_cast<size_t>(j)); }
    void set_coeff(int j, Complex v) { coeffs_.at(static_cast<size_t>(j)) = v; }

    const std::vector<Complex>& coeffs() const { return coeffs_; }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
        require_same_order(rhs);
        for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
        require_same_order(rhs);
        for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a -= b;
        return a;
    }

    friend TruncatedSeries operator*(Complex s, TruncatedSeries a) {
        for (Complex& c : a.coeffs_) c *= s;
        return a;
    }

    /// Cauchy product, truncated at min(order a, order b).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.order(), b.order()));
        for (int n = 0; n <= out.order(); ++n) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j <= n; ++j) acc += a.coeffs_[j] * b.coeffs_[n - j];
            out.coeffs_[static_cast<size_t>(n)] = acc;
        }
        return out;
    }

    /// Horner evaluation of the truncated polynomial at z.
    Complex evaluate(Complex z) const {
        Complex acc(0.0, 0.0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

private:
    void require_same_order(const TruncatedSeries& rhs) const {
        if (coeffs_.size() != rhs.coeffs_.size())
            throw std::invalid_argument("TruncatedSeries: order mismatch");
    }

    std::vector<Complex> coeffs_;
};

/// The rotation operator applied s times: (Omega^s f)(z) = f(w^s z), acting
/// coefficient-wise as c_j -> w^{s j} c_j.
inline TruncatedSeries apply_omega(const TruncatedSeries& f, const RootOfUnityTable& w, int s) {
    if (s < 0 || s >= w.order())
        throw std::invalid_argument("apply_omega: s out of range");
    TruncatedSeries g(f.order());
    for (int j = 0; j <= f.order(); ++j)
        g.set_coeff(j, w.power(static_cast<long long>(s) * j) * f.coeff(j));
    return g;
}

/// Projection onto the k-th Z_m grade.  Implemented by exact index masking:
/// keeps c_j for j = k (mod m), zeroes the rest.  The root-of-unity average
/// (1/m) sum_s w^{-ks} Omega^s is kept as a separate cross-check path in
/// project_delta_omega_sum; masking avoids the m-fold rounding of the sum.
inline TruncatedSeries project_delta(const TruncatedSeries& f, const RootOfUnityTable& w, int k) {
    const int m = w.order();
    if (k < 0 || k >= m)
        throw std::invalid_argument("project_delta: k out of range");
    TruncatedSeries g(f.order());
    for (int j = k; j <= f.order(); j += m) g.set_coeff(j, f.coeff(j));
    return g;
}

/// Same projection computed through the root-of-unity average.
inline TruncatedSeries project_delta_omega_sum(const TruncatedSeries& f, const RootOfUnityTable& w,
                                               int k) {
    const int m = w.order();
    if (k < 0 || k >= m)
        throw std::invalid_argument("project_delta_omega_sum: k out of range");
    TruncatedSeries acc(f.order());
    for (int s = 0; s < m; ++s)
        acc += w.power(-static_cast<long long>(k) * s) * apply_omega(f, w, s);
    return (1.0 / m) * acc;
}

/// Grade-k component of exp: coefficient 1/j! at j = k (mod m), else 0.
inline TruncatedSeries hyperbolic_series(int m, int k, int order) {
    if (m < 2) throw std::invalid_argument("hyperbolic_series: m must be >= 2");
    if (k < 0 || k >= m) throw std::invalid_argument("hyperbolic_series: k out of range");
    TruncatedSeries g(order);
    double inv_fact = 1.0;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) inv_fact /= j;
        if (j % m == k % m) g.set_coeff(j, Complex(inv_fact, 0.0));
    }
    return g;
}

/// exp truncated at `order`.
inline TruncatedSeries exp_series(int order) {
    TruncatedSeries g(order);
    double inv_fact = 1.0;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) inv_fact /= j;
        g.set_coeff(j, Complex(inv_fact, 0.0));
    }
    return g;
}

/// 1/(1-z) truncated at `order`.
inline TruncatedSeries geometric_series(int order) {
    TruncatedSeries g(order);
    for (int j = 0; j <= order; ++j) g.set_coeff(j, Complex(1.0, 0.0));
    return g;
}

}  // namespace hypercheb::spectral

#endif  // HYPERCHEB_SERIES_HPP

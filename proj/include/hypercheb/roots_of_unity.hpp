#ifndef HYPERCHEB_ROOTS_OF_UNITY_HPP
#define HYPERCHEB_ROOTS_OF_UNITY_HPP

#include <vector>

#include "hypercheb/common.hpp"

namespace hypercheb::spectral {

/// Cached powers of the primitive m-th root of unity w = exp(2*pi*i/m).
/// powers[s] = w^s, computed from polar form per entry (not by repeated
/// multiplication) so each power is accurate to one ulp-ish.
class RootOfUnityTable {
public:
    explicit RootOfUnityTable(int m) : order_(m) {
        if (m < 2)
            throw std::invalid_argument("RootOfUnityTable: order must be >= 2");
        powers_.reserve(m);
        for (int s = 0; s < m; ++s)
            powers_.push_back(std::polar(1.0, 2.0 * kPi * s / m));
    }

    int order() const { return order_; }

    /// w^j for any integer j, reduced mod m.
    Complex power(long long j) const { return powers_[mod_floor(j, order_)]; }

    const std::vector<Complex>& powers() const { return powers_; }

private:
    int order_;
    std::vector<Complex> powers_;
};

}  // namespace hypercheb::spectral

#endif  // HYPERCHEB_ROOTS_OF_UNITY_HPP

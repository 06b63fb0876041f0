// Sparse Laurent polynomials with integer coefficients.

#pragma once

#include <map>

#include "tv4q/dyadic.hpp"

namespace tv4q {

class LaurentZ {
public:
    void add(long exponent, const BigInt& coeff) {
        if (coeff == 0) return;
        auto it = coeffs_.find(exponent);
        if (it == coeffs_.end()) {
            coeffs_.emplace(exponent, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    const std::map<long, BigInt>& coefficients() const { return coeffs_; }

    BigInt coefficient(long exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    DyadicSqrt2 evaluate_sqrt2(bool z_negative) const {
        DyadicSqrt2 acc;
        for (const auto& [m, c] : coeffs_)
            acc += DyadicSqrt2::integer(c) * DyadicSqrt2::z_pow(m, z_negative);
        return acc;
    }

    bool operator==(const LaurentZ& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<long, BigInt> coeffs_;
};

}  // namespace tv4q

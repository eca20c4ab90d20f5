// Truncated formal power series with exact integer coefficients.
//
// A series carries its truncation order explicitly: coefficients c_0..c_N
// represent a polynomial known modulo x^{N+1}. Multiplication and powering
// demand operands of at least the requested order, so precision never
// silently degrades.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twotone {

using BigInt = mpz_class;

class TruncationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PowerSeries {
public:
    // Coefficients c_0..c_N; the truncation order N is coeffs.size() - 1.
    explicit PowerSeries(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) {
            throw std::invalid_argument("a power series needs at least the constant coefficient");
        }
    }

    // 1/(1 - scale*x) up to x^order: coefficients scale^j.
    static PowerSeries geometric(const BigInt& scale, int order) {
        check_order(order);
        std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
        c[0] = 1;
        for (std::size_t j = 1; j < c.size(); ++j) c[j] = c[j - 1] * scale;
        return PowerSeries(std::move(c));
    }

    static PowerSeries one(int order) {
        check_order(order);
        std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
        c[0] = 1;
        return PowerSeries(std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& operator[](std::size_t j) const { return c_.at(j); }

    const std::vector<BigInt>& coefficients() const { return c_; }

    // Cauchy product truncated at `order`.
    PowerSeries mul(const PowerSeries& rhs, int order) const {
        check_order(order);
        require_order(*this, order);
        require_order(rhs, order);
        std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            for (std::size_t i = 0; i <= k; ++i) {
                c[k] += c_[i] * rhs.c_[k - i];
            }
        }
        return PowerSeries(std::move(c));
    }

    // Repeated squaring with truncation; exponent 0 gives the constant-1 series.
    PowerSeries pow(unsigned long exponent, int order) const {
        check_order(order);
        require_order(*this, order);
        PowerSeries result = one(order);
        PowerSeries base = truncated(order);
        while (exponent > 0) {
            if (exponent & 1UL) result = result.mul(base, order);
            exponent >>= 1UL;
            if (exponent > 0) base = base.mul(base, order);
        }
        return result;
    }

    PowerSeries truncated(int order) const {
        check_order(order);
        require_order(*this, order);
        return PowerSeries(std::vector<BigInt>(c_.begin(), c_.begin() + order + 1));
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    static void check_order(int order) {
        if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    }
    static void require_order(const PowerSeries& s, int order) {
        if (s.order() < order) {
            throw TruncationError("operand order " + std::to_string(s.order()) +
                                  " is below the requested truncation order " +
                                  std::to_string(order));
        }
    }

    std::vector<BigInt> c_;
};

}  // namespace twotone

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "dsv/errors.hpp"

namespace dsv {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in q with exact integer coefficients. Coefficient of q^i
// sits at index i; the representation never carries trailing zeros, so the
// zero polynomial is the empty vector.
class QPoly {
public:
    QPoly() = default;
    QPoly(long long constant) : QPoly(BigInt(constant)) {}
    QPoly(BigInt constant);
    explicit QPoly(std::vector<BigInt> coeffs);

    static QPoly monomial(BigInt coeff, int power);
    static QPoly one() { return QPoly(1); }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }

    BigInt eval(const BigInt& q) const;
    bool operator==(const QPoly&) const = default;

    bool nonnegative() const;
    std::string str() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

// Gaussian binomial coefficient; the zero polynomial when b < 0 or b > a,
// which keeps products over degenerate indices well defined.
QPoly q_binom(int a, int b);

// [n]_q and [n]_q!
QPoly q_int(int n);
QPoly q_factorial(int n);

// Coefficient reversal at degree d: result[i] = f[d - i]. Requires deg(f) <= d.
QPoly q_reverse(const QPoly& f, int d);

} // namespace dsv

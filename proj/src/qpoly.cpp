#include "dsv/qpoly.hpp"

#include <sstream>

namespace dsv {

QPoly::QPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::monomial(BigInt coeff, int power) {
    QPoly r;
    if (coeff != 0) {
        if (power < 0) throw InvalidArguments("QPoly::monomial: negative power");
        r.coeffs_.assign(power + 1, BigInt(0));
        r.coeffs_[power] = std::move(coeff);
    }
    return r;
}

BigInt QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

BigInt QPoly::eval(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

bool QPoly::nonnegative() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
        BigInt a = coeffs_[i] > 0 || first ? coeffs_[i] : -coeffs_[i];
        if (i == 0)
            os << a;
        else {
            if (a != 1 && a != -1)
                os << a << "*";
            else if (a == -1 && first)
                os << "-";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

QPoly q_int(int n) {
    std::vector<BigInt> c(std::max(n, 0), BigInt(1));
    return QPoly(std::move(c));
}

QPoly q_factorial(int n) {
    QPoly r = QPoly::one();
    for (int m = 2; m <= n; ++m) r *= q_int(m);
    return r;
}

QPoly q_binom(int a, int b) {
    if (b < 0 || b > a) return QPoly();
    b = std::min(b, a - b);
    // q-Pascal column: row[j] = [i choose j]_q after processing row i.
    std::vector<QPoly> row(b + 1);
    row[0] = QPoly::one();
    for (int i = 1; i <= a; ++i) {
        for (int j = std::min(i, b); j >= 1; --j) {
            // [i,j] = [i-1,j] + q^(i-j) [i-1,j-1]
            QPoly shifted = row[j - 1] * QPoly::monomial(1, i - j);
            row[j] += shifted;
        }
    }
    return row[b];
}

QPoly q_reverse(const QPoly& f, int d) {
    if (f.degree() > d)
        throw DegreeTooLarge("q_reverse: polynomial degree " + std::to_string(f.degree()) +
                             " exceeds reversal degree " + std::to_string(d));
    std::vector<BigInt> out(d + 1, BigInt(0));
    for (int i = 0; i <= d; ++i) out[i] = f.coeff(d - i);
    return QPoly(std::move(out));
}

} // namespace dsv

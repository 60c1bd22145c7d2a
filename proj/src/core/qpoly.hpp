// Integer polynomials in q with nonnegative exponents, trailing zeros trimmed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liecoh {

struct QPolynomial {
    std::vector<long long> coeffs;  // coeffs[k] multiplies q^k

    QPolynomial() = default;
    explicit QPolynomial(std::vector<long long> c) : coeffs(std::move(c)) { trim(); }
    static QPolynomial one() { return QPolynomial({1}); }
    static QPolynomial monomial(int degree, long long c = 1);

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long long at(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : 0;
    }
    long long eval_at_one() const;

    void trim();
    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    QPolynomial shifted(int k) const;  // multiply by q^k
    QPolynomial truncated(int max_degree) const;
    bool operator==(const QPolynomial&) const = default;

    // "1 + 2q + q^3" style; zero polynomial prints "0".
    std::string str() const;
};

}  // namespace liecoh

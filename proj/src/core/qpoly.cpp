#include "qpoly.hpp"

#include <cstdlib>

namespace liecoh {

QPolynomial QPolynomial::monomial(int degree, long long c) {
    if (c == 0 || degree < 0) return {};
    QPolynomial p;
    p.coeffs.assign(degree + 1, 0);
    p.coeffs[degree] = c;
    return p;
}

long long QPolynomial::eval_at_one() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
}

void QPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
    for (std::size_t k = 0; k < o.coeffs.size(); ++k) coeffs[k] += o.coeffs[k];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
    for (std::size_t k = 0; k < o.coeffs.size(); ++k) coeffs[k] -= o.coeffs[k];
    trim();
    return *this;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    QPolynomial r = *this;
    r += o;
    return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    QPolynomial r = *this;
    r -= o;
    return r;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    QPolynomial r;
    r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs.size(); ++j)
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    }
    r.trim();
    return r;
}

QPolynomial QPolynomial::shifted(int k) const {
    if (is_zero()) return {};
    QPolynomial r;
    r.coeffs.assign(coeffs.size() + k, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i + k] = coeffs[i];
    return r;
}

QPolynomial QPolynomial::truncated(int max_degree) const {
    QPolynomial r = *this;
    if (static_cast<int>(r.coeffs.size()) > max_degree + 1) r.coeffs.resize(max_degree + 1);
    r.trim();
    return r;
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        long long c = coeffs[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        long long a = std::llabs(c);
        if (k == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a) + " ";
            out += (k == 1) ? "q" : "q^" + std::to_string(k);
        }
        first = false;
    }
    return out;
}

}  // namespace liecoh

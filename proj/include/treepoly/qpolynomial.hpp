#pragma once

// Dense univariate polynomials in the formal symbol q with exact rational
// coefficients. Coefficient i is the coefficient of q^i. The zero polynomial
// stores nothing; any other polynomial has a nonzero leading coefficient.

#include "treepoly/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace treepoly {

class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(int constant) : QPolynomial(BigRational(constant)) {}
    QPolynomial(BigRational constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit QPolynomial(std::vector<BigRational> ascendingCoeffs)
        : coeffs_(std::move(ascendingCoeffs)) {
        trim();
    }

    static QPolynomial variable() { return monomial(1, 1); }

    static QPolynomial monomial(BigRational c, int exponent) {
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        if (c == 0) return {};
        std::vector<BigRational> v(static_cast<std::size_t>(exponent) + 1, BigRational(0));
        v.back() = std::move(c);
        return QPolynomial(std::move(v));
    }

    bool isZero() const { return coeffs_.empty(); }
    bool isOne() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool isConstant() const { return coeffs_.size() <= 1; }

    /// Degree, with the convention degree(0) = -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigRational& leading() const {
        if (isZero()) throw std::logic_error("leading coefficient of zero");
        return coeffs_.back();
    }

    BigRational coefficient(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    BigRational evaluate(const BigRational& point) const {
        BigRational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
        return acc;
    }

    QPolynomial monic() const {
        if (isZero()) throw std::logic_error("monic of zero");
        QPolynomial out = *this;
        const BigRational lead = out.coeffs_.back();
        for (BigRational& c : out.coeffs_) c /= lead;
        return out;
    }

    QPolynomial operator-() const {
        QPolynomial out = *this;
        for (BigRational& c : out.coeffs_) c = -c;
        return out;
    }

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
        std::vector<BigRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return QPolynomial(std::move(out));
    }

    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-b); }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.isZero() || b.isZero()) return {};
        std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return QPolynomial(std::move(out));
    }

    friend QPolynomial operator*(const BigRational& c, const QPolynomial& p) {
        return QPolynomial(c) * p;
    }

    QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
    QPolynomial& operator-=(const QPolynomial& o) { return *this = *this - o; }
    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

/// Euclidean division: a = quotient * b + remainder with deg(remainder) < deg(b).
inline void divmod(const QPolynomial& a, const QPolynomial& b, QPolynomial& quotient,
                   QPolynomial& remainder) {
    if (b.isZero()) throw std::domain_error("zero divisor");
    if (a.degree() < b.degree()) {
        quotient = {};
        remainder = a;
        return;
    }
    std::vector<BigRational> rem = a.coefficients();
    const int db = b.degree();
    const BigRational& lead = b.leading();
    std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - db) + 1, BigRational(0));
    for (int i = a.degree(); i >= db; --i) {
        BigRational c = rem[static_cast<std::size_t>(i)] / lead;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
        quo[static_cast<std::size_t>(i - db)] = std::move(c);
    }
    rem.resize(static_cast<std::size_t>(db));
    quotient = QPolynomial(std::move(quo));
    remainder = QPolynomial(std::move(rem));
}

/// Exact quotient; throws std::logic_error if b does not divide a.
inline QPolynomial exactDivide(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial q, r;
    divmod(a, b, q, r);
    if (!r.isZero()) throw std::logic_error("inexact polynomial division");
    return q;
}

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0. Remainders are made
/// monic at every step to keep rational coefficients small.
inline QPolynomial gcd(QPolynomial a, QPolynomial b) {
    while (!b.isZero()) {
        QPolynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.isZero() ? std::move(r) : r.monic();
    }
    return a.isZero() ? a : a.monic();
}

inline QPolynomial pow(const QPolynomial& base, unsigned exponent) {
    QPolynomial out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

} // namespace treepoly

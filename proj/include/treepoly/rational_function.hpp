#pragma once

// The coefficient field Q(q). A value is a reduced fraction of rational-
// coefficient polynomials with monic denominator; zero is 0/1. Because the
// form is canonical, operator== is mathematical equality.

#include "treepoly/parse_error.hpp"
#include "treepoly/qpolynomial.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

namespace treepoly {

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(int constant) : num_(constant), den_(1) {}
    RationalFunction(BigRational constant) : num_(std::move(constant)), den_(1) {}
    RationalFunction(QPolynomial numerator) : num_(std::move(numerator)), den_(1) {}
    RationalFunction(QPolynomial numerator, QPolynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    static RationalFunction variable() { return RationalFunction(QPolynomial::variable()); }

    const QPolynomial& numerator() const { return num_; }
    const QPolynomial& denominator() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isConstant() const { return num_.isConstant() && den_.isOne(); }

    /// The constant value; only valid when isConstant().
    BigRational constantValue() const {
        if (!isConstant()) throw std::logic_error("not a constant");
        return num_.coefficient(0);
    }

    RationalFunction operator-() const {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.isZero()) throw std::domain_error("zero divisor");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction inverse() const { return RationalFunction(1) / *this; }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    /// Exact value at q = point; the point must not be a pole.
    BigRational evaluateAt(const BigRational& point) const {
        BigRational den = den_.evaluate(point);
        if (den == 0) throw std::domain_error("pole at evaluation point");
        return num_.evaluate(point) / den;
    }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    void normalize() {
        if (den_.isZero()) throw std::domain_error("zero divisor");
        if (num_.isZero()) {
            den_ = 1;
            return;
        }
        QPolynomial g = gcd(num_, den_);
        if (!g.isOne()) {
            num_ = exactDivide(num_, g);
            den_ = exactDivide(den_, g);
        }
        const BigRational lead = den_.leading();
        if (lead != 1) {
            num_ = BigRational(1) / lead * num_;
            den_ = den_.monic();
        }
    }

    QPolynomial num_;
    QPolynomial den_;
};

inline RationalFunction pow(const RationalFunction& base, unsigned exponent) {
    RationalFunction out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

/// Falling-factorial binomial coefficient (q choose m) = q(q-1)...(q-m+1)/m!,
/// a polynomial of degree m.
inline RationalFunction qBinomial(int m) {
    if (m < 0) throw std::domain_error("negative binomial order");
    QPolynomial num = 1;
    for (int i = 0; i < m; ++i) num *= QPolynomial::variable() - QPolynomial(i);
    return RationalFunction(std::move(num), QPolynomial(BigRational(factorial(static_cast<unsigned>(m)))));
}

namespace detail {

/// Renders an integer-coefficient polynomial, highest power first,
/// e.g. "q^3 - 3*q^2 + 2*q".
inline std::string renderIntegerPolynomial(const std::vector<BigInt>& coeffs) {
    std::string out;
    bool first = true;
    for (int e = static_cast<int>(coeffs.size()) - 1; e >= 0; --e) {
        const BigInt& a = coeffs[static_cast<std::size_t>(e)];
        if (a == 0) continue;
        const bool negative = a < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        BigInt mag = abs(a);
        if (e == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += "q";
            if (e >= 2) out += "^" + std::to_string(e);
        }
    }
    return first ? "0" : out;
}

inline int countNonzero(const std::vector<BigInt>& coeffs) {
    int n = 0;
    for (const BigInt& c : coeffs) n += (c != 0);
    return n;
}

/// True when the polynomial prints as a single atom (an integer or a pure
/// power of q) that needs no parentheses on either side of '/'.
inline bool isAtom(const std::vector<BigInt>& coeffs) {
    if (countNonzero(coeffs) != 1) return false;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != 0) return e == 0 || coeffs[e] == 1;
    return false;
}

} // namespace detail

/// Canonical text form. The stored value has rational coefficients and a
/// monic denominator; for display both parts are scaled by the unique
/// positive rational making them jointly primitive with integer
/// coefficients, e.g. (q^2 - q)/2 rather than 1/2*q^2 - 1/2*q.
inline std::string formatRationalFunction(const RationalFunction& f) {
    if (f.isZero()) return "0";
    BigInt denLcm = 1;
    BigInt numGcd = 0;
    auto visit = [&](const QPolynomial& p) {
        for (const BigRational& c : p.coefficients()) {
            if (c == 0) continue;
            denLcm = lcm(denLcm, denominator(c));
            numGcd = gcd(numGcd, BigInt(abs(numerator(c))));
        }
    };
    visit(f.numerator());
    visit(f.denominator());
    const BigRational scale(denLcm, numGcd);
    auto scaled = [&](const QPolynomial& p) {
        std::vector<BigInt> out;
        out.reserve(p.coefficients().size());
        for (const BigRational& c : p.coefficients()) out.push_back(numerator(BigRational(c * scale)));
        return out;
    };
    const std::vector<BigInt> num = scaled(f.numerator());
    const std::vector<BigInt> den = scaled(f.denominator());
    if (den.size() == 1 && den[0] == 1) return detail::renderIntegerPolynomial(num);
    std::string numStr = detail::renderIntegerPolynomial(num);
    if (detail::countNonzero(num) > 1) numStr = "(" + numStr + ")";
    std::string denStr = detail::renderIntegerPolynomial(den);
    if (!detail::isAtom(den)) denStr = "(" + denStr + ")";
    return numStr + "/" + denStr;
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << formatRationalFunction(f);
}

namespace detail {

/// Recursive-descent parser for the rational-function grammar: integer
/// literals, q, + - * / ^ with the usual precedence, parentheses; exponents
/// are nonnegative integers.
class RationalFunctionParser {
public:
    explicit RationalFunctionParser(std::string_view src, std::size_t start = 0)
        : src_(src), pos_(start) {}

    RationalFunction parseExpression() {
        skipSpace();
        bool negate = false;
        while (peek() == '+' || peek() == '-') {
            if (take() == '-') negate = !negate;
            skipSpace();
        }
        RationalFunction acc = parseTerm();
        if (negate) acc = -acc;
        skipSpace();
        while (peek() == '+' || peek() == '-') {
            const char op = take();
            RationalFunction rhs = parseTerm();
            acc = (op == '+') ? acc + rhs : acc - rhs;
            skipSpace();
        }
        return acc;
    }

    RationalFunction parsePrimary() {
        skipSpace();
        const char c = peek();
        if (c == '(') {
            take();
            RationalFunction inner = parseExpression();
            skipSpace();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            take();
            return inner;
        }
        if (c == 'q') {
            take();
            return RationalFunction::variable();
        }
        if (c >= '0' && c <= '9') return RationalFunction(BigRational(parseInteger()));
        throw ParseError("expected number, 'q' or '('", pos_);
    }

    std::size_t position() const { return pos_; }

    void skipSpace() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
            ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    BigInt parseInteger() {
        const std::size_t begin = pos_;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
        if (pos_ == begin) throw ParseError("expected integer", pos_);
        return BigInt(std::string(src_.substr(begin, pos_ - begin)));
    }

private:
    RationalFunction parseTerm() {
        RationalFunction acc = parseUnary();
        skipSpace();
        while (peek() == '*' || peek() == '/') {
            const char op = take();
            RationalFunction rhs = parseUnary();
            acc = (op == '*') ? acc * rhs : acc / rhs;
            skipSpace();
        }
        return acc;
    }

    RationalFunction parseUnary() {
        skipSpace();
        if (peek() == '-') {
            take();
            return -parseUnary();
        }
        return parsePower();
    }

    RationalFunction parsePower() {
        RationalFunction base = parsePrimary();
        skipSpace();
        if (peek() != '^') return base;
        take();
        skipSpace();
        const std::size_t at = pos_;
        BigInt e = parseInteger();
        if (e > 512) throw ParseError("exponent too large", at);
        return pow(base, static_cast<unsigned>(e));
    }

    char take() { return src_[pos_++]; }

    std::string_view src_;
    std::size_t pos_;
};

} // namespace detail

inline RationalFunction parseRationalFunction(std::string_view text) {
    detail::RationalFunctionParser parser(text);
    RationalFunction out = parser.parseExpression();
    parser.skipSpace();
    if (parser.position() != text.size()) throw ParseError("unexpected trailing input", parser.position());
    return out;
}

} // namespace treepoly

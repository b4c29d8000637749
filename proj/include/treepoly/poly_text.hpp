#pragma once

// Text form for tree polynomials: terms joined by " + " / " - " in canonical
// order, each term "c*TREE" with the coefficient omitted when it is 1 and
// parenthesized when it is not a plain rational number. A term without a
// tree literal is a multiple of the unit. Tensor polynomials render as
// "L ⊗ R" terms (or "L (x) R" in ASCII mode).

#include "treepoly/rational_function.hpp"
#include "treepoly/tree_polynomial.hpp"
#include "treepoly/tree_text.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace treepoly {

namespace detail {

/// Magnitude text of a coefficient: `bare` stands alone (a unit-term
/// scalar), `factor` goes in front of "*TREE" and is parenthesized whenever
/// precedence demands it (fractions and anything involving q).
struct CoeffText {
    std::string bare;
    std::string factor;
    bool negative = false;
};

inline CoeffText coefficientText(const RationalFunction& c) {
    CoeffText out;
    if (c.isConstant()) {
        BigRational v = c.constantValue();
        out.negative = v < 0;
        out.bare = toString(v < 0 ? BigRational(-v) : v);
        out.factor = denominator(v) != 1 ? "(" + out.bare + ")" : out.bare;
        return out;
    }
    out.bare = "(" + formatRationalFunction(c) + ")";
    out.factor = out.bare;
    return out;
}

} // namespace detail

inline std::string renderPolynomial(const TreePolynomial& f) {
    if (f.isZero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : f.terms()) {
        detail::CoeffText coeff = detail::coefficientText(c);
        std::string body;
        if (t.isUnit()) {
            body = coeff.bare; // a multiple of the unit prints as the scalar
        } else if (coeff.bare == "1") {
            body = renderTree(t);
        } else {
            body = coeff.factor + "*" + renderTree(t);
        }
        if (first) {
            if (coeff.negative) out += "-";
            first = false;
        } else {
            out += coeff.negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

inline std::string renderTensor(const TensorPolynomial& f, bool asciiTensor = false) {
    if (f.isZero()) return "0";
    const std::string symbol = asciiTensor ? " (x) " : " ⊗ ";
    std::string out;
    bool first = true;
    for (const auto& [pair, c] : f.terms()) {
        detail::CoeffText coeff = detail::coefficientText(c);
        const std::string tensor = renderTree(pair.first) + symbol + renderTree(pair.second);
        std::string body = coeff.bare == "1" ? tensor : coeff.factor + "*(" + tensor + ")";
        if (first) {
            if (coeff.negative) out += "-";
            first = false;
        } else {
            out += coeff.negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

namespace detail {

/// Returns true when the parenthesized group starting at `pos` (which must
/// hold '(') contains an 'x' before its matching ')'; such a group is a tree
/// literal, anything else is a scalar expression.
inline bool parenGroupIsTree(std::string_view src, std::size_t pos) {
    int depth = 0;
    for (std::size_t i = pos; i < src.size(); ++i) {
        if (src[i] == '(') ++depth;
        if (src[i] == ')' && --depth == 0) return false;
        if (src[i] == 'x') return true;
    }
    return false;
}

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view src) : src_(src) {}

    TreePolynomial parse() {
        TreePolynomial out;
        skipSpace();
        bool negative = false;
        if (peek() == '-') {
            ++pos_;
            negative = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        parseTerm(out, negative);
        skipSpace();
        while (peek() == '+' || peek() == '-') {
            negative = src_[pos_++] == '-';
            parseTerm(out, negative);
            skipSpace();
        }
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return out;
    }

private:
    void parseTerm(TreePolynomial& out, bool negative) {
        skipSpace();
        RationalFunction c = 1;
        bool haveCoefficient = false;
        const char head = peek();
        if (head == '\0') throw ParseError("expected term", pos_);
        if (head >= '0' && head <= '9') {
            c = parseRationalNumber();
            haveCoefficient = true;
        } else if (head == '(' && !parenGroupIsTree(src_, pos_)) {
            RationalFunctionParser rf(src_, pos_);
            c = rf.parsePrimary();
            pos_ = rf.position();
            haveCoefficient = true;
        }
        BasisElement element; // the unit
        if (haveCoefficient) {
            skipSpace();
            if (peek() == '*') {
                ++pos_;
                element = parseElement();
            }
        } else {
            element = parseElement();
        }
        out.add(element, negative ? -c : c);
    }

    BasisElement parseElement() {
        skipSpace();
        const char head = peek();
        if (head == '1') {
            ++pos_;
            return BasisElement::unit();
        }
        if (head == 'x' || head == '(') {
            TreeParser trees(src_, pos_);
            PlanarTree t = trees.parseTree();
            pos_ = trees.position();
            return BasisElement(std::move(t));
        }
        throw ParseError("expected tree literal", pos_);
    }

    /// INT or INT/INT; "1" also covers the unit term because 1 = 1*unit.
    RationalFunction parseRationalNumber() {
        BigInt num = parseInteger();
        skipSpace();
        if (peek() == '/') {
            // Only treat '/' as a fraction bar when a digit follows;
            // otherwise leave it to the caller (it is a parse error there).
            std::size_t probe = pos_ + 1;
            while (probe < src_.size() && src_[probe] == ' ') ++probe;
            if (probe < src_.size() && src_[probe] >= '0' && src_[probe] <= '9') {
                pos_ = probe;
                BigInt den = parseInteger();
                if (den == 0) throw ParseError("zero denominator", probe);
                return RationalFunction(BigRational(num, den));
            }
        }
        return RationalFunction(BigRational(num));
    }

    BigInt parseInteger() {
        const std::size_t begin = pos_;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
        if (pos_ == begin) throw ParseError("expected integer", pos_);
        return BigInt(std::string(src_.substr(begin, pos_ - begin)));
    }

    void skipSpace() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
            ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline TreePolynomial parsePolynomial(std::string_view text) {
    return detail::PolynomialParser(text).parse();
}

inline std::ostream& operator<<(std::ostream& os, const TreePolynomial& f) {
    return os << renderPolynomial(f);
}

inline std::ostream& operator<<(std::ostream& os, const TensorPolynomial& f) {
    return os << renderTensor(f);
}

} // namespace treepoly

#pragma once

// Finite truncations of the generic exponential series over Q(q). The
// coefficient a(T) satisfies a(1) = a(x) = 1 and, for a tree with root arity
// m >= 2, degree n and child subtrees T_1..T_m,
//
//     a(T) = (q choose m)/(q^n - q) * a(T_1) * ... * a(T_m).
//
// Specializing q at an integer k >= 2 yields the k-ary exponential series
// over Q. grouplikeReport checks degreewise that the truncated coproduct of
// a series equals its tensor square; quadraticRelation checks the dual
// coefficient identity through the shuffle product.

#include "treepoly/coproduct.hpp"
#include "treepoly/poly_text.hpp"
#include "treepoly/shuffle.hpp"

#include <map>
#include <string>
#include <vector>

namespace treepoly {

class TruncatedSeries {
public:
    explicit TruncatedSeries(int cap) : cap_(requireCap(cap)) {}

    TruncatedSeries(int cap, const TreePolynomial& body) : cap_(requireCap(cap)) {
        for (const auto& [t, c] : body.terms())
            if (t.degree() <= cap_) body_.add(t, c);
    }

    int cap() const { return cap_; }
    const TreePolynomial& body() const { return body_; }

    RationalFunction coefficient(const BasisElement& t) const { return body_.coefficient(t); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static int requireCap(int cap) {
        if (cap < 0) throw std::domain_error("series cap must be nonnegative");
        return cap;
    }

    int cap_;
    TreePolynomial body_;
};

/// Memoized table of exponential coefficients. Built bottom-up by degree via
/// extendTo (children always precede their parents); once filled, at() is a
/// read-only lookup safe to share across threads.
class ExpTable {
public:
    RationalFunction coefficient(const BasisElement& t) {
        if (t.isUnit() || t.tree().isLeaf()) return 1;
        return compute(t.tree());
    }

    void extendTo(int degree) {
        for (int d = 2; d <= degree; ++d)
            for (const PlanarTree& t : enumerateTrees(d)) compute(t);
    }

    RationalFunction at(const BasisElement& t) const {
        if (t.isUnit() || t.tree().isLeaf()) return 1;
        auto it = memo_.find(t.tree());
        if (it == memo_.end()) throw std::logic_error("exponential table miss");
        return it->second;
    }

private:
    const RationalFunction& compute(const PlanarTree& t) {
        auto it = memo_.find(t);
        if (it != memo_.end()) return it->second;
        const int m = t.arity();
        const int n = t.degree();
        if (m < 2 || n < 2) throw std::logic_error("coefficient recursion needs arity >= 2");
        RationalFunction value =
            qBinomial(m) / RationalFunction(QPolynomial::monomial(1, n) - QPolynomial::variable());
        for (const PlanarTree& child : t.children())
            value *= child.isLeaf() ? RationalFunction(1) : compute(child);
        return memo_.emplace(t, std::move(value)).first->second;
    }

    std::map<PlanarTree, RationalFunction, TreeLess> memo_;
};

/// One-shot coefficient lookup with a private table.
inline RationalFunction expCoefficient(const BasisElement& t) {
    ExpTable table;
    return table.coefficient(t);
}

inline TruncatedSeries expSeries(int cap, ExpTable& table) {
    TreePolynomial body(BasisElement::unit());
    for (int d = 1; d <= cap; ++d)
        for (const PlanarTree& t : enumerateTrees(d)) {
            BasisElement elem(t);
            body.add(elem, table.coefficient(elem));
        }
    return TruncatedSeries(cap, body);
}

inline TruncatedSeries expSeries(int cap) {
    ExpTable table;
    return expSeries(cap, table);
}

inline TreePolynomial specializePolynomial(const TreePolynomial& f, int point) {
    TreePolynomial out;
    for (const auto& [t, c] : f.terms())
        out.add(t, RationalFunction(c.evaluateAt(point)));
    return out;
}

inline TensorPolynomial specializeTensor(const TensorPolynomial& f, int point) {
    TensorPolynomial out;
    for (const auto& [k, c] : f.terms())
        out.add(k.first, k.second, RationalFunction(c.evaluateAt(point)));
    return out;
}

/// Evaluation at q = k for integer k >= 2; every exponential-coefficient
/// denominator is a product of polynomials q^n - q with n >= 2, none of
/// which vanish there.
inline TruncatedSeries specializeSeries(const TruncatedSeries& s, int point) {
    if (point < 2) throw std::domain_error("specialization point must be at least 2");
    return TruncatedSeries(s.cap(), specializePolynomial(s.body(), point));
}

/// Coproduct of the body with tensor terms above the cap dropped. (Terms of
/// a basis-tree coproduct always split the degree, so nothing exceeds the
/// cap in practice; the filter keeps the contract explicit.)
inline TensorPolynomial truncatedCoproduct(const TruncatedSeries& s) {
    TensorPolynomial full = coproductPoly(s.body());
    TensorPolynomial out;
    for (const auto& [k, c] : full.terms())
        if (k.first.degree() + k.second.degree() <= s.cap()) out.add(k.first, k.second, c);
    return out;
}

struct Violation {
    std::string where;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string identity;
    int cap = 0;
    long long checked = 0;
    std::vector<Violation> violations;

    IdentityReport() = default;
    IdentityReport(std::string name, int degreeCap) : identity(std::move(name)), cap(degreeCap) {}

    bool passed() const { return violations.empty(); }
};

/// Degreewise grouplike check: the coefficient of V (x) W in the truncated
/// coproduct must equal c_V(s) * c_W(s) for every pair with
/// deg V + deg W <= cap.
inline IdentityReport grouplikeReport(const TruncatedSeries& s) {
    IdentityReport report{"grouplike", s.cap()};
    const TensorPolynomial delta = truncatedCoproduct(s);
    const std::vector<BasisElement> basis = enumerateBasis(s.cap());
    for (const BasisElement& v : basis) {
        for (const BasisElement& w : basis) {
            if (v.degree() + w.degree() > s.cap()) continue;
            ++report.checked;
            const RationalFunction lhs = delta.coefficient(v, w);
            const RationalFunction rhs = s.coefficient(v) * s.coefficient(w);
            if (lhs != rhs)
                report.violations.push_back({"(" + renderTree(v) + ", " + renderTree(w) + ")",
                                             formatRationalFunction(lhs),
                                             formatRationalFunction(rhs)});
        }
    }
    return report;
}

inline IdentityReport checkExpGrouplike(int cap) {
    IdentityReport report = grouplikeReport(expSeries(cap));
    report.identity = "exp-grouplike";
    return report;
}

/// Quadratic coefficient relation for one pair:
/// a(V) * a(W) = sum over T of a(T) * c_T(V ⧢ W), exactly in Q(q).
inline IdentityReport quadraticRelation(const BasisElement& v, const BasisElement& w,
                                        ExpTable& table) {
    IdentityReport report{"quadratic", v.degree() + w.degree()};
    ++report.checked;
    const RationalFunction lhs = table.coefficient(v) * table.coefficient(w);
    const TreePolynomial product = shuffleTrees(v, w);
    RationalFunction rhs;
    for (const auto& [t, c] : product.terms()) rhs += table.coefficient(t) * c;
    if (lhs != rhs)
        report.violations.push_back({"(" + renderTree(v) + ", " + renderTree(w) + ")",
                                     formatRationalFunction(lhs), formatRationalFunction(rhs)});
    return report;
}

inline IdentityReport quadraticRelation(const BasisElement& v, const BasisElement& w) {
    ExpTable table;
    return quadraticRelation(v, w, table);
}

} // namespace treepoly

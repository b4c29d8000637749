#pragma once

// Finite K-linear combinations of basis trees (the tree-polynomial algebra)
// and of ordered pairs of basis trees (its tensor square), over K = Q(q).
// Zero coefficients are never stored, and term iteration follows the
// canonical tree order, so representation equality is algebra equality.

#include "treepoly/rational_function.hpp"
#include "treepoly/tree.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace treepoly {

class TreePolynomial {
public:
    using TermMap = std::map<BasisElement, RationalFunction, TreeLess>;

    TreePolynomial() = default;
    explicit TreePolynomial(const BasisElement& t, const RationalFunction& c = 1) { add(t, c); }

    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add(const BasisElement& t, const RationalFunction& c) {
        if (c.isZero()) return;
        auto [it, inserted] = terms_.emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    void addScaled(const TreePolynomial& f, const RationalFunction& c) {
        if (c.isZero()) return;
        for (const auto& [t, a] : f.terms_) add(t, a * c);
    }

    RationalFunction coefficient(const BasisElement& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    int maxDegree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    TreePolynomial operator-() const {
        TreePolynomial out;
        for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
        return out;
    }

    friend TreePolynomial operator+(const TreePolynomial& a, const TreePolynomial& b) {
        TreePolynomial out = a;
        out.addScaled(b, 1);
        return out;
    }
    friend TreePolynomial operator-(const TreePolynomial& a, const TreePolynomial& b) {
        TreePolynomial out = a;
        out.addScaled(b, -1);
        return out;
    }
    friend TreePolynomial operator*(const RationalFunction& c, const TreePolynomial& f) {
        TreePolynomial out;
        out.addScaled(f, c);
        return out;
    }

    TreePolynomial& operator+=(const TreePolynomial& o) {
        addScaled(o, 1);
        return *this;
    }
    TreePolynomial& operator-=(const TreePolynomial& o) {
        addScaled(o, -1);
        return *this;
    }

    friend bool operator==(const TreePolynomial&, const TreePolynomial&) = default;

private:
    TermMap terms_;
};

inline RationalFunction coeff(const TreePolynomial& f, const BasisElement& t) {
    return f.coefficient(t);
}

/// Grafting of basis elements with the unital convention: unit factors are
/// dropped; if no factor remains the result is the unit, if exactly one
/// remains it is returned unchanged, otherwise the survivors are grafted.
inline BasisElement graftBasis(const std::vector<BasisElement>& factors) {
    std::vector<PlanarTree> trees;
    trees.reserve(factors.size());
    for (const BasisElement& f : factors)
        if (!f.isUnit()) trees.push_back(f.tree());
    if (trees.empty()) return BasisElement::unit();
    if (trees.size() == 1) return BasisElement(std::move(trees.front()));
    return BasisElement(graft(std::move(trees)));
}

/// Multilinear extension of grafting to polynomials.
inline TreePolynomial graftPoly(std::span<const TreePolynomial> factors) {
    if (factors.size() < 2) throw std::domain_error("grafting needs at least two factors");
    for (const TreePolynomial& f : factors)
        if (f.isZero()) return {};
    TreePolynomial out;
    std::vector<TreePolynomial::TermMap::const_iterator> pick;
    pick.reserve(factors.size());
    for (const TreePolynomial& f : factors) pick.push_back(f.terms().begin());
    bool more = true;
    while (more) {
        std::vector<BasisElement> elems;
        elems.reserve(factors.size());
        RationalFunction c = 1;
        for (const auto& it : pick) {
            elems.push_back(it->first);
            c *= it->second;
        }
        out.add(graftBasis(elems), c);
        more = false;
        for (std::size_t i = factors.size(); i-- > 0;) {
            if (++pick[i] != factors[i].terms().end()) {
                more = true;
                break;
            }
            pick[i] = factors[i].terms().begin();
        }
    }
    return out;
}

inline TreePolynomial graftPoly(std::initializer_list<TreePolynomial> factors) {
    return graftPoly(std::span<const TreePolynomial>(factors.begin(), factors.size()));
}

inline TreePolynomial graftPoly(const std::vector<TreePolynomial>& factors) {
    return graftPoly(std::span<const TreePolynomial>(factors.data(), factors.size()));
}

/// Tensor terms sort by descending left factor, then ascending right factor,
/// which writes coproducts in the usual way: T (x) 1 first, 1 (x) T last.
struct TensorTermLess {
    bool operator()(const std::pair<BasisElement, BasisElement>& a,
                    const std::pair<BasisElement, BasisElement>& b) const {
        if (auto c = compareTrees(a.first, b.first); c != 0) return c > 0;
        return compareTrees(a.second, b.second) < 0;
    }
};

class TensorPolynomial {
public:
    using Key = std::pair<BasisElement, BasisElement>;
    using TermMap = std::map<Key, RationalFunction, TensorTermLess>;

    TensorPolynomial() = default;
    TensorPolynomial(const BasisElement& left, const BasisElement& right,
                     const RationalFunction& c = 1) {
        add(left, right, c);
    }

    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add(const BasisElement& left, const BasisElement& right, const RationalFunction& c) {
        if (c.isZero()) return;
        auto [it, inserted] = terms_.emplace(Key(left, right), c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    RationalFunction coefficient(const BasisElement& left, const BasisElement& right) const {
        auto it = terms_.find(Key(left, right));
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    friend TensorPolynomial operator+(const TensorPolynomial& a, const TensorPolynomial& b) {
        TensorPolynomial out = a;
        for (const auto& [k, c] : b.terms_) out.add(k.first, k.second, c);
        return out;
    }

    friend TensorPolynomial operator*(const RationalFunction& c, const TensorPolynomial& f) {
        TensorPolynomial out;
        for (const auto& [k, a] : f.terms_) out.add(k.first, k.second, a * c);
        return out;
    }

    TensorPolynomial& operator+=(const TensorPolynomial& o) { return *this = *this + o; }

    friend bool operator==(const TensorPolynomial&, const TensorPolynomial&) = default;

private:
    TermMap terms_;
};

inline RationalFunction coeff2(const TensorPolynomial& f, const BasisElement& left,
                               const BasisElement& right) {
    return f.coefficient(left, right);
}

/// Componentwise multilinear grafting on the tensor square:
/// (f1 (x) g1) ... (fm (x) gm) maps to (f1 ... fm) (x) (g1 ... gm), with the
/// unital grafting convention on each side.
inline TensorPolynomial tensorGraft(std::span<const TensorPolynomial> factors) {
    if (factors.size() < 2) throw std::domain_error("grafting needs at least two factors");
    for (const TensorPolynomial& f : factors)
        if (f.isZero()) return {};
    TensorPolynomial out;
    std::vector<TensorPolynomial::TermMap::const_iterator> pick;
    pick.reserve(factors.size());
    for (const TensorPolynomial& f : factors) pick.push_back(f.terms().begin());
    bool more = true;
    while (more) {
        std::vector<BasisElement> lefts, rights;
        lefts.reserve(factors.size());
        rights.reserve(factors.size());
        RationalFunction c = 1;
        for (const auto& it : pick) {
            lefts.push_back(it->first.first);
            rights.push_back(it->first.second);
            c *= it->second;
        }
        out.add(graftBasis(lefts), graftBasis(rights), c);
        more = false;
        for (std::size_t i = factors.size(); i-- > 0;) {
            if (++pick[i] != factors[i].terms().end()) {
                more = true;
                break;
            }
            pick[i] = factors[i].terms().begin();
        }
    }
    return out;
}

inline TensorPolynomial tensorGraft(std::initializer_list<TensorPolynomial> factors) {
    return tensorGraft(std::span<const TensorPolynomial>(factors.begin(), factors.size()));
}

inline TensorPolynomial tensorGraft(const std::vector<TensorPolynomial>& factors) {
    return tensorGraft(std::span<const TensorPolynomial>(factors.data(), factors.size()));
}

} // namespace treepoly

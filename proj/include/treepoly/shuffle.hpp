#pragma once

// The planar shuffle product. The structure constant of S ⧢ T at a tree V
// counts the leaf subsets I of V with V|I = S and V|Ic = T. Two independent
// routes are provided: shuffleOracle, which evaluates that definition by
// exhaustive enumeration, and shuffleTrees, which expands recursively over
// the Gamma index sets of ordered block decompositions. Both produce
// integer-coefficient polynomials, homogeneous of degree deg S + deg T.

#include "treepoly/tree_polynomial.hpp"

#include <string>
#include <vector>

namespace treepoly {

/// A pair of nonempty subsets of {1..k} whose union is {1..k}, each stored
/// ascending. alpha marks the blocks met by the left factor, beta those met
/// by the right factor.
struct GammaPair {
    std::vector<int> alpha;
    std::vector<int> beta;

    friend bool operator==(const GammaPair&, const GammaPair&) = default;
};

/// All GammaPairs with |alpha| = m and |beta| = n, in lexicographic bitmask
/// order. Nonempty exactly when m <= k, n <= k and k <= m + n; the
/// cardinality is k! / ((k-n)! (k-m)! (m+n-k)!).
inline std::vector<GammaPair> gammaSet(int k, int m, int n) {
    if (k < 2) throw std::domain_error("gamma sets are indexed by k >= 2");
    if (k > 12) throw std::domain_error("gamma ground set too large");
    if (m < 1 || n < 1) throw std::domain_error("gamma block sizes must be positive");
    std::vector<GammaPair> out;
    if (m > k || n > k || k > m + n) return out;
    const unsigned full = (1u << k) - 1;
    auto members = [k](unsigned mask) {
        std::vector<int> v;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) v.push_back(i + 1);
        return v;
    };
    for (unsigned a = 1; a <= full; ++a) {
        if (__builtin_popcount(a) != m) continue;
        for (unsigned b = 1; b <= full; ++b) {
            if (__builtin_popcount(b) != n) continue;
            if ((a | b) != full) continue;
            out.push_back({members(a), members(b)});
        }
    }
    return out;
}

/// Word form, e.g. "(1, 234)".
inline std::string renderGammaPair(const GammaPair& p) {
    std::string out = "(";
    for (int i : p.alpha) out += std::to_string(i);
    out += ", ";
    for (int i : p.beta) out += std::to_string(i);
    return out + ")";
}

TreePolynomial shuffleTrees(const BasisElement& s, const BasisElement& t);

namespace detail {

inline TreePolynomial treeFactor(const PlanarTree& t) { return TreePolynomial(BasisElement(t)); }

/// Insertion of `item` among `host`'s children at 1-based slot `at`
/// (slot arity(host)+1 appends).
inline PlanarTree insertChild(const PlanarTree& host, const PlanarTree& item, int at) {
    std::vector<PlanarTree> kids;
    kids.reserve(host.children().size() + 1);
    for (int j = 0; j < static_cast<int>(host.children().size()) + 1; ++j) {
        if (j == at - 1) kids.push_back(item);
        if (j < static_cast<int>(host.children().size()))
            kids.push_back(host.children()[static_cast<std::size_t>(j)]);
    }
    return PlanarTree(std::move(kids));
}

// Every recursive call must strictly decrease the total degree (children
// replace their parent), which is what terminates the expansion.
inline TreePolynomial shuffleSubcall(const BasisElement& a, const BasisElement& b, int parentDegree) {
    if (a.degree() + b.degree() >= parentDegree)
        throw std::logic_error("shuffle recursion failed to decrease the degree");
    return shuffleTrees(a, b);
}

} // namespace detail

/// Recursive shuffle product of two basis elements. The unit is absorbing
/// (1 ⧢ T = T). For trees the product expands over all pair types
/// (alpha, beta) with |alpha| in {1, m}, |beta| in {1, n}, where m and n are
/// the root arities (a single-vertex factor only admits block count 1, since
/// it has no child decomposition):
///   - |alpha| = |beta| = 1: the side-by-side trees S.T and T.S;
///   - |alpha| = 1, |beta| = n: S inserted as a new child of T (k = n+1), or
///     shuffled into one child of T (k = n);
///   - the mirror case |beta| = 1, |alpha| = m;
///   - |alpha| = m, |beta| = n: one grafting factor per block, shuffling the
///     children that share a block.
inline TreePolynomial shuffleTrees(const BasisElement& s, const BasisElement& t) {
    if (s.isUnit()) return TreePolynomial(t);
    if (t.isUnit()) return TreePolynomial(s);
    const PlanarTree& left = s.tree();
    const PlanarTree& right = t.tree();
    const int m = left.isLeaf() ? 1 : left.arity();
    const int n = right.isLeaf() ? 1 : right.arity();
    const int total = left.degree() + right.degree();

    TreePolynomial out;
    for (int k = 2; k <= m + n; ++k) {
        for (const GammaPair& p : gammaSet(k, 1, 1)) {
            out.add(p.alpha[0] == 1 ? graft(std::vector<PlanarTree>{left, right})
                                    : graft(std::vector<PlanarTree>{right, left}),
                    1);
        }
        if (n >= 2) {
            for (const GammaPair& p : gammaSet(k, 1, n)) {
                const int slot = p.alpha[0];
                if (k == n + 1) {
                    out.add(BasisElement(detail::insertChild(right, left, slot)), 1);
                } else {
                    std::vector<TreePolynomial> factors;
                    factors.reserve(static_cast<std::size_t>(n));
                    for (int j = 0; j < n; ++j) {
                        const PlanarTree& child = right.children()[static_cast<std::size_t>(j)];
                        factors.push_back(j == slot - 1
                                              ? detail::shuffleSubcall(BasisElement(child), s, total)
                                              : detail::treeFactor(child));
                    }
                    out += graftPoly(factors);
                }
            }
        }
        if (m >= 2) {
            for (const GammaPair& p : gammaSet(k, m, 1)) {
                const int slot = p.beta[0];
                if (k == m + 1) {
                    out.add(BasisElement(detail::insertChild(left, right, slot)), 1);
                } else {
                    std::vector<TreePolynomial> factors;
                    factors.reserve(static_cast<std::size_t>(m));
                    for (int j = 0; j < m; ++j) {
                        const PlanarTree& child = left.children()[static_cast<std::size_t>(j)];
                        factors.push_back(j == slot - 1
                                              ? detail::shuffleSubcall(BasisElement(child), t, total)
                                              : detail::treeFactor(child));
                    }
                    out += graftPoly(factors);
                }
            }
        }
        if (m >= 2 && n >= 2) {
            for (const GammaPair& p : gammaSet(k, m, n)) {
                std::vector<TreePolynomial> factors;
                factors.reserve(static_cast<std::size_t>(k));
                std::size_t ai = 0, bi = 0;
                for (int j = 1; j <= k; ++j) {
                    const bool inAlpha = ai < p.alpha.size() && p.alpha[ai] == j;
                    const bool inBeta = bi < p.beta.size() && p.beta[bi] == j;
                    if (inAlpha && inBeta) {
                        factors.push_back(detail::shuffleSubcall(
                            BasisElement(left.children()[ai]), BasisElement(right.children()[bi]),
                            total));
                    } else if (inAlpha) {
                        factors.push_back(detail::treeFactor(left.children()[ai]));
                    } else {
                        factors.push_back(detail::treeFactor(right.children()[bi]));
                    }
                    ai += inAlpha;
                    bi += inBeta;
                }
                out += graftPoly(factors);
            }
        }
    }
    return out;
}

/// Definitional shuffle product: enumerate every tree V of the right degree
/// and count the leaf subsets contracting to the two factors. Intended as an
/// independent check of shuffleTrees; refuses totals above degreeBound.
inline TreePolynomial shuffleOracle(const BasisElement& s, const BasisElement& t,
                                    int degreeBound = 8) {
    const int total = s.degree() + t.degree();
    if (total > degreeBound) throw std::domain_error("oracle bound");
    TreePolynomial out;
    if (total == 0) {
        out.add(BasisElement::unit(), 1); // V = 1, I = {} is the only pair
        return out;
    }
    const int want = s.degree();
    for (const PlanarTree& candidate : enumerateTrees(total)) {
        long long count = 0;
        for (unsigned mask = 0; mask < (1u << total); ++mask) {
            if (__builtin_popcount(mask) != want) continue;
            LeafSet inside, outside;
            for (int i = 0; i < total; ++i)
                ((mask >> i) & 1u ? inside : outside).insert(i);
            if (contract(candidate, inside) == s && contract(candidate, outside) == t) ++count;
        }
        if (count > 0) out.add(BasisElement(candidate), RationalFunction(BigRational(count)));
    }
    return out;
}

/// Bilinear extension of the shuffle product.
inline TreePolynomial shufflePoly(const TreePolynomial& f, const TreePolynomial& g) {
    TreePolynomial out;
    for (const auto& [s, a] : f.terms())
        for (const auto& [t, b] : g.terms()) out.addScaled(shuffleTrees(s, t), a * b);
    return out;
}

/// Memo table for basis-pair shuffle products, for sweeps that revisit the
/// same pairs many times. Fill it single-threaded through product(); after
/// that, at() is safe to share read-only across threads.
class ShuffleCache {
public:
    const TreePolynomial& product(const BasisElement& s, const BasisElement& t) {
        const Key key(s, t);
        auto it = memo_.find(key);
        if (it == memo_.end()) it = memo_.emplace(key, shuffleTrees(s, t)).first;
        return it->second;
    }

    const TreePolynomial& at(const BasisElement& s, const BasisElement& t) const {
        auto it = memo_.find(Key(s, t));
        if (it == memo_.end()) throw std::logic_error("shuffle cache miss");
        return it->second;
    }

    std::size_t size() const { return memo_.size(); }

private:
    using Key = std::pair<BasisElement, BasisElement>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (auto c = compareTrees(a.first, b.first); c != 0) return c < 0;
            return compareTrees(a.second, b.second) < 0;
        }
    };
    std::map<Key, TreePolynomial, KeyLess> memo_;
};

inline TreePolynomial shufflePoly(const TreePolynomial& f, const TreePolynomial& g,
                                  const ShuffleCache& cache) {
    TreePolynomial out;
    for (const auto& [s, a] : f.terms())
        for (const auto& [t, b] : g.terms()) out.addScaled(cache.at(s, t), a * b);
    return out;
}

} // namespace treepoly

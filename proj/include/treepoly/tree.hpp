#pragma once

// Planar rooted trees. GeneralTree is the unrestricted model (vertices of
// arity 1 allowed); PlanarTree is the reduced form (every internal vertex has
// at least two ordered children) and serves as the monomial basis together
// with the adjoined unit element. All values are immutable after
// construction.

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treepoly {

class GeneralTree {
public:
    GeneralTree() = default; // single vertex
    explicit GeneralTree(std::vector<GeneralTree> children) : children_(std::move(children)) {}

    const std::vector<GeneralTree>& children() const { return children_; }
    bool isLeaf() const { return children_.empty(); }

    int leafCount() const {
        if (isLeaf()) return 1;
        int n = 0;
        for (const GeneralTree& c : children_) n += c.leafCount();
        return n;
    }

private:
    std::vector<GeneralTree> children_;
};

class PlanarTree {
public:
    PlanarTree() = default; // leaf

    explicit PlanarTree(std::vector<PlanarTree> children) : children_(std::move(children)) {
        if (children_.size() == 1) throw std::domain_error("tree vertex of arity 1 is not reduced");
        degree_ = children_.empty() ? 1 : 0;
        for (const PlanarTree& c : children_) degree_ += c.degree_;
    }

    bool isLeaf() const { return children_.empty(); }
    int arity() const { return static_cast<int>(children_.size()); }
    int degree() const { return degree_; } // number of leaves
    const std::vector<PlanarTree>& children() const { return children_; }

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) {
        return a.degree_ == b.degree_ && a.children_ == b.children_;
    }

private:
    std::vector<PlanarTree> children_;
    int degree_ = 1;
};

/// Total order on reduced trees: by degree, then by root arity, then
/// lexicographically by the child sequence.
inline std::strong_ordering compareTrees(const PlanarTree& a, const PlanarTree& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    for (int i = 0; i < a.arity(); ++i)
        if (auto c = compareTrees(a.children()[static_cast<std::size_t>(i)],
                                  b.children()[static_cast<std::size_t>(i)]);
            c != 0)
            return c;
    return std::strong_ordering::equal;
}

/// A basis element of the tree-polynomial algebra: the unit (empty tree) or a
/// reduced planar tree.
class BasisElement {
public:
    BasisElement() = default; // the unit
    BasisElement(PlanarTree t) : tree_(std::move(t)) {}

    static BasisElement unit() { return {}; }

    bool isUnit() const { return !tree_.has_value(); }

    const PlanarTree& tree() const {
        if (!tree_) throw std::logic_error("the unit is not a tree");
        return *tree_;
    }

    int degree() const { return tree_ ? tree_->degree() : 0; }

    friend bool operator==(const BasisElement&, const BasisElement&) = default;

private:
    std::optional<PlanarTree> tree_;
};

/// Extends the tree order to the basis: the unit is smallest.
inline std::strong_ordering compareTrees(const BasisElement& a, const BasisElement& b) {
    if (a.isUnit() || b.isUnit()) return !a.isUnit() <=> !b.isUnit();
    return compareTrees(a.tree(), b.tree());
}

struct TreeLess {
    bool operator()(const BasisElement& a, const BasisElement& b) const {
        return compareTrees(a, b) < 0;
    }
    bool operator()(const PlanarTree& a, const PlanarTree& b) const {
        return compareTrees(a, b) < 0;
    }
};

/// Root arity; 0 for the single-vertex tree. The unit has no arity.
inline int arity(const BasisElement& t) {
    if (t.isUnit()) throw std::domain_error("unit has no arity");
    return t.tree().arity();
}

inline int degree(const BasisElement& t) { return t.degree(); }

inline PlanarTree graft(std::vector<PlanarTree> children) {
    if (children.size() < 2) throw std::domain_error("grafting needs at least two subtrees");
    return PlanarTree(std::move(children));
}

inline PlanarTree graft(const std::vector<BasisElement>& children) {
    std::vector<PlanarTree> trees;
    trees.reserve(children.size());
    for (const BasisElement& c : children) {
        if (c.isUnit()) throw std::domain_error("cannot graft the unit");
        trees.push_back(c.tree());
    }
    return graft(std::move(trees));
}

inline PlanarTree corolla(int m) {
    if (m == 1) return PlanarTree();
    return graft(std::vector<PlanarTree>(static_cast<std::size_t>(m)));
}

/// The reduced tree on the vertices of arity != 1: a vertex with exactly one
/// child is deleted and bridged, recursively.
inline PlanarTree reduce(const GeneralTree& t) {
    if (t.isLeaf()) return {};
    if (t.children().size() == 1) return reduce(t.children().front());
    std::vector<PlanarTree> kids;
    kids.reserve(t.children().size());
    for (const GeneralTree& c : t.children()) kids.push_back(reduce(c));
    return PlanarTree(std::move(kids));
}

/// Forgetful inclusion of reduced trees into the unrestricted model.
inline GeneralTree embed(const PlanarTree& t) {
    if (t.isLeaf()) return {};
    std::vector<GeneralTree> kids;
    kids.reserve(t.children().size());
    for (const PlanarTree& c : t.children()) kids.push_back(embed(c));
    return GeneralTree(std::move(kids));
}

/// Leaf positions, 0-based in planar left-to-right order.
using LeafSet = std::set<int>;

namespace detail {

inline GeneralTree spannedSubtreeImpl(const PlanarTree& t, const std::vector<int>& sorted,
                                      std::size_t begin, std::size_t end, int offset) {
    if (t.isLeaf()) return {};
    std::vector<GeneralTree> kids;
    std::size_t at = begin;
    for (const PlanarTree& child : t.children()) {
        const int next = offset + child.degree();
        std::size_t stop = at;
        while (stop < end && sorted[stop] < next) ++stop;
        if (stop > at) kids.push_back(spannedSubtreeImpl(child, sorted, at, stop, offset));
        offset = next;
        at = stop;
    }
    return GeneralTree(std::move(kids));
}

} // namespace detail

/// Union of the root paths to the given leaves: the smallest subtree
/// containing them and the root. Its leaf set is exactly the input.
inline GeneralTree spannedSubtree(const PlanarTree& t, const LeafSet& leaves) {
    if (leaves.empty()) throw std::domain_error("spanned subtree needs a nonempty leaf set");
    if (*leaves.begin() < 0 || *leaves.rbegin() >= t.degree())
        throw std::out_of_range("leaf index out of range");
    const std::vector<int> sorted(leaves.begin(), leaves.end());
    return detail::spannedSubtreeImpl(t, sorted, 0, sorted.size(), 0);
}

/// Contraction onto a leaf subset: the reduction of the spanned subtree, with
/// the empty subset contracting to the unit. Contracting onto all leaves
/// returns the tree itself.
inline BasisElement contract(const PlanarTree& t, const LeafSet& leaves) {
    if (leaves.empty()) return BasisElement::unit();
    return reduce(spannedSubtree(t, leaves));
}

/// All reduced planar trees with the given number of leaves, ascending in the
/// compareTrees order. Counts by leaf number follow the little Schroeder
/// numbers 1, 1, 3, 11, 45, 197, ...
inline std::vector<PlanarTree> enumerateTrees(int leaves) {
    if (leaves <= 0) return {};
    std::vector<std::vector<PlanarTree>> byDegree(static_cast<std::size_t>(leaves) + 1);
    byDegree[1] = {PlanarTree()};
    for (int d = 2; d <= leaves; ++d) {
        std::vector<PlanarTree>& out = byDegree[static_cast<std::size_t>(d)];
        // Compositions of d into >= 2 parts, encoded by nonempty cut masks on
        // the d - 1 gaps.
        for (unsigned mask = 1; mask < (1u << (d - 1)); ++mask) {
            std::vector<int> parts;
            int run = 1;
            for (int gap = 0; gap < d - 1; ++gap) {
                if (mask & (1u << gap)) {
                    parts.push_back(run);
                    run = 1;
                } else {
                    ++run;
                }
            }
            parts.push_back(run);
            std::vector<std::size_t> pick(parts.size(), 0);
            bool more = true;
            while (more) {
                std::vector<PlanarTree> kids;
                kids.reserve(parts.size());
                for (std::size_t i = 0; i < parts.size(); ++i)
                    kids.push_back(byDegree[static_cast<std::size_t>(parts[i])][pick[i]]);
                out.push_back(PlanarTree(std::move(kids)));
                more = false;
                for (std::size_t i = parts.size(); i-- > 0;) {
                    if (++pick[i] < byDegree[static_cast<std::size_t>(parts[i])].size()) {
                        more = true;
                        break;
                    }
                    pick[i] = 0;
                }
            }
        }
        std::sort(out.begin(), out.end(), TreeLess{});
    }
    return std::move(byDegree[static_cast<std::size_t>(leaves)]);
}

/// The unit followed by all trees of degree 1..maxDegree in canonical order.
inline std::vector<BasisElement> enumerateBasis(int maxDegree) {
    std::vector<BasisElement> out{BasisElement::unit()};
    for (int d = 1; d <= maxDegree; ++d)
        for (PlanarTree& t : enumerateTrees(d)) out.emplace_back(std::move(t));
    return out;
}

} // namespace treepoly

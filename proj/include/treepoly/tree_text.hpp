#pragma once

// Canonical text form for trees:
//
//   elem := "1" | tree
//   tree := "x" | "x^" INT(>=2) | "(" tree (WS tree)+ ")"
//
// "x^m" is sugar for the m-ary corolla; the renderer applies it whenever all
// children of a vertex are leaves.

#include "treepoly/parse_error.hpp"
#include "treepoly/tree.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace treepoly {

inline std::string renderTree(const PlanarTree& t) {
    if (t.isLeaf()) return "x";
    bool allLeaves = true;
    for (const PlanarTree& c : t.children()) allLeaves = allLeaves && c.isLeaf();
    if (allLeaves) return "x^" + std::to_string(t.arity());
    std::string out = "(";
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i > 0) out += " ";
        out += renderTree(t.children()[i]);
    }
    return out + ")";
}

inline std::string renderTree(const BasisElement& t) {
    return t.isUnit() ? "1" : renderTree(t.tree());
}

namespace detail {

class TreeParser {
public:
    explicit TreeParser(std::string_view src, std::size_t start = 0) : src_(src), pos_(start) {}

    BasisElement parseElement() {
        skipSpace();
        if (peek() == '1') {
            ++pos_;
            return BasisElement::unit();
        }
        return BasisElement(parseTree());
    }

    PlanarTree parseTree() {
        skipSpace();
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            if (peek() != '^') return {};
            ++pos_;
            const std::size_t at = pos_;
            const long m = parseInt();
            if (m < 2) throw ParseError("corolla exponent must be at least 2", at);
            return corolla(static_cast<int>(m));
        }
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            std::vector<PlanarTree> kids;
            kids.push_back(parseTree());
            while (true) {
                skipSpace();
                if (peek() == ')') break;
                if (peek() == '\0') throw ParseError("expected ')'", pos_);
                kids.push_back(parseTree());
            }
            ++pos_;
            if (kids.size() < 2) throw ParseError("non-reduced tree literal", open);
            return PlanarTree(std::move(kids));
        }
        throw ParseError("expected 'x' or '('", pos_);
    }

    void skipSpace() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
            ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    std::size_t position() const { return pos_; }

private:
    long parseInt() {
        const std::size_t begin = pos_;
        long v = 0;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000000) throw ParseError("corolla exponent too large", begin);
            ++pos_;
        }
        if (pos_ == begin) throw ParseError("expected integer", pos_);
        return v;
    }

    std::string_view src_;
    std::size_t pos_;
};

} // namespace detail

inline BasisElement parseTree(std::string_view text) {
    detail::TreeParser parser(text);
    BasisElement out = parser.parseElement();
    parser.skipSpace();
    if (parser.position() != text.size()) throw ParseError("unexpected trailing input", parser.position());
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const PlanarTree& t) { return os << renderTree(t); }
inline std::ostream& operator<<(std::ostream& os, const BasisElement& t) { return os << renderTree(t); }

} // namespace treepoly

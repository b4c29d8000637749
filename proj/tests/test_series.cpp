#include "treepoly/series.hpp"
#include "treepoly/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace treepoly;

namespace {

PlanarTree x() { return {}; }
BasisElement unit() { return BasisElement::unit(); }

RationalFunction qPower(int n) {
    return RationalFunction(QPolynomial::monomial(1, n) - QPolynomial::variable());
}

} // namespace

TEST_CASE("exponential coefficients of small trees") {
    ExpTable table;
    REQUIRE(table.coefficient(unit()) == RationalFunction(1));
    REQUIRE(table.coefficient(BasisElement(x())) == RationalFunction(1));
    REQUIRE(table.coefficient(BasisElement(corolla(2))) == RationalFunction(BigRational(1, 2)));

    for (int m = 2; m <= 6; ++m)
        REQUIRE(table.coefficient(BasisElement(corolla(m))) == qBinomial(m) / qPower(m));

    for (int m = 2; m <= 5; ++m) {
        const RationalFunction expected = qBinomial(2) / qPower(m + 1) * (qBinomial(m) / qPower(m));
        REQUIRE(table.coefficient(BasisElement(graft(std::vector<PlanarTree>{corolla(m), x()}))) ==
                expected);
        REQUIRE(table.coefficient(BasisElement(graft(std::vector<PlanarTree>{x(), corolla(m)}))) ==
                expected);
    }
}

TEST_CASE("coefficient recursion invariant on random trees") {
    ExpTable table;
    for (int d = 2; d <= 6; ++d)
        for (const PlanarTree& t : enumerateTrees(d)) {
            RationalFunction product = qBinomial(t.arity()) / qPower(t.degree());
            for (const PlanarTree& child : t.children())
                product *= table.coefficient(BasisElement(child));
            REQUIRE(table.coefficient(BasisElement(t)) == product);
        }
}

TEST_CASE("series truncations") {
    ExpTable table;
    const TruncatedSeries one = expSeries(1, table);
    TreePolynomial expected1(unit());
    expected1.add(BasisElement(x()), 1);
    REQUIRE(one.body() == expected1);

    const TruncatedSeries two = expSeries(2, table);
    TreePolynomial expected2 = expected1;
    expected2.add(BasisElement(corolla(2)), RationalFunction(BigRational(1, 2)));
    REQUIRE(two.body() == expected2);

    const TruncatedSeries three = expSeries(3, table);
    REQUIRE(three.coefficient(BasisElement(corolla(3))) == qBinomial(3) / qPower(3));
    const RationalFunction binary = RationalFunction(BigRational(1, 2)) * (qBinomial(2) / qPower(3));
    REQUIRE(three.coefficient(BasisElement(graft(std::vector<PlanarTree>{corolla(2), x()}))) ==
            binary);
    REQUIRE(three.coefficient(BasisElement(graft(std::vector<PlanarTree>{x(), corolla(2)}))) ==
            binary);
    REQUIRE(three.body().termCount() == 1 + 1 + 1 + 3);

    REQUIRE_THROWS_AS(expSeries(-1), std::domain_error);
    // Re-truncating an existing body drops the high terms.
    REQUIRE(TruncatedSeries(2, three.body()) == two);
}

TEST_CASE("specialization of the series") {
    ExpTable table;
    const TruncatedSeries two = expSeries(2, table);
    REQUIRE(specializeSeries(two, 2).body() == two.body()); // constants throughout

    // The k-ary series drops every corolla wider than k: (q choose m) has a
    // root at q = k for m > k.
    const TruncatedSeries three = expSeries(3, table);
    REQUIRE(specializeSeries(three, 2).coefficient(BasisElement(corolla(3))).isZero());

    for (int k = 2; k <= 4; ++k) {
        const TruncatedSeries s = expSeries(k, table);
        const BigRational expected(1, BigInt(boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(k))) - k);
        REQUIRE(specializeSeries(s, k).coefficient(BasisElement(corolla(k))) ==
                RationalFunction(expected));
    }

    REQUIRE_THROWS_AS(specializeSeries(two, 1), std::domain_error);
    REQUIRE_THROWS_AS(specializeSeries(two, 0), std::domain_error);
}

TEST_CASE("truncated coproduct") {
    TreePolynomial body(unit());
    body.add(BasisElement(x()), 1);
    const TensorPolynomial delta = truncatedCoproduct(TruncatedSeries(1, body));
    TensorPolynomial expected(unit(), unit());
    expected.add(BasisElement(x()), unit(), 1);
    expected.add(unit(), BasisElement(x()), 1);
    REQUIRE(delta == expected);

    ExpTable table;
    const TensorPolynomial deltaExp2 = truncatedCoproduct(expSeries(2, table));
    REQUIRE(coeff2(deltaExp2, BasisElement(x()), BasisElement(x())) == RationalFunction(1));

    REQUIRE(truncatedCoproduct(TruncatedSeries(3)).isZero());
}

TEST_CASE("the exponential series is grouplike degree by degree") {
    REQUIRE(checkExpGrouplike(2).passed());
    const IdentityReport atFour = checkExpGrouplike(4);
    REQUIRE(atFour.passed());
    REQUIRE(atFour.checked > 0);
}

TEST_CASE("perturbing one coefficient breaks grouplikeness at (x, x)") {
    ExpTable table;
    TreePolynomial body = expSeries(2, table).body();
    body.add(BasisElement(corolla(2)), RationalFunction(BigRational(1, 3)) - RationalFunction(BigRational(1, 2)));
    const IdentityReport report = grouplikeReport(TruncatedSeries(2, body));
    REQUIRE_FALSE(report.passed());
    REQUIRE(report.violations.size() == 1);
    REQUIRE(report.violations[0].where == "(x, x)");
}

TEST_CASE("quadratic relations for explicit pairs") {
    ExpTable table;
    const IdentityReport atXX = quadraticRelation(BasisElement(x()), BasisElement(x()), table);
    REQUIRE(atXX.passed());
    // Both routes give 1 there: a(x)^2 = 1 and 2 a(x^2) = 1.
    REQUIRE(table.coefficient(BasisElement(corolla(2))) * RationalFunction(2) ==
            RationalFunction(1));

    for (int m = 3; m <= 5; ++m) {
        const BasisElement v(x());
        const BasisElement w(corolla(m));
        REQUIRE(quadraticRelation(v, w, table).passed());
        // The closed form of the shuffle side collapses back to a(x^m).
        const RationalFunction axm = table.coefficient(w);
        const TreePolynomial productVW = shuffleTrees(v, w);
        RationalFunction sum;
        for (const auto& [t, c] : productVW.terms()) sum += table.coefficient(t) * c;
        REQUIRE(sum == axm);
        const RationalFunction viaTerms =
            RationalFunction(m + 1) * (qBinomial(m + 1) / qPower(m + 1)) +
            RationalFunction(m) * (qBinomial(m) / qPower(m + 1)) +
            RationalFunction(2) * (qBinomial(2) / qPower(m + 1)) * (qBinomial(m) / qPower(m));
        REQUIRE(viaTerms == axm);
    }
}

TEST_CASE("supporting polynomial identity") {
    // (q - m)(q^m - q) + m(q^m - q) + q(q - 1) = q^{m+1} - q
    const QPolynomial q = QPolynomial::variable();
    for (int m = 3; m <= 6; ++m) {
        const QPolynomial qm = QPolynomial::monomial(1, m) - q;
        const QPolynomial lhs = (q - QPolynomial(m)) * qm + QPolynomial(m) * qm + q * (q - QPolynomial(1));
        REQUIRE(lhs == QPolynomial::monomial(1, m + 1) - q);
    }
}

TEST_CASE("quadratic relations sweep at small degree") {
    REQUIRE(verifyQuadratic(5).passed());
}

TEST_CASE("denominators stay clear of integer specialization points") {
    ExpTable table;
    for (int d = 2; d <= 8; ++d)
        for (const PlanarTree& t : enumerateTrees(d)) {
            const RationalFunction a = table.coefficient(BasisElement(t));
            // The denominator divides the product of q^n - q over the
            // internal subtrees, so it cannot vanish at any integer >= 2.
            QPolynomial product = 1;
            std::vector<const PlanarTree*> stack{&t};
            while (!stack.empty()) {
                const PlanarTree* top = stack.back();
                stack.pop_back();
                if (top->isLeaf()) continue;
                product *= QPolynomial::monomial(1, top->degree()) - QPolynomial::variable();
                for (const PlanarTree& child : top->children()) stack.push_back(&child);
            }
            QPolynomial quo, rem;
            divmod(product, a.denominator(), quo, rem);
            REQUIRE(rem.isZero());
            for (int k = 2; k <= 10; ++k)
                REQUIRE(a.denominator().evaluate(k) != 0);
        }
}

TEST_CASE("specialization commutes with the coproduct") {
    REQUIRE(verifySpecialization({2, 3, 5}, 4).passed());
}

TEST_CASE("series text survives a round trip") {
    ExpTable table;
    const TreePolynomial body = expSeries(4, table).body();
    REQUIRE(parsePolynomial(renderPolynomial(body)) == body);
}

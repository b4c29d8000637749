// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// process exits nonzero if any fails.

#include "treepoly/treepoly.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace treepoly;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int gFailures = 0;

void runCriterion(int number, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++gFailures;
    std::printf("%s  %2d  %-34s %8.2fs  %s\n", outcome.pass ? "PASS" : "FAIL", number,
                name.c_str(), seconds, outcome.detail.c_str());
    std::fflush(stdout);
}

Outcome fromReport(const IdentityReport& report, std::string extra = {}) {
    std::ostringstream detail;
    detail << "checked " << report.checked << " cases";
    if (!extra.empty()) detail << "; " << extra;
    if (!report.passed()) {
        const Violation& v = report.violations.front();
        detail << "; first violation at " << v.where << ": " << v.lhs << " != " << v.rhs;
    }
    return {report.passed(), detail.str()};
}

PlanarTree x() { return {}; }
BasisElement unit() { return BasisElement::unit(); }

// Tree counts by leaf number through the compositional recurrence alone:
// t(1) = 1 and t(n) sums, over ordered splits into at least two positive
// parts, the products of the part counts. Shares no code with the
// enumerator.
std::vector<BigInt> countsByRecurrence(int maxN) {
    std::vector<BigInt> t(static_cast<std::size_t>(maxN) + 1, BigInt(0));
    t[1] = 1;
    for (int n = 2; n <= maxN; ++n) {
        std::vector<BigInt> tuples(static_cast<std::size_t>(n) + 1, BigInt(0));
        tuples[0] = 1;
        BigInt total = 0;
        for (int parts = 1; parts <= n; ++parts) {
            std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, BigInt(0));
            for (int s = 1; s <= n; ++s)
                for (int c = 1; c <= s; ++c) next[static_cast<std::size_t>(s)] +=
                    tuples[static_cast<std::size_t>(s - c)] * t[static_cast<std::size_t>(c)];
            tuples = std::move(next);
            if (parts >= 2) total += tuples[static_cast<std::size_t>(n)];
        }
        t[static_cast<std::size_t>(n)] = total;
    }
    return t;
}

Outcome shuffleBaseCase() {
    const auto start = std::chrono::steady_clock::now();
    const TreePolynomial product = shuffleTrees(BasisElement(x()), BasisElement(x()));
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const TreePolynomial expected(BasisElement(corolla(2)), 2);
    if (product != expected)
        return {false, "product is " + renderPolynomial(product)};
    if (ms >= 1.0) {
        std::ostringstream detail;
        detail << "took " << ms << " ms (limit 1 ms)";
        return {false, detail.str()};
    }
    std::ostringstream detail;
    detail << "2*x^2 in " << ms << " ms";
    return {true, detail.str()};
}

Outcome oracleEquivalence() {
    const auto start = std::chrono::steady_clock::now();
    const IdentityReport report = verifyOracleEquivalence(7);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome outcome = fromReport(report);
    if (seconds >= 60.0) {
        outcome.pass = false;
        outcome.detail += "; exceeded the 60 s budget";
    }
    return outcome;
}

Outcome shuffleAxioms() {
    const IdentityReport comm = verifyShuffleCommutativity(7);
    const IdentityReport assoc = verifyShuffleAssociativity(6);
    std::ostringstream detail;
    detail << "commutativity " << comm.checked << " pairs, associativity " << assoc.checked
           << " triples";
    if (!comm.passed()) return {false, "commutativity: " + comm.violations.front().where};
    if (!assoc.passed()) return {false, "associativity: " + assoc.violations.front().where};
    return {true, detail.str()};
}

bool sameGammaSet(const std::vector<GammaPair>& got, std::vector<GammaPair> expected) {
    auto key = [](const GammaPair& p) { return std::tie(p.alpha, p.beta); };
    auto lt = [&key](const GammaPair& a, const GammaPair& b) { return key(a) < key(b); };
    std::vector<GammaPair> sortedGot = got;
    std::sort(sortedGot.begin(), sortedGot.end(), lt);
    std::sort(expected.begin(), expected.end(), lt);
    return sortedGot == expected;
}

Outcome gammaCounts() {
    const IdentityReport formula = verifyGammaCounts(7, 5);
    if (!formula.passed()) return fromReport(formula);

    using Pairs = std::vector<GammaPair>;
    bool lists = true;
    lists &= sameGammaSet(gammaSet(2, 1, 1), Pairs{{{1}, {2}}, {{2}, {1}}});
    lists &= sameGammaSet(gammaSet(2, 1, 2), Pairs{{{1}, {1, 2}}, {{2}, {1, 2}}});
    lists &= sameGammaSet(gammaSet(2, 2, 1), Pairs{{{1, 2}, {1}}, {{1, 2}, {2}}});
    lists &= sameGammaSet(gammaSet(2, 2, 2), Pairs{{{1, 2}, {1, 2}}});
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            if (m >= 3 || n >= 3) lists &= gammaSet(2, m, n).empty();
    lists &= sameGammaSet(gammaSet(3, 1, 3),
                          Pairs{{{1}, {1, 2, 3}}, {{2}, {1, 2, 3}}, {{3}, {1, 2, 3}}});
    // The reference list of singleton-against-the-rest pairs on {1..4}; its
    // blocks have sizes (1, 3), and the companion count |Gamma_4(1, 4)| = 4
    // follows from the formula.
    lists &= sameGammaSet(gammaSet(4, 1, 3), Pairs{{{1}, {2, 3, 4}},
                                                   {{2}, {1, 3, 4}},
                                                   {{3}, {1, 2, 4}},
                                                   {{4}, {1, 2, 3}}});
    lists &= gammaSet(4, 1, 4).size() == 4;
    if (!lists) return {false, "an explicit reference list is not reproduced"};
    return fromReport(formula, "reference lists reproduced");
}

Outcome duality() {
    return fromReport(verifyDuality(200, 5));
}

Outcome homomorphismConsistency() {
    return fromReport(verifyCoproductHomomorphism(6));
}

Outcome grouplike() {
    const auto start = std::chrono::steady_clock::now();
    const IdentityReport report = verifyGrouplike(6);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome outcome = fromReport(report);
    if (seconds >= 60.0) {
        outcome.pass = false;
        outcome.detail += "; exceeded the 60 s budget";
    }
    return outcome;
}

Outcome quadratic() {
    const IdentityReport sweep = verifyQuadratic(6);
    if (!sweep.passed()) return fromReport(sweep);

    ExpTable table;
    auto qPower = [](int n) {
        return RationalFunction(QPolynomial::monomial(1, n) - QPolynomial::variable());
    };
    for (int m = 3; m <= 5; ++m) {
        const RationalFunction axm = table.coefficient(BasisElement(corolla(m)));
        const RationalFunction viaTerms =
            RationalFunction(m + 1) * (qBinomial(m + 1) / qPower(m + 1)) +
            RationalFunction(m) * (qBinomial(m) / qPower(m + 1)) +
            RationalFunction(2) * (qBinomial(2) / qPower(m + 1)) * (qBinomial(m) / qPower(m));
        if (viaTerms != axm)
            return {false, "closed form fails at m = " + std::to_string(m)};
        const TreePolynomial product = shuffleTrees(BasisElement(x()), BasisElement(corolla(m)));
        RationalFunction shuffleSide;
        for (const auto& [t, c] : product.terms()) shuffleSide += table.coefficient(t) * c;
        if (shuffleSide != axm)
            return {false, "shuffle side fails at m = " + std::to_string(m)};
    }
    const QPolynomial q = QPolynomial::variable();
    for (int m = 3; m <= 6; ++m) {
        const QPolynomial qm = QPolynomial::monomial(1, m) - q;
        const QPolynomial lhs =
            (q - QPolynomial(m)) * qm + QPolynomial(m) * qm + q * (q - QPolynomial(1));
        if (lhs != QPolynomial::monomial(1, m + 1) - q)
            return {false, "polynomial identity fails at m = " + std::to_string(m)};
    }
    return fromReport(sweep, "closed forms for m = 3, 4, 5 and the polynomial identity hold");
}

Outcome enumeration() {
    const std::vector<long long> expected{1, 1, 3, 11, 45, 197};
    const std::vector<BigInt> recurred = countsByRecurrence(6);
    for (int n = 1; n <= 6; ++n) {
        const auto trees = enumerateTrees(n);
        if (BigInt(trees.size()) != recurred[static_cast<std::size_t>(n)])
            return {false, "enumerator disagrees with the recurrence at n = " + std::to_string(n)};
        if (trees.size() != static_cast<std::size_t>(expected[static_cast<std::size_t>(n - 1)]))
            return {false, "count at n = " + std::to_string(n) + " is " +
                               std::to_string(trees.size())};
    }
    return {true, "counts 1, 1, 3, 11, 45, 197 confirmed twice"};
}

Outcome specialization() {
    return fromReport(verifySpecialization({2, 3, 5}, 5));
}

} // namespace

int main() {
    runCriterion(1, "shuffle base case", shuffleBaseCase);
    runCriterion(2, "oracle equivalence to degree 7", oracleEquivalence);
    runCriterion(3, "shuffle axioms", shuffleAxioms);
    runCriterion(4, "gamma counts and reference lists", gammaCounts);
    runCriterion(5, "coproduct-shuffle duality", duality);
    runCriterion(6, "coproduct homomorphism to degree 6", homomorphismConsistency);
    runCriterion(7, "grouplike exponential at cap 6", grouplike);
    runCriterion(8, "quadratic relations to degree 6", quadratic);
    runCriterion(9, "tree enumeration counts", enumeration);
    runCriterion(10, "specialization at q = 2, 3, 5", specialization);

    if (gFailures == 0) {
        std::printf("all 10 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", gFailures);
    return 1;
}

#pragma once

// Exhaustive and randomized identity sweeps, each a pure function returning
// an IdentityReport. Work items are independent, so sweeps can optionally
// fan out over worker threads; violations are reported in item order either
// way.

#include "treepoly/series.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

namespace treepoly {

namespace detail {

template <typename Check>
inline void sweepIndexed(std::size_t count, int jobs, const Check& check, IdentityReport& report) {
    report.checked += static_cast<long long>(count);
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            if (std::optional<Violation> v = check(i)) report.violations.push_back(std::move(*v));
        return;
    }
    const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
    std::vector<std::pair<std::size_t, Violation>> hits;
    std::mutex hitsMutex;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failureMutex;
    auto worker = [&] {
        try {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                if (std::optional<Violation> v = check(i)) {
                    std::lock_guard<std::mutex> lock(hitsMutex);
                    hits.emplace_back(i, std::move(*v));
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failureMutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, v] : hits) report.violations.push_back(std::move(v));
}

inline std::vector<std::pair<BasisElement, BasisElement>> basisPairs(int maxTotalDegree) {
    const std::vector<BasisElement> basis = enumerateBasis(maxTotalDegree);
    std::vector<std::pair<BasisElement, BasisElement>> out;
    for (const BasisElement& s : basis)
        for (const BasisElement& t : basis)
            if (s.degree() + t.degree() <= maxTotalDegree) out.emplace_back(s, t);
    return out;
}

inline std::string pairLabel(const BasisElement& v, const BasisElement& w) {
    return "(" + renderTree(v) + ", " + renderTree(w) + ")";
}

} // namespace detail

/// Recursive shuffle against the definitional enumeration, for every basis
/// pair with total degree within the bound.
inline IdentityReport verifyOracleEquivalence(int maxTotalDegree, int jobs = 1) {
    IdentityReport report{"shuffle-oracle-equivalence", maxTotalDegree};
    const auto pairs = detail::basisPairs(maxTotalDegree);
    detail::sweepIndexed(
        pairs.size(), jobs,
        [&](std::size_t i) -> std::optional<Violation> {
            const auto& [s, t] = pairs[i];
            const TreePolynomial fast = shuffleTrees(s, t);
            const TreePolynomial slow = shuffleOracle(s, t, maxTotalDegree);
            if (fast == slow) return std::nullopt;
            return Violation{detail::pairLabel(s, t), renderPolynomial(fast),
                             renderPolynomial(slow)};
        },
        report);
    return report;
}

inline IdentityReport verifyShuffleCommutativity(int maxTotalDegree, int jobs = 1) {
    IdentityReport report{"shuffle-commutativity", maxTotalDegree};
    const auto pairs = detail::basisPairs(maxTotalDegree);
    detail::sweepIndexed(
        pairs.size(), jobs,
        [&](std::size_t i) -> std::optional<Violation> {
            const auto& [s, t] = pairs[i];
            const TreePolynomial st = shuffleTrees(s, t);
            const TreePolynomial ts = shuffleTrees(t, s);
            if (st == ts) return std::nullopt;
            return Violation{detail::pairLabel(s, t), renderPolynomial(st), renderPolynomial(ts)};
        },
        report);
    return report;
}

inline IdentityReport verifyShuffleAssociativity(int maxTotalDegree, int jobs = 1) {
    IdentityReport report{"shuffle-associativity", maxTotalDegree};
    const std::vector<BasisElement> basis = enumerateBasis(maxTotalDegree);
    std::vector<std::array<BasisElement, 3>> triples;
    for (const BasisElement& r : basis)
        for (const BasisElement& s : basis) {
            if (r.degree() + s.degree() > maxTotalDegree) continue;
            for (const BasisElement& t : basis) {
                if (r.degree() + s.degree() + t.degree() > maxTotalDegree) continue;
                triples.push_back({r, s, t});
            }
        }
    // All products live on basis pairs within the bound, so one prefilled
    // cache serves every triple read-only.
    ShuffleCache cache;
    for (const auto& [s, t] : detail::basisPairs(maxTotalDegree)) cache.product(s, t);
    detail::sweepIndexed(
        triples.size(), jobs,
        [&](std::size_t i) -> std::optional<Violation> {
            const auto& [r, s, t] = triples[i];
            const TreePolynomial rs = cache.at(r, s);
            const TreePolynomial st = cache.at(s, t);
            const TreePolynomial lhs = shufflePoly(rs, TreePolynomial(t), cache);
            const TreePolynomial rhs = shufflePoly(TreePolynomial(r), st, cache);
            if (lhs == rhs) return std::nullopt;
            return Violation{"(" + renderTree(r) + ", " + renderTree(s) + ", " + renderTree(t) + ")",
                             renderPolynomial(lhs), renderPolynomial(rhs)};
        },
        report);
    return report;
}

/// Gamma cardinalities against the closed formula, including the emptiness
/// characterization m <= k, n <= k, k <= m + n.
inline IdentityReport verifyGammaCounts(int maxK, int maxBlockSize) {
    IdentityReport report{"gamma-counts", maxK};
    for (int k = 2; k <= maxK; ++k)
        for (int m = 1; m <= maxBlockSize; ++m)
            for (int n = 1; n <= maxBlockSize; ++n) {
                ++report.checked;
                const auto set = gammaSet(k, m, n);
                const bool feasible = m <= k && n <= k && k <= m + n;
                BigInt expected = 0;
                if (feasible)
                    expected = factorial(static_cast<unsigned>(k)) /
                               (factorial(static_cast<unsigned>(k - n)) *
                                factorial(static_cast<unsigned>(k - m)) *
                                factorial(static_cast<unsigned>(m + n - k)));
                if (BigInt(set.size()) != expected)
                    report.violations.push_back(
                        {"Gamma_" + std::to_string(k) + "(" + std::to_string(m) + "," +
                             std::to_string(n) + ")",
                         std::to_string(set.size()), expected.str()});
            }
    return report;
}

namespace detail {

inline RationalFunction randomRationalFunction(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<int> degree(0, 2);
    auto randomPoly = [&](int maxDeg, bool forceNonzero) {
        std::vector<BigRational> coeffs(static_cast<std::size_t>(maxDeg) + 1);
        for (auto& c : coeffs) c = small(rng);
        QPolynomial p{std::vector<BigRational>(coeffs)};
        if (forceNonzero && p.isZero()) p = 1;
        return p;
    };
    return RationalFunction(randomPoly(degree(rng), false), randomPoly(degree(rng) / 2, true));
}

inline TreePolynomial randomPolynomial(std::mt19937_64& rng,
                                       const std::vector<std::vector<PlanarTree>>& treesByDegree,
                                       int maxDegree) {
    std::uniform_int_distribution<int> termCount(1, 4);
    std::uniform_int_distribution<int> degree(0, maxDegree);
    TreePolynomial out;
    const int terms = termCount(rng);
    for (int i = 0; i < terms; ++i) {
        const int d = degree(rng);
        BasisElement t;
        if (d > 0) {
            const auto& pool = treesByDegree[static_cast<std::size_t>(d)];
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            t = BasisElement(pool[pick(rng)]);
        }
        out.add(t, randomRationalFunction(rng));
    }
    return out;
}

} // namespace detail

/// Coefficient duality on random polynomials: for every pair (V, W) within
/// the degree bound, the coefficient of V (x) W in the coproduct must match
/// the shuffle-side sum. Sampling is deterministic in the seed.
inline IdentityReport verifyDuality(int sampleCount, int maxPairDegree,
                                    std::uint64_t seed = 20260810, int jobs = 1) {
    IdentityReport report{"duality", maxPairDegree};
    std::vector<std::vector<PlanarTree>> treesByDegree(static_cast<std::size_t>(maxPairDegree) + 1);
    for (int d = 1; d <= maxPairDegree; ++d)
        treesByDegree[static_cast<std::size_t>(d)] = enumerateTrees(d);
    std::mt19937_64 rng(seed);
    std::vector<TreePolynomial> samples;
    samples.reserve(static_cast<std::size_t>(sampleCount));
    for (int i = 0; i < sampleCount; ++i)
        samples.push_back(detail::randomPolynomial(rng, treesByDegree, maxPairDegree));
    const auto pairs = detail::basisPairs(maxPairDegree);
    ShuffleCache cache;
    for (const auto& [v, w] : pairs) cache.product(v, w);
    detail::sweepIndexed(
        samples.size(), jobs,
        [&](std::size_t i) -> std::optional<Violation> {
            const TreePolynomial& f = samples[i];
            const TensorPolynomial delta = coproductPoly(f);
            for (const auto& [v, w] : pairs) {
                const RationalFunction lhs = delta.coefficient(v, w);
                RationalFunction rhs;
                for (const auto& [t, c] : f.terms()) rhs += c * cache.at(v, w).coefficient(t);
                if (lhs != rhs)
                    return Violation{"sample " + std::to_string(i) + " at " +
                                         detail::pairLabel(v, w),
                                     formatRationalFunction(lhs), formatRationalFunction(rhs)};
            }
            return std::nullopt;
        },
        report);
    report.checked = static_cast<long long>(samples.size() * pairs.size());
    return report;
}

/// The subset-formula coproduct against the recursive homomorphism route:
/// on a grafted tree the coproduct must equal the componentwise grafting of
/// the child coproducts, and on the single-vertex tree it must equal
/// x (x) 1 + 1 (x) x.
inline IdentityReport verifyCoproductHomomorphism(int maxDegree) {
    IdentityReport report{"coproduct-homomorphism", maxDegree};
    for (int d = 1; d <= maxDegree; ++d)
        for (const PlanarTree& t : enumerateTrees(d)) {
            ++report.checked;
            const TensorPolynomial lhs = coproductTree(BasisElement(t));
            TensorPolynomial rhs;
            if (t.isLeaf()) {
                rhs.add(BasisElement(PlanarTree()), BasisElement::unit(), 1);
                rhs.add(BasisElement::unit(), BasisElement(PlanarTree()), 1);
            } else {
                std::vector<TensorPolynomial> factors;
                factors.reserve(t.children().size());
                for (const PlanarTree& child : t.children())
                    factors.push_back(coproductTree(BasisElement(child)));
                rhs = tensorGraft(factors);
            }
            if (lhs != rhs)
                report.violations.push_back(
                    {renderTree(t), renderTensor(lhs, true), renderTensor(rhs, true)});
        }
    return report;
}

inline IdentityReport verifyGrouplike(int cap) { return checkExpGrouplike(cap); }

/// Quadratic relations for every basis pair within the total-degree bound.
inline IdentityReport verifyQuadratic(int maxTotalDegree, int jobs = 1) {
    IdentityReport report{"quadratic", maxTotalDegree};
    ExpTable table;
    table.extendTo(maxTotalDegree);
    const auto pairs = detail::basisPairs(maxTotalDegree);
    detail::sweepIndexed(
        pairs.size(), jobs,
        [&](std::size_t i) -> std::optional<Violation> {
            const auto& [v, w] = pairs[i];
            const RationalFunction lhs = table.at(v) * table.at(w);
            const TreePolynomial product = shuffleTrees(v, w);
            RationalFunction rhs;
            for (const auto& [t, c] : product.terms()) rhs += table.at(t) * c;
            if (lhs == rhs) return std::nullopt;
            return Violation{detail::pairLabel(v, w), formatRationalFunction(lhs),
                             formatRationalFunction(rhs)};
        },
        report);
    return report;
}

/// Specializing q at each point must commute with the truncated coproduct
/// (at every cap up to the bound) and reproduce the coefficient duality over
/// Q on the specialized series.
inline IdentityReport verifySpecialization(const std::vector<int>& points, int cap) {
    IdentityReport report{"specialization", cap};
    ExpTable table;
    const TruncatedSeries series = expSeries(cap, table);
    const auto pairs = detail::basisPairs(cap);
    ShuffleCache cache;
    for (const auto& [v, w] : pairs) cache.product(v, w);
    for (int k : points) {
        for (int n = 0; n <= cap; ++n) {
            ++report.checked;
            const TruncatedSeries truncated(n, series.body());
            const TensorPolynomial viaSeries = truncatedCoproduct(specializeSeries(truncated, k));
            const TensorPolynomial viaTensor = specializeTensor(truncatedCoproduct(truncated), k);
            if (viaSeries != viaTensor)
                report.violations.push_back({"q=" + std::to_string(k) + " cap " + std::to_string(n),
                                             renderTensor(viaSeries, true),
                                             renderTensor(viaTensor, true)});
        }
        const TruncatedSeries atK = specializeSeries(series, k);
        const TensorPolynomial delta = truncatedCoproduct(atK);
        for (const auto& [v, w] : pairs) {
            ++report.checked;
            const RationalFunction lhs = delta.coefficient(v, w);
            RationalFunction rhs;
            for (const auto& [t, c] : atK.body().terms()) rhs += c * cache.at(v, w).coefficient(t);
            if (lhs != rhs)
                report.violations.push_back({"q=" + std::to_string(k) + " at " +
                                                 detail::pairLabel(v, w),
                                             formatRationalFunction(lhs),
                                             formatRationalFunction(rhs)});
        }
    }
    return report;
}

} // namespace treepoly

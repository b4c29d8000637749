// Command-line front end: parse tree and polynomial expressions, compute
// shuffle products, coproducts and exponential coefficients, and run the
// verification sweeps.
//
// Exit codes: 0 success, 1 failed verification, 2 parse error in an input
// expression, 3 internal cross-check mismatch, 4 domain error (option value
// out of range).

#include "treepoly/treepoly.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitDomain = 4;

struct Options {
    bool json = false;
    bool ascii = false;
    int jobs = 1;
};

std::string readAll(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void printReports(const std::vector<treepoly::IdentityReport>& reports, const Options& opt) {
    if (opt.json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(treepoly::toJson(r));
        std::cout << (reports.size() == 1 ? treepoly::toJson(reports.front()).dump(2) : out.dump(2))
                  << "\n";
        return;
    }
    for (const auto& r : reports) {
        std::cout << r.identity << ": checked " << r.checked << " cases up to degree " << r.cap
                  << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
        for (const auto& v : r.violations)
            std::cout << "  violation at " << v.where << ": " << v.lhs << " != " << v.rhs << "\n";
    }
}

int runShuffle(const std::string& leftText, const std::string& rightText, bool oracle,
               const Options& opt) {
    const treepoly::BasisElement left = treepoly::parseTree(leftText);
    const treepoly::BasisElement right = treepoly::parseTree(rightText);
    const treepoly::TreePolynomial product = treepoly::shuffleTrees(left, right);
    bool agree = true;
    if (oracle) {
        const int bound = std::max(8, left.degree() + right.degree());
        agree = treepoly::shuffleOracle(left, right, bound) == product;
    }
    if (opt.json) {
        nlohmann::json out;
        if (oracle) {
            out["terms"] = treepoly::toJson(product);
            out["oracle"] = agree ? "agree" : "mismatch";
        } else {
            out = treepoly::toJson(product);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << treepoly::renderPolynomial(product) << "\n";
        if (oracle) std::cout << "oracle: " << (agree ? "agree" : "MISMATCH") << "\n";
    }
    if (!agree) {
        std::cerr << "internal error: recursive shuffle disagrees with the enumeration oracle\n";
        return kExitMismatch;
    }
    return 0;
}

int runCoproduct(const std::string& exprText, const Options& opt) {
    const std::string text = exprText == "-" ? readAll(std::cin) : exprText;
    const treepoly::TreePolynomial f = treepoly::parsePolynomial(text);
    const treepoly::TensorPolynomial delta = treepoly::coproductPoly(f);
    if (opt.json)
        std::cout << treepoly::toJson(delta).dump(2) << "\n";
    else
        std::cout << treepoly::renderTensor(delta, opt.ascii) << "\n";
    return 0;
}

int runExp(const std::string& coeffTree, int seriesCap, bool haveSeries, int qPoint, bool haveQ,
           const Options& opt) {
    if (haveQ && qPoint < 2) {
        std::cerr << "error: the specialization point must be an integer >= 2\n";
        return kExitDomain;
    }
    if (!coeffTree.empty()) {
        const treepoly::BasisElement t = treepoly::parseTree(coeffTree);
        const treepoly::RationalFunction a = treepoly::expCoefficient(t);
        if (haveQ) {
            const treepoly::BigRational value = a.evaluateAt(qPoint);
            if (opt.json)
                std::cout << nlohmann::json{{"tree", treepoly::renderTree(t)},
                                            {"coeff", treepoly::toString(value)},
                                            {"q", qPoint}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << treepoly::toString(value) << "\n";
        } else {
            if (opt.json)
                std::cout << nlohmann::json{{"tree", treepoly::renderTree(t)},
                                            {"coeff", treepoly::formatRationalFunction(a)}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << treepoly::formatRationalFunction(a) << "\n";
        }
        return 0;
    }
    if (!haveSeries) {
        std::cerr << "error: pass --coeff TREE or --series N\n";
        return kExitDomain;
    }
    if (seriesCap < 0) {
        std::cerr << "error: the series cap must be nonnegative\n";
        return kExitDomain;
    }
    treepoly::TruncatedSeries series = treepoly::expSeries(seriesCap);
    if (haveQ) series = treepoly::specializeSeries(series, qPoint);
    if (opt.json)
        std::cout << treepoly::toJson(series.body()).dump(2) << "\n";
    else
        std::cout << treepoly::renderPolynomial(series.body()) << "\n";
    return 0;
}

int runVerify(const std::string& suite, int degree, std::uint64_t seed, const Options& opt) {
    if (degree < 0) {
        std::cerr << "error: --degree must be nonnegative\n";
        return kExitDomain;
    }
    std::vector<treepoly::IdentityReport> reports;
    if (suite == "shuffle-axioms") {
        if (degree > 8) {
            std::cerr << "error: the oracle sweep is limited to total degree 8\n";
            return kExitDomain;
        }
        reports.push_back(treepoly::verifyOracleEquivalence(degree, opt.jobs));
        reports.push_back(treepoly::verifyShuffleCommutativity(degree, opt.jobs));
        reports.push_back(treepoly::verifyShuffleAssociativity(degree - 1, opt.jobs));
    } else if (suite == "duality") {
        if (degree > 6) {
            std::cerr << "error: the duality sweep is limited to degree 6\n";
            return kExitDomain;
        }
        reports.push_back(treepoly::verifyDuality(200, degree, seed, opt.jobs));
    } else if (suite == "grouplike") {
        if (degree > 8) {
            std::cerr << "error: the grouplike sweep is limited to degree 8\n";
            return kExitDomain;
        }
        reports.push_back(treepoly::verifyGrouplike(degree));
    } else if (suite == "quadratic") {
        if (degree > 8) {
            std::cerr << "error: the quadratic sweep is limited to degree 8\n";
            return kExitDomain;
        }
        reports.push_back(treepoly::verifyQuadratic(degree, opt.jobs));
    } else if (suite == "gamma-counts") {
        reports.push_back(treepoly::verifyGammaCounts(degree + 1, std::max(1, degree - 1)));
    } else {
        std::cerr << "error: unknown suite '" << suite
                  << "' (expected shuffle-axioms, duality, grouplike, quadratic or gamma-counts)\n";
        return kExitDomain;
    }
    printReports(reports, opt);
    bool allPass = true;
    for (const auto& r : reports) allPass = allPass && r.passed();
    if (allPass) return 0;
    if (!opt.json) { // failures always carry a machine-readable report
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(treepoly::toJson(r));
        std::cout << (reports.size() == 1 ? treepoly::toJson(reports.front()).dump(2) : out.dump(2))
                  << "\n";
    }
    return kExitVerifyFailed;
}

int runEnumerate(int leaves, bool countOnly, const Options& opt) {
    if (leaves < 1) {
        std::cerr << "error: --leaves must be at least 1\n";
        return kExitDomain;
    }
    const auto trees = treepoly::enumerateTrees(leaves);
    if (countOnly) {
        std::cout << trees.size() << "\n";
        return 0;
    }
    if (opt.json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& t : trees) out.push_back(treepoly::renderTree(t));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& t : trees) std::cout << treepoly::renderTree(t) << "\n";
    }
    return 0;
}

int runGamma(int k, int m, int n, const Options& opt) {
    if (k < 2 || m < 1 || n < 1) {
        std::cerr << "error: gamma needs k >= 2 and m, n >= 1\n";
        return kExitDomain;
    }
    const auto pairs = treepoly::gammaSet(k, m, n);
    if (opt.json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& p : pairs) out.push_back({{"alpha", p.alpha}, {"beta", p.beta}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& p : pairs) std::cout << treepoly::renderGammaPair(p) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for planar tree polynomials"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "emit JSON instead of plain text");
    app.add_flag("--ascii", opt.ascii, "write tensors as 'L (x) R' instead of 'L ⊗ R'");
    app.add_option("--jobs", opt.jobs, "worker threads for verification sweeps")
        ->check(CLI::PositiveNumber);

    auto* shuffle = app.add_subcommand("shuffle", "planar shuffle product of two trees");
    std::string shuffleLeft, shuffleRight;
    bool shuffleOracleFlag = false;
    shuffle->add_option("S", shuffleLeft, "left tree literal")->required();
    shuffle->add_option("T", shuffleRight, "right tree literal")->required();
    shuffle->add_flag("--oracle", shuffleOracleFlag, "cross-check against the enumeration oracle");

    auto* coproduct = app.add_subcommand("coproduct", "co-addition of a tree polynomial");
    std::string coproductExpr;
    coproduct->add_option("EXPR", coproductExpr, "polynomial expression, or '-' for stdin")
        ->required();

    auto* exp = app.add_subcommand("exp", "generic exponential series over Q(q)");
    std::string expCoeffTree;
    int expSeriesCap = -1;
    int expQ = 0;
    auto* coeffOpt = exp->add_option("--coeff", expCoeffTree, "coefficient of one tree");
    auto* seriesOpt = exp->add_option("--series", expSeriesCap, "all terms up to the degree cap");
    auto* qOpt = exp->add_option("--q", expQ, "specialize q at an integer >= 2");
    coeffOpt->excludes(seriesOpt);

    auto* verify = app.add_subcommand("verify", "run an identity sweep");
    std::string verifySuite;
    int verifyDegree = 6;
    std::uint64_t verifySeed = 20260810;
    verify->add_option("SUITE", verifySuite,
                       "shuffle-axioms | duality | grouplike | quadratic | gamma-counts")
        ->required();
    verify->add_option("--degree", verifyDegree, "degree cap for the sweep");
    verify->add_option("--seed", verifySeed, "seed for randomized sweeps");

    auto* enumerate = app.add_subcommand("enumerate", "list reduced trees by leaf count");
    int enumerateLeaves = 0;
    bool enumerateCount = false;
    enumerate->add_option("--leaves", enumerateLeaves, "number of leaves")->required();
    enumerate->add_flag("--count", enumerateCount, "print only the number of trees");

    auto* gamma = app.add_subcommand("gamma", "list the index set Gamma_k(m, n)");
    int gammaK = 0, gammaM = 0, gammaN = 0;
    gamma->add_option("k", gammaK)->required();
    gamma->add_option("m", gammaM)->required();
    gamma->add_option("n", gammaN)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (shuffle->parsed()) return runShuffle(shuffleLeft, shuffleRight, shuffleOracleFlag, opt);
        if (coproduct->parsed()) return runCoproduct(coproductExpr, opt);
        if (exp->parsed())
            return runExp(expCoeffTree, expSeriesCap, seriesOpt->count() > 0, expQ,
                          qOpt->count() > 0, opt);
        if (verify->parsed()) return runVerify(verifySuite, verifyDegree, verifySeed, opt);
        if (enumerate->parsed()) return runEnumerate(enumerateLeaves, enumerateCount, opt);
        if (gamma->parsed()) return runGamma(gammaK, gammaM, gammaN, opt);
    } catch (const treepoly::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}

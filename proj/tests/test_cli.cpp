// Drives the installed CLI binary end to end: output strings, exit codes and
// determinism. The binary path arrives as argv[1].

#include <json.hpp>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

std::string gBinary;
int gFailures = 0;

RunResult run(const std::string& args, const std::string& stdinText = {}) {
    std::string command;
    if (!stdinText.empty()) command += "printf '%s' \"" + stdinText + "\" | ";
    command += gBinary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {};
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++gFailures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

void expectOutput(const std::string& args, const std::string& wanted) {
    const RunResult r = run(args);
    expect(r.exitCode == 0, args + " should exit 0 (got " + std::to_string(r.exitCode) + ")");
    expect(r.out == wanted + "\n", args + " should print '" + wanted + "' (got '" + r.out + "')");
}

void expectExit(const std::string& args, int code) {
    const RunResult r = run(args);
    expect(r.exitCode == code,
           args + " should exit " + std::to_string(code) + " (got " + std::to_string(r.exitCode) + ")");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-binary>\n";
        return 2;
    }
    gBinary = argv[1];

    expectOutput("shuffle x x", "2*x^2");
    expectOutput("shuffle 1 \"(x x)\"", "x^2");
    expectOutput("shuffle \"(x x)\" 1", "x^2");

    {
        const RunResult r = run("shuffle x x^2 --oracle");
        expect(r.exitCode == 0, "shuffle --oracle should exit 0");
        expect(r.out == "3*(x x^2) + 3*(x^2 x) + 3*x^3\noracle: agree\n",
               "shuffle --oracle output (got '" + r.out + "')");
    }

    expectExit("shuffle \"(x\" x", 2);
    expectExit("shuffle \"(x)\" x", 2);

    expectOutput("coproduct x", "x ⊗ 1 + 1 ⊗ x");
    expectOutput("coproduct x --ascii", "x (x) 1 + 1 (x) x");
    expectOutput("coproduct x^2", "x^2 ⊗ 1 + 2*(x ⊗ x) + 1 ⊗ x^2");
    expectOutput("coproduct 1", "1 ⊗ 1");
    expectExit("coproduct \"x +\"", 2);

    {
        const RunResult direct = run("coproduct \"2*x^2 + x\"");
        const RunResult piped = run("coproduct -", "2*x^2 + x");
        expect(direct.exitCode == 0 && piped.exitCode == 0, "coproduct via stdin exits 0");
        expect(direct.out == piped.out, "stdin and argument agree");
    }

    expectOutput("exp --coeff x^2", "1/2");
    expectOutput("exp --coeff x", "1");
    expectOutput("exp --coeff 1", "1");
    expectOutput("exp --coeff x^3", "(q - 2)/(6*q + 6)");
    expectOutput("exp --series 2", "1 + x + (1/2)*x^2");
    expectOutput("exp --series 2 --q 2", "1 + x + (1/2)*x^2");
    expectOutput("exp --coeff x^3 --q 2", "0");
    expectExit("exp --series 2 --q 1", 4);
    expectExit("exp --coeff \"((x)\"", 2);
    expectExit("exp", 4);

    expectOutput("enumerate --leaves 1", "x");
    expectOutput("enumerate --leaves 4 --count", "11");
    expectOutput("enumerate --leaves 3 --count", "3");
    expectExit("enumerate --leaves 0", 4);

    {
        const RunResult r = run("enumerate --leaves 3");
        expect(r.out == "(x x^2)\n(x^2 x)\nx^3\n", "enumerate order (got '" + r.out + "')");
    }

    expectOutput("gamma 2 1 1", "(1, 2)\n(2, 1)");
    {
        const RunResult r = run("gamma 4 1 3");
        expect(r.out == "(1, 234)\n(2, 134)\n(3, 124)\n(4, 123)\n",
               "gamma word lists (got '" + r.out + "')");
    }
    expectExit("gamma 1 1 1", 4);

    expectExit("verify gamma-counts --degree 6", 0);
    expectExit("verify grouplike --degree 3", 0);
    expectExit("verify quadratic --degree 3", 0);
    expectExit("verify shuffle-axioms --degree 3", 0);
    expectExit("verify duality --degree 3", 0);
    expectExit("verify duality --degree 99", 4);
    expectExit("verify no-such-suite", 4);

    {
        const RunResult a = run("exp --series 3");
        const RunResult b = run("exp --series 3");
        expect(a.exitCode == 0 && a.out == b.out && !a.out.empty(), "byte-identical reruns");
    }

    {
        const RunResult r = run("shuffle x x --json");
        expect(r.exitCode == 0, "json shuffle exits 0");
        const auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j.is_array() && j.size() == 1 && j[0].at("tree") == "x^2" &&
                   j[0].at("coeff") == "2",
               "json shuffle payload (got '" + r.out + "')");
    }
    {
        const RunResult r = run("verify gamma-counts --degree 4 --json");
        const auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j.at("identity") == "gamma-counts" &&
                   j.at("violations").empty() && j.at("checked").get<long long>() > 0,
               "json verify report (got '" + r.out + "')");
    }
    {
        const RunResult r = run("coproduct x^2 --json");
        const auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j.is_array() && j.size() == 3 && j[0].at("left") == "x^2" &&
                   j[0].at("right") == "1",
               "json coproduct payload (got '" + r.out + "')");
    }
    {
        const RunResult r = run("verify quadratic --degree 4 --jobs 4");
        expect(r.exitCode == 0, "parallel verify exits 0");
        const RunResult serial = run("verify quadratic --degree 4 --json");
        const RunResult parallel = run("verify quadratic --degree 4 --json --jobs 4");
        expect(serial.out == parallel.out && serial.exitCode == 0,
               "job count does not change the report");
    }

    if (gFailures > 0) {
        std::cerr << gFailures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}

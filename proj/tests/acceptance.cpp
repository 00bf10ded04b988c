// Acceptance gate: runs the command-line verifier twice on the default
// configuration, maps its suites to the numbered criteria and compares the
// two reports byte for byte.

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> suites;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& cli, const std::string& out) {
    const std::string cmd = "\"" + cli + "\" verify --seed 1 --out \"" + out + "\"";
    const int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance PATH_TO_CLI [WORKDIR]\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string dir = argc > 2 ? argv[2] : ".";
    const std::string first = dir + "/acceptance_run1.json", second = dir + "/acceptance_run2.json";

    const int rc1 = run_cli(cli, first);
    const int rc2 = run_cli(cli, second);
    const std::string text1 = slurp(first), text2 = slurp(second);

    nlohmann::json report;
    try {
        report = nlohmann::json::parse(text1);
    } catch (const std::exception& e) {
        std::cout << "acceptance: cannot parse report (" << e.what() << "), exit code " << rc1 << "\n";
        return 1;
    }

    std::map<std::string, std::vector<const nlohmann::json*>> by_suite;
    for (const auto& c : report["checks"]) by_suite[c["suite"].get<std::string>()].push_back(&c);

    const std::vector<Criterion> criteria{
        {1, "Hopf axioms for U_q(sl2) and T_q", {"hopf"}},
        {2, "pairing has full column rank at levels <= 4", {"pairing"}},
        {3, "commuting left actions and module-algebra law", {"actions"}},
        {4, "Haar normalization, invariance and positivity", {"haar"}},
        {5, "bundle idempotent e^2 = e with rank = dim of sections", {"idempotent"}},
        {6, "wp o im = id, im injective, wp surjective, right linearity", {"sections"}},
        {7, "calculus axioms, braiding split, vanishing, d^2 = 0, Leibniz, covariance", {"calculus"}},
        {8, "restricted calculus closed under d and epsilon-trivial", {"restricted"}},
        {9, "connection law for nabla0 and perturbations, linear differences", {"connection"}},
        {10, "curvature right linear, Bianchi identity, trivial bundle flat", {"curvature"}},
        {11, "Borel-Weil line at n = 1 has dimension 2 and is irreducible", {"borel_weil"}},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        std::size_t total = 0, ok = 0;
        std::string witness;
        for (const auto& s : cr.suites)
            for (const auto* c : by_suite[s]) {
                ++total;
                if ((*c)["status"] == "pass")
                    ++ok;
                else if (witness.empty())
                    witness = (*c)["name"].get<std::string>() + " " + (*c)["status"].get<std::string>() + ": " +
                              c->value("witness", std::string());
            }
        const bool pass = total > 0 && ok == total;
        if (!pass) ++failed;
        std::cout << "criterion " << cr.id << " [" << (pass ? "PASS" : "FAIL") << "] " << cr.title << " (" << ok << "/"
                  << total << " checks)";
        if (!witness.empty()) std::cout << " first problem: " << witness;
        std::cout << "\n";
    }

    const bool same = !text1.empty() && text1 == text2 && rc1 == rc2;
    if (!same) ++failed;
    std::cout << "criterion 12 [" << (same ? "PASS" : "FAIL") << "] two verify runs with the same config and seed are "
              << "byte-identical (" << text1.size() << " bytes, exit codes " << rc1 << ", " << rc2 << ")\n";

    std::cout << (failed == 0 ? "acceptance: all 12 criteria pass\n" : "acceptance: failures present\n");
    return failed == 0 && rc1 == 0 ? 0 : 1;
}

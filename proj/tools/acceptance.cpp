// Acceptance runner: executes the verification matrix criterion by criterion
// and prints one PASS/FAIL line per criterion.
//
// usage: hclif_acceptance [N | all] [-v]
//   N    run only criterion N (1..12)
//   all  run everything (default)
//   -v   print the expected-vs-computed detail for passing criteria too

#include <chrono>
#include <iostream>
#include <set>
#include <string>

#include "checks.hpp"

int main(int argc, char** argv) {
    using namespace hclif::checks;
    int only = 0;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "-v")
            verbose = true;
        else if (arg == "all")
            only = 0;
        else {
            try {
                only = std::stoi(arg);
            } catch (...) {
                std::cerr << "usage: " << argv[0] << " [N | all] [-v]\n";
                return 1;
            }
            if (only < 1 || only > 12) {
                std::cerr << "criterion number must be 1..12\n";
                return 1;
            }
        }
    }

    bool all_pass = true;
    for (int crit = 1; crit <= 12; ++crit) {
        if (only != 0 && crit != only) continue;
        bool pass = true;
        std::vector<CheckResult> results;
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& entry : registry()) {
            if (entry.criterion != crit) continue;
            results.push_back(entry.run());
            pass = pass && results.back().pass;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::string slugs;
        for (const auto& r : results) slugs += (slugs.empty() ? "" : ", ") + r.slug;
        std::cout << "criterion " << crit << ": " << (pass ? "PASS" : "FAIL") << " (" << slugs
                  << ", " << ms << " ms)\n";
        if (!pass || verbose)
            for (const auto& r : results)
                for (const auto& line : r.lines) std::cout << "    " << line << "\n";
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : 1;
}

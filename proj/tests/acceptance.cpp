// Acceptance suite: one line per criterion, PASS/FAIL with timing.
// Exit status 0 only if every criterion passes.

#include "jmwg/verify.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>

using namespace jmwg;

namespace {

struct Criterion {
    std::string description;
    std::function<std::vector<CheckResult>()> runner;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"elementary symmetric functions in odd JM elements hit the coset sums, n=2..4",
         [] { return verify_props3(); }},
        {"displayed average formulas for |lambda| <= 3, five alpha values, exact",
         [] { return verify_tables91(); }},
        {"Weingarten series tables to printed order and series/spectral agreement, n <= 4",
         [] { return verify_tables92(); }},
        {"M = L for |lambda| = |mu| <= 4 at n = 4, 5; Catalan product sums; refined-Catalan route",
         [] { return verify_props5(); }},
        {"Jack suite: orthogonality, specialization, content evaluations, duality, measure",
         [] { return verify_props8_jack(); }},
        {"shifted suite: Stirling identity, shifted Jack vanishing/diagonal/averages",
         [] { return verify_props8_shifted(); }},
        {"eigenvalue relation F(J_odd) omega = F(A') omega at n = 2, 3",
         [] { return verify_props4(); }},
        {"twisted pair: signed coset sums and spherical expansion at n = 2, 3",
         [] { return verify_props8_twisted(); }},
        {"conjecture harness: subleading one-row values 0, 1, 6, 29, 130 (and 562 at n=6)",
         [] { return verify_conjectures(4, true); }},
        {"Monte Carlo battery: 10 moments, N in {4,6}, 1e5 samples, >= 9/10 within 4 sigma",
         [] { return verify_mc(100000, 42); }},
    };

    bool allPass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        std::string error;
        try {
            results = criteria[i].runner();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        bool pass = error.empty();
        std::vector<std::string> failures;
        for (const CheckResult& r : results)
            if (!r.pass) {
                pass = false;
                failures.push_back(r.name + (r.detail.empty() ? "" : " [" + r.detail + "]"));
            }
        allPass = allPass && pass;

        std::cout << "[" << std::setw(2) << (i + 1) << "] " << (pass ? "PASS" : "FAIL") << "  ("
                  << std::fixed << std::setprecision(1) << seconds << "s, "
                  << results.size() << " checks)  " << criteria[i].description << "\n";
        if (!error.empty()) std::cout << "      error: " << error << "\n";
        for (const std::string& f : failures) std::cout << "      failed: " << f << "\n";
    }
    std::cout << (allPass ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
              << "\n";
    return allPass ? 0 : 1;
}

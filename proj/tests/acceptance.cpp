// Acceptance gate: runs every criterion at full ranges and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <iostream>

#include <bmwsq/verify.hpp>

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    auto results = bmwsq::run_acceptance(quick, &std::cout);
    int failures = 0;
    for (auto& r : results)
        if (!r.pass) ++failures;
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED")
              << " (" << results.size() - failures << "/" << results.size() << ")" << std::endl;
    return failures == 0 ? 0 : 1;
}

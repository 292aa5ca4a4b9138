// Acceptance gate: runs every corpus criterion and prints one line per
// criterion. Exit status 0 only when all pass; 2 for a configuration
// problem such as a missing corpus directory.
#include <iostream>

#include "germcalc/scalar.hpp"
#include "germcalc/selftest.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <corpus-dir>\n";
        return 2;
    }
    std::vector<germcalc::CriterionResult> results;
    try {
        results = germcalc::corpus_selftest(argv[1]);
    } catch (const germcalc::error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    size_t passed = 0;
    for (const germcalc::CriterionResult& r : results) {
        if (r.pass) {
            ++passed;
            std::cout << "PASS " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return passed == results.size() ? 0 : 1;
}

// Acceptance run: one line per criterion, nonzero exit on any failure.
// Every identity is checked in exact rational arithmetic; the per-criterion
// breakdown lists each identity with the number of instances checked.

#include <cstdio>
#include <string>
#include <vector>

#include "qspieri/suites.hpp"

using namespace qspieri;

namespace {

bool report(int number, const std::string& title, const SuiteResult& r) {
    bool ok = r.ok();
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, title.c_str());
    for (const CheckLine& l : r.lines)
        std::printf("        %s %s (%lld checks)\n", l.passed ? "pass" : "FAIL", l.name.c_str(),
                    l.count);
    std::fflush(stdout);
    return ok;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= report(1, "K is a morphism of Hopf algebras (B_3, young lattice, weak S_3)",
                 suite_hopf(8));
    ok &= report(2, "duality: dual bases to weight 7, adjointness to total degree 6",
                 suite_duality(8));
    ok &= report(3, "peak suite: Euler-ideal annihilation, raising maps, peak = doubled K",
                 suite_peak(8));
    ok &= report(4, "dimensions: Fibonacci for Pi and NC/I, pi recurrence for Xi and NC/<X_2>",
                 suite_dims(8));
    ok &= report(5, "skew schur functions against the tableau oracle (|lambda| <= 5)",
                 suite_skew(5));
    ok &= report(6, "P-partitions, plain and enriched, posets on <= 5 elements", suite_pp(5, 6));
    ok &= report(7, "stanley symmetric functions: S_4 symmetry, types B, C, D", suite_stanley());
    ok &= report(8, "Euler relations: B_n flags, 3-chain negative, halved 0-Bruhat B_2",
                 suite_euler());
    ok &= report(9, "quantum poset: commutation, index conversions, Pieri coefficient",
                 suite_quantum());
    std::printf("%s\n", ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
    return ok ? 0 : 1;
}

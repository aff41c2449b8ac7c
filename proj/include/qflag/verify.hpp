#ifndef QFLAG_VERIFY_HPP
#define QFLAG_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

namespace qflag {

// Size caps for the verification suites. The defaults are the shipping
// configuration: `verify all` at these caps is the project's exit gate.
struct VerifyCaps {
    int xcap = 8;
    int qcap = 12;
    int genfn_max_m = 4;

    int rec_max_n = 10;
    int rec_max_m = 5;

    int qshift_max_n = 8;
    int qshift_max_m = 4;

    int special_max_n = 12;
    int special_max_m = 6;
    int special2_max_n = 10;
    int special2_max_m = 5;
    int esym_max_m = 8;

    int pascal_max_n = 12;
    int subspace_max_n = 5;
    std::vector<std::pair<int, int>> subspace_fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};

    int lemma_max_total = 9; // n + 1
    int lemma_max_m = 4;

    int flag_max_n = 4;
    int flag_max_m = 4;
    std::vector<std::pair<int, int>> flag_fields = {{2, 1}, {3, 1}};

    int census_max_dim = 4; // n + 1
    int pattern_max_m = 3;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool ok = false;
    std::string counterexample; // smallest failing parameters, empty when ok
};

// Suite names accepted by run_verify, excluding "all".
const std::vector<std::string>& verify_suites();

// Runs one named suite (or "all") at the given caps; checks may execute on
// up to `threads` workers, results are returned in deterministic order.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyCaps& caps,
                                    int threads = 1);

} // namespace qflag

#endif

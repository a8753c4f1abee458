// Acceptance suite: one line per criterion, exit nonzero if any mandatory
// criterion fails. The long-running final criterion needs its generator
// fixture and runs when --allow-hours is passed or QUILLEN_ALLOW_HOURS=1.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "quillen/verify.hpp"

using namespace quillen;

namespace {

struct Criterion {
    const char* id;
    const char* what;
    verify::SuiteResult (*run)(const verify::Options&);
};

verify::SuiteResult run_ree(const verify::Options& o) { return verify::ree_identity(o); }

} // namespace

int main(int argc, char** argv) {
    verify::Options opt;
    opt.fixture_dir = QUILLEN_FIXTURE_DIR;
    opt.caps.jobs = 2;
    bool allow_hours = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--allow-hours") == 0) allow_hours = true;
    if (const char* env = std::getenv("QUILLEN_ALLOW_HOURS"))
        if (env[0] && env[0] != '0') allow_hours = true;
    opt.allow_hours = allow_hours;

    const Criterion criteria[] = {
        {"criterion-01", "Table-2 involution and four-subgroup counts, q in {5,7,9,11,13}",
         [](const verify::Options& o) { return verify::table2_counts(o); }},
        {"criterion-02", "Betti regressions for PSL2(9), PGL2(9), PGL2(5), PSL2(5)",
         [](const verify::Options& o) { return verify::betti_regressions(o); }},
        {"criterion-03", "Quillen-dimension verdicts for the six named groups",
         [](const verify::Options& o) { return verify::qd_verdicts(o); }},
        {"criterion-04", "brute-force Betti equals the closed forms (352 and 64)",
         [](const verify::Options& o) { return verify::formula_oracle(o); }},
        {"criterion-05", "Euler characteristic two ways on every fixture",
         [](const verify::Options& o) { return verify::euler_two_ways(o); }},
        {"criterion-06", "Ree identity, quintic positivity, and the order-504 fixture", run_ree},
        {"criterion-07", "solvable fixtures satisfy, nontrivial cores vanish",
         [](const verify::Options& o) { return verify::solvable_suite(o); }},
        {"criterion-08", "extension p-rank equals poset p-rank on the four pairs",
         [](const verify::Options& o) { return verify::extension_rank(o); }},
        {"criterion-09", "reductions preserve Betti vectors",
         [](const verify::Options& o) { return verify::reduction_soundness(o); }},
        {"criterion-10", "long-exact-sequence consistency on the three reports",
         [](const verify::Options& o) { return verify::mvles_consistency(o); }},
        {"criterion-11", "join identity on product fixtures",
         [](const verify::Options& o) { return verify::join_property(o); }},
        {"criterion-12", "G2(3): chi~ = -11584, b1 = 11584, b2 = 0 (optional)",
         [](const verify::Options& o) { return verify::g2_long_run(o); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        verify::SuiteResult r;
        try {
            r = c.run(opt);
        } catch (const std::exception& e) {
            std::cout << "FAIL " << c.id << ": " << c.what << " (exception: " << e.what() << ")"
                      << std::endl;
            ++failures;
            continue;
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool skipped = !r.rows.empty() && r.rows[0].skipped && r.rows.size() == 1;
        const char* status = skipped ? "SKIP" : (r.all_pass() ? "PASS" : "FAIL");
        std::cout << status << ' ' << c.id << ": " << c.what << " [" << r.rows.size()
                  << " checks, " << r.failures() << " failures, " << dt << "s]" << std::endl;
        if (!r.all_pass()) {
            ++failures;
            for (const auto& row : r.rows)
                if (!row.pass && !row.skipped)
                    std::cout << "    " << row.id << " (" << row.param << "): expected "
                              << row.expected << ", got " << row.actual << std::endl;
        }
    }
    if (failures) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}

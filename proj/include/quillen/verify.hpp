#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quillen/analysis.hpp"

namespace quillen::verify {

struct CheckRow {
    std::string id;
    std::string param;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool skipped = false;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckRow> rows;

    bool all_pass() const;
    std::size_t failures() const;
    void append(SuiteResult other);
    void add(std::string id, std::string param, std::string expected, std::string actual);
    void add_skip(std::string id, std::string reason);
};

struct Options {
    Caps caps;
    RankBackend backend = RankBackend::Modular;
    std::uint64_t seed = 0x51e57ab1e5ull;
    std::string fixture_dir = "fixtures";
    std::string g2_fixture; // empty: fixture_dir + "/g2_3.grp"
    bool allow_hours = false;
};

// One suite per acceptance area; paper_small chains the first eleven.
SuiteResult table2_counts(const Options& opt,
                          const std::vector<std::uint32_t>& qs = {5, 7, 9, 11, 13});
SuiteResult betti_regressions(const Options& opt);
SuiteResult qd_verdicts(const Options& opt);
SuiteResult formula_oracle(const Options& opt);
SuiteResult euler_two_ways(const Options& opt);
SuiteResult ree_identity(const Options& opt, std::uint32_t q_max = 19683);
SuiteResult solvable_suite(const Options& opt);
SuiteResult extension_rank(const Options& opt);
SuiteResult reduction_soundness(const Options& opt);
SuiteResult mvles_consistency(const Options& opt);
SuiteResult join_property(const Options& opt);
SuiteResult g2_long_run(const Options& opt);
SuiteResult paper_small(const Options& opt);

// Per-family harnesses behind `quillen verify --family ...`.
SuiteResult family_suite(Family fam, const std::vector<std::uint32_t>& qs, const Options& opt);
SuiteResult ree_family(const Options& opt, std::uint32_t q_max);

void write_csv(const SuiteResult& r, std::ostream& out);
void write_markdown_summary(const SuiteResult& r, std::ostream& out);

} // namespace quillen::verify

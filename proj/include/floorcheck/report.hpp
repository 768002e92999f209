#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floorcheck/certifier.hpp"
#include "floorcheck/config.hpp"
#include "floorcheck/corpus.hpp"
#include "floorcheck/derivation.hpp"

namespace floorcheck {

// What a single run computed: which stages ran is up to the subcommand.
struct VersionOutcome {
    VerdictKind kind = VerdictKind::Undecided;
    std::optional<Verdict> verdict;                 // from the certifier
    std::optional<Counterexample> witness;          // from the falsifier
    std::optional<DerivationReport> derivation;
    bool consistency_violation = false; // certified region contains a rigorous witness
};

struct MinMargin {
    double value = std::numeric_limits<double>::quiet_NaN();
    double x = std::numeric_limits<double>::quiet_NaN();
    long long branch = 0;
};

struct TheoremReport {
    std::string id;
    VersionOutcome as_printed;
    std::optional<VersionOutcome> corrected;
    MinMargin min_margin; // most negative observed margin of the printed form
    double wall_ms = 0.0;
    std::vector<std::string> notes;
};

enum class Stage { Check, Falsify, Derive, Full };

TheoremReport run_theorem(const TheoremRecord& rec, const Corpus& corpus, Stage stage,
                          const RunConfig& config);

// Parallel over theorems; output order follows the corpus regardless of
// thread count.
std::vector<TheoremReport> run_corpus(const Corpus& corpus,
                                      const std::vector<std::string>& ids, Stage stage,
                                      const RunConfig& config);

std::string render_report(const std::vector<TheoremReport>& reports, const std::string& format);

// Exit-code contract: 0 when every selected theorem has a passing printed or
// corrected outcome, 1 when anything is Falsified (or a derivation run finds
// only Discrepant versions), 2 when the only failures are Undecided.
int exit_code(const std::vector<TheoremReport>& reports, Stage stage);

} // namespace floorcheck

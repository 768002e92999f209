#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floorcheck/config.hpp"
#include "floorcheck/corpus.hpp"
#include "floorcheck/eval.hpp"

namespace floorcheck {

struct incomplete_substitution : std::runtime_error {
    explicit incomplete_substitution(const std::string& what) : std::runtime_error(what) {}
};

enum class DerivationStatus { Consistent, Discrepant, Untestable };

inline const char* derivation_status_name(DerivationStatus s) {
    switch (s) {
        case DerivationStatus::Consistent: return "consistent";
        case DerivationStatus::Discrepant: return "discrepant";
        case DerivationStatus::Untestable: return "untestable";
    }
    return "?";
}

struct Disagreement {
    PointBindings assignment; // x plus any parameters
    double margin_theorem = 0.0;
    double margin_instance = 0.0;
};

// Sign-agreement between a theorem and its substituted base instance.
// Consistent asserts only that no sampled point showed opposite margin
// signs; it never claims the statements are equivalent.
struct DerivationReport {
    std::string theorem_id;
    std::string version = "as_printed"; // or "corrected"
    DerivationMode mode = DerivationMode::Simplified;
    long long samples_tested = 0;
    long long skipped = 0;
    long long agreements = 0;
    long long disagreement_count = 0;
    std::vector<Disagreement> disagreements; // stored sample, capped
    DerivationStatus status = DerivationStatus::Untestable;
    long long value_mismatches = 0; // verbatim mode: lhs/rhs pointwise check
    std::optional<DerivationStatus> printed_subst_status; // when subst_printed present
    std::string note;
};

// Base statement with every variable replaced by its image expression; the
// domain is inherited from the theorem.  Throws incomplete_substitution.
Statement instantiate_base(const Statement& base, const Substitution& subst,
                           const Domain& theorem_domain);

// Samples the theorem domain (half uniform, half concentrated near branch
// boundaries), compares margin signs with |m| <= 1e-12 * scale treated as
// zero.  Singular samples are skipped and counted.
DerivationReport sign_agreement(const Statement& theorem_stmt, const Statement& instance_stmt,
                                int sample_count, std::uint64_t seed);

// Full derivation check for a record: as-printed plus corrected when
// present.  Untestable when the base is garbled with no usable statement.
std::vector<DerivationReport> check_derivation(const TheoremRecord& rec, const Corpus& corpus,
                                               const RunConfig& config);

} // namespace floorcheck

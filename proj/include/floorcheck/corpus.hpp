#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floorcheck/expr.hpp"

namespace floorcheck {

// Three-variable inequality a proof substitutes into.  When the printed form
// is garbled, `statement` holds the best-effort corrected form, `garbled` is
// set and the note describes the printed text; a garbled base with no usable
// statement makes derivation checks Untestable.
struct BaseRecord {
    std::string id; // "B1"...
    std::optional<Statement> statement;
    bool garbled = false;
    std::string note;

    bool operator==(const BaseRecord&) const = default;
};

// Binding of base variables to x / floor(x) / frac(x) or an auxiliary
// parameter, total over the base statement's variables.
struct Substitution {
    std::vector<std::pair<std::string, Expr>> map; // ordered

    const Expr* find(const std::string& var) const {
        for (const auto& [k, v] : map)
            if (k == var) return &v;
        return nullptr;
    }
    bool operator==(const Substitution&) const = default;
};

enum class DerivationMode { Verbatim, Simplified };

struct TheoremRecord {
    std::string id; // "T1".."T43"
    Statement as_printed;
    std::optional<Statement> corrected;
    std::string base_id;
    Substitution subst;
    std::optional<Substitution> subst_printed; // when the proof clause differs
    DerivationMode mode = DerivationMode::Simplified;
    std::string note;

    // Auxiliary parameters = every domain variable other than x.
    std::vector<VarConstraint> aux_params() const {
        std::vector<VarConstraint> out;
        for (const auto& vc : as_printed.domain.vars)
            if (vc.name != "x") out.push_back(vc);
        return out;
    }

    bool operator==(const TheoremRecord&) const = default;
};

struct Corpus {
    std::vector<BaseRecord> bases;
    std::vector<TheoremRecord> theorems;

    const BaseRecord* find_base(const std::string& id) const {
        for (const auto& b : bases)
            if (b.id == id) return &b;
        return nullptr;
    }
    const TheoremRecord* find_theorem(const std::string& id) const {
        for (const auto& t : theorems)
            if (t.id == id) return &t;
        return nullptr;
    }
};

struct corpus_error : std::runtime_error {
    explicit corpus_error(const std::string& what) : std::runtime_error(what) {}
};

// The built-in transcription: 43 theorem records plus their 43 bases.
const Corpus& builtin_corpus();

// Line-oriented plain-text corpus format (one "key: value" per line, records
// separated by blank lines; base records carry no "base:" key, theorem
// records do).  Duplicate ids are rejected; every record is validated.
Corpus parse_corpus(const std::string& text);
Corpus load_corpus(const std::string& path);
std::string serialize_corpus(const Corpus& c);

// Diagnostics; empty means well-formed.
std::vector<std::string> validate_base(const BaseRecord& b);
std::vector<std::string> validate_record(const Corpus& c, const TheoremRecord& t);
std::vector<std::string> validate_corpus(const Corpus& c);

} // namespace floorcheck

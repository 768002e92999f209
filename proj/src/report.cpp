#include "floorcheck/report.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "floorcheck/falsifier.hpp"
#include "floorcheck/printer.hpp"

namespace floorcheck {

namespace {

using ordered_json = nlohmann::ordered_json;

MinMargin observed_min_margin(const Statement& stmt, const RunConfig& config) {
    MinMargin mm;
    for (long long n : branch_range(stmt.domain, config.n_max)) {
        auto cands = scan_branch(stmt, n, config.grid_size, config);
        if (cands.empty()) continue;
        const auto& best = cands.front(); // sorted ascending by margin
        if (std::isnan(mm.value) || best.margin < mm.value) {
            mm.value = best.margin;
            mm.x = static_cast<double>(n) + best.t;
            mm.branch = n;
        }
    }
    return mm;
}

bool witness_inside_certified_region(const Verdict& v, const Counterexample& ce) {
    for (const auto& sv : v.slices) {
        for (const auto& bc : sv.branches) {
            if (bc.n != ce.branch || !bc.certified) continue;
            for (const auto& [lo, hi] : bc.certified_intervals)
                if (lo <= ce.t && ce.t <= hi) return true;
        }
    }
    return false;
}

VersionOutcome run_version(const Statement& stmt, Stage stage, const RunConfig& config) {
    VersionOutcome out;
    if (stage == Stage::Check || stage == Stage::Full) {
        out.verdict = certify_statement(stmt, config);
        out.verdict->integer_probes = probe_integer_points_statement(stmt, config.n_max);
        out.kind = out.verdict->kind;
    }
    if (stage == Stage::Check || stage == Stage::Falsify || stage == Stage::Full) {
        out.witness = falsify_statement(stmt, config);
        if (out.witness && out.witness->rigorous) {
            if (out.verdict && out.verdict->kind == VerdictKind::Certified &&
                witness_inside_certified_region(*out.verdict, *out.witness))
                out.consistency_violation = true;
            out.kind = VerdictKind::Falsified;
            if (out.verdict) {
                out.verdict->kind = VerdictKind::Falsified;
                out.verdict->witness = out.witness;
            }
        }
    }
    return out;
}

} // namespace

TheoremReport run_theorem(const TheoremRecord& rec, const Corpus& corpus, Stage stage,
                          const RunConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremReport rep;
    rep.id = rec.id;

    if (stage != Stage::Derive) {
        rep.as_printed = run_version(rec.as_printed, stage, config);
        if (rec.corrected) rep.corrected = run_version(*rec.corrected, stage, config);
        rep.min_margin = observed_min_margin(rec.as_printed, config);
    }
    if (stage == Stage::Derive || stage == Stage::Full) {
        auto ders = check_derivation(rec, corpus, config);
        for (auto& d : ders) {
            if (d.version == "as_printed") {
                rep.as_printed.derivation = d;
            } else {
                if (!rep.corrected) rep.corrected = VersionOutcome{};
                rep.corrected->derivation = d;
            }
        }
    }
    if (!rec.note.empty()) rep.notes.push_back(rec.note);
    if (rep.as_printed.consistency_violation ||
        (rep.corrected && rep.corrected->consistency_violation))
        rep.notes.push_back("INTERNAL INCONSISTENCY: certified region contains a rigorous witness");

    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

std::vector<TheoremReport> run_corpus(const Corpus& corpus, const std::vector<std::string>& ids,
                                      Stage stage, const RunConfig& config) {
    std::vector<const TheoremRecord*> selected;
    if (ids.empty()) {
        for (const auto& t : corpus.theorems) selected.push_back(&t);
    } else {
        for (const auto& id : ids) {
            const TheoremRecord* t = corpus.find_theorem(id);
            if (!t) throw std::invalid_argument("unknown theorem id '" + id + "'");
            selected.push_back(t);
        }
    }

    std::vector<TheoremReport> reports(selected.size());
    unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, selected.size() == 0 ? 1 : selected.size());

    if (threads <= 1) {
        for (size_t i = 0; i < selected.size(); ++i)
            reports[i] = run_theorem(*selected[i], corpus, stage, config);
        return reports;
    }

    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= selected.size()) return;
                reports[i] = run_theorem(*selected[i], corpus, stage, config);
            }
        });
    }
    for (auto& th : pool) th.join();
    return reports;
}

namespace {

std::string fmt_double(double v, const char* spec = "%.6g") {
    if (std::isnan(v)) return "-";
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

ordered_json json_params(const std::vector<std::pair<std::string, Rational>>& params) {
    ordered_json j = ordered_json::object();
    for (const auto& [name, v] : params) j[name] = v.str();
    return j;
}

ordered_json json_witness(const std::optional<Counterexample>& ce) {
    if (!ce) return nullptr;
    ordered_json j;
    j["x"] = ce->x;
    j["branch"] = ce->branch;
    j["t"] = ce->t;
    j["margin"] = ce->margin;
    j["rigorous"] = ce->rigorous;
    ordered_json aux = ordered_json::object();
    for (const auto& [name, v] : ce->aux) aux[name] = v;
    j["params"] = aux;
    return j;
}

ordered_json json_region(const std::optional<Verdict>& v) {
    if (!v) return nullptr;
    ordered_json slices = ordered_json::array();
    for (const auto& sv : v->slices) {
        ordered_json js;
        js["params"] = json_params(sv.params);
        js["status"] = verdict_name(sv.kind);
        js["margin_lower_bound"] =
            std::isnan(sv.margin_lower_bound) ? ordered_json(nullptr) : ordered_json(sv.margin_lower_bound);
        js["tail_samples_ok"] = sv.tail_samples_ok;
        ordered_json branches = ordered_json::array();
        for (const auto& bc : sv.branches) {
            ordered_json jb;
            jb["n"] = bc.n;
            jb["status"] = bc.singular ? "singular" : (bc.certified ? "certified" : "undecided");
            ordered_json ivs = ordered_json::array();
            for (const auto& [lo, hi] : bc.certified_intervals) ivs.push_back({lo, hi});
            jb["t_intervals"] = ivs;
            jb["margin_lower_bound"] = std::isnan(bc.margin_lower_bound)
                                           ? ordered_json(nullptr)
                                           : ordered_json(bc.margin_lower_bound);
            jb["observed_margin"] = std::isnan(bc.min_point_margin)
                                        ? ordered_json(nullptr)
                                        : ordered_json(bc.min_point_margin);
            jb["unresolved"] = bc.unresolved_count;
            jb["exclusions"] = bc.exclusions;
            branches.push_back(std::move(jb));
        }
        js["branches"] = std::move(branches);
        slices.push_back(std::move(js));
    }
    return slices;
}

ordered_json json_derivation(const std::optional<DerivationReport>& d) {
    if (!d) return nullptr;
    ordered_json j;
    j["status"] = derivation_status_name(d->status);
    j["mode"] = d->mode == DerivationMode::Verbatim ? "verbatim" : "simplified";
    j["samples_tested"] = d->samples_tested;
    j["skipped"] = d->skipped;
    j["agreements"] = d->agreements;
    j["disagreements"] = d->disagreement_count;
    ordered_json pts = ordered_json::array();
    size_t cap = std::min<size_t>(d->disagreements.size(), 4);
    for (size_t i = 0; i < cap; ++i) {
        const auto& dis = d->disagreements[i];
        ordered_json p = ordered_json::object();
        for (const auto& [name, v] : dis.assignment) p[name] = v;
        p["margin_theorem"] = dis.margin_theorem;
        p["margin_instance"] = dis.margin_instance;
        pts.push_back(std::move(p));
    }
    j["disagreement_points"] = std::move(pts);
    j["value_mismatches"] = d->value_mismatches;
    if (d->printed_subst_status)
        j["printed_subst_status"] = derivation_status_name(*d->printed_subst_status);
    if (!d->note.empty()) j["note"] = d->note;
    return j;
}

ordered_json json_probes(const std::optional<Verdict>& v) {
    if (!v) return nullptr;
    ordered_json arr = ordered_json::array();
    for (const auto& p : v->integer_probes) {
        ordered_json j;
        j["x"] = p.x;
        if (p.excluded)
            j["excluded"] = true;
        else
            j["margin"] = p.margin;
        arr.push_back(std::move(j));
    }
    return arr;
}

const char* version_status(const VersionOutcome& vo) {
    if (vo.verdict || vo.witness) return verdict_name(vo.kind);
    if (vo.derivation) return derivation_status_name(vo.derivation->status);
    return "undecided";
}

ordered_json json_version(const VersionOutcome& vo) {
    ordered_json j;
    j["status"] = version_status(vo);
    j["certified_region"] = json_region(vo.verdict);
    j["margin_lower_bound"] = (vo.verdict && !std::isnan(vo.verdict->margin_lower_bound))
                                  ? ordered_json(vo.verdict->margin_lower_bound)
                                  : ordered_json(nullptr);
    j["witness"] = json_witness(vo.witness);
    j["derivation"] = json_derivation(vo.derivation);
    if (vo.verdict) {
        j["slice_certified"] = vo.verdict->slice_certified;
        j["tail_samples_ok"] = vo.verdict->tail_samples_ok;
    }
    return j;
}

std::string render_json(const std::vector<TheoremReport>& reports) {
    ordered_json root = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["id"] = r.id;
        j["status"] = version_status(r.as_printed);
        j["certified_region"] = json_region(r.as_printed.verdict);
        j["margin_lower_bound"] =
            (r.as_printed.verdict && !std::isnan(r.as_printed.verdict->margin_lower_bound))
                ? ordered_json(r.as_printed.verdict->margin_lower_bound)
                : ordered_json(nullptr);
        j["witness"] = json_witness(r.as_printed.witness);
        j["derivation"] = json_derivation(r.as_printed.derivation);
        j["notes"] = r.notes;
        j["corrected"] = r.corrected ? json_version(*r.corrected) : ordered_json(nullptr);
        j["integer_probes"] = json_probes(r.as_printed.verdict);
        ordered_json mm;
        mm["value"] = std::isnan(r.min_margin.value) ? ordered_json(nullptr)
                                                     : ordered_json(r.min_margin.value);
        mm["x"] = std::isnan(r.min_margin.x) ? ordered_json(nullptr) : ordered_json(r.min_margin.x);
        mm["branch"] = r.min_margin.branch;
        j["min_margin"] = std::move(mm);
        j["wall_ms"] = r.wall_ms;
        root.push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

std::string render_md(const std::vector<TheoremReport>& reports) {
    std::ostringstream os;
    os << "# Verification report\n\n";
    os << "| id | as printed | corrected | derivation | min margin | at x |\n";
    os << "|----|------------|-----------|------------|------------|------|\n";
    for (const auto& r : reports) {
        os << "| " << r.id << " | " << version_status(r.as_printed) << " | ";
        os << (r.corrected ? version_status(*r.corrected) : std::string("-")) << " | ";
        if (r.as_printed.derivation)
            os << derivation_status_name(r.as_printed.derivation->status);
        else
            os << "-";
        os << " | " << fmt_double(r.min_margin.value) << " | " << fmt_double(r.min_margin.x)
           << " |\n";
    }

    std::vector<std::string> errata;
    for (const auto& r : reports) {
        if (r.as_printed.witness && r.as_printed.witness->rigorous) {
            errata.push_back(r.id + ": printed statement falsified at x = " +
                             fmt_double(r.as_printed.witness->x, "%.9g") +
                             " (margin " + fmt_double(r.as_printed.witness->margin, "%.6g") + ")" +
                             (r.corrected ? ", corrected form " +
                                                std::string(version_status(*r.corrected))
                                          : std::string()));
        }
        if (r.as_printed.derivation && r.as_printed.derivation->status == DerivationStatus::Discrepant)
            errata.push_back(r.id + ": printed statement disagrees in sign with its substituted base (" +
                             std::to_string(r.as_printed.derivation->disagreement_count) +
                             " sampled disagreements)");
    }
    os << "\n## Errata\n\n";
    if (errata.empty()) {
        os << "none detected\n";
    } else {
        for (const auto& e : errata) os << "- " << e << "\n";
    }
    return os.str();
}

} // namespace

std::string render_report(const std::vector<TheoremReport>& reports, const std::string& format) {
    if (format == "md") return render_md(reports);
    if (format == "json") return render_json(reports);
    throw std::invalid_argument("format must be json or md");
}

int exit_code(const std::vector<TheoremReport>& reports, Stage stage) {
    bool any_hard = false;
    bool all_ok = true;

    auto version_pass = [&](const VersionOutcome& vo) {
        if (stage == Stage::Derive)
            return vo.derivation && vo.derivation->status == DerivationStatus::Consistent;
        if (stage == Stage::Falsify) return !(vo.witness && vo.witness->rigorous);
        bool verdict_ok = vo.verdict && vo.verdict->kind == VerdictKind::Certified;
        bool derivation_ok =
            !vo.derivation || vo.derivation->status == DerivationStatus::Consistent;
        return verdict_ok && derivation_ok;
    };
    auto version_hard_fail = [&](const VersionOutcome& vo) {
        if (stage == Stage::Derive)
            return vo.derivation && vo.derivation->status == DerivationStatus::Discrepant;
        return vo.kind == VerdictKind::Falsified;
    };

    for (const auto& r : reports) {
        bool ok = version_pass(r.as_printed) || (r.corrected && version_pass(*r.corrected));
        bool hard =
            version_hard_fail(r.as_printed) || (r.corrected && version_hard_fail(*r.corrected));
        // a discrepant derivation is redeemed by a consistent corrected form;
        // a falsified statement version is a finding regardless
        if (stage == Stage::Derive && ok) hard = false;
        if (hard) any_hard = true;
        if (!ok) all_ok = false;
    }
    if (any_hard) return 1;
    if (!all_ok) return 2;
    return 0;
}

} // namespace floorcheck

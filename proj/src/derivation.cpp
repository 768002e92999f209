#include "floorcheck/derivation.hpp"

#include <algorithm>
#include <cmath>

#include "floorcheck/falsifier.hpp"
#include "floorcheck/rng.hpp"

namespace floorcheck {

namespace {

constexpr double kZeroTol = 1e-12;
constexpr size_t kMaxStoredDisagreements = 16;

Expr substitute_vars(const Expr& e, const Substitution& subst) {
    if (e.kind == NodeKind::Var) {
        const Expr* image = subst.find(e.var);
        if (!image) throw incomplete_substitution("no image for base variable '" + e.var + "'");
        return *image;
    }
    Expr out = e;
    for (auto& a : out.args) a = substitute_vars(a, subst);
    return out;
}

int sign_with_tol(double m, double scale) {
    if (std::fabs(m) <= kZeroTol * scale) return 0;
    return m < 0.0 ? -1 : 1;
}

struct DomainSampler {
    const Statement& stmt;
    int n_max;
    Rng rng;
    std::vector<PointBindings> aux_pool;

    DomainSampler(const Statement& st, int n_max_, std::uint64_t seed)
        : stmt(st), n_max(n_max_), rng(seed) {
        aux_pool = aux_search_samples(st, 16, splitmix64(seed ^ 0x5eedaa11ULL));
    }

    PointBindings next() {
        const VarConstraint* xc = stmt.domain.find("x");
        double lo = 0.0;
        bool real_line = xc && xc->real_line;
        if (xc && xc->lower) lo = xc->lower->to_double();

        double x;
        if (rng.next_double() < 0.5) {
            // uniform over the working window
            double a = real_line ? -(n_max + 1.0) : lo;
            double b = n_max + 1.0;
            x = rng.uniform(a, b);
        } else {
            // concentrated near branch boundaries where degeneracies live
            long long n = real_line ? rng.uniform_int(-n_max, n_max)
                                    : rng.uniform_int(static_cast<long long>(std::floor(lo)), n_max);
            double t = rng.next_double() < 0.5 ? rng.uniform(1e-12, 1e-3)
                                               : rng.uniform(1.0 - 1e-3, 1.0 - 1e-12);
            x = static_cast<double>(n) + t;
        }
        PointBindings env{{"x", x}};
        const PointBindings& aux = aux_pool[rng.next_u64() % aux_pool.size()];
        for (const auto& [name, v] : aux) env.emplace_back(name, v);
        return env;
    }

    bool in_domain(const PointBindings& env) const {
        const VarConstraint* xc = stmt.domain.find("x");
        double x = env.front().second;
        if (xc) {
            if (xc->lower) {
                double lo = xc->lower->to_double();
                if (xc->lower_strict ? !(x > lo) : !(x >= lo)) return false;
            }
            if (xc->exclude_integers && x == std::floor(x)) return false;
        }
        return true;
    }
};

} // namespace

Statement instantiate_base(const Statement& base, const Substitution& subst,
                           const Domain& theorem_domain) {
    Statement out;
    out.lhs = fold_constants(substitute_vars(base.lhs, subst));
    out.rhs = fold_constants(substitute_vars(base.rhs, subst));
    out.rel = base.rel;
    out.domain = theorem_domain;
    return out;
}

DerivationReport sign_agreement(const Statement& theorem_stmt, const Statement& instance_stmt,
                                int sample_count, std::uint64_t seed) {
    if (sample_count < 100) throw std::invalid_argument("sample_count must be >= 100");
    DerivationReport rep;
    DomainSampler sampler(theorem_stmt, 20, seed);

    for (int i = 0; i < sample_count; ++i) {
        PointBindings env = sampler.next();
        if (!sampler.in_domain(env)) {
            ++rep.skipped;
            continue;
        }
        double mt, mi, st, si;
        try {
            mt = margin_point(theorem_stmt, env);
            st = margin_scale(theorem_stmt, env);
            mi = margin_point(instance_stmt, env);
            si = margin_scale(instance_stmt, env);
            if (std::isnan(mt) || std::isnan(mi)) throw eval_error(EvalFault::DomainError, "nan");
        } catch (const eval_error&) {
            ++rep.skipped;
            continue;
        }
        ++rep.samples_tested;
        int sign_t = sign_with_tol(mt, st);
        int sign_i = sign_with_tol(mi, si);
        // a zero margin satisfies a non-strict relation: disagreement means
        // one statement holds where the other fails
        bool holds_t = relation_strict(theorem_stmt.rel) ? sign_t > 0 : sign_t >= 0;
        bool holds_i = relation_strict(instance_stmt.rel) ? sign_i > 0 : sign_i >= 0;
        if (holds_t == holds_i) {
            ++rep.agreements;
        } else {
            ++rep.disagreement_count;
            if (rep.disagreements.size() < kMaxStoredDisagreements)
                rep.disagreements.push_back(Disagreement{env, mt, mi});
        }
    }
    rep.status = (rep.disagreement_count == 0 && rep.samples_tested >= 100)
                     ? DerivationStatus::Consistent
                     : DerivationStatus::Discrepant;
    if (rep.samples_tested < 100) rep.status = DerivationStatus::Untestable;
    return rep;
}

namespace {

long long count_value_mismatches(const Statement& theorem_stmt, const Statement& instance_stmt,
                                 int sample_count, std::uint64_t seed) {
    DomainSampler sampler(theorem_stmt, 20, seed);
    long long mismatches = 0;
    for (int i = 0; i < sample_count; ++i) {
        PointBindings env = sampler.next();
        if (!sampler.in_domain(env)) continue;
        try {
            double lt = eval_point(theorem_stmt.lhs, env);
            double li = eval_point(instance_stmt.lhs, env);
            double rt = eval_point(theorem_stmt.rhs, env);
            double ri = eval_point(instance_stmt.rhs, env);
            double sl = std::max({1.0, std::fabs(lt), std::fabs(li)});
            double sr = std::max({1.0, std::fabs(rt), std::fabs(ri)});
            // infinities on both sides (overflow in deep tails) still agree
            bool l_ok = (lt == li) || std::fabs(lt - li) <= kZeroTol * sl;
            bool r_ok = (rt == ri) || std::fabs(rt - ri) <= kZeroTol * sr;
            if (!l_ok || !r_ok) ++mismatches;
        } catch (const eval_error&) {
        }
    }
    return mismatches;
}

} // namespace

std::vector<DerivationReport> check_derivation(const TheoremRecord& rec, const Corpus& corpus,
                                               const RunConfig& config) {
    std::vector<DerivationReport> out;
    const BaseRecord* base = corpus.find_base(rec.base_id);

    auto make_untestable = [&](const std::string& version, const std::string& why) {
        DerivationReport rep;
        rep.theorem_id = rec.id;
        rep.version = version;
        rep.mode = rec.mode;
        rep.status = DerivationStatus::Untestable;
        rep.note = why;
        return rep;
    };

    struct Job {
        const Statement* stmt;
        std::string version;
    };
    std::vector<Job> jobs{{&rec.as_printed, "as_printed"}};
    if (rec.corrected) jobs.push_back({&*rec.corrected, "corrected"});

    for (const auto& job : jobs) {
        if (!base) {
            out.push_back(make_untestable(job.version, "base " + rec.base_id + " not found"));
            continue;
        }
        if (!base->statement) {
            out.push_back(make_untestable(job.version,
                                          "base " + rec.base_id + " is garbled with no usable form"));
            continue;
        }
        Statement instance;
        try {
            instance = instantiate_base(*base->statement, rec.subst, job.stmt->domain);
        } catch (const incomplete_substitution& e) {
            out.push_back(make_untestable(job.version, e.what()));
            continue;
        }
        std::uint64_t seed = derive_seed(config.seed, rec.id + "/" + job.version);
        DerivationReport rep = sign_agreement(*job.stmt, instance, config.derivation_samples, seed);
        rep.theorem_id = rec.id;
        rep.version = job.version;
        rep.mode = rec.mode;
        if (base->garbled) rep.note = "checked against the corrected form of a garbled base";

        if (rec.mode == DerivationMode::Verbatim)
            rep.value_mismatches = count_value_mismatches(*job.stmt, instance,
                                                          config.derivation_samples / 4, seed ^ 0xffULL);

        // document the printed-but-inconsistent proof binding when present
        if (rec.subst_printed && job.version == "as_printed") {
            try {
                Statement printed_inst =
                    instantiate_base(*base->statement, *rec.subst_printed, job.stmt->domain);
                DerivationReport aux = sign_agreement(*job.stmt, printed_inst,
                                                      config.derivation_samples, seed ^ 0x77ULL);
                rep.printed_subst_status = aux.status;
            } catch (const incomplete_substitution&) {
                rep.printed_subst_status = DerivationStatus::Untestable;
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace floorcheck

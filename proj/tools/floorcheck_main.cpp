#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "floorcheck/corpus.hpp"
#include "floorcheck/printer.hpp"
#include "floorcheck/report.hpp"

namespace {

constexpr int kUsageError = 64;

struct CliOptions {
    floorcheck::RunConfig config;
    std::string corpus_path;
    std::vector<std::string> ids;
    bool all = false;
};

const floorcheck::Corpus& resolve_corpus(const CliOptions& opt, floorcheck::Corpus& storage) {
    std::string path = opt.corpus_path;
    if (path.empty()) {
        if (const char* env = std::getenv("FLOORCHECK_CORPUS")) path = env;
    }
    if (path.empty()) return floorcheck::builtin_corpus();
    storage = floorcheck::load_corpus(path);
    return storage;
}

int run_stage(const CliOptions& opt, floorcheck::Stage stage) {
    floorcheck::Corpus storage;
    const floorcheck::Corpus& corpus = resolve_corpus(opt, storage);

    std::vector<std::string> ids = opt.ids;
    if (opt.all) ids.clear();
    if (!opt.all && ids.empty()) {
        std::cerr << "error: give theorem ids or --all\n";
        return kUsageError;
    }
    for (const auto& id : ids) {
        if (!corpus.find_theorem(id)) {
            std::cerr << "error: unknown theorem id '" << id << "'. valid ids:";
            for (const auto& t : corpus.theorems) std::cerr << ' ' << t.id;
            std::cerr << '\n';
            return kUsageError;
        }
    }

    auto reports = floorcheck::run_corpus(corpus, ids, stage, opt.config);
    std::cout << floorcheck::render_report(reports, opt.config.format);
    return floorcheck::exit_code(reports, stage);
}

int run_list(const CliOptions& opt) {
    floorcheck::Corpus storage;
    const floorcheck::Corpus& corpus = resolve_corpus(opt, storage);
    for (const auto& t : corpus.theorems) {
        std::cout << t.id << "  " << floorcheck::print_statement(t.as_printed) << "\n";
        if (t.corrected) std::cout << "    corrected: " << floorcheck::print_statement(*t.corrected) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"floorcheck: numerical certification and falsification for the"
                 " floor/fractional-part inequality corpus"};
    app.require_subcommand(1);

    CliOptions opt;
    auto add_common = [&](CLI::App* sub, bool with_ids) {
        sub->add_option("--n-max", opt.config.n_max, "certified branch range bound");
        sub->add_option("--epsilon", opt.config.epsilon, "excluded sliver width (0 < eps < 1/2)");
        sub->add_option("--grid", opt.config.grid_size, "falsifier scan grid size (>= 16)");
        sub->add_option("--depth", opt.config.max_depth, "bisection depth cap");
        sub->add_option("--min-width", opt.config.min_width, "undecided-sliver width");
        sub->add_option("--tol", opt.config.tol_f, "falsification tolerance (relative)");
        sub->add_option("--seed", opt.config.seed, "random seed");
        sub->add_option("--format", opt.config.format, "output format: json | md");
        sub->add_option("--corpus", opt.corpus_path, "corpus file (default: FLOORCHECK_CORPUS or built-in)");
        sub->add_option("--threads", opt.config.threads, "worker threads (0 = machine parallelism)");
        if (with_ids) {
            sub->add_option("ids", opt.ids, "theorem ids (T1..T43)");
            sub->add_flag("--all", opt.all, "select every theorem");
        }
    };

    CLI::App* list = app.add_subcommand("list", "print the corpus statements");
    add_common(list, false);
    CLI::App* check = app.add_subcommand("check", "certify and falsify selected theorems");
    add_common(check, true);
    CLI::App* fals = app.add_subcommand("falsify", "search for counterexamples");
    add_common(fals, true);
    CLI::App* derive = app.add_subcommand("derive", "check proof substitutions by sign agreement");
    add_common(derive, true);
    CLI::App* report = app.add_subcommand("report", "full pipeline: certify, falsify, derive");
    add_common(report, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        opt.config.validate();
        if (list->parsed()) return run_list(opt);
        if (check->parsed()) return run_stage(opt, floorcheck::Stage::Check);
        if (fals->parsed()) return run_stage(opt, floorcheck::Stage::Falsify);
        if (derive->parsed()) return run_stage(opt, floorcheck::Stage::Derive);
        if (report->parsed()) return run_stage(opt, floorcheck::Stage::Full);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70; // internal software error
    }
    return kUsageError;
}

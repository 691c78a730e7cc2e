#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cyccov/harness.hpp"
#include "json.hpp"

namespace {

using cyccov::ExperimentConfig;

struct CliOptions {
    ExperimentConfig cfg;
    std::string out;
    std::string degrees_text;
    std::string divisors_text;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

void load_config_file(const std::string& path, CliOptions& opt) {
    std::ifstream in(path);
    if (!in) throw cyccov::DomainError("cannot read config file " + path);
    nlohmann::json j;
    in >> j;
    auto& cfg = opt.cfg;
    if (j.contains("q")) cfg.q = j["q"].get<unsigned>();
    if (j.contains("r")) cfg.r = j["r"].get<unsigned>();
    if (j.contains("degrees")) cfg.degrees = j["degrees"].get<std::vector<int>>();
    if (j.contains("mode")) cfg.mode = j["mode"].get<std::string>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("divisors"))
        cfg.divisors = j["divisors"].get<std::vector<unsigned>>();
    if (j.contains("trunc")) cfg.truncation = j["trunc"].get<unsigned>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<unsigned>();
    if (j.contains("budget")) cfg.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("tv_base")) cfg.tv_base = j["tv_base"].get<double>();
    if (j.contains("tv_base_degree"))
        cfg.tv_base_degree = j["tv_base_degree"].get<int>();
    if (j.contains("out")) opt.out = j["out"].get<std::string>();
}

void add_common_options(CLI::App* app, CliOptions& opt) {
    auto& cfg = opt.cfg;
    app->add_option("--q", cfg.q, "prime field size, q = 1 mod r");
    app->add_option("--r", cfg.r, "cover order");
    app->add_option("--degrees", opt.degrees_text,
                    "degree tuple d_1,...,d_{r-1} (comma separated)");
    app->add_option("--mode", cfg.mode, "exhaustive | montecarlo");
    app->add_option("--samples", cfg.samples, "sample count for montecarlo");
    app->add_option("--seed", cfg.seed, "random seed");
    app->add_option("--divisors", opt.divisors_text,
                    "divisors of r to track (comma separated; default all > 1)");
    app->add_option("--trunc", cfg.truncation, "Euler product truncation degree");
    app->add_option("--out", opt.out, "output file (default stdout)");
    app->add_option("--format", cfg.format, "json | csv");
    app->add_option("--workers", cfg.workers, "worker thread count");
    app->add_option("--budget", cfg.budget, "enumeration budget cap");
    app->add_option("--tv-base", cfg.tv_base,
                    "compare threshold at the base degree");
    app->add_option("--tv-base-degree", cfg.tv_base_degree,
                    "degree anchoring the compare threshold");
}

void finalize_options(CliOptions& opt) {
    if (!opt.degrees_text.empty()) opt.cfg.degrees = parse_int_list(opt.degrees_text);
    if (!opt.divisors_text.empty()) {
        opt.cfg.divisors.clear();
        for (int d : parse_int_list(opt.divisors_text))
            opt.cfg.divisors.push_back(static_cast<unsigned>(d));
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw cyccov::DomainError("cannot write " + out_path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cyccov::DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"point counts and character-sum distributions for cyclic "
                 "covers y^r = F(x) over P^1(F_q)"};
    app.require_subcommand(1);

    CliOptions opt;
    // a config file provides defaults; explicit flags override them
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                load_config_file(argv[i + 1], opt);
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
        }
    }
    std::string config_path;

    auto* empirical = app.add_subcommand(
        "empirical", "sweep or sample a hat family and tally (S_d) values");
    auto* theory = app.add_subcommand(
        "theory", "exact model distribution of the (S_d) sums");
    auto* compare = app.add_subcommand(
        "compare", "total variation distance between two distribution files");
    auto* verify = app.add_subcommand(
        "verify-counts", "formula vs oracle point counts over a hat family");
    auto* asym = app.add_subcommand(
        "asymptotics", "leading-order predictions vs exact brute counts");
    auto* heur = app.add_subcommand(
        "heuristic", "local residue-tuple count identity");

    std::string cmp_empirical, cmp_theory;
    for (CLI::App* sub : {empirical, theory, verify, asym, heur}) {
        add_common_options(sub, opt);
        sub->add_option("--config", config_path, "JSON config file");
    }
    add_common_options(compare, opt);
    compare->add_option("--config", config_path, "JSON config file");
    compare->add_option("empirical_file", cmp_empirical, "empirical JSON file")
        ->required();
    compare->add_option("theory_file", cmp_theory, "theory JSON file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        finalize_options(opt);
        const ExperimentConfig& cfg = opt.cfg;

        if (empirical->parsed()) {
            emit(to_json(cyccov::run_empirical(cfg), cfg), opt.out);
            return 0;
        }
        if (theory->parsed()) {
            emit(to_json(cyccov::run_theory(cfg), cfg), opt.out);
            return 0;
        }
        if (compare->parsed()) {
            const auto emp =
                cyccov::distribution_from_json(slurp(cmp_empirical));
            const auto theo = cyccov::distribution_from_json(slurp(cmp_theory));
            const auto report = cyccov::compare_distributions(emp, theo, cfg);
            emit(cfg.format == "csv" ? to_csv(report) : to_json(report),
                 opt.out);
            return report.pass ? 0 : 1;
        }
        if (verify->parsed()) {
            const auto report = cyccov::run_verify_counts(cfg);
            emit(to_json(report), opt.out);
            return report.pass() ? 0 : 1;
        }
        if (asym->parsed()) {
            const auto report = cyccov::run_asymptotics(cfg);
            emit(cfg.format == "csv" ? to_csv(report) : to_json(report),
                 opt.out);
            return report.converging ? 0 : 1;
        }
        if (heur->parsed()) {
            const auto report = cyccov::run_heuristic(cfg);
            emit(cfg.format == "csv" ? to_csv(report) : to_json(report),
                 opt.out);
            return report.pass() ? 0 : 1;
        }
    } catch (const cyccov::KeyspaceMismatch& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const cyccov::BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const cyccov::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}

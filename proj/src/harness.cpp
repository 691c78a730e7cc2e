#include "cyccov/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "json.hpp"

namespace cyccov {

using nlohmann::json;

// --- config ---------------------------------------------------------------

void ExperimentConfig::validate() const {
    if (r < 2) throw DegenerateOrder("r must be at least 2");
    if (q % r != 1)
        throw CongruenceViolation(std::to_string(q) + " != 1 mod " +
                                  std::to_string(r));
    if (mode != "exhaustive" && mode != "montecarlo")
        throw DomainError("mode must be exhaustive or montecarlo");
    if (mode == "montecarlo" && samples < 1)
        throw DomainError("montecarlo needs samples >= 1");
    if (format != "json" && format != "csv")
        throw DomainError("format must be json or csv");
    for (unsigned d : divisors) {
        if (d < 2 || r % d != 0)
            throw NotADivisor("divisor " + std::to_string(d));
    }
}

std::vector<unsigned> ExperimentConfig::effective_divisors() const {
    std::vector<unsigned> out = divisors;
    if (out.empty()) {
        for (unsigned d : divisors_of(r))
            if (d > 1) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int ExperimentConfig::min_degree() const {
    int m = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i == 0 || degrees[i] < m) m = degrees[i];
    }
    return m;
}

double ExperimentConfig::tv_threshold(int min_deg) const {
    return tv_base * std::pow(2.0, -(min_deg - tv_base_degree) / 2.0);
}

// --- sweep engine ----------------------------------------------------------

namespace {

// Flattened map key: the concatenated coefficient vectors of the S_d tuple.
using FlatKey = std::vector<std::int64_t>;

void append_flat(FlatKey& key, const CycInt& v) {
    for (const BigInt& c : v.coeffs()) {
        if (!c.fits_slong_p()) throw DomainError("key coefficient overflow");
        key.push_back(c.get_si());
    }
}

std::vector<CycInt> unflatten(const FlatKey& key, unsigned r,
                              std::size_t parts) {
    const std::size_t width = key.size() / parts;
    std::vector<CycInt> out;
    out.reserve(parts);
    for (std::size_t j = 0; j < parts; ++j) {
        std::vector<BigInt> coeffs(width);
        for (std::size_t i = 0; i < width; ++i)
            coeffs[i] = BigInt(static_cast<long>(key[j * width + i]));
        out.push_back(CycInt::from_coeffs(r, std::move(coeffs)));
    }
    return out;
}

struct EmpiricalTally {
    std::map<FlatKey, std::uint64_t> counts;
    std::uint64_t members = 0;
    std::uint64_t zero_prop_violations = 0;

    void merge(const EmpiricalTally& o) {
        for (const auto& [k, c] : o.counts) counts[k] += c;
        members += o.members;
        zero_prop_violations += o.zero_prop_violations;
    }
};

// Run fn(worker_index) on `workers` threads (or inline when workers <= 1).
void parallel_for_workers(unsigned workers,
                          const std::function<void(unsigned)>& fn) {
    if (workers <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(fn, w);
    for (auto& t : threads) t.join();
}

// Evaluate each slot polynomial at every x, reusing rows above first_changed.
void refresh_evals(const PrimeField& F, const std::vector<Poly>& polys,
                   std::size_t first_changed,
                   std::vector<std::vector<FieldElem>>& evals) {
    for (std::size_t s = first_changed; s < polys.size(); ++s) {
        for (FieldElem x = 0; x < F.q(); ++x)
            evals[s][x] = eval(F, polys[s], x);
    }
}

int weighted_degree_of(const std::vector<int>& degrees) {
    int w = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        w += static_cast<int>(i + 1) * degrees[i];
    return w;
}

}  // namespace

Distribution run_empirical(const ExperimentConfig& cfg) {
    cfg.validate();
    const PrimeField F = make_field(cfg.q, cfg.r);
    const DegreeTuple tuple(cfg.r, cfg.degrees);
    const auto divisors = cfg.effective_divisors();
    const auto subs = bracket_subfamilies(tuple);

    Distribution dist;
    dist.kind = cfg.mode == "exhaustive" ? "empirical-exhaustive"
                                         : "empirical-montecarlo";
    dist.q = cfg.q;
    dist.r = cfg.r;
    dist.divisors = divisors;
    dist.n_sites = cfg.q + 1;
    dist.degrees = cfg.degrees;

    const unsigned workers = std::max(1u, cfg.workers);
    std::vector<EmpiricalTally> tallies(workers);

    if (cfg.mode == "exhaustive") {
        std::uint64_t space_total = 0;
        for (const Subfamily& sub : subs)
            space_total += TupleEnumerator(F, sub.degrees).index_space();
        if (space_total > cfg.budget)
            throw BudgetExceeded("family index space " +
                                 std::to_string(space_total));

        parallel_for_workers(workers, [&](unsigned w) {
            EmpiricalTally& tally = tallies[w];
            FlatKey key;
            for (const Subfamily& sub : subs) {
                TupleEnumerator en(F, sub.degrees);
                const std::uint64_t space = en.index_space();
                const std::uint64_t lo = space * w / workers;
                const std::uint64_t hi = space * (w + 1) / workers;
                if (lo >= hi) continue;
                const int wdeg = weighted_degree_of(sub.degrees);
                std::vector<std::vector<FieldElem>> evals(
                    sub.degrees.size(), std::vector<FieldElem>(F.q()));
                en.visit(lo, hi, [&](const std::vector<Poly>& polys,
                                     std::size_t changed) {
                    refresh_evals(F, polys, changed, evals);
                    const SiteProfile prof =
                        site_profile_from_evals(F, evals, wdeg, divisors);
                    tally.zero_prop_violations +=
                        prof.zero_propagation_violations * (F.q() - 1);
                    for (FieldElem a = 1; a < F.q(); ++a) {
                        key.clear();
                        for (std::size_t di = 0; di < divisors.size(); ++di)
                            append_flat(key,
                                        char_sum_from_profile(F, prof, di, a));
                        ++tally.counts[key];
                        ++tally.members;
                    }
                });
            }
        });
    } else {
        dist.seed = cfg.seed;
        parallel_for_workers(workers, [&](unsigned w) {
            EmpiricalTally& tally = tallies[w];
            FlatKey key;
            const std::uint64_t lo = cfg.samples * w / workers;
            const std::uint64_t hi = cfg.samples * (w + 1) / workers;
            for (std::uint64_t i = lo; i < hi; ++i) {
                const FamilyMember mem =
                    sample_member_indexed(F, tuple, cfg.seed, i);
                const SiteProfile prof = site_profile(F, mem, divisors);
                tally.zero_prop_violations += prof.zero_propagation_violations;
                key.clear();
                for (std::size_t di = 0; di < divisors.size(); ++di)
                    append_flat(key,
                                char_sum_from_profile(F, prof, di, mem.alpha));
                ++tally.counts[key];
                ++tally.members;
            }
        });
    }

    EmpiricalTally total;
    for (const auto& t : tallies) total.merge(t);

    if (cfg.mode == "exhaustive") {
        const std::uint64_t expected = bracket_cardinality(F, tuple, true);
        if (total.members != expected)
            throw DomainError("family sweep size mismatch: " +
                              std::to_string(total.members) + " vs " +
                              std::to_string(expected));
    }

    dist.total = total.members;
    dist.zero_propagation_violations = total.zero_prop_violations;
    for (const auto& [k, c] : total.counts) {
        std::vector<CycInt> key = unflatten(k, cfg.r, divisors.size());
        dist.counts.emplace(key, c);
        Rational p(static_cast<long>(c), 1);
        p /= Rational(static_cast<long>(dist.total));
        dist.probs.emplace(std::move(key), p);
    }
    return dist;
}

Distribution run_theory(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto divisors = cfg.effective_divisors();
    const SiteDistribution site = site_distribution(cfg.q, cfg.r);
    const JointSumDistribution joint = convolve(site, cfg.q + 1, divisors);

    Distribution dist;
    dist.kind = "theory";
    dist.q = cfg.q;
    dist.r = cfg.r;
    dist.divisors = joint.divisors;
    dist.n_sites = joint.n_sites;
    dist.probs = joint.table;
    return dist;
}

ComparisonReport compare_distributions(const Distribution& empirical,
                                       const Distribution& theory,
                                       const ExperimentConfig& cfg) {
    if (empirical.q != theory.q || empirical.r != theory.r ||
        empirical.divisors != theory.divisors)
        throw KeyspaceMismatch("distributions disagree on (q, r, divisors)");

    ComparisonReport report;
    report.q = empirical.q;
    report.r = empirical.r;
    report.divisors = empirical.divisors;
    report.family_size = empirical.total;
    report.min_degree = cfg.tv_base_degree;
    if (!empirical.degrees.empty()) {
        report.min_degree = *std::min_element(empirical.degrees.begin(),
                                              empirical.degrees.end());
    }
    report.error_scale = error_scale(empirical.q, report.min_degree);

    std::vector<std::vector<CycInt>> keys;
    for (const auto& [k, p] : empirical.probs) keys.push_back(k);
    for (const auto& [k, p] : theory.probs) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    Rational tv(0);
    for (const auto& k : keys) {
        KeyGap gap;
        gap.key = k;
        auto e = empirical.probs.find(k);
        auto t = theory.probs.find(k);
        gap.empirical = e == empirical.probs.end() ? Rational(0) : e->second;
        gap.theory = t == theory.probs.end() ? Rational(0) : t->second;
        gap.gap = abs(gap.empirical - gap.theory);
        tv += gap.gap;
        report.per_key.push_back(std::move(gap));
    }
    tv /= 2;
    report.tv = tv;
    report.tv_value = tv.get_d();
    report.threshold = cfg.tv_threshold(report.min_degree);
    report.pass = report.tv_value <= report.threshold;
    return report;
}

VerifyCountsReport run_verify_counts(const ExperimentConfig& cfg) {
    cfg.validate();
    const PrimeField F = make_field(cfg.q, cfg.r);
    const DegreeTuple tuple(cfg.r, cfg.degrees);
    const auto subs = bracket_subfamilies(tuple);
    const RootCountTable roots(F);

    std::vector<unsigned> divisors;
    for (unsigned d : divisors_of(cfg.r))
        if (d > 1) divisors.push_back(d);

    std::uint64_t space_total = 0;
    for (const Subfamily& sub : subs)
        space_total += TupleEnumerator(F, sub.degrees).index_space();
    if (space_total > cfg.budget)
        throw BudgetExceeded("family index space");

    VerifyCountsReport report;
    report.q = cfg.q;
    report.r = cfg.r;
    report.degrees = cfg.degrees;

    struct Partial {
        std::uint64_t members = 0, mismatches = 0, hw = 0, undefined = 0;
        long long min_count = 0, max_count = 0;
        bool any = false;
    };
    const unsigned workers = std::max(1u, cfg.workers);
    std::vector<Partial> parts(workers);

    parallel_for_workers(workers, [&](unsigned w) {
        Partial& part = parts[w];
        for (const Subfamily& sub : subs) {
            TupleEnumerator en(F, sub.degrees);
            const std::uint64_t space = en.index_space();
            const std::uint64_t lo = space * w / workers;
            const std::uint64_t hi = space * (w + 1) / workers;
            if (lo >= hi) continue;

            long long g = -1;
            bool genus_defined = true;
            try {
                g = genus(DegreeTuple(cfg.r, sub.degrees));
            } catch (const Error&) {
                genus_defined = false;
            }
            const int wdeg = weighted_degree_of(sub.degrees);
            std::vector<std::vector<FieldElem>> evals(
                sub.degrees.size(), std::vector<FieldElem>(F.q()));
            en.visit(lo, hi, [&](const std::vector<Poly>& polys,
                                 std::size_t changed) {
                refresh_evals(F, polys, changed, evals);
                const SiteProfile prof =
                    site_profile_from_evals(F, evals, wdeg, divisors);
                const OracleSites sites = oracle_sites(F, evals, wdeg);
                for (FieldElem a = 1; a < F.q(); ++a) {
                    const long long formula =
                        point_count_from_profile(F, prof, a);
                    const long long oracle = oracle_count(F, roots, sites, a);
                    ++part.members;
                    if (formula != oracle) ++part.mismatches;
                    if (!genus_defined) {
                        ++part.undefined;
                    } else {
                        const long long dev = formula - (cfg.q + 1);
                        if (dev * dev > 4 * g * g * static_cast<long long>(cfg.q))
                            ++part.hw;
                    }
                    if (!part.any || formula < part.min_count)
                        part.min_count = formula;
                    if (!part.any || formula > part.max_count)
                        part.max_count = formula;
                    part.any = true;
                }
            });
        }
    });

    bool any = false;
    for (const Partial& part : parts) {
        report.members += part.members;
        report.formula_oracle_mismatches += part.mismatches;
        report.hasse_weil_violations += part.hw;
        report.genus_undefined_members += part.undefined;
        if (part.any) {
            if (!any || part.min_count < report.min_count)
                report.min_count = part.min_count;
            if (!any || part.max_count > report.max_count)
                report.max_count = part.max_count;
            any = true;
        }
    }
    return report;
}

// --- asymptotics battery ----------------------------------------------------

namespace {

std::string degrees_text(const std::vector<int>& degrees) {
    std::string out = "d=(";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(degrees[i]);
    }
    out += ')';
    return out;
}

}  // namespace

AsymptoticsReport run_asymptotics(const ExperimentConfig& cfg) {
    if (!is_prime_u64(cfg.q)) throw NonPrimeModulus("q must be prime");
    const PrimeField F(cfg.q, 2, PrimeField::default_table_cap);
    AsymptoticsReport report;
    report.q = cfg.q;
    report.truncation = cfg.truncation;
    const EulerConstants C = euler_constants(cfg.q, 8, cfg.truncation);

    // series -> (relative error at first scale, at last scale)
    std::map<std::string, std::pair<double, double>> series;
    auto add_row = [&](const std::string& series_id, std::string formula,
                       std::string parameters, const Rational& predicted,
                       std::uint64_t exact) {
        AsymptoticsRow row;
        row.formula = std::move(formula);
        row.parameters = std::move(parameters);
        row.predicted = predicted;
        row.exact = exact;
        const Rational ratio = Rational(static_cast<long>(exact)) / predicted;
        row.ratio = ratio.get_d();
        const double err = std::abs(row.ratio - 1.0);
        auto it = series.find(series_id);
        if (it == series.end())
            series.emplace(series_id, std::make_pair(err, err));
        else
            it->second.second = err;
        report.rows.push_back(std::move(row));
    };

    // R: single squarefree polynomials, growing degree, ell in {0, 1}
    for (unsigned ell = 0; ell <= 1; ++ell) {
        for (int d : {2, 4, 6}) {
            BruteCountSpec spec;
            spec.slot_degrees = {d};
            spec.budget = cfg.budget;
            if (ell == 1) spec.constraints = {{{1}, 0, 1}};
            const auto exact = brute_count(F, spec);
            add_row("R1-ell" + std::to_string(ell), "R",
                    "n=1 " + degrees_text(spec.slot_degrees) +
                        " ell=" + std::to_string(ell),
                    predict_R(F, C, spec.slot_degrees, ell, Poly::one()),
                    exact);
        }
    }
    // R: coprime pairs
    for (int d : {2, 3}) {
        BruteCountSpec spec;
        spec.slot_degrees = {d, d};
        spec.budget = cfg.budget;
        spec.constraints = {{{1, 0}, 0, 1}, {{0, 1}, 0, 1}};
        const auto exact = brute_count(F, spec);
        add_row("R2", "R", "n=2 " + degrees_text(spec.slot_degrees) + " ell=1",
                predict_R(F, C, spec.slot_degrees, 1, Poly::one()), exact);
    }
    // T: one power-weighted factor F = f_1 f_2^2 (r_1 = 3)
    for (int d : {2, 4}) {
        BruteCountSpec spec;
        spec.slot_degrees = {d, d};
        spec.budget = cfg.budget;
        spec.constraints = {{{1, 2}, 0, 1}};
        const auto exact = brute_count(F, spec);
        add_row("T", "T",
                "shapes=((" + std::to_string(d) + "," + std::to_string(d) +
                    ")) ell=1",
                predict_T(F, C, {{d, d}}, 1, Poly::one()), exact);
    }
    // S: two order-2 factors split into coprime slots (f_10, f_01, f_11)
    for (int d : {1, 2}) {
        BruteCountSpec spec;
        spec.slot_degrees = {d, d, d};
        spec.budget = cfg.budget;
        spec.constraints = {{{0, 1, 1}, 0, 1}, {{1, 0, 1}, 0, 1}};
        const auto exact = brute_count(F, spec);
        add_row("S", "S",
                "orders=(2,2) " + degrees_text(spec.slot_degrees) + " ell=1",
                predict_S(C, {2, 2}, spec.slot_degrees, 1), exact);
    }
    // G: the full order-6 shape with both prime-power value constraints
    for (int d : {1, 2}) {
        BruteCountSpec spec;
        spec.slot_degrees = {d, d, d, d, d};
        spec.budget = cfg.budget;
        std::vector<unsigned> mod2(5), mod3(5);
        for (unsigned i = 1; i <= 5; ++i) {
            mod2[i - 1] = i % 2;
            mod3[i - 1] = i % 3;
        }
        spec.constraints = {{mod2, 0, 1}, {mod3, 0, 1}};
        const auto exact = brute_count(F, spec);
        add_row("G", "G", "r=6 " + degrees_text(spec.slot_degrees) + " ell=1",
                predict_general_leading(C, 6, spec.slot_degrees, 1), exact);
    }

    // convergence: within each series the relative error at the largest scale
    // must not exceed the error at the smallest
    report.converging = true;
    for (const auto& [id, first_last] : series) {
        if (first_last.second > first_last.first + 1e-9)
            report.converging = false;
    }
    return report;
}

HeuristicReport run_heuristic(const ExperimentConfig& cfg) {
    if (!is_prime_u64(cfg.q)) throw NonPrimeModulus("q must be prime");
    HeuristicReport report;
    for (unsigned n = 1; n <= 3; ++n) {
        HeuristicRow row;
        row.q = cfg.q;
        row.n = n;
        row.enumerated = heuristic_local_count(cfg.q, n);
        row.closed_form = heuristic_closed_form(cfg.q, n);
        report.rows.push_back(row);
    }
    return report;
}

// --- serialization ----------------------------------------------------------

namespace {

json cycint_to_json(const CycInt& v) {
    json coeffs = json::array();
    for (const BigInt& c : v.coeffs()) {
        if (c.fits_slong_p())
            coeffs.push_back(static_cast<std::int64_t>(c.get_si()));
        else
            coeffs.push_back(c.get_str());
    }
    return json{{"m", v.conductor()}, {"coeffs", coeffs}};
}

CycInt cycint_from_json(const json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else
            coeffs.push_back(BigInt(static_cast<long>(c.get<std::int64_t>())));
    }
    return CycInt::from_coeffs(j.at("m").get<unsigned>(), std::move(coeffs));
}

json key_to_json(const std::vector<CycInt>& key) {
    json out = json::array();
    for (const CycInt& v : key) out.push_back(cycint_to_json(v));
    return out;
}

std::vector<CycInt> key_from_json(const json& j) {
    std::vector<CycInt> out;
    for (const auto& e : j) out.push_back(cycint_from_json(e));
    return out;
}

json config_to_json(const ExperimentConfig& cfg) {
    // execution-only fields (workers, output path) stay out so that reports
    // are byte-identical across worker counts
    return json{{"q", cfg.q},
                {"r", cfg.r},
                {"degrees", cfg.degrees},
                {"mode", cfg.mode},
                {"samples", cfg.samples},
                {"seed", cfg.seed},
                {"divisors", cfg.divisors},
                {"trunc", cfg.truncation},
                {"format", cfg.format},
                {"budget", cfg.budget},
                {"tv_base", cfg.tv_base},
                {"tv_base_degree", cfg.tv_base_degree}};
}

std::pair<double, double> wilson_interval(std::uint64_t count,
                                          std::uint64_t total) {
    const double z = 1.959963984540054;
    const double n = static_cast<double>(total);
    const double p = static_cast<double>(count) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half =
        z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_json(const Distribution& dist, const ExperimentConfig& cfg) {
    json out;
    out["kind"] = dist.kind;
    out["q"] = dist.q;
    out["r"] = dist.r;
    out["divisors"] = dist.divisors;
    out["n_sites"] = dist.n_sites;
    out["config"] = config_to_json(cfg);
    const bool empirical = dist.kind != "theory";
    if (empirical) {
        out["degrees"] = dist.degrees;
        out["total"] = dist.total;
        out["zero_propagation_violations"] = dist.zero_propagation_violations;
    }
    if (dist.kind == "empirical-montecarlo") out["seed"] = dist.seed;

    json entries = json::array();
    for (const auto& [key, prob] : dist.probs) {
        json entry;
        entry["key"] = key_to_json(key);
        entry["prob"] = to_fraction_string(prob);
        if (empirical) {
            const std::uint64_t c = dist.counts.at(key);
            entry["count"] = c;
            if (dist.kind == "empirical-montecarlo") {
                auto [lo, hi] = wilson_interval(c, dist.total);
                entry["wilson"] = json::array({lo, hi});
            }
        }
        entries.push_back(std::move(entry));
    }
    out["entries"] = std::move(entries);
    return out.dump(2) + "\n";
}

Distribution distribution_from_json(const std::string& text) {
    const json in = json::parse(text);
    Distribution dist;
    dist.kind = in.at("kind").get<std::string>();
    dist.q = in.at("q").get<unsigned>();
    dist.r = in.at("r").get<unsigned>();
    dist.divisors = in.at("divisors").get<std::vector<unsigned>>();
    dist.n_sites = in.at("n_sites").get<unsigned>();
    if (in.contains("degrees")) dist.degrees = in["degrees"].get<std::vector<int>>();
    if (in.contains("seed")) dist.seed = in["seed"].get<std::uint64_t>();
    if (in.contains("total")) dist.total = in["total"].get<std::uint64_t>();
    if (in.contains("zero_propagation_violations"))
        dist.zero_propagation_violations =
            in["zero_propagation_violations"].get<std::uint64_t>();
    for (const auto& entry : in.at("entries")) {
        std::vector<CycInt> key = key_from_json(entry.at("key"));
        dist.probs.emplace(key, parse_fraction(entry.at("prob").get<std::string>()));
        if (entry.contains("count"))
            dist.counts.emplace(std::move(key),
                                entry["count"].get<std::uint64_t>());
    }
    return dist;
}

std::string to_json(const ComparisonReport& report) {
    json out;
    out["q"] = report.q;
    out["r"] = report.r;
    out["divisors"] = report.divisors;
    out["family_size"] = report.family_size;
    out["min_degree"] = report.min_degree;
    out["error_scale"] = report.error_scale;
    out["tv"] = to_fraction_string(report.tv);
    out["tv_value"] = report.tv_value;
    out["threshold"] = report.threshold;
    out["pass"] = report.pass;
    json per_key = json::array();
    for (const auto& gap : report.per_key) {
        per_key.push_back(json{{"key", key_to_json(gap.key)},
                               {"empirical", to_fraction_string(gap.empirical)},
                               {"theory", to_fraction_string(gap.theory)},
                               {"gap", to_fraction_string(gap.gap)}});
    }
    out["per_key"] = std::move(per_key);
    return out.dump(2) + "\n";
}

std::string to_csv(const ComparisonReport& report) {
    std::string out;
    out += "tv," + to_fraction_string(report.tv) + "\n";
    out += "tv_value," + std::to_string(report.tv_value) + "\n";
    out += "threshold," + std::to_string(report.threshold) + "\n";
    out += std::string("pass,") + (report.pass ? "1" : "0") + "\n";
    out += "key,empirical,theory,gap\n";
    for (const auto& gap : report.per_key) {
        out += csv_quote(key_to_json(gap.key).dump()) + "," +
               to_fraction_string(gap.empirical) + "," +
               to_fraction_string(gap.theory) + "," +
               to_fraction_string(gap.gap) + "\n";
    }
    return out;
}

std::string to_json(const VerifyCountsReport& report) {
    json out;
    out["q"] = report.q;
    out["r"] = report.r;
    out["degrees"] = report.degrees;
    out["members"] = report.members;
    out["formula_oracle_mismatches"] = report.formula_oracle_mismatches;
    out["hasse_weil_violations"] = report.hasse_weil_violations;
    out["genus_undefined_members"] = report.genus_undefined_members;
    out["min_count"] = report.min_count;
    out["max_count"] = report.max_count;
    out["pass"] = report.pass();
    return out.dump(2) + "\n";
}

std::string to_json(const AsymptoticsReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back(json{{"formula", row.formula},
                            {"parameters", row.parameters},
                            {"predicted", to_fraction_string(row.predicted)},
                            {"exact", row.exact},
                            {"ratio", row.ratio}});
    }
    json out;
    out["q"] = report.q;
    out["truncation"] = report.truncation;
    out["converging"] = report.converging;
    out["rows"] = std::move(rows);
    return out.dump(2) + "\n";
}

std::string to_csv(const AsymptoticsReport& report) {
    std::string out = "formula,parameters,predicted,exact,ratio\n";
    for (const auto& row : report.rows) {
        out += row.formula + "," + csv_quote(row.parameters) + "," +
               to_fraction_string(row.predicted) + "," +
               std::to_string(row.exact) + "," + std::to_string(row.ratio) +
               "\n";
    }
    return out;
}

std::string to_json(const HeuristicReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back(json{{"q", row.q},
                            {"n", row.n},
                            {"enumerated", row.enumerated},
                            {"closed_form", row.closed_form}});
    }
    json out;
    out["pass"] = report.pass();
    out["rows"] = std::move(rows);
    return out.dump(2) + "\n";
}

std::string to_csv(const HeuristicReport& report) {
    std::string out = "q,n,enumerated,closed_form\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.q) + "," + std::to_string(row.n) + "," +
               std::to_string(row.enumerated) + "," +
               std::to_string(row.closed_form) + "\n";
    }
    return out;
}

}  // namespace cyccov

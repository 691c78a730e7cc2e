#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyccov/asymptotics.hpp"
#include "cyccov/charsum.hpp"
#include "cyccov/dist_model.hpp"
#include "cyccov/family.hpp"

namespace cyccov {

struct ExperimentConfig {
    unsigned q = 5;
    unsigned r = 2;
    std::vector<int> degrees;
    std::string mode = "exhaustive";  // or "montecarlo"
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::vector<unsigned> divisors;  // empty: all d | r with d > 1
    unsigned truncation = 8;
    std::string format = "json";  // or "csv"
    unsigned workers = 1;
    std::uint64_t budget = 200'000'000;
    // TV acceptance threshold for `compare`: tv_base at tv_base_degree,
    // halving per +2 of the minimum degree.
    double tv_base = 0.15;
    int tv_base_degree = 2;

    void validate() const;
    std::vector<unsigned> effective_divisors() const;
    int min_degree() const;
    double tv_threshold(int min_degree) const;
};

/// A joint distribution of the character-sum vector (S_d)_{d in divisors},
/// either tallied over a family (exact counts) or predicted by the site
/// model.
struct Distribution {
    std::string kind;  // "empirical-exhaustive" | "empirical-montecarlo" | "theory"
    unsigned q = 0, r = 0;
    std::vector<unsigned> divisors;
    unsigned n_sites = 0;
    std::vector<int> degrees;  // empirical runs only
    std::uint64_t seed = 0;    // montecarlo runs only
    std::uint64_t total = 0;   // members or samples; 0 for theory
    std::map<std::vector<CycInt>, std::uint64_t> counts;  // empirical
    std::map<std::vector<CycInt>, Rational> probs;
    std::uint64_t zero_propagation_violations = 0;
};

Distribution run_empirical(const ExperimentConfig& cfg);
Distribution run_theory(const ExperimentConfig& cfg);

struct KeyGap {
    std::vector<CycInt> key;
    Rational empirical;
    Rational theory;
    Rational gap;
};

struct ComparisonReport {
    unsigned q = 0, r = 0;
    std::vector<unsigned> divisors;
    std::uint64_t family_size = 0;
    int min_degree = 0;
    double error_scale = 0.0;
    Rational tv;
    double tv_value = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::vector<KeyGap> per_key;
};

ComparisonReport compare_distributions(const Distribution& empirical,
                                       const Distribution& theory,
                                       const ExperimentConfig& cfg);

struct VerifyCountsReport {
    unsigned q = 0, r = 0;
    std::vector<int> degrees;
    std::uint64_t members = 0;
    std::uint64_t formula_oracle_mismatches = 0;
    std::uint64_t hasse_weil_violations = 0;
    std::uint64_t genus_undefined_members = 0;  // bound not applicable
    long long min_count = 0;
    long long max_count = 0;
    bool pass() const {
        return formula_oracle_mismatches == 0 && hasse_weil_violations == 0;
    }
};

/// Formula-vs-oracle battery over the whole hat bracket family of cfg's
/// degree tuple, with the Hasse-Weil bound checked wherever the genus
/// formula applies.
VerifyCountsReport run_verify_counts(const ExperimentConfig& cfg);

struct AsymptoticsRow {
    std::string formula;  // "R", "T", "S", "G"
    std::string parameters;
    Rational predicted;
    std::uint64_t exact = 0;
    double ratio = 0.0;  // exact / predicted
};

struct AsymptoticsReport {
    unsigned q = 0;
    unsigned truncation = 8;
    std::vector<AsymptoticsRow> rows;
    bool converging = false;  // |ratio-1| improves within each formula family
};

AsymptoticsReport run_asymptotics(const ExperimentConfig& cfg);

struct HeuristicRow {
    unsigned q = 0, n = 0;
    long long enumerated = 0;
    long long closed_form = 0;
};

struct HeuristicReport {
    std::vector<HeuristicRow> rows;
    bool pass() const {
        for (const auto& row : rows)
            if (row.enumerated != row.closed_form) return false;
        return true;
    }
};

HeuristicReport run_heuristic(const ExperimentConfig& cfg);

// --- serialization (byte-deterministic for equal inputs) ------------------

std::string to_json(const Distribution& dist, const ExperimentConfig& cfg);
Distribution distribution_from_json(const std::string& text);

std::string to_json(const ComparisonReport& report);
std::string to_csv(const ComparisonReport& report);
std::string to_json(const VerifyCountsReport& report);
std::string to_json(const AsymptoticsReport& report);
std::string to_csv(const AsymptoticsReport& report);
std::string to_json(const HeuristicReport& report);
std::string to_csv(const HeuristicReport& report);

}  // namespace cyccov

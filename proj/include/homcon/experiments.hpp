#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homcon/caps.hpp"
#include "homcon/ext_int.hpp"
#include "homcon/graph.hpp"

namespace homcon {

// 95% Wilson score interval for a proportion.
std::pair<double, double> wilson_interval(long long successes, long long trials);

enum class ExperimentKind { equality, concentration, chernoff, delicate, f_tau };

ExperimentKind experiment_kind_from_string(const std::string& s);
std::string to_string(ExperimentKind k);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::equality;
    std::vector<int> n_values{20};
    std::optional<Schedule> schedule;  // used when fixed_p is absent
    std::optional<double> fixed_p;
    int i = 0;
    long long trials = 10;
    uint64_t master_seed = 1;
    SearchCaps caps;
    int workers = 0;  // 0 = hardware concurrency

    // Equality: kappa size cap = delta + kappa_cap_extra, unless an absolute
    // cap is given.
    int kappa_cap_extra = 0;
    std::optional<int> kappa_cap_abs;

    // Concentration.
    int conc_mode = 1;  // 1 = neighborhood sandwich, 2 = interconnection bound
    int k = 1;
    double epsilon = 0.5;
    std::optional<int> a, b;  // explicit interconnection sizes
    double a0_exp = 1.0, a1_exp = 0.0, a_scale = 1.0;
    double b0_exp = 1.0, b1_exp = 0.0, b_scale = 1.0;
    long long conc_samples = 0;  // >0: sampled falsification past the cap

    // Chernoff.
    long long chernoff_m = 1000;
    double chernoff_p = 0.1;
    long long chernoff_draws = 100000;

    // Delicate scan.
    int ell = 5;
    double r = 5.0;
    long long scan_samples = 0;  // >0: sample C instead of enumerating

    // f / tau survey.
    int c_size_cap = 0;

    std::optional<std::string> input_path;  // fixed input graph per trial
    std::string out_path;
    std::string format = "csv";  // csv | json

    double p_for(int n) const;
    void validate() const;
};

// Flat "key = value" config file with # comments.
ExperimentConfig load_config_file(std::istream& in);
void apply_config_kv(ExperimentConfig& cfg, const std::string& key, const std::string& value);

enum class EqualityOutcome { equal, unequal, unknown, both_infinite };
std::string to_string(EqualityOutcome o);

struct EqualityRecord {
    int n;
    long long trial;
    uint64_t seed;
    double p;
    ExtInt delta;
    std::string kappa;  // value, "inf", or ">=s"
    EqualityOutcome outcome;
    double wall_ms;
};

struct EqualitySummary {
    int n;
    long long trials, unknown, both_infinite, decided, equal;
    double fraction, lo, hi;  // over decided finite trials
};

struct EqualityResult {
    std::vector<EqualityRecord> records;
    std::vector<EqualitySummary> summaries;
};

EqualityResult run_equality_experiment(const ExperimentConfig& cfg);

struct ConcentrationRecord {
    int n;
    long long trial;
    uint64_t seed;
    double p;
    int mode;
    long long a, b;        // mode 2; (k, -) packed in a for mode 1
    long long lo, hi;      // observed extremes (mode 1) or min interconnection (lo)
    double bound_lo, bound_hi;
    bool exact;
    bool pass;
    double wall_ms;
};

struct ConcentrationSummary {
    long long trials, passed;
    double fraction;
};

struct ConcentrationResult {
    std::vector<ConcentrationRecord> records;
    ConcentrationSummary summary;
};

ConcentrationResult run_concentration_experiment(const ExperimentConfig& cfg);

struct ChernoffSummary {
    long long m;
    double p;
    double eps;
    long long draws;
    long long tail_count;
    double tail_freq;
    double bound;      // 2 exp(-mu eps^2 / 3)
    double std_error;  // of the frequency estimate
    bool pass;         // freq <= bound + 3 se
};

ChernoffSummary run_chernoff_experiment(const ExperimentConfig& cfg);

struct DelicateTrialRecord {
    int n;
    long long trial;
    uint64_t seed;
    double p;
    long long c_bound;       // size bound on |C|
    long long c_checked;
    bool sampled;
    long long viol_h;        // clause (1) failures
    long long viol_clause2;  // clause (2) failures
    long long viol_star;
    long long guard_hits;
    double wall_ms;
};

struct DelicateResult {
    std::vector<DelicateTrialRecord> records;
    long long total_star_violations = 0;
};

DelicateResult run_delicate_scan(const ExperimentConfig& cfg);

struct FTauRecord {
    int n;
    long long trial;
    uint64_t seed;
    double p;
    std::string f;  // value or "inf"
    bool f_partial;
    std::string tau;
    double f_bound;    // n p^2 / 4
    double tau_bound;  // 3 n p^2 / 2
    bool f_ok;         // f >= f_bound
    bool tau_ok;       // tau > tau_bound
    double wall_ms;
};

struct FTauResult {
    std::vector<FTauRecord> records;
    long long f_ok_count = 0, tau_ok_count = 0;
};

FTauResult run_f_and_tau_survey(const ExperimentConfig& cfg);

// CSV / NDJSON emission.  Headers are part of the stable schema.
std::string csv_header(ExperimentKind k);
std::string to_csv_row(const EqualityRecord& r);
std::string to_csv_row(const ConcentrationRecord& r);
std::string to_csv_row(const DelicateTrialRecord& r);
std::string to_csv_row(const FTauRecord& r);
std::string to_json_line(const EqualityRecord& r);
std::string to_json_line(const ConcentrationRecord& r);
std::string to_json_line(const DelicateTrialRecord& r);
std::string to_json_line(const FTauRecord& r);

void write_records(std::ostream& out, const ExperimentConfig& cfg, const EqualityResult& res);
void write_records(std::ostream& out, const ExperimentConfig& cfg, const ConcentrationResult& res);
void write_records(std::ostream& out, const ExperimentConfig& cfg, const DelicateResult& res);
void write_records(std::ostream& out, const ExperimentConfig& cfg, const FTauResult& res);

}  // namespace homcon

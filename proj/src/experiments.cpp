#include "homcon/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "homcon/errors.hpp"
#include "homcon/invariants.hpp"
#include "homcon/rng.hpp"
#include "homcon/subsets.hpp"

#include "json.hpp"

namespace homcon {

std::pair<double, double> wilson_interval(long long successes, long long trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ExperimentKind experiment_kind_from_string(const std::string& s) {
    if (s == "equality") return ExperimentKind::equality;
    if (s == "concentration") return ExperimentKind::concentration;
    if (s == "chernoff") return ExperimentKind::chernoff;
    if (s == "delicate") return ExperimentKind::delicate;
    if (s == "ftau" || s == "f_tau") return ExperimentKind::f_tau;
    throw validation_error("unknown experiment kind: " + s);
}

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::equality: return "equality";
        case ExperimentKind::concentration: return "concentration";
        case ExperimentKind::chernoff: return "chernoff";
        case ExperimentKind::delicate: return "delicate";
        case ExperimentKind::f_tau: return "ftau";
    }
    return "?";
}

std::string to_string(EqualityOutcome o) {
    switch (o) {
        case EqualityOutcome::equal: return "equal";
        case EqualityOutcome::unequal: return "unequal";
        case EqualityOutcome::unknown: return "unknown";
        case EqualityOutcome::both_infinite: return "both_infinite";
    }
    return "?";
}

double ExperimentConfig::p_for(int n) const {
    if (fixed_p) return *fixed_p;
    if (schedule) return schedule->eval(n);
    throw validation_error("experiment config: neither p nor a schedule given");
}

void ExperimentConfig::validate() const {
    if (trials < 1) throw validation_error("experiment config: trials must be >= 1");
    if (n_values.empty()) throw validation_error("experiment config: no n values");
    for (int n : n_values)
        if (n < 1) throw validation_error("experiment config: n must be >= 1");
    if (fixed_p && (*fixed_p < 0.0 || *fixed_p > 1.0))
        throw validation_error("experiment config: p outside [0,1]");
    if (schedule && (schedule->alpha <= 0.0 || schedule->c <= 0.0))
        throw validation_error("experiment config: schedule needs alpha > 0 and c > 0");
    if (caps.max_subsets < 1 || caps.max_faces < 1 || caps.max_support < 1 ||
        caps.max_classes < 1 || caps.max_candidates < 1)
        throw validation_error("experiment config: caps must be positive");
    if (kind == ExperimentKind::equality && i >= 1 && kappa_cap_abs) {
        for (int n : n_values) {
            double expected_delta = n * std::pow(p_for(n), i + 1);
            if (expected_delta > static_cast<double>(*kappa_cap_abs))
                throw validation_error(
                    "equality experiment: expected delta exceeds the kappa size cap");
        }
    }
    if (kind == ExperimentKind::chernoff) {
        if (chernoff_m < 1) throw validation_error("chernoff: m must be >= 1");
        if (epsilon <= 0.0 || epsilon >= 1.0)
            throw validation_error("chernoff: epsilon must be in (0,1)");
    }
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& value) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(value);
    while (std::getline(is, item, ',')) out.push_back(std::stoi(trim(item)));
    return out;
}

}  // namespace

void apply_config_kv(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "kind") cfg.kind = experiment_kind_from_string(value);
    else if (key == "n") cfg.n_values = parse_int_list(value);
    else if (key == "p") cfg.fixed_p = std::stod(value);
    else if (key == "alpha") {
        if (!cfg.schedule) cfg.schedule = Schedule{};
        cfg.schedule->alpha = std::stod(value);
    } else if (key == "c") {
        if (!cfg.schedule) cfg.schedule = Schedule{};
        cfg.schedule->c = std::stod(value);
    } else if (key == "i") cfg.i = std::stoi(value);
    else if (key == "trials") cfg.trials = std::stoll(value);
    else if (key == "seed") cfg.master_seed = std::stoull(value);
    else if (key == "workers") cfg.workers = std::stoi(value);
    else if (key == "kappa_cap_extra") cfg.kappa_cap_extra = std::stoi(value);
    else if (key == "kappa_cap") cfg.kappa_cap_abs = std::stoi(value);
    else if (key == "mode") cfg.conc_mode = std::stoi(value);
    else if (key == "k") cfg.k = std::stoi(value);
    else if (key == "eps" || key == "epsilon") cfg.epsilon = std::stod(value);
    else if (key == "a") cfg.a = std::stoi(value);
    else if (key == "b") cfg.b = std::stoi(value);
    else if (key == "a0") cfg.a0_exp = std::stod(value);
    else if (key == "a1") cfg.a1_exp = std::stod(value);
    else if (key == "a_scale") cfg.a_scale = std::stod(value);
    else if (key == "b0") cfg.b0_exp = std::stod(value);
    else if (key == "b1") cfg.b1_exp = std::stod(value);
    else if (key == "b_scale") cfg.b_scale = std::stod(value);
    else if (key == "samples") cfg.conc_samples = std::stoll(value);
    else if (key == "m") cfg.chernoff_m = std::stoll(value);
    else if (key == "chernoff_p") cfg.chernoff_p = std::stod(value);
    else if (key == "draws") cfg.chernoff_draws = std::stoll(value);
    else if (key == "ell") cfg.ell = std::stoi(value);
    else if (key == "r") cfg.r = std::stod(value);
    else if (key == "scan_samples") cfg.scan_samples = std::stoll(value);
    else if (key == "c_size_cap") cfg.c_size_cap = std::stoi(value);
    else if (key == "input") cfg.input_path = value;
    else if (key == "out") cfg.out_path = value;
    else if (key == "format") cfg.format = value;
    else if (key == "cap_subsets") cfg.caps.max_subsets = std::stoll(value);
    else if (key == "cap_faces") cfg.caps.max_faces = std::stoll(value);
    else if (key == "cap_support") cfg.caps.max_support = std::stoll(value);
    else if (key == "cap_classes") cfg.caps.max_classes = std::stoll(value);
    else if (key == "cap_candidates") cfg.caps.max_candidates = std::stoll(value);
    else throw validation_error("unknown config key: " + key);
}

ExperimentConfig load_config_file(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw validation_error("config line is not key = value: " + line);
        apply_config_kv(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Runs fn(0..count-1) across a small thread pool; deterministic outputs are
// the caller's job (records land in index-addressed slots).
void parallel_trials(long long count, int workers, const std::function<void(long long)>& fn) {
    if (workers <= 0)
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<long long>(workers, count));
    if (workers <= 1) {
        for (long long t = 0; t < count; ++t) fn(t);
        return;
    }
    std::atomic<long long> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                long long t = next.fetch_add(1);
                if (t >= count) return;
                try {
                    fn(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

Graph trial_graph(const ExperimentConfig& cfg, int n, double p, uint64_t seed) {
    if (cfg.input_path) {
        std::ifstream in(*cfg.input_path);
        if (!in) throw validation_error("cannot open input graph: " + *cfg.input_path);
        return read_edge_list(in);
    }
    return er_sample(n, p, seed);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

EqualityResult run_equality_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    EqualityResult out;
    out.records.resize(static_cast<size_t>(cfg.n_values.size()) * static_cast<size_t>(cfg.trials));

    for (size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
        int n = cfg.n_values[ni];
        double p = cfg.p_for(n);
        parallel_trials(cfg.trials, cfg.workers, [&, ni, n, p](long long t) {
            long long global = static_cast<long long>(ni) * cfg.trials + t;
            uint64_t seed = derive_seed(cfg.master_seed, static_cast<uint64_t>(global));
            auto t0 = std::chrono::steady_clock::now();
            Graph g = trial_graph(cfg, n, p, seed);
            ExtInt d = delta(g, cfg.i, cfg.caps);
            EqualityRecord rec{n, t, seed, p, d, "", EqualityOutcome::unknown, 0.0};
            if (cfg.i == 0) {
                // Polynomial route: kappa^0 is classical vertex connectivity.
                ExtInt kv = vertex_connectivity(g);
                rec.kappa = kv.str();
                if (d.is_inf() && kv.is_inf())
                    rec.outcome = EqualityOutcome::both_infinite;
                else
                    rec.outcome = (kv == d) ? EqualityOutcome::equal : EqualityOutcome::unequal;
            } else if (d.is_inf()) {
                // No (i+1)-clique anywhere, hence no i-faces in any Cl(g-C).
                rec.kappa = "inf";
                rec.outcome = EqualityOutcome::both_infinite;
            } else {
                int cap = cfg.kappa_cap_abs
                              ? std::min(*cfg.kappa_cap_abs, n)
                              : static_cast<int>(
                                    std::min<long long>(d.value() + cfg.kappa_cap_extra, n));
                try {
                    KappaResult kr = kappa(g, cfg.i, cap, cfg.caps);
                    switch (kr.kind) {
                        case KappaResult::Kind::value:
                            rec.kappa = std::to_string(kr.value);
                            rec.outcome = (ExtInt(kr.value) == d) ? EqualityOutcome::equal
                                                                  : EqualityOutcome::unequal;
                            break;
                        case KappaResult::Kind::infinite:
                            rec.kappa = "inf";
                            rec.outcome = EqualityOutcome::unequal;
                            break;
                        case KappaResult::Kind::unknown_at_least:
                            rec.kappa = ">=" + std::to_string(kr.value);
                            rec.outcome = ExtInt(kr.value) > d ? EqualityOutcome::unequal
                                                               : EqualityOutcome::unknown;
                            break;
                    }
                } catch (const resource_error&) {
                    rec.kappa = "unknown";
                    rec.outcome = EqualityOutcome::unknown;
                }
            }
            rec.wall_ms = elapsed_ms(t0);
            out.records[static_cast<size_t>(global)] = std::move(rec);
        });

        EqualitySummary s{};
        s.n = n;
        s.trials = cfg.trials;
        for (long long t = 0; t < cfg.trials; ++t) {
            const auto& rec = out.records[static_cast<size_t>(ni) * static_cast<size_t>(cfg.trials) +
                                          static_cast<size_t>(t)];
            switch (rec.outcome) {
                case EqualityOutcome::unknown: ++s.unknown; break;
                case EqualityOutcome::both_infinite: ++s.both_infinite; break;
                case EqualityOutcome::equal: ++s.equal; ++s.decided; break;
                case EqualityOutcome::unequal: ++s.decided; break;
            }
        }
        s.fraction = s.decided ? static_cast<double>(s.equal) / static_cast<double>(s.decided) : 0.0;
        auto [lo, hi] = wilson_interval(s.equal, s.decided);
        s.lo = lo;
        s.hi = hi;
        out.summaries.push_back(s);
    }
    return out;
}

ConcentrationResult run_concentration_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ConcentrationResult out;
    out.records.resize(static_cast<size_t>(cfg.n_values.size()) * static_cast<size_t>(cfg.trials));

    for (size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
        int n = cfg.n_values[ni];
        double p = cfg.p_for(n);
        parallel_trials(cfg.trials, cfg.workers, [&, ni, n, p](long long t) {
            long long global = static_cast<long long>(ni) * cfg.trials + t;
            uint64_t seed = derive_seed(cfg.master_seed, static_cast<uint64_t>(global));
            auto t0 = std::chrono::steady_clock::now();
            Graph g = trial_graph(cfg, n, p, seed);
            ConcentrationRecord rec{n, t, seed, p, cfg.conc_mode, 0, 0, 0, 0, 0.0, 0.0, true,
                                    false, 0.0};
            if (cfg.conc_mode == 1) {
                auto [lo, hi] = neighborhood_size_range(g, cfg.k, cfg.caps.max_subsets);
                double center = n * std::pow(p, cfg.k);
                rec.a = cfg.k;
                rec.b = 0;
                rec.lo = lo;
                rec.hi = hi;
                rec.bound_lo = center * (1.0 - cfg.epsilon);
                rec.bound_hi = center * (1.0 + cfg.epsilon);
                rec.pass = static_cast<double>(lo) >= rec.bound_lo &&
                           static_cast<double>(hi) <= rec.bound_hi;
            } else {
                int a = cfg.a ? *cfg.a
                              : std::max(1, static_cast<int>(std::pow(n, cfg.a0_exp) *
                                                             std::pow(p, cfg.a1_exp) * cfg.a_scale));
                int b = cfg.b ? *cfg.b
                              : std::max(1, static_cast<int>(std::pow(n, cfg.b0_exp) *
                                                             std::pow(p, cfg.b1_exp) * cfg.b_scale));
                rec.a = a;
                rec.b = b;
                long long pairs = binom_capped(n, a);
                long long inner = binom_capped(n - a, b);
                bool exact = pairs <= cfg.caps.max_subsets / std::max(inner, 1LL);
                long long val;
                if (exact) {
                    val = min_interconnection(g, a, b, cfg.caps.max_subsets);
                } else {
                    if (cfg.conc_samples <= 0)
                        throw resource_error(
                            "concentration: (A,B) enumeration exceeds cap; set samples for the "
                            "falsification mode");
                    val = min_interconnection_sampled(g, a, b, cfg.conc_samples,
                                                      derive_seed(seed, 1));
                }
                rec.exact = exact;
                rec.lo = val;
                rec.bound_lo = static_cast<double>(a) * b * p * (1.0 - cfg.epsilon);
                rec.bound_hi = 0.0;
                rec.pass = static_cast<double>(val) >= rec.bound_lo;
            }
            rec.wall_ms = elapsed_ms(t0);
            out.records[static_cast<size_t>(global)] = rec;
        });
    }
    out.summary.trials = static_cast<long long>(out.records.size());
    out.summary.passed = 0;
    for (const auto& rec : out.records) out.summary.passed += rec.pass ? 1 : 0;
    out.summary.fraction = out.summary.trials
                               ? static_cast<double>(out.summary.passed) / out.summary.trials
                               : 0.0;
    return out;
}

ChernoffSummary run_chernoff_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const long long m = cfg.chernoff_m;
    const double p = cfg.chernoff_p;
    const double eps = cfg.epsilon;
    const double mu = static_cast<double>(m) * p;
    const double lo = mu * (1.0 - eps), hi = mu * (1.0 + eps);

    std::atomic<long long> tail{0};
    int workers = cfg.workers > 0 ? cfg.workers
                                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    long long shard = (cfg.chernoff_draws + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            long long begin = w * shard;
            long long end = std::min(cfg.chernoff_draws, begin + shard);
            long long local = 0;
            for (long long d = begin; d < end; ++d) {
                SplitMix64 rng(derive_seed(cfg.master_seed, static_cast<uint64_t>(d)));
                long long sum = 0;
                for (long long j = 0; j < m; ++j) sum += rng.bernoulli(p) ? 1 : 0;
                double s = static_cast<double>(sum);
                if (s < lo || s > hi) ++local;
            }
            tail += local;
        });
    }
    for (auto& th : pool) th.join();

    ChernoffSummary s{};
    s.m = m;
    s.p = p;
    s.eps = eps;
    s.draws = cfg.chernoff_draws;
    s.tail_count = tail.load();
    s.tail_freq = static_cast<double>(s.tail_count) / static_cast<double>(std::max(1LL, s.draws));
    s.bound = 2.0 * std::exp(-mu * eps * eps / 3.0);
    s.std_error = std::sqrt(std::max(0.0, s.tail_freq * (1.0 - s.tail_freq) /
                                              static_cast<double>(std::max(1LL, s.draws))));
    s.pass = s.tail_freq <= s.bound + 3.0 * s.std_error;
    return s;
}

DelicateResult run_delicate_scan(const ExperimentConfig& cfg) {
    cfg.validate();
    // The size bound is a function of (n, p) only: validate enumerability
    // before any trial runs.
    for (int n : cfg.n_values) {
        double p = cfg.p_for(n);
        long long c_bound =
            static_cast<long long>(n * std::pow(p, cfg.i + 1) * (2.0 - cfg.epsilon));
        c_bound = std::min<long long>(c_bound, n);
        if (cfg.scan_samples > 0) continue;
        long long total = 0;
        for (long long c = 0; c <= c_bound; ++c) total += binom_capped(n, static_cast<int>(c));
        if (total > cfg.caps.max_subsets)
            throw validation_error(
                "delicate scan: C enumeration exceeds cap; set scan_samples to sample");
    }

    DelicateResult out;
    out.records.resize(static_cast<size_t>(cfg.n_values.size()) * static_cast<size_t>(cfg.trials));
    for (size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
        int n = cfg.n_values[ni];
        double p = cfg.p_for(n);
        parallel_trials(cfg.trials, cfg.workers, [&, ni, n, p](long long t) {
            long long global = static_cast<long long>(ni) * cfg.trials + t;
            uint64_t seed = derive_seed(cfg.master_seed, static_cast<uint64_t>(global));
            auto t0 = std::chrono::steady_clock::now();
            Graph g = trial_graph(cfg, n, p, seed);
            long long c_bound =
                std::min<long long>(static_cast<long long>(n * std::pow(p, cfg.i + 1) *
                                                           (2.0 - cfg.epsilon)),
                                    n);
            DelicateTrialRecord rec{n, t, seed, p, c_bound, 0, cfg.scan_samples > 0,
                                    0, 0, 0, 0, 0.0};
            VertexSet c(n);
            auto check_one = [&](const VertexSet& cset) {
                try {
                    DelicateRecord r = delicate_check(g, cfg.i, cset, cfg.epsilon, cfg.ell,
                                                      cfg.r, p, cfg.caps);
                    ++rec.c_checked;
                    if (!r.h_norm_ok) ++rec.viol_h;
                    if (!(r.dominated_vertex_exists || r.c_norm_ok)) ++rec.viol_clause2;
                    if (!r.star_ok) ++rec.viol_star;
                } catch (const resource_error&) {
                    ++rec.guard_hits;
                }
            };
            if (cfg.scan_samples > 0) {
                SplitMix64 rng(derive_seed(seed, 1));
                std::vector<int> perm(static_cast<size_t>(n));
                for (long long s = 0; s < cfg.scan_samples; ++s) {
                    long long size = static_cast<long long>(rng.next() %
                                                            static_cast<uint64_t>(c_bound + 1));
                    std::iota(perm.begin(), perm.end(), 0);
                    c.reset();
                    for (long long j = 0; j < size; ++j) {
                        long long pick = j + static_cast<long long>(
                                                 rng.next() % static_cast<uint64_t>(n - j));
                        std::swap(perm[static_cast<size_t>(j)], perm[static_cast<size_t>(pick)]);
                        c.set(perm[static_cast<size_t>(j)]);
                    }
                    check_one(c);
                }
            } else {
                for (long long size = 0; size <= c_bound; ++size) {
                    for_each_subset_colex(n, static_cast<int>(size),
                                          [&](const std::vector<int>& idx) {
                                              c.reset();
                                              for (int v : idx) c.set(v);
                                              check_one(c);
                                              return false;
                                          });
                }
            }
            rec.wall_ms = elapsed_ms(t0);
            out.records[static_cast<size_t>(global)] = rec;
        });
    }
    for (const auto& rec : out.records) out.total_star_violations += rec.viol_star;
    return out;
}

FTauResult run_f_and_tau_survey(const ExperimentConfig& cfg) {
    cfg.validate();
    FTauResult out;
    out.records.resize(static_cast<size_t>(cfg.n_values.size()) * static_cast<size_t>(cfg.trials));
    for (size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
        int n = cfg.n_values[ni];
        double p = cfg.p_for(n);
        parallel_trials(cfg.trials, cfg.workers, [&, ni, n, p](long long t) {
            long long global = static_cast<long long>(ni) * cfg.trials + t;
            uint64_t seed = derive_seed(cfg.master_seed, static_cast<uint64_t>(global));
            auto t0 = std::chrono::steady_clock::now();
            Graph g = trial_graph(cfg, n, p, seed);
            FTauRecord rec{n, t, seed, p, "", false, "", 0.0, 0.0, false, false, 0.0};
            FResult f = f_invariant(g, cfg.c_size_cap, cfg.caps);
            ExtInt tv = tau(g, cfg.caps);
            rec.f = f.value.str();
            rec.f_partial = f.partial;
            rec.tau = tv.str();
            rec.f_bound = 0.25 * n * p * p;
            rec.tau_bound = 1.5 * n * p * p;
            rec.f_ok = f.value.at_least(rec.f_bound);
            rec.tau_ok = tv.is_inf() || static_cast<double>(tv.value()) > rec.tau_bound;
            rec.wall_ms = elapsed_ms(t0);
            out.records[static_cast<size_t>(global)] = rec;
        });
    }
    for (const auto& rec : out.records) {
        out.f_ok_count += rec.f_ok ? 1 : 0;
        out.tau_ok_count += rec.tau_ok ? 1 : 0;
    }
    return out;
}

std::string csv_header(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::equality:
            return "n,trial,seed,p,delta,kappa,outcome,wall_ms";
        case ExperimentKind::concentration:
            return "n,trial,seed,p,mode,a,b,lo,hi,bound_lo,bound_hi,exact,pass,wall_ms";
        case ExperimentKind::chernoff:
            return "m,p,eps,draws,tail_count,tail_freq,bound,std_error,pass";
        case ExperimentKind::delicate:
            return "n,trial,seed,p,c_bound,c_checked,sampled,viol_h,viol_clause2,viol_star,"
                   "guard_hits,wall_ms";
        case ExperimentKind::f_tau:
            return "n,trial,seed,p,f,f_partial,tau,f_bound,tau_bound,f_ok,tau_ok,wall_ms";
    }
    return "";
}

std::string to_csv_row(const EqualityRecord& r) {
    std::ostringstream os;
    os << r.n << "," << r.trial << "," << r.seed << "," << fmt_double(r.p) << "," << r.delta.str()
       << "," << r.kappa << "," << to_string(r.outcome) << "," << fmt_double(r.wall_ms);
    return os.str();
}

std::string to_csv_row(const ConcentrationRecord& r) {
    std::ostringstream os;
    os << r.n << "," << r.trial << "," << r.seed << "," << fmt_double(r.p) << "," << r.mode << ","
       << r.a << "," << r.b << "," << r.lo << "," << r.hi << "," << fmt_double(r.bound_lo) << ","
       << fmt_double(r.bound_hi) << "," << (r.exact ? 1 : 0) << "," << (r.pass ? 1 : 0) << ","
       << fmt_double(r.wall_ms);
    return os.str();
}

std::string to_csv_row(const DelicateTrialRecord& r) {
    std::ostringstream os;
    os << r.n << "," << r.trial << "," << r.seed << "," << fmt_double(r.p) << "," << r.c_bound
       << "," << r.c_checked << "," << (r.sampled ? 1 : 0) << "," << r.viol_h << ","
       << r.viol_clause2 << "," << r.viol_star << "," << r.guard_hits << ","
       << fmt_double(r.wall_ms);
    return os.str();
}

std::string to_csv_row(const FTauRecord& r) {
    std::ostringstream os;
    os << r.n << "," << r.trial << "," << r.seed << "," << fmt_double(r.p) << "," << r.f << ","
       << (r.f_partial ? 1 : 0) << "," << r.tau << "," << fmt_double(r.f_bound) << ","
       << fmt_double(r.tau_bound) << "," << (r.f_ok ? 1 : 0) << "," << (r.tau_ok ? 1 : 0) << ","
       << fmt_double(r.wall_ms);
    return os.str();
}

namespace {

nlohmann::json base_json(int n, long long trial, uint64_t seed, double p, double wall_ms) {
    nlohmann::json j;
    j["n"] = n;
    j["trial"] = trial;
    j["seed"] = seed;
    j["p"] = p;
    j["wall_ms"] = wall_ms;
    return j;
}

}  // namespace

std::string to_json_line(const EqualityRecord& r) {
    nlohmann::json j = base_json(r.n, r.trial, r.seed, r.p, r.wall_ms);
    j["delta"] = r.delta.str();
    j["kappa"] = r.kappa;
    j["outcome"] = to_string(r.outcome);
    return j.dump();
}

std::string to_json_line(const ConcentrationRecord& r) {
    nlohmann::json j = base_json(r.n, r.trial, r.seed, r.p, r.wall_ms);
    j["mode"] = r.mode;
    j["a"] = r.a;
    j["b"] = r.b;
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    j["bound_lo"] = r.bound_lo;
    j["bound_hi"] = r.bound_hi;
    j["exact"] = r.exact;
    j["pass"] = r.pass;
    return j.dump();
}

std::string to_json_line(const DelicateTrialRecord& r) {
    nlohmann::json j = base_json(r.n, r.trial, r.seed, r.p, r.wall_ms);
    j["c_bound"] = r.c_bound;
    j["c_checked"] = r.c_checked;
    j["sampled"] = r.sampled;
    j["viol_h"] = r.viol_h;
    j["viol_clause2"] = r.viol_clause2;
    j["viol_star"] = r.viol_star;
    j["guard_hits"] = r.guard_hits;
    return j.dump();
}

std::string to_json_line(const FTauRecord& r) {
    nlohmann::json j = base_json(r.n, r.trial, r.seed, r.p, r.wall_ms);
    j["f"] = r.f;
    j["f_partial"] = r.f_partial;
    j["tau"] = r.tau;
    j["f_bound"] = r.f_bound;
    j["tau_bound"] = r.tau_bound;
    j["f_ok"] = r.f_ok;
    j["tau_ok"] = r.tau_ok;
    return j.dump();
}

namespace {

template <typename Records>
void write_generic(std::ostream& out, const ExperimentConfig& cfg, const Records& records) {
    bool csv = cfg.format != "json";
    if (csv) out << csv_header(cfg.kind) << "\n";
    for (const auto& rec : records) out << (csv ? to_csv_row(rec) : to_json_line(rec)) << "\n";
}

}  // namespace

void write_records(std::ostream& out, const ExperimentConfig& cfg, const EqualityResult& res) {
    write_generic(out, cfg, res.records);
}
void write_records(std::ostream& out, const ExperimentConfig& cfg, const ConcentrationResult& res) {
    write_generic(out, cfg, res.records);
}
void write_records(std::ostream& out, const ExperimentConfig& cfg, const DelicateResult& res) {
    write_generic(out, cfg, res.records);
}
void write_records(std::ostream& out, const ExperimentConfig& cfg, const FTauResult& res) {
    write_generic(out, cfg, res.records);
}

}  // namespace homcon

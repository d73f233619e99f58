// qgini: command-line experiments for Gini-index uncertainty on odd-d
// qudits. One subcommand per experiment; every run writes its data file
// plus a <out>.manifest.json describing the exact configuration. Reruns
// with the same flags and seed produce byte-identical data files.
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgini/io.hpp"
#include "qgini/phase_space.hpp"
#include "qgini/reference_states.hpp"
#include "qgini/rng.hpp"
#include "qgini/search.hpp"
#include "qgini/types.hpp"
#include "qgini/uncertainty.hpp"

using nlohmann::json;
using namespace qgini;

namespace {

struct CheckFailure {
    std::string name;
};

void require_check(bool ok, const std::string& name) {
    if (!ok) throw CheckFailure{name};
}

int worker_count() {
    if (const char* env = std::getenv("GINI_QUDIT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) on up to worker_count() threads.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    const int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

std::string utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const std::string& command, const json& config,
                    std::uint64_t seed, const std::string& out_path) {
    json manifest{{"command", command},
                  {"config", config},
                  {"seed", seed},
                  {"timestamp", utc_timestamp()},
                  {"output_paths", json::array({out_path})}};
    io::write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

Dimension parse_dim(int d) {
    try {
        return Dimension(d);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--d", e.what());
    }
}

std::vector<int> odd_range(int d_min, int d_max) {
    parse_dim(d_min);
    parse_dim(d_max);
    if (d_min > d_max) {
        throw CLI::ValidationError("--d-min/--d-max", "empty range");
    }
    std::vector<int> ds;
    for (int d = d_min; d <= d_max; d += 2) ds.push_back(d);
    return ds;
}

PureState load_state(const std::string& path) {
    return io::pure_state_from_json(json::parse(io::read_file(path)));
}

// Load the amplitudes without renormalizing; expansion inputs are allowed
// to be unnormalized.
std::vector<cplx> load_raw_vector(const std::string& path, int expect_d) {
    const json j = json::parse(io::read_file(path));
    const int d = j.at("d").get<int>();
    if (d != expect_d) {
        throw std::invalid_argument("dimension mismatch: file has d=" +
                                    std::to_string(d) + ", expected " +
                                    std::to_string(expect_d));
    }
    const json& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != static_cast<std::size_t>(d)) {
        throw std::invalid_argument("amplitudes: expected d entries");
    }
    std::vector<cplx> v;
    v.reserve(amps.size());
    for (const json& e : amps) {
        v.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return v;
}

// ---------------------------------------------------------------------
// gxp-hist: G_XP for n random pure states at one dimension.
int cmd_gxp_histogram(int d, int samples, std::uint64_t seed,
                      const std::string& out) {
    const Dimension dim = parse_dim(d);
    if (samples < 1) throw CLI::ValidationError("--samples", "must be >= 1");
    const std::uint64_t eff_seed =
        SplitMix64::derive(seed, static_cast<std::uint64_t>(d));
    const GxpEvaluator gxp(dim);

    std::ostringstream csv;
    csv << "index,g_xp\n";
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
        SplitMix64 rng(SplitMix64::derive(eff_seed, static_cast<std::uint64_t>(i)));
        const double val = gxp(sample_haar_state(dim, rng));
        require_check(val >= 0.0 && val <= 2.0 * gini_max(dim) + 1e-12,
                      "g_xp within [0, 2(d-1)/(d+1)]");
        best = std::max(best, val);
        csv << i << ',' << io::fmt17(val) << '\n';
    }
    csv << "max," << io::fmt17(best) << '\n';
    io::write_file(out, csv.str());
    write_manifest("gxp-hist",
                   json{{"d", d}, {"samples", samples}}, seed, out);
    return 0;
}

// ---------------------------------------------------------------------
// eta-sweep: eta_hat vs eta_tilde for every odd d in a range.
int cmd_eta_sweep(int d_min, int d_max, SearchConfig cfg, std::uint64_t seed,
                  const std::string& out) {
    const std::vector<int> ds = odd_range(d_min, d_max);
    std::vector<EtaEstimate> rows;
    rows.reserve(ds.size());
    for (int d : ds) {  // placeholder entries, filled in parallel below
        rows.push_back(EtaEstimate{d, 0, 0, 0, 0, false,
                                   PureState::basis_state(Dimension(d), 0), 0});
    }
    parallel_for(static_cast<int>(ds.size()), [&](int i) {
        const int d = ds[static_cast<std::size_t>(i)];
        SearchConfig local = cfg;
        local.seed = SplitMix64::derive(seed, static_cast<std::uint64_t>(d));
        rows[static_cast<std::size_t>(i)] =
            estimate_eta(Dimension(d), local);
    });

    std::ostringstream csv;
    csv << "d,n_samples,sup_gxp,eta_hat,eta_tilde,delta_gap,seed\n";
    for (const EtaEstimate& e : rows) {
        require_check(e.eta_hat <= e.eta_tilde + 1e-12,
                      "eta_hat <= eta_tilde (analytic-bound injection)");
        require_check(e.eta_hat >= -1e-12, "eta_hat >= 0");
        csv << e.d << ',' << e.n_samples << ',' << io::fmt17(e.sup_gxp_estimate)
            << ',' << io::fmt17(e.eta_hat) << ',' << io::fmt17(e.eta_tilde)
            << ',' << io::fmt17(e.eta_hat - e.eta_tilde) << ',' << e.seed
            << '\n';
    }
    io::write_file(out, csv.str());
    write_manifest("eta-sweep",
                   json{{"d_min", d_min},
                        {"d_max", d_max},
                        {"samples", cfg.n_random},
                        {"restarts", cfg.n_restarts},
                        {"refine", cfg.refine}},
                   seed, out);
    return 0;
}

// ---------------------------------------------------------------------
// find-g: minimum-uncertainty state search at one dimension.
int cmd_find_g(int d, SearchConfig cfg, std::uint64_t seed,
               const std::string& out) {
    const Dimension dim = parse_dim(d);
    cfg.seed = SplitMix64::derive(seed, static_cast<std::uint64_t>(d));
    const EtaEstimate est = estimate_eta(dim, cfg);
    const GiniReport report = gini_report(est.best_state);
    require_check(std::abs(report.delta - est.eta_hat) < 1e-12,
                  "delta consistency between search and report");
    require_check(report.g_x >= 0.0 && report.g_x <= gini_max(dim) + 1e-12,
                  "g_x within range");
    require_check(report.g_p >= 0.0 && report.g_p <= gini_max(dim) + 1e-12,
                  "g_p within range");

    json j{{"d", d},
           {"seed", seed},
           {"state", io::to_json(est.best_state)},
           {"gini_report", io::to_json(report)},
           {"entropy_report", io::to_json(entropy_report(est.best_state))},
           {"eta_estimate", io::to_json(est)}};
    if (has_reference_fiducial(d)) {
        const PureState ref =
            PureState::normalized(dim, reference_fiducial(d));
        const double ref_delta = gini_report(ref).delta;
        j["reference_comparison"] = json{
            {"reference_delta", ref_delta},
            {"delta_margin", ref_delta - report.delta},
            {"dominates", report.delta <= ref_delta + 1e-6}};
    }
    io::write_file(out, j.dump(2) + "\n");
    write_manifest("find-g",
                   json{{"d", d},
                        {"samples", cfg.n_random},
                        {"restarts", cfg.n_restarts},
                        {"refine", cfg.refine}},
                   seed, out);
    return 0;
}

// ---------------------------------------------------------------------
// expand: coefficients and component vectors of a state in a coherent
// family, plus the reconstruction residual.
int cmd_expand(int d, const std::string& fiducial_path,
               const std::string& state_path, const std::string& out) {
    parse_dim(d);
    const PureState fiducial = load_state(fiducial_path);
    if (fiducial.dim_value() != d) {
        throw std::invalid_argument("fiducial dimension mismatch");
    }
    const std::vector<cplx> s = load_raw_vector(state_path, d);

    const CoherentFamily fam(fiducial);
    const ExpansionCoefficients coeffs = expand(fam, s);
    const std::vector<cplx> back = reconstruct(fam, coeffs);
    double residual = 0.0;
    for (std::size_t r = 0; r < s.size(); ++r) {
        residual = std::max(residual, std::abs(back[r] - s[r]));
    }
    require_check(residual < 1e-10, "reconstruction residual < 1e-10");

    json components = json::array();
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const cplx c = coeffs.at(a, b);
            const PureState& m = fam.member(a, b);
            json vec = json::array();
            for (int r = 0; r < d; ++r) {
                const cplx v = c * m.amp(r);
                vec.push_back(json::array({v.real(), v.imag()}));
            }
            components.push_back(json{{"alpha", a}, {"beta", b},
                                      {"vector", std::move(vec)}});
        }
    }
    json j{{"d", d},
           {"coefficients", io::to_json(coeffs)},
           {"components", std::move(components)},
           {"reconstruction_residual", residual}};
    io::write_file(out, j.dump(2) + "\n");
    write_manifest("expand",
                   json{{"d", d},
                        {"fiducial", fiducial_path},
                        {"state", state_path}},
                   0, out);
    return 0;
}

// ---------------------------------------------------------------------
// noise: per-trial error norms under multiplicative coefficient noise.
int cmd_noise(int d, const std::string& fiducial_path,
              const std::string& state_path, double epsilon, int trials,
              std::uint64_t seed, const std::string& out) {
    parse_dim(d);
    if (epsilon < 0.0) throw CLI::ValidationError("--epsilon", "must be >= 0");
    if (trials < 1) throw CLI::ValidationError("--trials", "must be >= 1");
    const PureState fiducial = load_state(fiducial_path);
    if (fiducial.dim_value() != d) {
        throw std::invalid_argument("fiducial dimension mismatch");
    }
    const std::vector<cplx> s = load_raw_vector(state_path, d);

    const CoherentFamily fam(fiducial);
    const std::uint64_t eff_seed =
        SplitMix64::derive(seed, static_cast<std::uint64_t>(d));
    const NoiseResult result = noise_experiment(fam, s, epsilon, trials, eff_seed);

    const ExpansionCoefficients coeffs = expand(fam, s);
    double coeff_abs_sum = 0.0;
    for (const cplx& c : coeffs.data()) coeff_abs_sum += std::abs(c);

    std::ostringstream csv;
    csv << "trial,error_norm\n";
    for (std::size_t t = 0; t < result.per_trial.size(); ++t) {
        require_check(result.per_trial[t] <= epsilon * coeff_abs_sum + 1e-12,
                      "per-trial bound ||e|| <= eps * sum |s_ab|");
        csv << t << ',' << io::fmt17(result.per_trial[t]) << '\n';
    }
    csv << "average," << io::fmt17(result.avg_error_norm) << '\n';
    io::write_file(out, csv.str());
    write_manifest("noise",
                   json{{"d", d},
                        {"fiducial", fiducial_path},
                        {"state", state_path},
                        {"epsilon", epsilon},
                        {"trials", trials}},
                   seed, out);
    return 0;
}

// ---------------------------------------------------------------------
// entropy-compare: for each odd d, find |g> and report its uncertainty
// gap next to its entropic excess.
int cmd_entropy_compare(int d_min, int d_max, SearchConfig cfg,
                        std::uint64_t seed, const std::string& out) {
    const std::vector<int> ds = odd_range(d_min, d_max);
    struct Row {
        int d;
        double delta;
        double excess;
    };
    std::vector<Row> rows(ds.size());
    parallel_for(static_cast<int>(ds.size()), [&](int i) {
        const int d = ds[static_cast<std::size_t>(i)];
        SearchConfig local = cfg;
        local.seed = SplitMix64::derive(seed, static_cast<std::uint64_t>(d));
        const auto [g, delta] = find_min_uncertainty_state(Dimension(d), local);
        rows[static_cast<std::size_t>(i)] =
            Row{d, delta, entropy_report(g).excess};
    });

    std::ostringstream csv;
    csv << "d,delta,entropic_excess\n";
    for (const Row& r : rows) {
        require_check(r.excess >= -1e-10, "entropic excess >= 0");
        csv << r.d << ',' << io::fmt17(r.delta) << ',' << io::fmt17(r.excess)
            << '\n';
    }
    io::write_file(out, csv.str());
    write_manifest("entropy-compare",
                   json{{"d_min", d_min},
                        {"d_max", d_max},
                        {"samples", cfg.n_random},
                        {"restarts", cfg.n_restarts},
                        {"refine", cfg.refine}},
                   seed, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gini-index uncertainty experiments for odd-dimension qudits"};
    app.require_subcommand(1);

    int d = 3, d_min = 3, d_max = 101, samples = 400, restarts = 5, trials = 10;
    bool refine = true;
    double epsilon = 0.3;
    std::uint64_t seed = 12345;
    std::string out, fiducial_path, state_path;

    const auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--samples", samples, "random pure states per dimension")
            ->capture_default_str();
        cmd->add_option("--restarts", restarts,
                        "pattern-search starts among the top candidates")
            ->capture_default_str();
        cmd->add_flag("--refine,!--no-refine", refine,
                      "refine top candidates with pattern search")
            ->capture_default_str();
    };
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "base seed")->capture_default_str();
        cmd->add_option("--out", out, "output file")->required();
    };

    CLI::App* hist = app.add_subcommand(
        "gxp-hist", "G_XP values for random pure states at one dimension");
    hist->add_option("--d", d, "odd dimension >= 3")->required();
    hist->add_option("--samples", samples, "number of random states")
        ->capture_default_str();
    add_common(hist);

    CLI::App* sweep = app.add_subcommand(
        "eta-sweep", "eta_hat and eta_tilde over a range of odd dimensions");
    sweep->add_option("--d-min", d_min, "first odd dimension")
        ->capture_default_str();
    sweep->add_option("--d-max", d_max, "last odd dimension")
        ->capture_default_str();
    add_search_flags(sweep);
    add_common(sweep);

    CLI::App* findg = app.add_subcommand(
        "find-g", "search for the minimum-uncertainty state at one dimension");
    findg->add_option("--d", d, "odd dimension >= 3")->required();
    add_search_flags(findg);
    add_common(findg);

    CLI::App* expand_cmd = app.add_subcommand(
        "expand", "expand a state in the coherent family of a fiducial");
    expand_cmd->add_option("--d", d, "odd dimension >= 3")->required();
    expand_cmd->add_option("--fiducial", fiducial_path, "fiducial state JSON")
        ->required();
    expand_cmd->add_option("--state", state_path, "input state JSON")
        ->required();
    expand_cmd->add_option("--out", out, "output file")->required();

    CLI::App* noise = app.add_subcommand(
        "noise", "multiplicative coefficient noise on a coherent expansion");
    noise->add_option("--d", d, "odd dimension >= 3")->required();
    noise->add_option("--fiducial", fiducial_path, "fiducial state JSON")
        ->required();
    noise->add_option("--state", state_path, "input state JSON")->required();
    noise->add_option("--epsilon", epsilon, "noise amplitude")
        ->capture_default_str();
    noise->add_option("--trials", trials, "number of trials")
        ->capture_default_str();
    add_common(noise);

    CLI::App* entropy = app.add_subcommand(
        "entropy-compare",
        "uncertainty gap vs entropic excess of found states per dimension");
    entropy->add_option("--d-min", d_min, "first odd dimension")
        ->capture_default_str();
    entropy->add_option("--d-max", d_max, "last odd dimension")
        ->capture_default_str();
    add_search_flags(entropy);
    add_common(entropy);

    CLI11_PARSE(app, argc, argv);

    SearchConfig cfg;
    cfg.n_random = samples;
    cfg.n_restarts = restarts;
    cfg.refine = refine;

    try {
        if (hist->parsed()) return cmd_gxp_histogram(d, samples, seed, out);
        if (sweep->parsed()) return cmd_eta_sweep(d_min, d_max, cfg, seed, out);
        if (findg->parsed()) return cmd_find_g(d, cfg, seed, out);
        if (expand_cmd->parsed()) {
            return cmd_expand(d, fiducial_path, state_path, out);
        }
        if (noise->parsed()) {
            return cmd_noise(d, fiducial_path, state_path, epsilon, trials,
                             seed, out);
        }
        if (entropy->parsed()) {
            return cmd_entropy_compare(d_min, d_max, cfg, seed, out);
        }
    } catch (const CheckFailure& f) {
        std::cerr << "check failed: " << f.name << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

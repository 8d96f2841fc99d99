// SPDX-License-Identifier: Apache-2.0
//
// stfa: sparse time-frequency analysis front end.
//
//   stfa synth <lfm|parabola|multi> [--fs --t0 --n --out PREFIX]
//   stfa analyze --in trace.csv --method <lps|stft> --out-prefix P [params]
//   stfa metrics --x grid.csv --y ideal.csv [--out table.csv]
//   stfa slice --in section.stfa --freq HZ --out-prefix P [params]
//
// Exit codes: 0 success, 1 runtime/data error, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "stfa/io.hpp"
#include "stfa/metrics.hpp"
#include "stfa/signal_model.hpp"
#include "stfa/solver.hpp"
#include "stfa/stft.hpp"

namespace {

struct SynthArgs {
    std::string signal;
    std::string out = "signal";
    double fs = 16.0;
    double t0 = -8.0;
    Eigen::Index n = 256;
};

struct AnalyzeArgs {
    std::string in;
    std::string method = "lps";
    std::string out_prefix = "tfd";
    stfa::SolverParams params;
    double sigma = 0.0;  // 0 -> default_sigma(m)
    int threads = 0;     // 0 -> hardware
};

struct MetricsArgs {
    std::string x_path;
    std::string y_path;
    std::string out;
};

struct SliceArgs {
    std::string in;
    std::string out_prefix = "slice";
    double freq = 0.0;
    stfa::SolverParams params;
    double sigma = 0.0;
    int threads = 0;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void add_solver_options(CLI::App* cmd, stfa::SolverParams& p, double& sigma, int& threads) {
    cmd->add_option("--p", p.p, "quasinorm exponent in (0, 1]")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
    cmd->add_option("--beta", p.beta, "penalty coefficient")->check(CLI::PositiveNumber);
    cmd->add_option("--mu", p.mu, "sparsity weight")->check(CLI::PositiveNumber);
    cmd->add_option("--gamma", p.gamma, "dual learning rate")->check(CLI::PositiveNumber);
    cmd->add_option("--m", p.m, "window length (odd, >= 3)")
        ->check(CLI::Validator(
            [](std::string& s) -> std::string {
                try {
                    size_t pos = 0;
                    const long v = std::stol(s, &pos);
                    if (pos != s.size()) return "must be an integer";
                    return (v >= 3 && v % 2 == 1) ? "" : "must be odd and >= 3";
                } catch (...) {
                    return "must be an integer";
                }
            },
            "ODD"));
    cmd->add_option("--iters", p.max_iter, "ADMM iteration count")->check(CLI::PositiveNumber);
    cmd->add_option("--sigma", sigma, "Gaussian window width in samples (default (m-1)/5)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", threads, "worker count (0 = hardware)")
        ->envname("STFA_THREADS")
        ->check(CLI::NonNegativeNumber);
}

int run_synth(const SynthArgs& args) {
    stfa::ComplexSignal s;
    std::vector<stfa::IFTrack> tracks;
    const stfa::TimeFreqAxes axes = stfa::TimeFreqAxes::make(args.n, args.fs, args.t0);
    if (args.signal == "lfm") {
        s = stfa::gen_lfm(args.t0, args.fs, args.n);
        tracks = stfa::lfm_tracks(axes);
    } else if (args.signal == "parabola") {
        s = stfa::gen_parabola(args.t0, args.fs, args.n);
        tracks = stfa::parabola_tracks(axes);
    } else {
        s = stfa::gen_multicomponent(args.t0, args.fs, args.n);
        tracks = stfa::multicomponent_tracks(axes);
    }
    const stfa::TFDGrid ideal = stfa::ideal_tfd(tracks, axes);
    stfa::write_trace_csv(s, args.out + ".csv");
    stfa::export_grid_csv(ideal.values, args.out + "_ideal.csv");
    std::cout << "wrote " << args.out << ".csv and " << args.out << "_ideal.csv\n";
    return 0;
}

int run_analyze(const AnalyzeArgs& args) {
    const stfa::ComplexSignal s = stfa::read_trace_csv(args.in);
    const double sigma = args.sigma > 0.0 ? args.sigma : stfa::default_sigma(args.params.m);

    const auto start = std::chrono::steady_clock::now();
    stfa::TFDGrid tfd;
    if (args.method == "lps") {
        tfd = stfa::stfa_lps(s, args.params, sigma, args.threads);
    } else {
        const stfa::Window w = stfa::gaussian_window(args.params.m, sigma);
        tfd = stfa::stft(s, w, s.size(), args.threads);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    stfa::export_grid_csv(tfd.values, args.out_prefix + ".csv");
    stfa::export_tfd_pgm(tfd, args.out_prefix + ".pgm");
    std::cout << "elapsed_s=" << fmt(elapsed.count()) << "\n";
    return 0;
}

int run_metrics(const MetricsArgs& args) {
    const Eigen::MatrixXd x = stfa::read_grid_csv(args.x_path);
    const Eigen::MatrixXd y = stfa::read_grid_csv(args.y_path);
    const stfa::MetricReport report = stfa::evaluate_tfd(x, y);

    std::string table;
    table += "psnr_db," + fmt(report.psnr_db) + "\n";
    table += "renyi_bits," + fmt(report.renyi_bits) + "\n";
    table += "cm," + fmt(report.cm) + "\n";
    table += "re," + fmt(report.re) + "\n";
    std::cout << table;
    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error(args.out + ": cannot open for writing");
        out << table;
    }
    return 0;
}

int run_slice(const SliceArgs& args) {
    const stfa::SeismicSection section = stfa::read_section_bin(args.in);
    const double sigma = args.sigma > 0.0 ? args.sigma : stfa::default_sigma(args.params.m);

    std::vector<stfa::TFDGrid> tfds;
    tfds.reserve(static_cast<size_t>(section.trace_count()));
    for (Eigen::Index tr = 0; tr < section.trace_count(); ++tr)
        tfds.push_back(stfa::stfa_lps(section.trace(tr), args.params, sigma, args.threads));

    const stfa::FrequencySlice slice = stfa::frequency_slice(tfds, args.freq);
    stfa::export_grid_csv(slice.values, args.out_prefix + ".csv");
    stfa::export_heatmap_pgm(slice.values, args.out_prefix + ".pgm");
    std::cout << "bin_hz=" << fmt(slice.bin_hz) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse time-frequency analysis toolkit"};
    app.require_subcommand(1);

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand("synth", "generate a test signal and its ideal TFD");
    synth->add_option("signal", synth_args.signal, "one of lfm|parabola|multi")
        ->required()
        ->check(CLI::IsMember({"lfm", "parabola", "multi"}));
    synth->add_option("--out", synth_args.out, "output prefix");
    synth->add_option("--fs", synth_args.fs, "sampling rate [Hz]")->check(CLI::PositiveNumber);
    synth->add_option("--t0", synth_args.t0, "start time [s]");
    synth->add_option("--n", synth_args.n, "sample count")->check(CLI::PositiveNumber);

    AnalyzeArgs an_args;
    CLI::App* analyze = app.add_subcommand("analyze", "compute a TFD from a trace CSV");
    analyze->add_option("--in", an_args.in, "input trace CSV")->required();
    analyze->add_option("--method", an_args.method, "lps|stft")
        ->check(CLI::IsMember({"lps", "stft"}));
    analyze->add_option("--out-prefix", an_args.out_prefix, "output prefix");
    add_solver_options(analyze, an_args.params, an_args.sigma, an_args.threads);

    MetricsArgs m_args;
    CLI::App* metrics = app.add_subcommand("metrics", "compare a TFD grid against a reference");
    metrics->add_option("--x", m_args.x_path, "estimated grid CSV")->required();
    metrics->add_option("--y", m_args.y_path, "ideal grid CSV")->required();
    metrics->add_option("--out", m_args.out, "also write the table to this CSV");

    SliceArgs sl_args;
    CLI::App* slice = app.add_subcommand("slice", "extract a frequency slice from a section");
    slice->add_option("--in", sl_args.in, "input section binary")->required();
    slice->add_option("--freq", sl_args.freq, "slice frequency [Hz]")->required();
    slice->add_option("--out-prefix", sl_args.out_prefix, "output prefix");
    add_solver_options(slice, sl_args.params, sl_args.sigma, sl_args.threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (synth->parsed()) return run_synth(synth_args);
        if (analyze->parsed()) return run_analyze(an_args);
        if (metrics->parsed()) return run_metrics(m_args);
        if (slice->parsed()) return run_slice(sl_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

// lagt: forward and inverse Laguerre transforms of sampled signals, plus the
// accuracy and timing benchmarks.
//
// Exit codes: 0 success, 1 usage or validation error, 2 I/O error,
// 3 evaluation guard exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lagt/fixtures.hpp"
#include "lagt/laguerre_eval.hpp"
#include "lagt/quadrature_oracle.hpp"
#include "lagt/reconstruction.hpp"
#include "lagt/segmented_transform.hpp"
#include "lagt/signal_io.hpp"
#include "lagt/signal_ops.hpp"
#include "lagt/transport_transform.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum class ExitCode { ok = 0, usage = 1, io = 2, guard = 3 };

unsigned worker_count(std::size_t jobs) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LAGT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw lagt::InvalidArgument("LAGT_THREADS must be a positive integer");
        }
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i < count on the worker pool; the first failure is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job) {
    const unsigned threads = worker_count(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        job(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

// "a:b:c" (start:stop:step, inclusive) or "a,b,c".
template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    auto number = [&](const std::string& s) -> T {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw lagt::InvalidArgument("bad number '" + s + "' in list '" + text + "'");
        return static_cast<T>(v);
    };
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) throw lagt::InvalidArgument("range must be start:stop:step");
        const double a = number(parts[0]), b = number(parts[1]), step = number(parts[2]);
        if (!(step > 0)) throw lagt::InvalidArgument("range step must be positive");
        for (double v = a; v <= b + 1e-9 * step; v += step) out.push_back(static_cast<T>(v));
    } else {
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ',');) out.push_back(number(p));
    }
    if (out.empty()) throw lagt::InvalidArgument("empty list '" + text + "'");
    return out;
}

struct ForwardConfig {
    int algorithm = 3;
    double eta = 0.0;
    std::size_t ncoeff = 512;
    std::optional<std::size_t> nfreq;
    std::string precision = "f64";
    std::size_t extension = 3;
    std::size_t segments = 1;
    double buffer_width = -1.0;
    double ramp_width = 0.0;
    std::string truncation = "auto";
    double taper = 0.05;
    std::size_t summation_factor = 4;
    bool no_shift_doubling = false;
    unsigned segment_threads = 1;

    json to_json() const {
        return {{"algorithm", algorithm},
                {"eta", eta},
                {"ncoeff", ncoeff},
                {"nfreq", nfreq ? json(*nfreq) : json(nullptr)},
                {"precision", precision},
                {"extension", extension},
                {"segments", segments},
                {"buffer_width", buffer_width},
                {"ramp_width", ramp_width},
                {"truncation", effective_truncation()},
                {"taper", taper},
                {"summation_factor", summation_factor},
                {"shift_doubling", !no_shift_doubling}};
    }

    std::string effective_truncation() const {
        if (truncation != "auto") return truncation;
        return algorithm == 1 ? "energy" : "conjugation";
    }

    void check() const {
        if (algorithm < 1 || algorithm > 4) throw lagt::InvalidArgument("--algorithm must be 1, 2, 3 or 4");
        const auto t = effective_truncation();
        if (algorithm == 1 && t == "conjugation") {
            throw lagt::InvalidArgument("algorithm 1 truncates by energy (or none), not by conjugation");
        }
        if (algorithm != 1 && t == "none") throw lagt::InvalidArgument("--truncation none applies to algorithm 1");
        if (ramp_width > 0.0 && algorithm != 3) throw lagt::InvalidArgument("--ramp-width needs --algorithm 3");
        if (nfreq && algorithm != 2) throw lagt::InvalidArgument("--nfreq applies to algorithm 2");
    }

    lagt::TransformOptions transform_options() const {
        lagt::TransformOptions o;
        o.taper_fraction = taper;
        o.summation_factor = summation_factor;
        o.ramp_width = ramp_width;
        o.context.allow_shift_doubling = !no_shift_doubling;
        return o;
    }
};

struct ForwardResult {
    lagt::LaguerreSpectrum<double> spectrum;
    json details = json::object();
};

template <lagt::Scalar Real>
ForwardResult run_forward_typed(const lagt::SampledSignal<double>& input, const ForwardConfig& cfg) {
    const auto signal = lagt::narrow<Real>(input);
    const auto options = cfg.transform_options();
    const std::size_t n = cfg.ncoeff;
    ForwardResult out;
    lagt::LaguerreSpectrum<Real> spectrum;

    switch (cfg.algorithm) {
        case 1: {
            auto r = lagt::algorithm1(signal, cfg.eta, n, cfg.extension, options);
            if (cfg.effective_truncation() == "none") {
                spectrum = std::move(r.full);
            } else {
                out.details["m0"] = r.report.m0;
                out.details["signal_energy"] = r.report.signal_energy;
                spectrum = std::move(r.spectrum);
            }
            break;
        }
        case 2: {
            const std::size_t nfreq = cfg.nfreq.value_or(signal.size() / 2);
            const auto matrix = lagt::build_transform_matrix<Real>(cfg.eta, n, nfreq, signal.duration(), true, options);
            spectrum = lagt::algorithm2(signal, matrix, options);
            break;
        }
        case 3:
            spectrum = lagt::algorithm3(signal, cfg.eta, n, options);
            break;
        case 4: {
            lagt::SegmentOptions so;
            so.p = cfg.segments;
            so.buffer_width = cfg.buffer_width;
            so.threads = cfg.segment_threads;
            so.transform = options;
            auto r = lagt::algorithm4(signal, cfg.eta, n, so);
            out.details["local_n"] = r.plan.local_n;
            out.details["buffer_width"] = r.plan.buffer_width;
            spectrum = std::move(r.spectrum);
            break;
        }
        default:
            throw lagt::InvalidArgument("unknown algorithm");
    }

    if (cfg.algorithm != 1 && cfg.effective_truncation() == "energy") {
        auto [truncated, report] = lagt::energy_truncate(spectrum, signal);
        out.details["m0"] = report.m0;
        out.details["signal_energy"] = report.signal_energy;
        spectrum = std::move(truncated);
    }
    out.spectrum = lagt::widen(spectrum);
    return out;
}

ForwardResult run_forward(const lagt::SampledSignal<double>& input, const ForwardConfig& cfg) {
    if (lagt::parse_precision(cfg.precision) == lagt::Precision::f32) return run_forward_typed<float>(input, cfg);
    return run_forward_typed<double>(input, cfg);
}

std::vector<fs::path> list_inputs(const fs::path& input) {
    if (!fs::exists(input)) throw lagt::IoError("no such file or directory: " + input.string());
    if (!fs::is_directory(input)) return {input};
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(input)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".csv" || ext == ".f32")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw lagt::IoError("no .csv or .f32 traces in " + input.string());
    return files;
}

int cmd_forward(const std::string& input_arg, const std::string& output_arg, const ForwardConfig& cfg) {
    cfg.check();
    const fs::path input(input_arg);
    const auto files = list_inputs(input);
    const bool batch = fs::is_directory(input);

    fs::path output(output_arg);
    if (batch) {
        if (output.empty()) throw lagt::InvalidArgument("batch input needs --output <directory>");
        fs::create_directories(output);
    } else if (output.empty()) {
        output = "spectrum.json";
    }

    std::vector<std::string> summaries(files.size());
    parallel_for(files.size(), [&](std::size_t i) {
        const auto signal = lagt::io::read_signal(files[i]);
        auto result = run_forward(signal, cfg);
        lagt::io::SpectrumFile file{std::move(result.spectrum), cfg.to_json()};
        file.provenance["input"] = files[i].filename().string();
        file.provenance["samples"] = signal.size();
        file.provenance["step"] = signal.step();
        for (const auto& [key, value] : result.details.items()) file.provenance[key] = value;
        const fs::path target = batch ? output / (files[i].stem().string() + ".json") : output;
        lagt::io::write_spectrum(target, file);
        summaries[i] = files[i].string() + " -> " + target.string() + " (" +
                       std::to_string(file.spectrum.size()) + " coefficients)";
    });
    for (const auto& s : summaries) std::cout << s << '\n';
    return 0;
}

struct InverseConfig {
    std::optional<double> step;
    std::optional<double> duration;
    std::string precision = "f64";
    bool via_fourier = false;
    bool no_shift_doubling = false;
};

template <lagt::Scalar Real>
lagt::SampledSignal<double> run_inverse_typed(const lagt::LaguerreSpectrum<double>& spectrum_d, double step,
                                              std::size_t count, const InverseConfig& cfg) {
    const auto spectrum = lagt::narrow<Real>(spectrum_d);
    if (cfg.via_fourier) {
        const double duration = static_cast<double>(count) * step;
        const auto matrix =
            lagt::build_transform_matrix<Real>(spectrum.eta, spectrum.size() - 1, count / 2, duration, false);
        return lagt::widen(lagt::inverse_dft(lagt::spectrum_to_fourier(spectrum, matrix, count)));
    }
    lagt::ReconstructOptions options;
    options.allow_shift_doubling = !cfg.no_shift_doubling;
    return lagt::widen(lagt::reconstruct(spectrum, step, count, options));
}

int cmd_inverse(const std::string& input, const std::string& output_arg, const InverseConfig& cfg) {
    const auto file = lagt::io::read_spectrum(input);
    const double duration = cfg.duration.value_or(file.spectrum.duration);
    if (!(duration > 0.0)) throw lagt::InvalidArgument("--duration must be positive");
    const double step = cfg.step.value_or(file.provenance.value("step", duration / 1000.0));
    if (!(step > 0.0)) throw lagt::InvalidArgument("--step must be positive");
    const auto count = static_cast<std::size_t>(std::llround(duration / step));
    if (count < 2) throw lagt::InvalidArgument("grid needs at least two samples");

    const auto signal = lagt::parse_precision(cfg.precision) == lagt::Precision::f32
                            ? run_inverse_typed<float>(file.spectrum, step, count, cfg)
                            : run_inverse_typed<double>(file.spectrum, step, count, cfg);
    const fs::path output = output_arg.empty() ? fs::path("signal.csv") : fs::path(output_arg);
    if (output.extension() == ".csv") {
        lagt::io::write_csv(output, signal);
    } else {
        lagt::io::write_raw_f32(output, signal);
    }
    std::cout << input << " -> " << output.string() << " (" << count << " samples)\n";
    return 0;
}

struct BenchConfig {
    std::string fixture;
    std::string etas = "800,1600";
    std::string ncoeffs = "100:1000:100";
    std::string segments = "1,2,4,8,16";
    int algorithm = 3;
    std::string precision = "f64";
    bool oracle = false;
    std::optional<double> fine_step;
    double ramp_width = 0.0;
    double taper = 0.05;
    std::size_t extension = 2;
    std::string output_dir = "bench";

    json to_json() const {
        return {{"fixture", fixture},     {"etas", etas},       {"ncoeffs", ncoeffs},         {"segments", segments},
                {"algorithm", algorithm}, {"precision", precision}, {"oracle", oracle},
                {"fine_step", fine_step ? json(*fine_step) : json(nullptr)},
                {"ramp_width", ramp_width}, {"taper", taper}, {"extension", extension}};
    }
};

std::string format_number(double v) {
    std::ostringstream s;
    s << std::setprecision(6) << std::scientific << v;
    return s.str();
}

template <lagt::Scalar Real>
double transform_error(const lagt::SampledSignal<double>& reference, const BenchConfig& cfg, double eta,
                       std::size_t n) {
    ForwardConfig fc;
    fc.algorithm = cfg.algorithm;
    fc.eta = eta;
    fc.ncoeff = n;
    fc.precision = cfg.precision;
    fc.extension = cfg.extension;
    fc.taper = cfg.taper;
    fc.ramp_width = cfg.ramp_width;
    const auto spectrum = run_forward_typed<Real>(reference, fc).spectrum;
    const auto approx = lagt::reconstruct(lagt::narrow<Real>(spectrum), reference.step(), reference.size());
    return lagt::relative_error(lagt::narrow<Real>(reference), approx);
}

json bench_accuracy(const lagt::SampledSignal<double>& signal, const BenchConfig& cfg, std::ostream& csv) {
    const auto etas = parse_list<double>(cfg.etas);
    const auto ns = parse_list<std::size_t>(cfg.ncoeffs);
    const bool single = lagt::parse_precision(cfg.precision) == lagt::Precision::f32;

    std::vector<double> eps(etas.size() * ns.size());
    parallel_for(eps.size(), [&](std::size_t idx) {
        const double eta = etas[idx / ns.size()];
        const std::size_t n = ns[idx % ns.size()];
        eps[idx] = single ? transform_error<float>(signal, cfg, eta, n) : transform_error<double>(signal, cfg, eta, n);
    });

    // Rectangle rule on the same grid (or a finer one for analytic fixtures),
    // evaluated at the largest eta.
    std::vector<double> oracle_eps;
    if (cfg.oracle) {
        const double eta = etas.back();
        oracle_eps.resize(ns.size());
        parallel_for(ns.size(), [&](std::size_t i) {
            lagt::RectangleResult r;
            if (cfg.fine_step && cfg.fixture != "bursts") {
                std::function<double(double)> f = cfg.fixture == "ramped"
                                                       ? std::function<double(double)>(lagt::fixtures::ramped_value)
                                                       : [](double t) { return lagt::fixtures::source_value(t); };
                r = lagt::rectangle_coefficients(f, signal.duration(), eta, ns[i], *cfg.fine_step);
            } else {
                r = lagt::rectangle_coefficients(signal, eta, ns[i]);
            }
            const auto approx = lagt::reconstruct(r.spectrum, signal.step(), signal.size());
            oracle_eps[i] = lagt::relative_error(signal, approx);
        });
    }

    json table = json::array();
    csv << "n";
    for (double eta : etas) csv << ",eta=" << eta;
    if (cfg.oracle) csv << ",rectangle_eta=" << etas.back();
    csv << '\n';
    for (std::size_t i = 0; i < ns.size(); ++i) {
        csv << ns[i];
        json row{{"n", ns[i]}};
        json by_eta = json::object();
        for (std::size_t e = 0; e < etas.size(); ++e) {
            const double v = eps[e * ns.size() + i];
            csv << ',' << format_number(v);
            std::ostringstream key;
            key << etas[e];
            by_eta[key.str()] = v;
        }
        row["epsilon"] = by_eta;
        if (cfg.oracle) {
            csv << ',' << format_number(oracle_eps[i]);
            row["rectangle_epsilon"] = oracle_eps[i];
        }
        csv << '\n';
        table.push_back(row);
    }
    return table;
}

template <lagt::Scalar Real>
json bench_segments_typed(const lagt::SampledSignal<double>& input, const BenchConfig& cfg, std::ostream& csv) {
    const auto signal = lagt::narrow<Real>(input);
    const auto ps = parse_list<std::size_t>(cfg.segments);
    const double eta = parse_list<double>(cfg.etas).back();
    const std::size_t n = parse_list<std::size_t>(cfg.ncoeffs).back();

    json table = json::array();
    csv << "p,precision,local_n,local_coefficients,step1_s,step2_s,total_s,epsilon\n";
    for (std::size_t p : ps) {
        lagt::SegmentOptions so;
        so.p = p;
        so.transform.taper_fraction = cfg.taper;
        const auto r = lagt::algorithm4(signal, eta, n, so);
        const auto approx = lagt::reconstruct(r.spectrum, signal.step(), signal.size());
        const double eps = lagt::relative_error(signal, approx);
        csv << p << ',' << cfg.precision << ',' << r.plan.local_n << ',' << r.timing.local_coefficients << ','
            << format_number(r.timing.step1_seconds) << ',' << format_number(r.timing.step2_seconds) << ','
            << format_number(r.timing.total_seconds) << ',' << format_number(eps) << '\n';
        table.push_back({{"p", p},
                         {"precision", cfg.precision},
                         {"local_n", r.plan.local_n},
                         {"local_coefficients", r.timing.local_coefficients},
                         {"step1_s", r.timing.step1_seconds},
                         {"step2_s", r.timing.step2_seconds},
                         {"total_s", r.timing.total_seconds},
                         {"epsilon", eps}});
    }
    return table;
}

int cmd_bench(const BenchConfig& cfg) {
    const auto signal = lagt::fixtures::by_name(cfg.fixture);
    if (cfg.algorithm < 1 || cfg.algorithm > 4) throw lagt::InvalidArgument("--algorithm must be 1, 2, 3 or 4");
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);

    std::ostringstream csv;
    json report{{"flags", cfg.to_json()}};
    if (cfg.algorithm == 4) {
        report["segments"] = lagt::parse_precision(cfg.precision) == lagt::Precision::f32
                                 ? bench_segments_typed<float>(signal, cfg, csv)
                                 : bench_segments_typed<double>(signal, cfg, csv);
    } else {
        report["accuracy"] = bench_accuracy(signal, cfg, csv);
    }

    const fs::path csv_path = dir / ("bench_" + cfg.fixture + ".csv");
    std::ofstream out(csv_path, std::ios::trunc);
    if (!out) throw lagt::IoError("cannot write " + csv_path.string());
    out << "# " << cfg.to_json().dump() << '\n' << csv.str();
    if (!out) throw lagt::IoError("failed writing " + csv_path.string());
    lagt::io::write_json(dir / ("bench_" + cfg.fixture + ".json"), report);
    std::cout << csv.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre transforms of sampled signals"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    ForwardConfig fwd;
    std::string fwd_input, fwd_output;
    auto* forward = app.add_subcommand("forward", "Signal file (or directory of traces) to Laguerre spectrum JSON");
    forward->add_option("input", fwd_input, "CSV or raw .f32 signal, or a directory of them")->required();
    forward->add_option("-o,--output", fwd_output, "Output file (directory for batch input)");
    forward->add_option("--algorithm", fwd.algorithm, "1 extend+energy, 2 matrix, 3 operators, 4 segmented")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    forward->add_option("--eta", fwd.eta, "Transform parameter")->required()->check(CLI::PositiveNumber);
    forward->add_option("--ncoeff", fwd.ncoeff, "Highest coefficient index n")->capture_default_str();
    forward->add_option("--nfreq", fwd.nfreq, "Frequency bins used by algorithm 2 (default N/2)");
    forward->add_option("--precision", fwd.precision, "f32 or f64")
        ->check(CLI::IsMember({"f32", "f64", "single", "double"}))
        ->capture_default_str();
    forward->add_option("--extension", fwd.extension, "Interval extension factor (algorithm 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    forward->add_option("--segments", fwd.segments, "Segment count p, a power of two (algorithm 4)")
        ->capture_default_str();
    forward->add_option("--segment-threads", fwd.segment_threads, "Workers for the segment transforms")
        ->capture_default_str();
    forward->add_option("--buffer-width", fwd.buffer_width, "Crossfade width (default 10% of a segment)");
    forward->add_option("--ramp-width", fwd.ramp_width, "Ramp width for signals with f(0) != 0 (algorithm 3)")
        ->capture_default_str();
    forward->add_option("--truncation", fwd.truncation, "energy, conjugation, none or auto")
        ->check(CLI::IsMember({"auto", "energy", "conjugation", "none"}))
        ->capture_default_str();
    forward->add_option("--taper", fwd.taper, "End taper as a fraction of the interval")->capture_default_str();
    forward->add_option("--summation-factor", fwd.summation_factor, "Coefficients summed by Q^2, times n + 1")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    forward->add_flag("--no-shift-doubling", fwd.no_shift_doubling,
                      "Fail instead of shift doubling when eta * tau exceeds the guard");

    InverseConfig inv;
    std::string inv_input, inv_output;
    auto* inverse = app.add_subcommand("inverse", "Spectrum JSON to signal samples on a uniform grid");
    inverse->add_option("input", inv_input, "Spectrum JSON")->required();
    inverse->add_option("-o,--output", inv_output, "Output .csv or .f32 (default signal.csv)");
    inverse->add_option("--step", inv.step, "Grid step (default: the step recorded with the spectrum)");
    inverse->add_option("--duration", inv.duration, "Grid length (default: the spectrum duration)");
    inverse->add_option("--precision", inv.precision, "f32 or f64")
        ->check(CLI::IsMember({"f32", "f64", "single", "double"}))
        ->capture_default_str();
    inverse->add_flag("--via-fourier", inv.via_fourier, "Go through Fourier coefficients and an inverse DFT");
    inverse->add_flag("--no-shift-doubling", inv.no_shift_doubling, "Fail when eta * t exceeds the guard");

    BenchConfig bench;
    auto* bench_cmd = app.add_subcommand("bench", "Accuracy and timing tables on a built-in fixture");
    bench_cmd->add_option("fixture", bench.fixture, "source, ramped or bursts")->required();
    bench_cmd->add_option("--etas", bench.etas, "List a,b,c or range start:stop:step")->capture_default_str();
    bench_cmd->add_option("--ncoeffs", bench.ncoeffs, "List or range of n")->capture_default_str();
    bench_cmd->add_option("--segments", bench.segments, "Segment counts for algorithm 4")->capture_default_str();
    bench_cmd->add_option("--algorithm", bench.algorithm, "1, 2, 3 or 4")->capture_default_str();
    bench_cmd->add_option("--precision", bench.precision, "f32 or f64")
        ->check(CLI::IsMember({"f32", "f64", "single", "double"}))
        ->capture_default_str();
    bench_cmd->add_flag("--oracle", bench.oracle, "Add a rectangle-rule column");
    bench_cmd->add_option("--fine-step", bench.fine_step, "Step of the rectangle rule (default: the fixture step)");
    bench_cmd->add_option("--ramp-width", bench.ramp_width, "Ramp width (algorithm 3)")->capture_default_str();
    bench_cmd->add_option("--taper", bench.taper, "End taper fraction")->capture_default_str();
    bench_cmd->add_option("--extension", bench.extension, "Extension factor (algorithm 1)")->capture_default_str();
    bench_cmd->add_option("--output-dir", bench.output_dir, "Directory for the CSV and JSON reports")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ExitCode::usage);
    }

    try {
        if (forward->parsed()) return cmd_forward(fwd_input, fwd_output, fwd);
        if (inverse->parsed()) return cmd_inverse(inv_input, inv_output, inv);
        if (bench_cmd->parsed()) return cmd_bench(bench);
    } catch (const lagt::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::guard);
    } catch (const lagt::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::io);
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::io);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    return static_cast<int>(ExitCode::usage);
}

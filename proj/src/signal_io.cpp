#include "lagt/signal_io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

namespace lagt::io {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& text, const std::filesystem::path& path, std::size_t line) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw IoError(path.string() + ":" + std::to_string(line) + ": not a number: '" + text + "'");
    }
    return value;
}

std::ifstream open_input(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw IoError("cannot open " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

nlohmann::json parse_json_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path.string() + ": malformed JSON: " + e.what());
    }
}

SampledSignal<double> checked_signal(std::vector<double> values, double step, const std::filesystem::path& path) {
    try {
        return {std::move(values), step};
    } catch (const InvalidArgument& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

}  // namespace

SampledSignal<double> read_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::optional<double> step;
    std::vector<double> values;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            const auto eq = text.find("step=");
            if (eq != std::string::npos) step = parse_number(trim(text.substr(eq + 5)), path, number);
            continue;
        }
        values.push_back(parse_number(text, path, number));
    }
    if (!step) throw IoError(path.string() + ": missing '# step=<h>' header");
    return checked_signal(std::move(values), *step, path);
}

void write_csv(const std::filesystem::path& path, const SampledSignal<double>& signal) {
    auto out = open_output(path);
    out << std::setprecision(17) << "# step=" << signal.step() << '\n';
    for (double v : signal.values()) out << v << '\n';
    if (!out) throw IoError("failed writing " + path.string());
}

SampledSignal<double> read_raw_f32(const std::filesystem::path& path) {
    auto sidecar_path = path;
    sidecar_path += ".json";
    const auto sidecar = parse_json_file(sidecar_path);
    if (!sidecar.contains("step") || !sidecar["step"].is_number()) {
        throw IoError(sidecar_path.string() + ": sidecar needs a numeric \"step\"");
    }

    auto in = open_input(path, std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() % 4 != 0) throw IoError(path.string() + ": size is not a multiple of 4 bytes");
    std::vector<double> values(bytes.size() / 4);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::uint32_t bits = 0;
        std::memcpy(&bits, bytes.data() + 4 * i, 4);
        if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap32(bits);
        values[i] = std::bit_cast<float>(bits);
    }
    return checked_signal(std::move(values), sidecar["step"].get<double>(), path);
}

void write_raw_f32(const std::filesystem::path& path, const SampledSignal<double>& signal) {
    auto out = open_output(path, std::ios::binary);
    for (double v : signal.values()) {
        auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
        if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap32(bits);
        out.write(reinterpret_cast<const char*>(&bits), 4);
    }
    if (!out) throw IoError("failed writing " + path.string());
    auto sidecar_path = path;
    sidecar_path += ".json";
    write_json(sidecar_path, nlohmann::json{{"step", signal.step()}});
}

SampledSignal<double> read_signal(const std::filesystem::path& path) {
    if (path.extension() == ".csv") return read_csv(path);
    return read_raw_f32(path);
}

nlohmann::json to_json(const SpectrumFile& file) {
    nlohmann::json doc;
    doc["eta"] = file.spectrum.eta;
    doc["duration"] = file.spectrum.duration;
    doc["coeffs"] = file.spectrum.coeffs;
    doc["provenance"] = file.provenance;
    return doc;
}

SpectrumFile spectrum_from_json(const nlohmann::json& doc) {
    try {
        SpectrumFile file;
        file.spectrum.eta = doc.at("eta").get<double>();
        file.spectrum.duration = doc.at("duration").get<double>();
        file.spectrum.coeffs = doc.at("coeffs").get<std::vector<double>>();
        if (doc.contains("provenance") && !doc["provenance"].is_null()) file.provenance = doc["provenance"];
        validate(file.spectrum);
        return file;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed spectrum: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw IoError(std::string("malformed spectrum: ") + e.what());
    }
}

SpectrumFile read_spectrum(const std::filesystem::path& path) {
    try {
        return spectrum_from_json(parse_json_file(path));
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_spectrum(const std::filesystem::path& path, const SpectrumFile& file) { write_json(path, to_json(file)); }

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
    auto out = open_output(path);
    out << doc.dump(2) << '\n';
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace lagt::io

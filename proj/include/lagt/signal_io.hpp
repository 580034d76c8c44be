#pragma once

// File formats:
//   CSV       one value per line, preceded by a "# step=<h>" header line
//   raw f32   little-endian 32-bit floats, step in a sidecar "<file>.json"
//             holding {"step": h}
//   spectrum  JSON {"eta": ..., "duration": ..., "coeffs": [...], "provenance": {...}}

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lagt/types.hpp"

namespace lagt::io {

SampledSignal<double> read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const SampledSignal<double>& signal);

SampledSignal<double> read_raw_f32(const std::filesystem::path& path);
void write_raw_f32(const std::filesystem::path& path, const SampledSignal<double>& signal);

/// Picks the reader from the extension: .csv, otherwise raw f32.
SampledSignal<double> read_signal(const std::filesystem::path& path);

struct SpectrumFile {
    LaguerreSpectrum<double> spectrum;
    nlohmann::json provenance = nlohmann::json::object();
};

nlohmann::json to_json(const SpectrumFile& file);
SpectrumFile spectrum_from_json(const nlohmann::json& doc);

SpectrumFile read_spectrum(const std::filesystem::path& path);
void write_spectrum(const std::filesystem::path& path, const SpectrumFile& file);

/// Serialized with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace lagt::io

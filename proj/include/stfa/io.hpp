// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_IO_HPP
#define STFA_IO_HPP

#include <string>
#include <vector>

#include "stfa/types.hpp"

namespace stfa {

/// A 2D seismic section: one real-valued trace per common depth point.
struct SeismicSection {
    Eigen::MatrixXd traces;  // rows = traces (CDP order), cols = samples
    double fs = 1.0;
    double t0 = 0.0;
    int cdp_start = 0;

    Eigen::Index trace_count() const { return traces.rows(); }
    Eigen::Index samples() const { return traces.cols(); }

    ComplexSignal trace(Eigen::Index i) const;
};

/// Amplitude of one frequency bin across all traces and times.
struct FrequencySlice {
    Eigen::MatrixXd values;  // rows = traces, cols = time
    double freq_hz = 0.0;    // requested
    double bin_hz = 0.0;     // actual bin center used
};

/// Trace CSV: header "# fs=<Hz> t0=<s>" followed by one "value" or
/// "re,im" row per sample. Parse errors carry the 1-based line number.
ComplexSignal read_trace_csv(const std::string& path);
void write_trace_csv(const ComplexSignal& s, const std::string& path);

/// Section binary: magic "STFA", u32 trace_count, u32 samples, f64 fs,
/// f64 t0, i32 cdp_start, then trace_count*samples little-endian f64 in
/// trace-major order. Read rejects bad magic, truncated payloads and
/// empty sections.
SeismicSection read_section_bin(const std::string& path);
void write_section_bin(const SeismicSection& section, const std::string& path);

/// Grid CSV: one matrix row per line, full-precision scientific notation;
/// round-trips losslessly.
Eigen::MatrixXd read_grid_csv(const std::string& path);
void export_grid_csv(const Eigen::MatrixXd& grid, const std::string& path);

/// Binary PGM (P5) with values min-max normalized to 0..255, written
/// row 0 first. A constant grid maps to all-zero pixels.
void export_heatmap_pgm(const Eigen::MatrixXd& grid, const std::string& path);

/// TFD heatmap with the highest frequency as the top image row.
void export_tfd_pgm(const TFDGrid& tfd, const std::string& path);

/// Nearest-row slice at frequency f from one TFD per trace (identical
/// axes required). Throws std::invalid_argument for out-of-band f.
FrequencySlice frequency_slice(const std::vector<TFDGrid>& tfds, double f);

}  // namespace stfa

#endif  // STFA_IO_HPP

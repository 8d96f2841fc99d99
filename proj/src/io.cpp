// SPDX-License-Identifier: Apache-2.0
#include "stfa/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace stfa {

namespace {

bool parse_double(std::string_view text, double& out) {
    // trim surrounding whitespace, require full consumption
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) return false;
    text = text.substr(b, e - b + 1);
    const char* last = text.data() + text.size();
    auto res = std::from_chars(text.data(), last, out);
    return res.ec == std::errc() && res.ptr == last;
}

[[noreturn]] void parse_fail(const std::string& path, size_t line, const std::string& what) {
    std::ostringstream msg;
    msg << path << ":" << line << ": parse error: " << what;
    throw std::runtime_error(msg.str());
}

std::string chomp(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    return line;
}

void put_u32(std::ostream& os, uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& os, double d) {
    uint64_t v;
    std::memcpy(&v, &d, sizeof(v));
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    os.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u32(std::istream& is, uint32_t& v) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4)) return false;
    v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return true;
}

bool get_f64(std::istream& is, double& d) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    std::memcpy(&d, &v, sizeof(d));
    return true;
}

[[noreturn]] void format_fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": format error: " + what);
}

std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

}  // namespace

ComplexSignal SeismicSection::trace(Eigen::Index i) const {
    if (i < 0 || i >= trace_count())
        throw std::invalid_argument("SeismicSection::trace: index out of range");
    ComplexSignal s;
    s.t0 = t0;
    s.fs = fs;
    s.samples = traces.row(i).transpose().cast<std::complex<double>>();
    return s;
}

ComplexSignal read_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::string line;
    size_t lineno = 0;

    // header: "# fs=<Hz> t0=<s>"
    if (!std::getline(in, line)) parse_fail(path, 1, "missing header line '# fs=<Hz> t0=<s>'");
    ++lineno;
    line = chomp(line);
    double fs = 0.0, t0 = 0.0;
    {
        const size_t fs_pos = line.find("fs=");
        const size_t t0_pos = line.find("t0=");
        if (line.empty() || line[0] != '#' || fs_pos == std::string::npos ||
            t0_pos == std::string::npos)
            parse_fail(path, lineno, "expected header '# fs=<Hz> t0=<s>'");
        std::string fs_text = line.substr(fs_pos + 3);
        fs_text = fs_text.substr(0, fs_text.find(' '));
        std::string t0_text = line.substr(t0_pos + 3);
        t0_text = t0_text.substr(0, t0_text.find(' '));
        if (!parse_double(fs_text, fs) || !parse_double(t0_text, t0))
            parse_fail(path, lineno, "bad fs/t0 value in header");
        if (fs <= 0.0) parse_fail(path, lineno, "fs must be positive");
    }

    std::vector<std::complex<double>> samples;
    while (std::getline(in, line)) {
        ++lineno;
        line = chomp(line);
        if (line.empty()) continue;
        const size_t comma = line.find(',');
        double re = 0.0, im = 0.0;
        if (comma == std::string::npos) {
            if (!parse_double(line, re)) parse_fail(path, lineno, "non-numeric row '" + line + "'");
        } else {
            if (!parse_double(std::string_view(line).substr(0, comma), re) ||
                !parse_double(std::string_view(line).substr(comma + 1), im))
                parse_fail(path, lineno, "non-numeric row '" + line + "'");
        }
        samples.emplace_back(re, im);
    }
    if (samples.empty()) parse_fail(path, lineno + 1, "no samples");

    ComplexSignal s;
    s.fs = fs;
    s.t0 = t0;
    s.samples = Eigen::Map<const Eigen::VectorXcd>(samples.data(),
                                                   static_cast<Eigen::Index>(samples.size()));
    return s;
}

void write_trace_csv(const ComplexSignal& s, const std::string& path) {
    if (s.size() == 0) throw std::invalid_argument("write_trace_csv: empty signal");
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "# fs=" << full_precision(s.fs) << " t0=" << full_precision(s.t0) << "\n";
    for (Eigen::Index i = 0; i < s.size(); ++i)
        out << full_precision(s.samples[i].real()) << "," << full_precision(s.samples[i].imag())
            << "\n";
    if (!out) throw std::runtime_error(path + ": I/O error while writing");
}

SeismicSection read_section_bin(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open");
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, "STFA", 4) != 0)
        format_fail(path, "bad magic, expected 'STFA'");
    uint32_t trace_count = 0, samples = 0;
    double fs = 0.0, t0 = 0.0;
    uint32_t cdp_raw = 0;
    if (!get_u32(in, trace_count) || !get_u32(in, samples) || !get_f64(in, fs) ||
        !get_f64(in, t0) || !get_u32(in, cdp_raw))
        format_fail(path, "truncated header");
    if (trace_count == 0) throw std::runtime_error(path + ": empty section (trace_count=0)");
    if (samples == 0) format_fail(path, "samples=0");
    if (!(fs > 0.0)) format_fail(path, "fs must be positive");

    // verify the payload size before allocating anything
    const auto payload_start = in.tellg();
    in.seekg(0, std::ios::end);
    const auto file_end = in.tellg();
    in.seekg(payload_start);
    const uint64_t expected = static_cast<uint64_t>(trace_count) * samples * sizeof(double);
    if (static_cast<uint64_t>(file_end - payload_start) < expected)
        format_fail(path, "truncated payload");

    SeismicSection section;
    section.fs = fs;
    section.t0 = t0;
    section.cdp_start = static_cast<int32_t>(cdp_raw);
    section.traces.resize(trace_count, samples);
    for (uint32_t tr = 0; tr < trace_count; ++tr)
        for (uint32_t k = 0; k < samples; ++k) {
            double v = 0.0;
            if (!get_f64(in, v)) format_fail(path, "truncated payload");
            section.traces(tr, k) = v;
        }
    return section;
}

void write_section_bin(const SeismicSection& section, const std::string& path) {
    if (section.trace_count() == 0)
        throw std::invalid_argument("write_section_bin: empty section");
    if (section.samples() == 0) throw std::invalid_argument("write_section_bin: zero samples");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out.write("STFA", 4);
    put_u32(out, static_cast<uint32_t>(section.trace_count()));
    put_u32(out, static_cast<uint32_t>(section.samples()));
    put_f64(out, section.fs);
    put_f64(out, section.t0);
    put_u32(out, static_cast<uint32_t>(static_cast<int32_t>(section.cdp_start)));
    for (Eigen::Index tr = 0; tr < section.trace_count(); ++tr)
        for (Eigen::Index k = 0; k < section.samples(); ++k) put_f64(out, section.traces(tr, k));
    if (!out) throw std::runtime_error(path + ": I/O error while writing");
}

Eigen::MatrixXd read_grid_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::vector<std::vector<double>> rows;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = chomp(line);
        if (line.empty()) continue;
        std::vector<double> row;
        size_t start = 0;
        while (start <= line.size()) {
            size_t comma = line.find(',', start);
            if (comma == std::string::npos) comma = line.size();
            double v = 0.0;
            if (!parse_double(std::string_view(line).substr(start, comma - start), v))
                parse_fail(path, lineno, "non-numeric cell");
            row.push_back(v);
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            parse_fail(path, lineno, "ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) parse_fail(path, lineno + 1, "empty grid");
    Eigen::MatrixXd grid(rows.size(), rows.front().size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            grid(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    return grid;
}

void export_grid_csv(const Eigen::MatrixXd& grid, const std::string& path) {
    if (grid.size() == 0) throw std::invalid_argument("export_grid_csv: empty grid");
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    for (Eigen::Index r = 0; r < grid.rows(); ++r) {
        for (Eigen::Index c = 0; c < grid.cols(); ++c) {
            if (c > 0) out << ",";
            out << full_precision(grid(r, c));
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error(path + ": I/O error while writing");
}

void export_heatmap_pgm(const Eigen::MatrixXd& grid, const std::string& path) {
    if (grid.size() == 0) throw std::invalid_argument("export_heatmap_pgm: empty grid");
    if (!grid.allFinite()) throw std::invalid_argument("export_heatmap_pgm: non-finite grid");
    const double lo = grid.minCoeff();
    const double hi = grid.maxCoeff();
    const double range = hi - lo;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "P5\n" << grid.cols() << " " << grid.rows() << "\n255\n";
    std::vector<unsigned char> row(static_cast<size_t>(grid.cols()));
    for (Eigen::Index r = 0; r < grid.rows(); ++r) {
        for (Eigen::Index c = 0; c < grid.cols(); ++c) {
            double v = range > 0.0 ? (grid(r, c) - lo) / range * 255.0 : 0.0;
            long px = std::lround(v);
            if (px < 0) px = 0;
            if (px > 255) px = 255;
            row[static_cast<size_t>(c)] = static_cast<unsigned char>(px);
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw std::runtime_error(path + ": I/O error while writing");
}

void export_tfd_pgm(const TFDGrid& tfd, const std::string& path) {
    // image top = highest frequency
    export_heatmap_pgm(tfd.values.colwise().reverse(), path);
}

FrequencySlice frequency_slice(const std::vector<TFDGrid>& tfds, double f) {
    if (tfds.empty()) throw std::invalid_argument("frequency_slice: no TFDs");
    const TimeFreqAxes& axes = tfds.front().axes;
    if (!in_band(axes, f)) {
        std::ostringstream msg;
        msg << "frequency_slice: " << f << " Hz out of band [" << -axes.fs() / 2.0 << ", "
            << axes.fs() / 2.0 << ") Hz";
        throw std::invalid_argument(msg.str());
    }
    for (const TFDGrid& tfd : tfds)
        if (tfd.axes.size() != axes.size() || tfd.axes.freqs != axes.freqs)
            throw std::invalid_argument("frequency_slice: TFD axes differ between traces");

    const Eigen::Index bin = nearest_freq_bin(axes, f);
    FrequencySlice slice;
    slice.freq_hz = f;
    slice.bin_hz = axes.freqs[bin];
    slice.values.resize(static_cast<Eigen::Index>(tfds.size()), axes.size());
    for (size_t tr = 0; tr < tfds.size(); ++tr)
        slice.values.row(static_cast<Eigen::Index>(tr)) = tfds[tr].values.row(bin);
    return slice;
}

}  // namespace stfa

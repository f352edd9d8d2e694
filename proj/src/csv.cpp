#include "ambsim/csv.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ambsim {

const char* const kCsvHeader =
    "t,z,z_dot,i,i_ref,u,sigma,v_star,v_tilde,q_z,q_i,r,z_measured";

namespace {

constexpr int kColumns = 13;

std::array<double, kColumns> to_row(const SimRecord& r) {
    return {r.t, r.z, r.z_dot, r.i, r.i_ref, r.u, r.sigma,
            r.v_star, r.v_tilde, r.q_z, r.q_i, r.r, r.z_measured};
}

SimRecord from_row(const std::array<double, kColumns>& c) {
    SimRecord r;
    r.t = c[0];
    r.z = c[1];
    r.z_dot = c[2];
    r.i = c[3];
    r.i_ref = c[4];
    r.u = c[5];
    r.sigma = c[6];
    r.v_star = c[7];
    r.v_tilde = c[8];
    r.q_z = c[9];
    r.q_i = c[10];
    r.r = c[11];
    r.z_measured = c[12];
    return r;
}

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

template <class Sink>
void for_each_file(const std::string& path, Sink&& sink) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    sink(out);
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

void write_csv(const std::vector<SimRecord>& records, std::ostream& out) {
    std::string line;
    line.reserve(512);
    out << kCsvHeader << '\n';
    for (const SimRecord& rec : records) {
        line.clear();
        const auto row = to_row(rec);
        for (int c = 0; c < kColumns; ++c) {
            if (c) line += ',';
            append_number(line, row[c]);
        }
        line += '\n';
        out << line;
    }
}

void write_csv_file(const std::vector<SimRecord>& records, const std::string& path) {
    for_each_file(path, [&](std::ostream& out) { write_csv(records, out); });
}

std::vector<SimRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty stream");
    if (line == std::string(kCsvHeader) + "\r") line.pop_back();
    if (line != kCsvHeader) throw std::runtime_error("csv: unexpected header '" + line + "'");
    std::vector<SimRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::array<double, kColumns> row{};
        const char* p = line.c_str();
        for (int c = 0; c < kColumns; ++c) {
            char* end = nullptr;
            row[c] = std::strtod(p, &end);
            if (end == p) {
                throw std::runtime_error("csv: bad number at line " +
                                         std::to_string(line_no));
            }
            p = end;
            if (c + 1 < kColumns) {
                if (*p != ',') {
                    throw std::runtime_error("csv: expected ',' at line " +
                                             std::to_string(line_no));
                }
                ++p;
            }
        }
        records.push_back(from_row(row));
    }
    return records;
}

std::vector<SimRecord> read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_csv(in);
}

void write_jsonl(const std::vector<SimRecord>& records, std::ostream& out) {
    static const char* names[kColumns] = {"t", "z", "z_dot", "i", "i_ref",
                                          "u", "sigma", "v_star", "v_tilde",
                                          "q_z", "q_i", "r", "z_measured"};
    std::string line;
    for (const SimRecord& rec : records) {
        line.clear();
        line += '{';
        const auto row = to_row(rec);
        for (int c = 0; c < kColumns; ++c) {
            if (c) line += ',';
            line += '"';
            line += names[c];
            line += "\":";
            append_number(line, row[c]);
        }
        line += "}\n";
        out << line;
    }
}

void write_jsonl_file(const std::vector<SimRecord>& records, const std::string& path) {
    for_each_file(path, [&](std::ostream& out) { write_jsonl(records, out); });
}

std::string metrics_to_json(const RunMetrics& m) {
    nlohmann::ordered_json j;
    auto number_or_null = [](double v) {
        return std::isfinite(v) ? nlohmann::ordered_json(v)
                                : nlohmann::ordered_json(nullptr);
    };
    j["sigma_ss_radius"] = number_or_null(m.sigma_ss_radius);
    j["max_abs_tracking_error"] = number_or_null(m.max_abs_tracking_error);
    j["vtilde_convergence_time"] = number_or_null(m.vtilde_convergence_time);
    j["tol_v"] = number_or_null(m.tol_v);
    j["singularity_events"] = m.singularity_events;
    j["terminated_early"] = m.terminated_early;
    j["status"] = to_string(m.status);
    j["converged"] = m.converged;
    j["delta1_estimate"] = number_or_null(m.delta1_estimate);
    j["delta1_exceeds_gamma"] = m.delta1_exceeds_gamma;
    j["steps"] = m.steps;
    j["final_time"] = m.final_time;
    return j.dump(2) + "\n";
}

void write_metrics_file(const RunMetrics& metrics, const std::string& path) {
    for_each_file(path, [&](std::ostream& out) { out << metrics_to_json(metrics); });
}

}  // namespace ambsim

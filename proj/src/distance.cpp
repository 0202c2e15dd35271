// Copyright 2026 The Dislo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dislo/distance.h"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "dislo/lattice.h"
#include "search_space.h"

namespace dislo {

std::string_view engine_name(Engine engine) {
    return engine == Engine::kBrute ? "brute" : "mitm";
}

Engine parse_engine(std::string_view text) {
    std::string lower(text);
    for (auto &c : lower) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (lower == "brute") {
        return Engine::kBrute;
    }
    if (lower == "mitm") {
        return Engine::kMitm;
    }
    throw std::invalid_argument("unknown engine '" + std::string(text) + "' (expected brute or mitm)");
}

DistanceReport compute_distance(
    const StabilizerCode &code, ErrorModel model, size_t cap, Engine engine, const SearchOptions &options) {
    return engine == Engine::kBrute ? brute_force_distance(code, model, cap, options)
                                    : mitm_distance(code, model, cap, options);
}

DistanceReport per_qubit_distance(
    const StabilizerCode &code,
    size_t logical_index,
    ErrorModel model,
    size_t cap,
    Engine engine,
    const SearchOptions &options) {
    DistanceReport report = engine == Engine::kBrute
                                ? brute_force_search(code, model, cap, options, logical_index)
                                : mitm_search(code, model, cap, options, logical_index);
    if (report.d) {
        report.per_logical[logical_index] = *report.d;
    }
    return report;
}

nlohmann::json report_to_json(const DistanceReport &report) {
    nlohmann::json j;
    j["model"] = std::string(model_name(report.model));
    j["engine"] = std::string(engine_name(report.engine));
    j["cap"] = report.cap;
    j["found"] = report.found();
    j["d"] = report.d ? nlohmann::json(*report.d) : nlohmann::json(nullptr);
    j["witness"] = report.witness ? nlohmann::json(format_pauli(*report.witness)) : nlohmann::json(nullptr);
    nlohmann::json per = nlohmann::json::object();
    for (const auto &[i, d] : report.per_logical) {
        per[std::to_string(i)] = d;
    }
    j["per_logical"] = per;
    j["stats"] = {
        {"candidates", report.stats.candidates},
        {"seconds", report.stats.seconds},
        {"table_bytes", report.stats.table_bytes},
        {"shards", report.stats.shards},
    };
    return j;
}

std::string format_report(const DistanceReport &report) {
    std::ostringstream out;
    out << "model: " << model_name(report.model) << "\n";
    out << "engine: " << engine_name(report.engine) << "\n";
    if (report.d) {
        out << "d: " << *report.d << "\n";
    } else {
        out << "d: UNKNOWN_ABOVE " << report.cap << "\n";
    }
    if (report.witness) {
        out << "witness: " << format_pauli(*report.witness) << "\n";
        out << "witness support:";
        for (size_t q : report.witness->support()) {
            out << " " << report.witness->letter(q) << q;
        }
        out << "\n";
    }
    for (const auto &[i, d] : report.per_logical) {
        out << "logical " << i << " distance: " << d << "\n";
    }
    out << "candidates: " << report.stats.candidates << "\n";
    out << "seconds: " << std::fixed << std::setprecision(3) << report.stats.seconds << "\n";
    return out.str();
}

std::vector<ScanRow> distance_scan(
    const SpecFamily &family,
    const std::vector<int> &L_values,
    ErrorModel model,
    size_t cap,
    const SearchOptions &options) {
    std::vector<int> sorted = L_values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<ScanRow> rows;
    for (int L : sorted) {
        ScanRow row;
        row.L = L;
        row.model = model;
        row.cap = cap ? cap : static_cast<size_t>(std::max(1, 2 * L + 8));
        auto start = std::chrono::steady_clock::now();
        try {
            StabilizerCode code = build_dislocation_code(family(L));
            DistanceReport report = mitm_distance(code, model, row.cap, options);
            row.d = report.d;
            row.witness = report.witness;
        } catch (const std::exception &e) {
            row.error = e.what();
        }
        row.seconds = detail::seconds_since(start);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string d_text(const ScanRow &row) {
    if (!row.error.empty()) {
        return "ERROR";
    }
    return row.d ? std::to_string(*row.d) : "UNKNOWN_ABOVE_" + std::to_string(row.cap);
}

std::string seconds_text(double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << s;
    return out.str();
}

}  // namespace

std::string scan_csv(const std::vector<ScanRow> &rows) {
    std::ostringstream out;
    out << "L,model,d,witness,seconds\n";
    for (const auto &row : rows) {
        out << row.L << "," << model_name(row.model) << "," << d_text(row) << ","
            << (row.witness ? format_pauli(*row.witness) : "") << "," << seconds_text(row.seconds) << "\n";
    }
    return out.str();
}

std::string scan_text(const std::vector<ScanRow> &rows) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "L" << std::setw(9) << "model" << std::setw(22) << "d" << std::setw(10)
        << "seconds"
        << "witness support\n";
    for (const auto &row : rows) {
        std::string support;
        if (row.witness) {
            for (size_t q : row.witness->support()) {
                support += (support.empty() ? "" : " ") + std::string(1, row.witness->letter(q)) + std::to_string(q);
            }
        } else if (!row.error.empty()) {
            support = row.error;
        }
        out << std::left << std::setw(4) << row.L << std::setw(9) << model_name(row.model) << std::setw(22)
            << d_text(row) << std::setw(10) << seconds_text(row.seconds) << support << "\n";
    }
    return out.str();
}

}  // namespace dislo

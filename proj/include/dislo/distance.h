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

#ifndef DISLO_DISTANCE_H
#define DISLO_DISTANCE_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dislo/stabilizer_code.h"
#include "json.hpp"

namespace dislo {

/// The search would need more memory than it is allowed to use.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Engine { kBrute, kMitm };

std::string_view engine_name(Engine engine);
Engine parse_engine(std::string_view text);

struct SearchOptions {
    unsigned threads = 1;
    /// Upper bound on the meet-in-the-middle table size.
    size_t memory_bytes = size_t{2} << 30;
    /// Shard count is capped here; more would be too slow to be useful.
    size_t max_shards = 64;
};

struct SearchStats {
    uint64_t candidates = 0;
    double seconds = 0;
    size_t table_bytes = 0;
    size_t shards = 0;
};

struct DistanceReport {
    ErrorModel model = ErrorModel::kFull;
    Engine engine = Engine::kBrute;
    size_t cap = 0;
    /// Empty when nothing was found at or below the cap.
    std::optional<size_t> d;
    std::optional<PauliOperator> witness;
    std::map<size_t, size_t> per_logical;
    SearchStats stats;

    bool found() const {
        return d.has_value();
    }
};

/// Enumerates candidate errors in nondecreasing weight order. This is the
/// reference engine.
DistanceReport brute_force_distance(
    const StabilizerCode &code, ErrorModel model, size_t cap, const SearchOptions &options = {});

DistanceReport mitm_distance(
    const StabilizerCode &code, ErrorModel model, size_t cap, const SearchOptions &options = {});

DistanceReport per_qubit_distance(
    const StabilizerCode &code,
    size_t logical_index,
    ErrorModel model,
    size_t cap,
    Engine engine = Engine::kMitm,
    const SearchOptions &options = {});

DistanceReport compute_distance(
    const StabilizerCode &code, ErrorModel model, size_t cap, Engine engine, const SearchOptions &options = {});

nlohmann::json report_to_json(const DistanceReport &report);
std::string format_report(const DistanceReport &report);

struct ScanRow {
    int L = 0;
    ErrorModel model = ErrorModel::kFull;
    size_t cap = 0;
    std::optional<size_t> d;
    std::optional<PauliOperator> witness;
    double seconds = 0;
    /// Set when this row's build or search failed.
    std::string error;
};

using SpecFamily = std::function<LatticeSpec(int)>;

/// A cap of 0 means 2L + 8 per row.
std::vector<ScanRow> distance_scan(
    const SpecFamily &family,
    const std::vector<int> &L_values,
    ErrorModel model,
    size_t cap = 0,
    const SearchOptions &options = {});

std::string scan_csv(const std::vector<ScanRow> &rows);
std::string scan_text(const std::vector<ScanRow> &rows);

}  // namespace dislo

#endif

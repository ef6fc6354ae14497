// ledger.hpp — append-only JSON-lines run records.
//
// One record per completed run: {command, params, outcome, nodes?, seed?,
// runtime_ms, version}. In stable-timing mode runtime_ms is recorded as 0 so
// repeated runs produce byte-identical streams; measured time then goes to
// stderr only.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace synram {

struct RunRecord {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json outcome = nlohmann::ordered_json::object();
    std::optional<std::uint64_t> nodes;
    std::optional<std::uint64_t> seed;
    std::uint64_t runtime_ms = 0;
};

std::string record_to_line(const RunRecord& record, bool stable_timing);

class LedgerWriter {
  public:
    // Empty path keeps records in memory only (used by determinism checks).
    explicit LedgerWriter(std::string path, bool stable_timing = false);

    void append(const RunRecord& record);
    const std::string& buffer() const { return buffer_; }
    bool stable_timing() const { return stable_timing_; }

  private:
    std::string path_;
    bool stable_timing_;
    std::string buffer_;
};

}  // namespace synram

// ledger.cpp — JSON-lines serialization and append-atomic writes.
#include "synram/ledger.hpp"

#include <cstdio>

#include "synram/errors.hpp"
#include "synram/version.hpp"

namespace synram {

std::string record_to_line(const RunRecord& record, bool stable_timing) {
    nlohmann::ordered_json j;
    j["command"] = record.command;
    j["params"] = record.params;
    j["outcome"] = record.outcome;
    if (record.nodes.has_value()) j["nodes"] = *record.nodes;
    if (record.seed.has_value()) j["seed"] = *record.seed;
    j["runtime_ms"] = stable_timing ? 0 : record.runtime_ms;
    j["version"] = kVersion;
    return j.dump() + "\n";
}

LedgerWriter::LedgerWriter(std::string path, bool stable_timing)
    : path_(std::move(path)), stable_timing_(stable_timing) {}

void LedgerWriter::append(const RunRecord& record) {
    const std::string line = record_to_line(record, stable_timing_);
    buffer_ += line;
    if (path_.empty()) return;
    std::FILE* f = std::fopen(path_.c_str(), "ab");
    if (f == nullptr) throw Error(ErrorKind::Format, "cannot open ledger: " + path_);
    // Single write keeps concurrent appends line-atomic.
    std::fwrite(line.data(), 1, line.size(), f);
    std::fclose(f);
}

}  // namespace synram

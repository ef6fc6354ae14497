// errors.hpp — structured error types shared by all modules.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace synram {

// Broad classification, used by the CLI to map failures onto exit codes.
enum class ErrorKind {
    Dimension,            // assignment length does not match the system
    Domain,               // argument outside the operation's domain
    Invariance,           // system is not dilation invariant (non-homogeneous)
    OutOfWindow,          // a check would leave the finite window [N]
    SizeLimit,            // instance exceeds an exhaustive-search guard
    SearchLimit,          // node-count guard tripped during backtracking
    Embedding,            // prime embedding constraint (p vs N) violated
    NumericIntegrity,     // floating computation left its certified range
    ComparisonIncomplete, // tower comparison could not be certified
    Hypothesis,           // a lemma's stated hypothesis does not hold
    Precondition,         // caller broke an operation precondition
    Format,               // parse error in a serialized artifact
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Search-limit failures carry the number of nodes expanded before the cap.
class SearchLimitError : public Error {
  public:
    SearchLimitError(std::uint64_t nodes, const std::string& what)
        : Error(ErrorKind::SearchLimit, what), nodes_(nodes) {}
    std::uint64_t nodes() const { return nodes_; }

  private:
    std::uint64_t nodes_;
};

}  // namespace synram

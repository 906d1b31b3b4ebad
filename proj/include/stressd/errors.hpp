#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stressd {

// Input file does not match the declared schema (missing column, bad header).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A specific data row/line failed to parse. `row` is 1-based.
struct RowError : std::runtime_error {
    RowError(std::size_t row_, const std::string& msg)
        : std::runtime_error("row " + std::to_string(row_) + ": " + msg), row(row_) {}
    std::size_t row;
};

struct EmptyDatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-recoverable damage in a log segment (anything but a torn tail).
struct CorruptLogError : std::runtime_error {
    CorruptLogError(const std::string& segment_, std::uint64_t byte_offset_, const std::string& msg)
        : std::runtime_error("corrupt segment " + segment_ + " at byte " +
                             std::to_string(byte_offset_) + ": " + msg),
          segment(segment_),
          byte_offset(byte_offset_) {}
    std::string segment;
    std::uint64_t byte_offset;
};

// Model artifact file unreadable: truncated, malformed, or wrong version.
struct ArtifactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stressd

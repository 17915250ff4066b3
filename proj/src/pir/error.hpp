#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pir {

enum class Code {
    InvalidValue = 1,   // non-finite or out-of-domain numeric input
    InvertedBounds,     // min > max
    NoData,             // empty series or empty kept set
    IncompleteContext,  // context lacks a required bounds entry
    Schema,             // header missing required columns
    Row,                // one or more data rows rejected
    Dataset,            // dataset-level violation (duplicate keys)
    Io,                 // file unreadable or unwritable
    NotFound,           // requested entity absent (player, row, exclusion)
    Config,             // invalid configuration combination
};

class Error : public std::runtime_error {
public:
    Error(Code code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

[[noreturn]] inline void fail(Code code, std::string message) {
    throw Error(code, std::move(message));
}

}  // namespace pir

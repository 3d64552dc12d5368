#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace docparse {

// Base for every error thrown by the library. Subclasses exist so callers
// can handle individual failure kinds; all carry a human-readable message.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- domain ----
struct InvalidBoxError : Error {
    using Error::Error;
};
struct InvalidScoreError : Error {
    using Error::Error;
};
struct UnknownCategoryError : Error {
    explicit UnknownCategoryError(const std::string& name)
        : Error("unknown category: \"" + name + "\""), name(name) {}
    std::string name;
};

// ---- layout ingest ----
struct IoError : Error {
    using Error::Error;
};
struct SchemaError : Error {
    SchemaError(const std::string& field, int page, const std::string& detail)
        : Error("schema error in field \"" + field + "\" (page " + std::to_string(page) +
                "): " + detail),
          field(field),
          page(page) {}
    std::string field;
    int page;
};

// ---- reading order ----
struct EmptyPageError : Error {
    EmptyPageError() : Error("empty page: no elements to order") {}
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct InvalidMatrixError : Error {
    using Error::Error;
};

// ---- otsl ----
struct EmptyStreamError : Error {
    EmptyStreamError() : Error("empty OTSL token stream") {}
};
struct RaggedRowsError : Error {
    explicit RaggedRowsError(int row)
        : Error("ragged rows: row " + std::to_string(row) + " has a different length"), row(row) {}
    int row;
};
struct IllegalMergeError : Error {
    IllegalMergeError(int row, int col, const std::string& token)
        : Error("illegal merge token \"" + token + "\" at (" + std::to_string(row) + "," +
                std::to_string(col) + ")"),
          row(row),
          col(col),
          token(token) {}
    int row;
    int col;
    std::string token;
};
struct MalformedHtmlError : Error {
    using Error::Error;
};
struct OverlappingSpansError : Error {
    using Error::Error;
};

// ---- recognizer ----
struct NotRecognizableError : Error {
    using Error::Error;
};
struct OtslParseError : Error {
    OtslParseError(const std::string& detail, const std::string& raw)
        : Error("otsl parse error: " + detail), raw(raw) {}
    std::string raw;  // original recognizer output, kept for logging
};
struct MalformedChartTableError : Error {
    using Error::Error;
};
struct EmptyResponseError : Error {
    EmptyResponseError() : Error("empty recognizer response") {}
};
struct ServiceUnavailableError : Error {
    using Error::Error;
};
struct TimeoutError : Error {
    using Error::Error;
};

// ---- pipeline ----
struct DecodeError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct DuplicateSequenceIdError : Error {
    explicit DuplicateSequenceIdError(std::int64_t id)
        : Error("duplicate sequence id " + std::to_string(id)), id(id) {}
    std::int64_t id;
};
struct MissingResultsError : Error {
    explicit MissingResultsError(std::vector<std::int64_t> ids)
        : Error(format(ids)), ids(std::move(ids)) {}
    std::vector<std::int64_t> ids;

  private:
    static std::string format(const std::vector<std::int64_t>& ids) {
        std::string s = "missing results for sequence ids:";
        for (auto id : ids) s += " " + std::to_string(id);
        return s;
    }
};

// ---- metrics ----
struct ManifestError : Error {
    using Error::Error;
};

}  // namespace docparse

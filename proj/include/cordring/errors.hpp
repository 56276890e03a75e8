#pragma once

#include <stdexcept>
#include <string>

namespace cordring {

// Error taxonomy shared by the library and the CLI. The CLI maps
// input/validation errors to exit code 2 and resource caps to exit code 3.
enum class ErrorCode {
    parse_error,
    invalid_generator,
    strand_mismatch,
    index_error,
    odd_strands,
    not_a_knot,
    incomplete_table,
    undefined_degree,
    degree_cap_exceeded,
    extraction_error,
    internal_error,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorCode::parse_error, w) {}
};
struct InvalidGenerator : Error {
    explicit InvalidGenerator(const std::string& w) : Error(ErrorCode::invalid_generator, w) {}
};
struct StrandMismatch : Error {
    explicit StrandMismatch(const std::string& w) : Error(ErrorCode::strand_mismatch, w) {}
};
struct IndexError : Error {
    explicit IndexError(const std::string& w) : Error(ErrorCode::index_error, w) {}
};
struct OddStrands : Error {
    explicit OddStrands(const std::string& w) : Error(ErrorCode::odd_strands, w) {}
};
struct NotAKnot : Error {
    explicit NotAKnot(const std::string& w) : Error(ErrorCode::not_a_knot, w) {}
};
struct IncompleteTable : Error {
    explicit IncompleteTable(const std::string& w) : Error(ErrorCode::incomplete_table, w) {}
};
struct UndefinedDegree : Error {
    explicit UndefinedDegree(const std::string& w) : Error(ErrorCode::undefined_degree, w) {}
};
struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(const std::string& w) : Error(ErrorCode::degree_cap_exceeded, w) {}
};
struct ExtractionError : Error {
    explicit ExtractionError(const std::string& w) : Error(ErrorCode::extraction_error, w) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error(ErrorCode::internal_error, w) {}
};

} // namespace cordring

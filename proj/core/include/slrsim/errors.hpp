#ifndef SLRSIM_ERRORS_HPP
#define SLRSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slrsim {

/// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Violations of domain rules: bad arguments, broken invariants, invalid
/// strategy specs. The CLI maps these to exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input that could not be read or parsed at all: missing files, malformed
/// JSON/CSV/BibTeX, schema violations. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class EmptyTitleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The same paper would end up marked both indexed and not indexed for one
/// source.
class ConflictingIndexEvidenceError : public DomainError {
public:
    using DomainError::DomainError;
};

class SelfCitationError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnknownPaperError : public DomainError {
public:
    explicit UnknownPaperError(const std::string& paper_id)
        : DomainError("unknown paper: " + paper_id), paper_id_(paper_id) {}

    const std::string& paper_id() const noexcept { return paper_id_; }

private:
    std::string paper_id_;
};

class UnknownSourceError : public DomainError {
public:
    explicit UnknownSourceError(const std::string& source)
        : DomainError("unknown source: " + source), source_(source) {}

    const std::string& source() const noexcept { return source_; }

private:
    std::string source_;
};

/// A ranked seed was requested for a source that returned papers without
/// rank data.
class MissingRanksError : public DomainError {
public:
    using DomainError::DomainError;
};

class InconsistentCountsError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedFormatError : public DomainError {
public:
    using DomainError::DomainError;
};

class IoError : public InputError {
public:
    using InputError::InputError;
};

/// An invalid strategy description (strategies file or inline flags): the
/// file was readable JSON, but what it describes cannot run. `path()` points
/// at the offending element.
class SpecFileError : public DomainError {
public:
    SpecFileError(std::string path, const std::string& message)
        : DomainError(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// A structured file did not match its schema. `path()` points at the
/// offending element in JSON-pointer style ("/papers/3/year").
class SchemaError : public InputError {
public:
    SchemaError(std::string path, const std::string& message)
        : InputError(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

enum class BibtexErrorKind {
    Syntax,
    UnbalancedBraces,
    UnsupportedMacro,
};

/// BibTeX input rejected at a specific position (1-based line and column).
class BibtexParseError : public InputError {
public:
    BibtexParseError(BibtexErrorKind kind, int line, int column, const std::string& message)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + message),
          kind_(kind),
          line_(line),
          column_(column) {}

    BibtexErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    BibtexErrorKind kind_;
    int line_;
    int column_;
};

class CsvError : public InputError {
public:
    CsvError(int line, const std::string& message)
        : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace slrsim

#endif  // SLRSIM_ERRORS_HPP

#ifndef SLRSIM_BIBTEX_HPP
#define SLRSIM_BIBTEX_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slrsim/errors.hpp"

namespace slrsim {

/// One parsed reference. Field names are casefolded; values keep the bytes
/// between their delimiters verbatim (outer braces or quotes stripped, inner
/// braces kept).
struct BibEntry {
    std::string entry_type;  // casefolded, e.g. "article"
    std::string cite_key;
    std::vector<std::pair<std::string, std::string>> fields;  // file order

    /// First value stored under `name`, or nullptr.
    const std::string* find(std::string_view name) const;

    bool operator==(const BibEntry&) const = default;
};

/// Parses the supported BibTeX subset:
///
///   @type{key, name = {value} | "value" | 1234, ...}
///
/// Braces nest arbitrarily inside values and must balance. Text between
/// entries is ignored; @comment and @preamble blocks are skipped. There is no
/// macro machinery: @string blocks, bare-identifier values and `#`
/// concatenation are reported as errors. All errors carry a 1-based line and
/// column.
std::vector<BibEntry> parse_bibtex(std::string_view text);

}  // namespace slrsim

#endif  // SLRSIM_BIBTEX_HPP

#include "slrsim/bibtex.hpp"

#include <cctype>

namespace slrsim {

const std::string* BibEntry::find(std::string_view name) const {
    for (const auto& [field, value] : fields) {
        if (field == name) return &value;
    }
    return nullptr;
}

namespace {

bool is_key_char(char c) {
    return c != ',' && c != '{' && c != '}' && c != '(' && c != ')' &&
           std::isspace(static_cast<unsigned char>(c)) == 0;
}

bool is_name_char(char c) {
    const auto uc = static_cast<unsigned char>(c);
    return std::isalnum(uc) != 0 || c == '_' || c == '-' || c == ':' || c == '.' || c == '+';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<BibEntry> run() {
        std::vector<BibEntry> entries;
        while (skip_to_entry()) {
            const int at_line = line_;
            const int at_col = col_;
            advance();  // consume '@'
            const std::string type = read_type(at_line, at_col);
            if (type == "comment" || type == "preamble") {
                skip_block();
                continue;
            }
            if (type == "string") {
                throw BibtexParseError(BibtexErrorKind::UnsupportedMacro, at_line, at_col,
                                       "@string macros are not supported");
            }
            entries.push_back(parse_entry(type));
        }
        return entries;
    }

private:
    [[noreturn]] void fail(BibtexErrorKind kind, const std::string& message) const {
        fail_at(kind, line_, col_, message);
    }

    [[noreturn]] static void fail_at(BibtexErrorKind kind, int line, int col,
                                     const std::string& message) {
        throw BibtexParseError(kind, line, col, message);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (eof()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())) != 0) advance();
    }

    // Everything outside an entry is free text; scan forward to the next '@'.
    bool skip_to_entry() {
        while (!eof() && peek() != '@') advance();
        return !eof();
    }

    std::string read_type(int at_line, int at_col) {
        std::string type;
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek())) != 0) {
            type.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(peek()))));
            advance();
        }
        if (type.empty()) {
            fail_at(BibtexErrorKind::Syntax, at_line, at_col, "expected an entry type after '@'");
        }
        return type;
    }

    // Skips a braced @comment/@preamble block without interpreting it.
    void skip_block() {
        skip_ws();
        if (eof() || peek() != '{') fail(BibtexErrorKind::Syntax, "expected '{' after block type");
        const int open_line = line_;
        const int open_col = col_;
        int depth = 0;
        while (!eof()) {
            const char c = peek();
            if (c == '{') ++depth;
            if (c == '}') {
                --depth;
                if (depth == 0) {
                    advance();
                    return;
                }
            }
            advance();
        }
        fail_at(BibtexErrorKind::UnbalancedBraces, open_line, open_col, "unterminated block");
    }

    BibEntry parse_entry(std::string type) {
        BibEntry entry;
        entry.entry_type = std::move(type);

        skip_ws();
        if (eof() || peek() != '{') fail(BibtexErrorKind::Syntax, "expected '{' after entry type");
        advance();
        skip_ws();

        while (!eof() && is_key_char(peek())) {
            entry.cite_key.push_back(peek());
            advance();
        }
        if (entry.cite_key.empty()) fail(BibtexErrorKind::Syntax, "missing cite key");
        skip_ws();
        if (eof() || peek() != ',') fail(BibtexErrorKind::Syntax, "expected ',' after cite key");
        advance();

        while (true) {
            skip_ws();
            if (eof()) fail(BibtexErrorKind::Syntax, "unterminated entry");
            if (peek() == '}') {
                advance();
                return entry;
            }
            entry.fields.push_back(parse_field());
            skip_ws();
            if (eof()) fail(BibtexErrorKind::Syntax, "unterminated entry");
            if (peek() == ',') {
                advance();
                continue;
            }
            if (peek() == '}') {
                advance();
                return entry;
            }
            if (peek() == '#') {
                fail(BibtexErrorKind::Syntax, "string concatenation with '#' is not supported");
            }
            fail(BibtexErrorKind::Syntax, "expected ',' or '}' after field value");
        }
    }

    std::pair<std::string, std::string> parse_field() {
        std::string name;
        while (!eof() && is_name_char(peek())) {
            name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(peek()))));
            advance();
        }
        if (name.empty()) fail(BibtexErrorKind::Syntax, "expected a field name");
        skip_ws();
        if (eof() || peek() != '=') fail(BibtexErrorKind::Syntax, "expected '=' after field name");
        advance();
        skip_ws();
        if (eof()) fail(BibtexErrorKind::Syntax, "missing field value");
        return {std::move(name), parse_value()};
    }

    std::string parse_value() {
        const char c = peek();
        if (c == '{') return parse_braced_value();
        if (c == '"') return parse_quoted_value();
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::string value;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                value.push_back(peek());
                advance();
            }
            return value;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            fail(BibtexErrorKind::UnsupportedMacro,
                 "macro references are not supported as field values");
        }
        fail(BibtexErrorKind::Syntax, "expected '{', '\"' or a number as field value");
    }

    // Outer braces are stripped, nested ones kept verbatim.
    std::string parse_braced_value() {
        const int open_line = line_;
        const int open_col = col_;
        advance();  // consume '{'
        std::string value;
        int depth = 1;
        while (!eof()) {
            const char c = peek();
            if (c == '{') ++depth;
            if (c == '}') {
                --depth;
                if (depth == 0) {
                    advance();
                    return value;
                }
            }
            value.push_back(c);
            advance();
        }
        fail_at(BibtexErrorKind::UnbalancedBraces, open_line, open_col,
                "unbalanced braces in field value");
    }

    // A quote only terminates the value at brace depth zero.
    std::string parse_quoted_value() {
        const int open_line = line_;
        const int open_col = col_;
        advance();  // consume '"'
        std::string value;
        int depth = 0;
        while (!eof()) {
            const char c = peek();
            if (c == '{') ++depth;
            if (c == '}') {
                if (depth == 0) {
                    fail(BibtexErrorKind::UnbalancedBraces, "unbalanced '}' in quoted value");
                }
                --depth;
            }
            if (c == '"' && depth == 0) {
                advance();
                return value;
            }
            value.push_back(c);
            advance();
        }
        fail_at(BibtexErrorKind::Syntax, open_line, open_col, "unterminated quoted value");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

std::vector<BibEntry> parse_bibtex(std::string_view text) { return Parser(text).run(); }

}  // namespace slrsim

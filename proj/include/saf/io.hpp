#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "saf/error.hpp"
#include "saf/framework.hpp"

namespace saf::io {

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownFactType : public ParseError {
public:
    UnknownFactType(std::size_t line, std::size_t column, std::string functor)
        : ParseError(line, column, "unknown fact type '" + functor + "'"), functor_(std::move(functor)) {}
    const std::string& functor() const noexcept { return functor_; }

private:
    std::string functor_;
};

enum class FactKind { arg, att, sub };

struct Fact {
    FactKind kind = FactKind::arg;
    std::string first;
    std::string second;  ///< empty for arg facts
    std::size_t line = 0;
    std::size_t column = 0;
};

struct SafDocument {
    std::string source;
    std::vector<Fact> facts;
};

/// Parses `arg(x).`, `att(x,y).` and `sub(x,y).` facts. `%` starts a
/// comment; whitespace between tokens is ignored.
SafDocument parse(std::string_view text, std::string source = "<inline>");
SafDocument parse_file(const std::filesystem::path& path);

/// Runs framework validation over the parsed facts.
Saf to_saf(const SafDocument& doc);
Saf load_saf(const std::filesystem::path& path);

/// Canonical text: arg facts, then att, then sub, each in lexicographic order.
std::string serialize(const Saf& saf);
/// Attack-only document (arg and att facts).
std::string serialize(const DungAF& af);

}  // namespace saf::io

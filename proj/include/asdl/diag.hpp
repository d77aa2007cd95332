#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace asdl {

/// Position of a token or AST node in its source text. Lines and columns
/// are 1-based; offset is the byte index from the start of the input.
struct SourceSpan {
    int line = 1;
    int column = 1;
    std::size_t offset = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

std::string to_string(const SourceSpan& span);

/// Lexical or syntactic error. The first error aborts the parse; there is
/// no recovery.
class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, std::string message,
               std::vector<std::string> expected = {});

    const SourceSpan& span() const { return span_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    SourceSpan span_;
    std::vector<std::string> expected_;
};

/// A byte outside the token alphabet.
class IllegalCharacterError : public ParseError {
public:
    IllegalCharacterError(SourceSpan span, char byte);

    char byte() const { return byte_; }

private:
    char byte_;
};

enum class CheckErrc {
    UndefinedType,
    DuplicateTypeDef,
    DuplicateConstructor,
    DuplicateFieldName,
    AttributesOnProduct,
    UnknownType,
    UnknownConstructor,
};

/// Semantic error raised while resolving and checking a parsed module.
class CheckError : public std::runtime_error {
public:
    CheckError(CheckErrc code, std::string name, SourceSpan span,
               std::string message);

    CheckErrc code() const { return code_; }
    const std::string& name() const { return name_; }
    const SourceSpan& span() const { return span_; }

private:
    CheckErrc code_;
    std::string name_;
    SourceSpan span_;
};

}  // namespace asdl

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <asdl/diag.hpp>

namespace asdl {

enum class TokenKind {
    Module,
    Attributes,
    LowerIdent,  // type and field names
    UpperIdent,  // constructor names
    LBrace,
    RBrace,
    LParen,
    RParen,
    Equals,
    Pipe,
    Comma,
    Star,
    Question,
    EndOfFile,
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;
    SourceSpan span;
};

/// Splits specification text into tokens. `--` starts a comment that runs
/// to end of line. The final token is always EndOfFile.
/// Throws IllegalCharacterError for bytes outside the token alphabet.
std::vector<Token> tokenize(std::string_view text);

}  // namespace asdl

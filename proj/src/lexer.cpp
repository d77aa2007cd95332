#include <asdl/lexer.hpp>

#include <cctype>

namespace asdl {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::Module: return "'module'";
    case TokenKind::Attributes: return "'attributes'";
    case TokenKind::LowerIdent: return "name";
    case TokenKind::UpperIdent: return "constructor name";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::Comma: return "','";
    case TokenKind::Star: return "'*'";
    case TokenKind::Question: return "'?'";
    case TokenKind::EndOfFile: return "end of input";
    }
    return "?";
}

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    auto here = [&] { return SourceSpan{line, column, i}; };
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        SourceSpan span = here();
        if (is_ident_start(c)) {
            std::size_t start = i;
            while (i < text.size() && is_ident_char(text[i])) advance(1);
            std::string word(text.substr(start, i - start));
            TokenKind kind;
            if (word == "module") {
                kind = TokenKind::Module;
            } else if (word == "attributes") {
                kind = TokenKind::Attributes;
            } else if (std::isupper(static_cast<unsigned char>(word[0]))) {
                kind = TokenKind::UpperIdent;
            } else {
                kind = TokenKind::LowerIdent;
            }
            tokens.push_back({kind, std::move(word), span});
            continue;
        }
        TokenKind kind;
        switch (c) {
        case '{': kind = TokenKind::LBrace; break;
        case '}': kind = TokenKind::RBrace; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case '=': kind = TokenKind::Equals; break;
        case '|': kind = TokenKind::Pipe; break;
        case ',': kind = TokenKind::Comma; break;
        case '*': kind = TokenKind::Star; break;
        case '?': kind = TokenKind::Question; break;
        default:
            throw IllegalCharacterError(span, c);
        }
        tokens.push_back({kind, std::string(1, c), span});
        advance(1);
    }
    tokens.push_back({TokenKind::EndOfFile, "", here()});
    return tokens;
}

}  // namespace asdl

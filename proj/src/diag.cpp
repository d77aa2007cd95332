#include <asdl/diag.hpp>

namespace asdl {

std::string to_string(const SourceSpan& span) {
    return std::to_string(span.line) + ":" + std::to_string(span.column);
}

namespace {

std::string with_span(const SourceSpan& span, const std::string& message) {
    return to_string(span) + ": " + message;
}

}  // namespace

ParseError::ParseError(SourceSpan span, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error(with_span(span, message)),
      span_(span),
      expected_(std::move(expected)) {}

IllegalCharacterError::IllegalCharacterError(SourceSpan span, char byte)
    : ParseError(span, "illegal character '" + std::string(1, byte) + "'"),
      byte_(byte) {}

CheckError::CheckError(CheckErrc code, std::string name, SourceSpan span,
                       std::string message)
    : std::runtime_error(with_span(span, message)),
      code_(code),
      name_(std::move(name)),
      span_(span) {}

}  // namespace asdl

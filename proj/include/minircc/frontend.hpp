#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <asdl/value.hpp>
#include <minircc/metrics.hpp>

namespace minircc {

/// Front-end diagnostic: undeclared names, redeclarations, type mismatches.
class FrontendError : public std::runtime_error {
public:
    FrontendError(int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Compiles mini-language source to one rcc `program` value. Declared
/// variables become locals of a synthetic `main`; statements become node
/// forests; repeated rvalue reads of a variable within one statement go
/// through a CSE temporary.
asdl::Value compile_to_value(std::string_view source, const Metrics& metrics);

/// compile_to_value serialized as one pickle instance.
std::vector<std::uint8_t> compile(std::string_view source,
                                  const Metrics& metrics);

/// Front end and back end composed in-process, with no serialization in
/// between. Byte-identical to pass2(compile(source, metrics)).
std::string monolithic(std::string_view source, const Metrics& metrics);

}  // namespace minircc

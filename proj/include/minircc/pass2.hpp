#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <asdl/value.hpp>

namespace minircc {

/// A uid reference with no defining item.
class DanglingUidError : public std::runtime_error {
public:
    explicit DanglingUidError(long long uid);

    long long uid() const { return uid_; }

private:
    long long uid_;
};

/// Replays a reconstructed `program`: one output line per interface call
/// and per node in post-order, operands before operators. progbeg/progend
/// and the blockbeg/blockend arguments are synthesized here.
std::string emit_assembly(const asdl::Value& program);

/// Reads the first instance of `program` from the pickle (anything
/// appended after it is ignored) and emits its assembly.
std::string pass2(std::span<const std::uint8_t> pickle_bytes);

struct LintIssue {
    std::string message;
};

/// Checks uid closure over a program: every referenced uid is defined by
/// exactly one item, no duplicate definitions, and every Function's caller
/// and callee lists pair up name by name.
std::vector<LintIssue> lint_uids(const asdl::Value& program);

}  // namespace minircc

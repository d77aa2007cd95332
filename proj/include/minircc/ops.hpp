#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace minircc {

/// The 33 generic tree operators, coded 1..33 in table row order.
enum class Op {
    CNST = 1, ARG, ASGN, INDIR, CVF, CVI, CVP, CVU,
    NEG, CALL, RET, ADDRG, ADDRF, ADDRL, ADD, SUB,
    LSH, MOD, RSH, BAND, BCOM, BOR, BXOR, DIV,
    MUL, EQ, GE, GT, LE, LT, NE, JUMP, LABEL,
};

inline constexpr int kOpCount = 33;

std::string_view op_name(Op op);
std::optional<Op> op_by_name(std::string_view name);
std::string op_lower(Op op);

/// Operand-type suffixes specializing a generic operator.
enum class Suffix { F = 0, I = 1, U = 2, P = 3, B = 4, V = 5 };

inline constexpr int kSuffixCount = 6;

char suffix_letter(Suffix s);  // 'F' 'I' 'U' 'P' 'B' 'V'
std::optional<Suffix> suffix_by_letter(char letter);

}  // namespace minircc

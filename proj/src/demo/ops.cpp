#include <minircc/ops.hpp>

#include <array>
#include <cctype>

namespace minircc {

namespace {

constexpr std::array<std::string_view, kOpCount> kOpNames = {
    "CNST", "ARG",  "ASGN", "INDIR", "CVF",  "CVI",  "CVP",  "CVU",
    "NEG",  "CALL", "RET",  "ADDRG", "ADDRF", "ADDRL", "ADD",  "SUB",
    "LSH",  "MOD",  "RSH",  "BAND",  "BCOM", "BOR",  "BXOR", "DIV",
    "MUL",  "EQ",   "GE",   "GT",    "LE",   "LT",   "NE",   "JUMP",
    "LABEL",
};

constexpr std::array<char, kSuffixCount> kSuffixLetters = {'F', 'I', 'U',
                                                           'P', 'B', 'V'};

}  // namespace

std::string_view op_name(Op op) {
    return kOpNames[static_cast<int>(op) - 1];
}

std::optional<Op> op_by_name(std::string_view name) {
    for (int i = 0; i < kOpCount; ++i) {
        if (kOpNames[i] == name) return static_cast<Op>(i + 1);
    }
    return std::nullopt;
}

std::string op_lower(Op op) {
    std::string out(op_name(op));
    for (char& c : out) c = static_cast<char>(std::tolower(c));
    return out;
}

char suffix_letter(Suffix s) { return kSuffixLetters[static_cast<int>(s)]; }

std::optional<Suffix> suffix_by_letter(char letter) {
    char up = static_cast<char>(std::toupper(letter));
    for (int i = 0; i < kSuffixCount; ++i) {
        if (kSuffixLetters[i] == up) return static_cast<Suffix>(i);
    }
    return std::nullopt;
}

}  // namespace minircc

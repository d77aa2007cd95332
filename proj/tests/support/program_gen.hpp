#pragma once

#include <cstdint>
#include <string>

namespace testsupport {

/// Seeded random well-formed mini-language program: a few int and char*
/// declarations followed by assignments, pointer stores, and prints.
std::string random_mini_program(std::uint64_t seed);

}  // namespace testsupport

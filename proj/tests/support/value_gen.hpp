#pragma once

#include <random>
#include <string_view>

#include <asdl/value.hpp>

namespace testsupport {

struct GenOptions {
    int max_depth = 12;  // recursion bound; generation always terminates
};

/// Seeded random conforming value of the named type. Recursive sums decay
/// toward ground constructors as the depth budget runs out.
asdl::Value random_value(const asdl::SchemaEnv& env, std::string_view type,
                         std::mt19937_64& rng, const GenOptions& opts = {});

}  // namespace testsupport

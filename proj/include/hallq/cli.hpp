#pragma once

// Batch command-line surface. Subcommands: classify, product, delta-check,
// serre, commute, geom, grassmann, interpolate, accept. Configuration
// comes from an optional JSON document plus flags (flags win); output is
// byte-deterministic for a fixed configuration and never reads the
// environment. Exit codes: 0 success, 1 failed check, 2 configuration
// error, 3 budget exceeded, 4 interpolation validation failure.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hallq/hall.hpp"

namespace hallq::cli {

struct JobConfig {
    Quiver quiver = quiver_preset("a2");
    std::string quiver_name = "a2";
    std::vector<long long> primes{2};
    int n = 1;
    TwistMode twist = TwistMode::half;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 123456789;
    std::string format = "text";  // "text" or "json"
};

// argv-style arguments, without the program name
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hallq::cli

#pragma once

#include <cstdint>

#include "fcx/io.hpp"

namespace fcx::selftest {

// Runs the fixture corpus (F1..F5) and the property suites at reduced
// counts. Deterministic for a fixed seed; the report is byte-stable.
struct Result {
    bool pass = false;
    io::Json report;
};

Result run(std::uint64_t seed);

}  // namespace fcx::selftest

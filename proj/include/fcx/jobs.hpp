#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace fcx::jobs {

struct JobOptions {
    std::optional<int> precision;       // overrides the ring precision
    std::optional<int> window;          // adlv window (default 1)
    std::optional<std::uint64_t> seed;  // selftest seed (default 1)
};

struct JobResult {
    int exit_code = 0;  // 0 ok, 1 parse/io, 2 domain, 3 precision
    std::string report_json;
};

// Runs one CLI command against the one-schema input document and renders
// the machine-readable report. All failures are mapped onto the documented
// exit statuses with an {"error", "detail"} report.
JobResult run_job(const std::string& command, const std::string& input_json,
                  const JobOptions& opts = {});

bool is_known_command(const std::string& command);

}  // namespace fcx::jobs

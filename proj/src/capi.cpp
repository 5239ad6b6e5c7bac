#include "fcrystal.h"

#include <string>

#include "json.hpp"

#include "fcx/jobs.hpp"
#include "fcx/version.hpp"

struct fcx_job {
    std::string command;
    std::string input = "{}";
    fcx::jobs::JobOptions options;
    bool ran = false;
    int exit_code = 0;
    std::string report;
    std::string error_name;
};

extern "C" {

const char* fcx_version(void) { return fcx::kVersion; }

int fcx_command_known(const char* command) {
    return command && fcx::jobs::is_known_command(command) ? 1 : 0;
}

fcx_job* fcx_job_new(const char* command) {
    if (!command) return nullptr;
    auto* job = new (std::nothrow) fcx_job;
    if (!job) return nullptr;
    job->command = command;
    return job;
}

void fcx_job_free(fcx_job* job) { delete job; }

fcx_status fcx_job_set_input(fcx_job* job, const char* json_text) {
    if (!job || !json_text) return FCX_ERR_USAGE;
    job->input = json_text;
    return FCX_OK;
}

fcx_status fcx_job_set_option(fcx_job* job, const char* key, long long value) {
    if (!job || !key) return FCX_ERR_USAGE;
    const std::string k = key;
    if (k == "precision")
        job->options.precision = (int)value;
    else if (k == "window")
        job->options.window = (int)value;
    else if (k == "seed")
        job->options.seed = (unsigned long long)value;
    else
        return FCX_ERR_USAGE;
    return FCX_OK;
}

fcx_status fcx_job_run(fcx_job* job) {
    if (!job) return FCX_ERR_USAGE;
    fcx::jobs::JobResult res = fcx::jobs::run_job(job->command, job->input, job->options);
    job->ran = true;
    job->exit_code = res.exit_code;
    job->report = std::move(res.report_json);
    job->error_name.clear();
    if (job->exit_code != 0) {
        try {
            auto doc = nlohmann::json::parse(job->report);
            if (doc.contains("error")) job->error_name = doc.at("error").get<std::string>();
        } catch (...) {
            job->error_name = "InternalError";
        }
    }
    switch (job->exit_code) {
        case 0: return FCX_OK;
        case 1: return FCX_ERR_IO;
        case 3: return FCX_ERR_PRECISION;
        default: return FCX_ERR_DOMAIN;
    }
}

const char* fcx_job_report(const fcx_job* job) { return job ? job->report.c_str() : ""; }

int fcx_job_exit_code(const fcx_job* job) { return job ? job->exit_code : FCX_ERR_USAGE; }

const char* fcx_job_error(const fcx_job* job) { return job ? job->error_name.c_str() : ""; }

}  // extern "C"

// fcx: command-line front end for the fcrystal library. Talks to the core
// exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fcrystal.h"

namespace {

bool read_file(const std::string& path, std::string& out, std::string& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err = "cannot open input file: " + path;
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

// write-temp-rename so partially written reports never appear
bool write_file_atomic(const std::string& path, const std::string& data, std::string& err) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            err = "cannot open output file: " + tmp;
            return false;
        }
        out << data;
        out.flush();
        if (!out) {
            err = "short write to " + tmp;
            return false;
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        err = "cannot rename " + tmp + " to " + path;
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fcx: exact F-crystal and F-isocrystal computations"};
    app.set_version_flag("--version", std::string(fcx_version()));

    std::string command;
    std::string input_path;
    std::string output_path;
    std::string format = "json";
    long long precision = -1;
    long long window = -1;
    long long seed = -1;

    app.add_option("command", command,
                   "one of: newton hodge kottwitz mazur el-type mu-ordinary bset hn-check "
                   "hn-levis hn-decompose el-realize adlv adlv-hn deform selftest")
        ->required();
    app.add_option("--input", input_path, "input JSON file");
    app.add_option("--output", output_path, "report path (default: stdout)");
    app.add_option("--precision", precision, "override the ring precision exponent N");
    app.add_option("--window", window, "lattice window bound c for adlv commands");
    app.add_option("--seed", seed, "seed for the selftest suites");
    app.add_option("--format", format, "report format (json)");

    CLI11_PARSE(app, argc, argv);

    if (format != "json") {
        std::cerr << "fcx: unsupported format \"" << format << "\"\n";
        return 1;
    }
    if (!fcx_command_known(command.c_str())) {
        std::cerr << "fcx: unknown command \"" << command << "\"\n";
        return 1;
    }

    std::string input = "{}";
    if (!input_path.empty()) {
        std::string err;
        if (!read_file(input_path, input, err)) {
            std::cerr << "fcx: " << err << "\n";
            return 1;
        }
    } else if (command != "selftest") {
        std::cerr << "fcx: command \"" << command << "\" requires --input\n";
        return 1;
    }

    fcx_job* job = fcx_job_new(command.c_str());
    if (!job) {
        std::cerr << "fcx: out of memory\n";
        return 1;
    }
    fcx_job_set_input(job, input.c_str());
    if (precision >= 0) fcx_job_set_option(job, "precision", precision);
    if (window >= 0) fcx_job_set_option(job, "window", window);
    if (seed >= 0) fcx_job_set_option(job, "seed", seed);

    fcx_job_run(job);
    const int exit_code = fcx_job_exit_code(job);
    const std::string report = fcx_job_report(job);

    if (exit_code != 0) std::cerr << "fcx: " << command << " failed: " << fcx_job_error(job) << "\n";

    if (output_path.empty()) {
        std::cout << report;
    } else {
        std::string err;
        if (!write_file_atomic(output_path, report, err)) {
            std::cerr << "fcx: " << err << "\n";
            fcx_job_free(job);
            return 1;
        }
    }
    fcx_job_free(job);
    return exit_code;
}

/* C interface to the fcrystal library: exact computations with F-crystals
 * and F-isocrystals over truncated Witt vectors.
 *
 * Usage: create a job for a command, feed it the JSON input document,
 * optionally set integer options ("precision", "window", "seed"), run it,
 * and read the JSON report. All strings returned by the library stay owned
 * by the job and remain valid until fcx_job_free.
 */
#ifndef FCRYSTAL_H
#define FCRYSTAL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define FCX_API __declspec(dllexport)
#else
#define FCX_API __attribute__((visibility("default")))
#endif

typedef enum fcx_status {
    FCX_OK = 0,
    FCX_ERR_IO = 1,        /* malformed input or unknown command/field */
    FCX_ERR_DOMAIN = 2,    /* mathematically invalid request */
    FCX_ERR_PRECISION = 3, /* p-adic precision budget exhausted */
    FCX_ERR_USAGE = 4      /* null handle or bad argument */
} fcx_status;

typedef struct fcx_job fcx_job;

/* Library version string, e.g. "1.0.0". Static storage. */
FCX_API const char* fcx_version(void);

/* 1 when the command name is recognized. */
FCX_API int fcx_command_known(const char* command);

FCX_API fcx_job* fcx_job_new(const char* command);
FCX_API void fcx_job_free(fcx_job* job);

/* The JSON input document (one schema for all commands). */
FCX_API fcx_status fcx_job_set_input(fcx_job* job, const char* json_text);

/* Integer options: "precision" (ring override), "window" (adlv), "seed". */
FCX_API fcx_status fcx_job_set_option(fcx_job* job, const char* key, long long value);

/* Runs the job. The returned status matches fcx_job_exit_code. */
FCX_API fcx_status fcx_job_run(fcx_job* job);

/* The JSON report (also populated on errors, as {"error", "detail"}). */
FCX_API const char* fcx_job_report(const fcx_job* job);

/* CLI-convention exit code: 0 ok, 1 parse/io, 2 domain, 3 precision. */
FCX_API int fcx_job_exit_code(const fcx_job* job);

/* Machine-readable error name ("NotHNReducible", ...); empty on success. */
FCX_API const char* fcx_job_error(const fcx_job* job);

#ifdef __cplusplus
}
#endif

#endif /* FCRYSTAL_H */

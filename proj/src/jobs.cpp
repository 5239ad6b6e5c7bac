#include "fcx/jobs.hpp"

#include <algorithm>
#include <set>

#include "fcx/adlv.hpp"
#include "fcx/deform.hpp"
#include "fcx/errors.hpp"
#include "fcx/io.hpp"
#include "fcx/selftest.hpp"
#include "fcx/version.hpp"

namespace fcx::jobs {

namespace {

using io::Json;

const std::set<std::string> kCommands = {
    "newton",  "hodge",    "kottwitz",     "mazur",      "el-type",
    "mu-ordinary", "bset", "hn-check",     "hn-levis",   "hn-decompose",
    "el-realize",  "adlv", "adlv-hn",      "deform",     "selftest"};

Json envelope(const std::string& command) {
    Json j = Json::object();
    j["version"] = kVersion;
    j["command"] = command;
    return j;
}

// lower-bound estimate of the precision a computation actually consumed
int polygon_depth(const ConvexPolygon& p, int s) {
    Rational rise = p.total_rise() * Rational(s);
    return (int)((rise.num() + rise.den() - 1) / rise.den());
}

int run_command(const std::string& command, const std::string& input_json,
                const JobOptions& opts, Json& report) {
    report = envelope(command);

    if (command == "selftest") {
        auto res = selftest::run(opts.seed.value_or(1));
        for (auto it = res.report.begin(); it != res.report.end(); ++it)
            report[it.key()] = it.value();
        return res.pass ? 0 : 2;
    }

    io::ParsedInput in = io::parse_input(input_json, opts.precision);
    if (in.ring) report["ring"] = io::ring_to_json(*in.ring);

    if (command == "newton") {
        FCrystal X = in.require_crystal();
        ConvexPolygon nu = newton_polygon(X);
        report["newton"] = io::polygon_to_json(nu);
        if (in.el_m) {
            ELStructure S = in.el_or_trivial();
            report["el_newton"] = io::polygon_to_json(el_newton(S));
        }
        report["precision_needed"] = polygon_depth(nu, X.ring.s()) + 1;
        return 0;
    }
    if (command == "hodge") {
        FCrystal X = in.require_crystal();
        ConvexPolygon h = hodge_polygon(X);
        report["hodge"] = io::polygon_to_json(h);
        if (in.el_m) {
            ELStructure S = in.el_or_trivial();
            report["sigma_hodge"] = io::polygon_to_json(el_sigma_hodge_of(S));
        }
        report["precision_needed"] = polygon_depth(h, 1) + 1;
        return 0;
    }
    if (command == "kottwitz") {
        FCrystal X = in.require_crystal();
        KottwitzPoint k = kottwitz_point(X);
        report["kottwitz"] = k.components[0];
        if (in.el_m && *in.el_m > 1) {
            Rational normalized(k.components[0], *in.el_m);
            report["kottwitz_normalized"] = io::rational_to_string(normalized);
        }
        report["precision_needed"] = (int)k.components[0] + 1;
        return 0;
    }
    if (command == "mazur") {
        FCrystal X = in.require_crystal();
        ConvexPolygon nu = newton_polygon(X), h = hodge_polygon(X);
        report["newton"] = io::polygon_to_json(nu);
        report["hodge"] = io::polygon_to_json(h);
        report["lies_above"] = lies_above(nu, h);
        report["rise_equal"] = nu.total_rise() == h.total_rise();
        report["precision_needed"] = polygon_depth(nu, X.ring.s()) + 1;
        return 0;
    }
    if (command == "el-type") {
        ELStructure S = in.el_or_trivial();
        ELType t = el_type(S);
        report["d"] = t.d;
        report["f"] = t.f;
        return 0;
    }
    if (command == "mu-ordinary") {
        ELStructure S = in.el_or_trivial();
        ConvexPolygon nu = el_newton(S), mb = el_sigma_hodge_of(S);
        report["mu_ordinary"] = nu == mb;
        report["el_newton"] = io::polygon_to_json(nu);
        report["sigma_hodge"] = io::polygon_to_json(mb);
        return 0;
    }
    if (command == "bset") {
        ELStructure S = in.el_or_trivial();
        ELType t = el_type(S);
        report["d"] = t.d;
        report["f"] = t.f;
        report["mu_bar"] = io::polygon_to_json(el_sigma_hodge(t));
        Json arr = Json::array();
        for (const auto& p : b_set(t)) arr.push_back(io::polygon_to_json(p));
        report["b_set"] = std::move(arr);
        return 0;
    }
    if (command == "hn-check") {
        ELStructure S = in.el_or_trivial();
        LeviPartition P = in.require_partition();
        ConvexPolygon nu = el_newton(S), mb = el_sigma_hodge_of(S);
        report["nu"] = io::polygon_to_json(nu);
        report["mu_bar"] = io::polygon_to_json(mb);
        report["hn_reducible"] = hn_reducible(nu, mb, P);
        return 0;
    }
    if (command == "hn-levis") {
        ELStructure S = in.el_or_trivial();
        ConvexPolygon nu = el_newton(S), mb = el_sigma_hodge_of(S);
        report["nu"] = io::polygon_to_json(nu);
        report["mu_bar"] = io::polygon_to_json(mb);
        Json bps = Json::array();
        for (const auto& [x, y] : break_points(nu))
            bps.push_back(Json::array({x, io::rational_to_string(y)}));
        report["nu_break_points"] = std::move(bps);
        report["contact_break_points"] = contact_break_points(nu, mb);
        auto P = hn_levis(nu, mb);
        report["partition"] = P ? Json(P->sizes) : Json(nullptr);
        return 0;
    }
    if (command == "hn-decompose") {
        ELStructure S = in.el_or_trivial();
        LeviPartition P = in.require_partition();
        HNReport rep = hn_decompose(S, P);
        report["partition"] = rep.partition.sizes;
        Json factors = Json::array();
        for (const auto& f : rep.factors) {
            Json fj = Json::object();
            fj["nu"] = io::polygon_to_json(f.nu);
            fj["mu_bar"] = io::polygon_to_json(f.mu_bar);
            fj["slope"] = io::rational_to_string(f.nu.slope(0));
            fj["height"] = f.nu.height();
            fj["crystal"] = io::crystal_to_json(f.structure.crystal, false);
            fj["el"] = io::el_to_json(f.structure);
            fj["type"] = io::type_to_json(f.type);
            factors.push_back(std::move(fj));
        }
        report["factors"] = std::move(factors);
        report["isogeny_denominator"] = rep.isogeny_denominator;
        report["effective_precision"] = rep.effective_precision;
        return 0;
    }
    if (command == "el-realize") {
        if (!in.weights || !in.sigma_action)
            throw ParseError("el-realize requires \"weights\" and \"sigma_action\"");
        auto factors = el_realization(*in.weights, *in.sigma_action);
        Json arr = Json::array();
        for (const auto& f : factors) {
            Json fj = Json::object();
            fj["m"] = f.m;
            fj["n"] = f.n;
            arr.push_back(std::move(fj));
        }
        report["factors"] = std::move(arr);
        return 0;
    }
    if (command == "adlv") {
        FCrystal X = in.require_crystal();
        ConvexPolygon mu = in.require_mu();
        const int c = opts.window.value_or(1);
        ADLVOptions aopts;
        if (in.el_m && *in.el_m > 1) aopts.colors = *in.el_grading;
        ADLVWindowResult res = adlv_enumerate(X, mu, c, aopts);
        report["window"] = res.window;
        report["count"] = (long long)res.classes.size();
        Json classes = Json::array();
        for (const auto& cls : res.classes) classes.push_back(io::lattice_to_json(cls));
        report["classes"] = std::move(classes);
        report["complete_in_window"] = res.complete_in_window;
        return 0;
    }
    if (command == "adlv-hn") {
        ELStructure S = in.el_or_trivial();
        LeviPartition P = in.require_partition();
        ConvexPolygon mu = in.require_mu();
        const int c = opts.window.value_or(1);
        HNCompareResult cmp = adlv_hn_compare(S, P, mu, c);
        report["window"] = cmp.window;
        report["count_G"] = cmp.count_G;
        report["count_M"] = cmp.count_M;
        report["equal"] = cmp.equal;
        return 0;
    }
    if (command == "deform") {
        ELStructure S = in.el_or_trivial();
        ConvexPolygon nu = el_newton(S), mb = el_sigma_hodge_of(S);
        if (!(nu == mb))
            throw DomainError("NotMuOrdinary",
                              "deformation numerics require a mu-ordinary structure");
        ELType full = el_type(S);
        report["defspace_dim"] = unipotent_dim(full);
        auto P = hn_levis(nu, mb);
        std::vector<ELType> factor_types;
        if (!P) {
            factor_types.push_back(full);  // isoclinic: a single rigid factor
        } else {
            HNReport rep = hn_decompose(S, *P);
            for (const auto& f : rep.factors) factor_types.push_back(f.type);
        }
        Json rigid = Json::array();
        for (const auto& t : factor_types) rigid.push_back(is_rigid_type(t));
        report["rigid_factors"] = std::move(rigid);
        if (factor_types.size() == 2) {
            TwoSlopeDeformation d = two_slope_report(factor_types[0], factor_types[1]);
            report["f_prime"] = d.f_prime;
            report["d_prime_max"] = d.d_prime_max;
            if (d.defspace_dim != unipotent_dim(full))
                throw DomainError("DecompositionInvariant",
                                  "dimension from factor types disagrees with the combined type");
        } else {
            report["f_prime"] = Json(nullptr);
            report["d_prime_max"] = Json(nullptr);
        }
        return 0;
    }
    throw ParseError("unknown command \"" + command + "\"");
}

}  // namespace

bool is_known_command(const std::string& command) { return kCommands.count(command) > 0; }

JobResult run_job(const std::string& command, const std::string& input_json,
                  const JobOptions& opts) {
    JobResult out;
    Json report;
    try {
        out.exit_code = run_command(command, input_json, opts, report);
    } catch (const Error& e) {
        report = envelope(command);
        report["error"] = e.name();
        report["detail"] = e.what();
        switch (e.error_class()) {
            case ErrorClass::Parse: out.exit_code = 1; break;
            case ErrorClass::Precision: out.exit_code = 3; break;
            default: out.exit_code = 2; break;
        }
    } catch (const std::exception& e) {
        report = envelope(command);
        report["error"] = "InternalError";
        report["detail"] = e.what();
        out.exit_code = 2;
    }
    out.report_json = io::dump_report(report);
    return out;
}

}  // namespace fcx::jobs

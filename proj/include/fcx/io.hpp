#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fcx/adlv.hpp"
#include "fcx/eltype.hpp"
#include "fcx/hodge_newton.hpp"
#include "fcx/isocrystal.hpp"
#include "fcx/polygon.hpp"

namespace fcx::io {

using Json = nlohmann::ordered_json;

// One schema for every command. Unknown fields are rejected so typos fail
// loudly; the only tolerated extras are the metadata keys reports attach to
// crystals, which lets report components be fed straight back in.
struct ParsedInput {
    std::optional<WittRing> ring;
    std::optional<WittMatrix> matrix;
    bool crystal_flag = false;
    int hodge_bound = 1;
    std::optional<int> el_m;
    std::optional<std::vector<int>> el_grading;
    std::optional<LeviPartition> partition;
    std::optional<ConvexPolygon> mu;
    std::optional<std::vector<std::pair<int, int>>> weights;
    std::optional<std::vector<int>> sigma_action;

    FCrystal require_crystal() const;
    // The declared EL structure, or the trivial one (m = 1) when absent.
    ELStructure el_or_trivial() const;
    LeviPartition require_partition() const;
    ConvexPolygon require_mu() const;
};

ParsedInput parse_input(const std::string& text, std::optional<int> precision_override = {});

Json ring_to_json(const WittRing& r);
Json elem_to_json(const WittElem& x);
Json matrix_to_json(const WittMatrix& m);
std::string rational_to_string(const Rational& r);
Json polygon_to_json(const ConvexPolygon& p);
Json crystal_to_json(const FCrystal& X, bool crystal_flag);
Json el_to_json(const ELStructure& S);
Json type_to_json(const ELType& t);
Json lattice_to_json(const LatticeClass& L);

// Canonical report text: 2-space indented, trailing newline. Byte identical
// across runs for identical content.
std::string dump_report(const Json& j);

}  // namespace fcx::io

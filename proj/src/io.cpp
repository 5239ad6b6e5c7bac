#include "fcx/io.hpp"

#include <algorithm>

#include "fcx/errors.hpp"

namespace fcx::io {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw ParseError("field \"" + field + "\": " + why);
}

long long get_int(const Json& j, const std::string& field) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        bad_field(field, "expected an integer");
    return j.get<long long>();
}

std::uint64_t parse_coord(const Json& j, const WittRing& ring, const std::string& field) {
    std::uint64_t pn = ring.p_pow(ring.precision());
    if (j.is_number_unsigned() || j.is_number_integer()) {
        long long v = j.get<long long>();
        long long m = (long long)pn;
        long long r = v % m;
        if (r < 0) r += m;
        return (std::uint64_t)r;
    }
    if (!j.is_string()) bad_field(field, "expected a decimal string");
    const std::string s = j.get<std::string>();
    if (s.empty()) bad_field(field, "empty coordinate");
    bool neg = s[0] == '-';
    std::size_t at = neg ? 1 : 0;
    if (at >= s.size()) bad_field(field, "malformed integer");
    unsigned __int128 acc = 0;
    for (; at < s.size(); ++at) {
        if (s[at] < '0' || s[at] > '9') bad_field(field, "malformed integer \"" + s + "\"");
        acc = acc * 10 + (unsigned)(s[at] - '0');
        acc %= pn;  // keep the accumulator small; reduction is what we want anyway
    }
    std::uint64_t r = (std::uint64_t)acc;
    if (neg && r != 0) r = pn - r;
    return r;
}

Rational parse_rational(const Json& j, const std::string& field) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rational(j.get<long long>());
    if (!j.is_string()) bad_field(field, "expected an integer or \"num/den\" string");
    const std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        bad_field(field, "malformed rational \"" + s + "\"");
    }
}

void check_known_keys(const Json& obj, const std::vector<std::string>& known,
                      const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw ParseError("unknown field \"" + it.key() + "\" in " + where);
    }
}

WittRing parse_ring(const Json& j, std::optional<int> precision_override) {
    if (!j.is_object()) bad_field("ring", "expected an object");
    check_known_keys(j, {"p", "s", "precision"}, "ring");
    if (!j.contains("p") || !j.contains("s")) bad_field("ring", "requires p and s");
    long long p = get_int(j.at("p"), "ring.p");
    long long s = get_int(j.at("s"), "ring.s");
    long long N = j.contains("precision") ? get_int(j.at("precision"), "ring.precision") : 16;
    if (precision_override) N = *precision_override;
    if (p < 2) bad_field("ring.p", "must be at least 2");
    if (s < 1 || s > 16) bad_field("ring.s", "must be in [1, 16]");
    if (N < 1 || N > 64) bad_field("ring.precision", "must be in [1, 64]");
    return WittRing::create((std::uint64_t)p, (int)s, (int)N);
}

WittMatrix parse_matrix(const Json& j, const WittRing& ring) {
    if (!j.is_array() || j.empty()) bad_field("matrix", "expected a non-empty array of rows");
    const int rows = (int)j.size();
    int cols = -1;
    for (const auto& row : j) {
        if (!row.is_array()) bad_field("matrix", "row is not an array");
        if (cols < 0)
            cols = (int)row.size();
        else if ((int)row.size() != cols)
            bad_field("matrix", "ragged rows");
    }
    WittMatrix m(ring, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const Json& cell = j.at(r).at(c);
            if (!cell.is_array() || (int)cell.size() != ring.s())
                bad_field("matrix", "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                        ") must have " + std::to_string(ring.s()) +
                                        " coordinate strings");
            std::vector<std::uint64_t> coords(ring.s());
            for (int k = 0; k < ring.s(); ++k)
                coords[k] = parse_coord(cell.at(k), ring, "matrix");
            m.set(r, c, WittElem(ring, std::move(coords)));
        }
    return m;
}

}  // namespace

FCrystal ParsedInput::require_crystal() const {
    if (!ring || !matrix) throw ParseError("input requires \"ring\" and \"matrix\"");
    if (matrix->rows() != matrix->cols()) bad_field("matrix", "must be square");
    FCrystal X(*ring, *matrix);
    if (crystal_flag) validate_crystal_flag(X, hodge_bound);
    return X;
}

ELStructure ParsedInput::el_or_trivial() const {
    FCrystal X = require_crystal();
    if (!el_m) return el_validate(X, 1, std::vector<int>(X.n, 0));
    if (!el_grading) throw ParseError("field \"el\": requires a grading");
    return el_validate(X, *el_m, *el_grading);
}

LeviPartition ParsedInput::require_partition() const {
    if (!partition) throw ParseError("input requires \"partition\"");
    return *partition;
}

ConvexPolygon ParsedInput::require_mu() const {
    if (!mu) throw ParseError("input requires \"mu\"");
    return *mu;
}

ParsedInput parse_input(const std::string& text, std::optional<int> precision_override) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("input must be a JSON object");

    // Report components wrap the crystal file under an object-valued
    // "crystal" key; unwrap and tolerate the report metadata siblings.
    Json flat = Json::object();
    if (doc.contains("crystal") && doc.at("crystal").is_object()) {
        check_known_keys(doc,
                         {"crystal", "el", "partition", "mu", "nu", "mu_bar", "type", "slope",
                          "height", "isogeny_denominator"},
                         "input");
        const Json& inner = doc.at("crystal");
        check_known_keys(inner, {"ring", "matrix", "crystal", "hodge_bound"}, "crystal");
        for (auto it = inner.begin(); it != inner.end(); ++it) flat[it.key()] = it.value();
        for (const char* k : {"el", "partition", "mu"})
            if (doc.contains(k)) flat[k] = doc.at(k);
    } else {
        flat = doc;
    }

    check_known_keys(flat,
                     {"ring", "matrix", "crystal", "hodge_bound", "el", "partition", "mu",
                      "weights", "sigma_action"},
                     "input");

    ParsedInput in;
    if (flat.contains("ring")) in.ring = parse_ring(flat.at("ring"), precision_override);
    if (flat.contains("matrix")) {
        if (!in.ring) throw ParseError("field \"matrix\": requires a \"ring\"");
        in.matrix = parse_matrix(flat.at("matrix"), *in.ring);
    }
    if (flat.contains("crystal")) {
        if (!flat.at("crystal").is_boolean()) bad_field("crystal", "expected true or false");
        in.crystal_flag = flat.at("crystal").get<bool>();
    }
    if (flat.contains("hodge_bound")) {
        in.hodge_bound = (int)get_int(flat.at("hodge_bound"), "hodge_bound");
        if (in.hodge_bound < 0) bad_field("hodge_bound", "must be nonnegative");
    }
    if (flat.contains("el")) {
        const Json& el = flat.at("el");
        if (!el.is_object()) bad_field("el", "expected an object");
        check_known_keys(el, {"m", "grading"}, "el");
        if (!el.contains("m") || !el.contains("grading"))
            bad_field("el", "requires m and grading");
        in.el_m = (int)get_int(el.at("m"), "el.m");
        std::vector<int> grading;
        if (!el.at("grading").is_array()) bad_field("el.grading", "expected an array");
        for (const auto& g : el.at("grading")) grading.push_back((int)get_int(g, "el.grading"));
        in.el_grading = std::move(grading);
    }
    if (flat.contains("partition")) {
        if (!flat.at("partition").is_array()) bad_field("partition", "expected an array");
        LeviPartition P;
        for (const auto& x : flat.at("partition"))
            P.sizes.push_back((int)get_int(x, "partition"));
        in.partition = std::move(P);
    }
    if (flat.contains("mu")) {
        if (!flat.at("mu").is_array()) bad_field("mu", "expected an array");
        std::vector<Rational> slopes;
        for (const auto& x : flat.at("mu")) slopes.push_back(parse_rational(x, "mu"));
        in.mu = ConvexPolygon::from_slopes(std::move(slopes));
    }
    if (flat.contains("weights")) {
        if (!flat.at("weights").is_array()) bad_field("weights", "expected an array of pairs");
        std::vector<std::pair<int, int>> w;
        for (const auto& x : flat.at("weights")) {
            if (!x.is_array() || x.size() != 2) bad_field("weights", "entries must be [label, position]");
            w.emplace_back((int)get_int(x.at(0), "weights"), (int)get_int(x.at(1), "weights"));
        }
        in.weights = std::move(w);
    }
    if (flat.contains("sigma_action")) {
        if (!flat.at("sigma_action").is_array()) bad_field("sigma_action", "expected an array");
        std::vector<int> sa;
        for (const auto& x : flat.at("sigma_action")) sa.push_back((int)get_int(x, "sigma_action"));
        in.sigma_action = std::move(sa);
    }
    return in;
}

Json ring_to_json(const WittRing& r) {
    Json j = Json::object();
    j["p"] = r.p();
    j["s"] = r.s();
    j["precision"] = r.precision();
    return j;
}

Json elem_to_json(const WittElem& x) {
    Json j = Json::array();
    for (auto c : x.coords()) j.push_back(std::to_string(c));
    return j;
}

Json matrix_to_json(const WittMatrix& m) {
    Json j = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(m.at(r, c)));
        j.push_back(std::move(row));
    }
    return j;
}

std::string rational_to_string(const Rational& r) { return r.str(); }

Json polygon_to_json(const ConvexPolygon& p) {
    Json j = Json::array();
    for (const auto& s : p.slopes()) j.push_back(rational_to_string(s));
    return j;
}

Json crystal_to_json(const FCrystal& X, bool crystal_flag) {
    Json j = Json::object();
    j["ring"] = ring_to_json(X.ring);
    j["matrix"] = matrix_to_json(X.b);
    j["crystal"] = crystal_flag;
    return j;
}

Json el_to_json(const ELStructure& S) {
    Json j = Json::object();
    j["m"] = S.m;
    j["grading"] = S.grading;
    return j;
}

Json type_to_json(const ELType& t) {
    Json j = Json::object();
    j["d"] = t.d;
    j["f"] = t.f;
    return j;
}

Json lattice_to_json(const LatticeClass& L) {
    Json j = Json::object();
    j["denominator_exp"] = L.denom_exp;
    j["matrix"] = matrix_to_json(L.H);
    return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fcx::io

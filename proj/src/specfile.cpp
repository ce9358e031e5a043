#include "skewcc/specfile.hpp"

#include <fstream>
#include <stdexcept>

#include "skewcc/textio.hpp"

namespace skewcc {

namespace {

using nlohmann::json;

[[noreturn]] void bad_spec(const std::string& what) { throw std::invalid_argument("spec file: " + what); }

std::optional<SingletonClass> parse_marker(const std::string& s) {
    if (s.empty() || s == "none") return std::nullopt;
    if (s == "mds" || s == "MDS") return SingletonClass::kMds;
    if (s == "almost-mds" || s == "almost MDS" || s == "Almost MDS") return SingletonClass::kAlmostMds;
    bad_spec("unknown quantum marker \"" + s + "\"");
}

}  // namespace

FieldSpecPtr parse_field_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("m")) bad_spec("field needs p and m");
    const int p = j.at("p").get<int>();
    const int m = j.at("m").get<int>();
    std::vector<int> modulus;
    if (j.contains("modulus")) {
        modulus = j.at("modulus").get<std::vector<int>>();
    } else if (m == 1) {
        modulus = {0, 1};
    } else {
        bad_spec("extension field needs an explicit modulus");
    }
    if (static_cast<int>(modulus.size()) != m + 1) bad_spec("modulus length must be m + 1");
    return FieldSpec::make(p, modulus);
}

json field_to_json(const FieldSpecPtr& spec) {
    return json{{"p", spec->p()}, {"m", spec->m()}, {"modulus", spec->modulus()}};
}

Matrix parse_matrix_json(const json& j, const FieldSpecPtr& spec) {
    if (!j.is_array() || j.empty()) bad_spec("matrix must be a non-empty array of rows");
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& row : j) {
        std::vector<FieldElement> r;
        for (const auto& cell : row) r.push_back(parse_element(cell.get<std::string>(), spec));
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(spec, rows);
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(format_element(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CodeSpecFile parse_spec_json(const json& j) {
    CodeSpecFile out;
    out.id = j.value("id", std::string("unnamed"));

    const FieldSpecPtr field = parse_field_json(j.at("field"));

    if (!j.contains("ring")) bad_spec("missing ring object");
    const json& ring = j.at("ring");
    const int l = ring.at("l").get<int>();
    auto theta_exps = ring.at("theta_exps").get<std::vector<int>>();

    std::vector<FieldElement> s_comps, a_comps;
    for (const auto& s : ring.at("s")) s_comps.push_back(parse_element(s.get<std::string>(), field));
    for (const auto& s : ring.at("a")) a_comps.push_back(parse_element(s.get<std::string>(), field));
    if (static_cast<int>(s_comps.size()) != l || static_cast<int>(a_comps.size()) != l)
        bad_spec("s and a need one entry per component");

    out.rctx = RingCtx::make(field, l, std::move(theta_exps), RingElement(std::move(s_comps)));
    out.a = RingElement(std::move(a_comps));
    out.n = j.at("n").get<int>();
    if (out.n < 1) bad_spec("n must be positive");

    if (!j.contains("generators")) bad_spec("missing generators");
    const auto gen_strings = j.at("generators").get<std::vector<std::string>>();
    if (static_cast<int>(gen_strings.size()) != l) bad_spec("need one generator per component");
    for (int i = 0; i < l; ++i) {
        const auto coeffs = parse_poly(gen_strings[i], field);
        SkewPoly g = SkewPoly::from_coeffs(out.rctx.component_ctx(i), coeffs);
        if (g.is_zero()) bad_spec("zero generator in component " + std::to_string(i));
        out.gens_as_given.push_back(gen_strings[i]);
        out.gens_rescaled.push_back(!g.is_monic());
        out.gens.push_back(g.monic_scaled());
    }

    if (j.contains("gray")) {
        const json& gj = j.at("gray");
        if (gj.contains("matrix")) {
            out.gray = GrayMapSpec::broadcast(parse_matrix_json(gj.at("matrix"), field), out.n);
        } else if (gj.contains("matrices")) {
            std::vector<Matrix> mats;
            for (const auto& mj : gj.at("matrices")) mats.push_back(parse_matrix_json(mj, field));
            if (static_cast<int>(mats.size()) != out.n) bad_spec("need one Gray matrix per position");
            out.gray = GrayMapSpec::per_position(std::move(mats));
        } else {
            bad_spec("gray needs \"matrix\" or \"matrices\"");
        }
    } else {
        out.gray = GrayMapSpec::identity(field, l, out.n);
    }
    if (out.gray.l() != l) bad_spec("Gray matrix size must equal l");

    if (j.contains("claims")) {
        const json& cj = j.at("claims");
        if (cj.contains("linear")) {
            const json& lj = cj.at("linear");
            out.claims.linear = LinearClaim{lj.at("n").get<int>(), lj.at("k").get<int>(), lj.at("d").get<int>(),
                                            lj.value("remark", std::string())};
        }
        if (cj.contains("dual_containing")) out.claims.dual_containing = cj.at("dual_containing").get<bool>();
        out.claims.construction = cj.value("construction", std::string());
        if (!out.claims.construction.empty() && out.claims.construction != "euclidean" &&
            out.claims.construction != "annihilator")
            bad_spec("unknown construction \"" + out.claims.construction + "\"");
        if (cj.contains("quantum")) {
            const json& qj = cj.at("quantum");
            QuantumClaim qc;
            qc.n = qj.at("n").get<int>();
            qc.k = qj.at("k").get<int>();
            qc.d = qj.at("d").get<int>();
            qc.d_is_lower_bound = qj.value("d_is_lower_bound", false);
            qc.marker = parse_marker(qj.value("marker", std::string()));
            out.claims.quantum = qc;
        }
        out.claims.notes = cj.value("notes", std::string());
    }

    if (out.claims.construction == "annihilator") {
        if (l != 1) bad_spec("annihilator construction is defined for l = 1 only");
        if (!out.rctx.delta_is_zero() || out.rctx.Theta.exps[0] != 0)
            bad_spec("annihilator construction requires theta = Id and delta = 0");
    }
    return out;
}

CodeSpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad_spec("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad_spec("invalid JSON in " + path + ": " + e.what());
    }
    return parse_spec_json(j);
}

std::vector<CodeSpecFile> load_spec_collection(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad_spec("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad_spec("invalid JSON in " + path + ": " + e.what());
    }
    std::vector<CodeSpecFile> out;
    if (j.contains("specs")) {
        for (const auto& s : j.at("specs")) out.push_back(parse_spec_json(s));
    } else {
        out.push_back(parse_spec_json(j));
    }
    return out;
}

}  // namespace skewcc

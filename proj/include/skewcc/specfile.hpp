#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewcc/codes.hpp"
#include "skewcc/gray.hpp"
#include "skewcc/quantum.hpp"

namespace skewcc {

struct LinearClaim {
    int n = 0, k = 0, d = 0;
    std::string remark;  // "Optimal", "MDS", ... metadata only, never recomputed
};

struct QuantumClaim {
    int n = 0, k = 0, d = 0;
    bool d_is_lower_bound = false;
    std::optional<SingletonClass> marker;
};

struct Claims {
    std::optional<LinearClaim> linear;
    std::optional<bool> dual_containing;
    std::string construction;  // "euclidean", "annihilator" or empty
    std::optional<QuantumClaim> quantum;
    std::string notes;
};

/// One fully parsed code specification: ring context, length, generators
/// (monic-normalized on ingest, originals kept), Gray map and claims.
struct CodeSpecFile {
    std::string id;
    int n = 0;
    RingCtx rctx;
    RingElement a;
    std::vector<SkewPoly> gens;             // monic
    std::vector<std::string> gens_as_given; // verbatim from the file
    std::vector<bool> gens_rescaled;        // true where ingest had to normalize
    GrayMapSpec gray;
    Claims claims;

    RCodeSpec r_spec() const { return RCodeSpec{n, rctx, a, gens}; }
};

FieldSpecPtr parse_field_json(const nlohmann::json& j);
nlohmann::json field_to_json(const FieldSpecPtr& spec);

Matrix parse_matrix_json(const nlohmann::json& j, const FieldSpecPtr& spec);
nlohmann::json matrix_to_json(const Matrix& m);

CodeSpecFile parse_spec_json(const nlohmann::json& j);
CodeSpecFile load_spec_file(const std::string& path);
/// Accepts either a single spec object or {"specs": [...]}.
std::vector<CodeSpecFile> load_spec_collection(const std::string& path);

}  // namespace skewcc

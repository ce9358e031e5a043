#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewcc/quantum.hpp"
#include "skewcc/specfile.hpp"

namespace skewcc {

enum class RowStatus { kReproduced, kBoundOnly, kMismatch, kSpecError };
std::string to_string(RowStatus s);

struct ClaimCheck {
    std::string what;
    std::string claimed;
    std::string computed;
    enum class Outcome { kOk, kUnconfirmed, kFailed } outcome = Outcome::kOk;
};

/// Everything the verification pipeline derives for one spec, plus the
/// claim-by-claim comparison that decides the exit code.
struct VerifyResult {
    std::string id;
    RowStatus status = RowStatus::kSpecError;
    std::vector<std::string> diagnostics;
    std::vector<std::string> notes;  // e.g. monic normalization provenance

    int q = 0, l = 0, n = 0, nl = 0, k = 0;
    std::vector<int> comp_dims;
    bool divisors_ok = false;
    bool closure_ok = false;
    DistanceResult linear_dist;
    std::optional<bool> dual_containing;
    std::string construction;
    std::optional<QuantumParams> quantum;
    std::vector<ClaimCheck> checks;
};

VerifyResult run_verify(const CodeSpecFile& sf, const EnumOptions& opt);

std::string render_verify_text(const VerifyResult& r);
nlohmann::json render_verify_json(const VerifyResult& r);
std::string verify_csv_row(const VerifyResult& r);
/// 0 = all claims confirmed, or confirmed where budget allowed; 1 = mismatch.
int verify_exit_code(const VerifyResult& r);

// --- reproduction of the bundled corpus -----------------------------------

struct ReproduceReport {
    std::string table;
    std::vector<VerifyResult> rows;
    int reproduced = 0, bound_only = 0, mismatched = 0;
};

/// table is one of "1", "2", "3", "examples".  corpus_dir holds the bundled
/// spec files.  Output is deterministic for a fixed budget; the worker count
/// must never change it.
ReproduceReport run_reproduce(const std::string& table, const std::string& corpus_dir,
                              const EnumOptions& opt);
std::string render_reproduce_text(const ReproduceReport& rep, const EnumOptions& opt);
nlohmann::json render_reproduce_json(const ReproduceReport& rep);
std::string reproduce_csv(const ReproduceReport& rep);

/// Paths of the corpus files backing a table selector.
std::vector<std::string> corpus_files(const std::string& table, const std::string& corpus_dir);

// --- divisor search --------------------------------------------------------

struct SearchOptions {
    SkewRingCtx ctx;
    int n = 0;
    FieldElement alpha;
    int degree = 0;
    bool dual_containing_only = false;
    int top = 10;
    EnumOptions enumopt;
};

struct SearchHit {
    SkewPoly g;
    int k = 0;
    DistanceResult dist;
    bool dual_containing = false;
};

/// Enumerates monic right divisors of degree r, builds each code, ranks by
/// exact distance then dimension (ties broken by the formatted generator for
/// a deterministic order).
std::vector<SearchHit> run_search(const SearchOptions& opt);
std::string render_search_text(const SearchOptions& opt, const std::vector<SearchHit>& hits);

}  // namespace skewcc

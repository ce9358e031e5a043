#include <doctest.h>

#include <fstream>

#include "skewcc/pipeline.hpp"
#include "skewcc/textio.hpp"
#include "support/oracles.hpp"

using namespace skewcc;

namespace {

EnumOptions fast(int workers = 2) { return EnumOptions{1ull << 22, workers, 1ull << 12, 7}; }

}  // namespace

TEST_SUITE("pipeline") {
    TEST_CASE("spec files parse with defaults and normalization notes") {
        auto sf = load_spec_file(oracles::corpus_dir() + "/ex3_f9.json");
        CHECK(sf.id == "ex3_f9");
        CHECK(sf.n == 4);
        CHECK(sf.rctx.spec.l == 2);
        CHECK(sf.gens[0].is_monic());
        CHECK(sf.gens_rescaled[0]);  // "2x+w+1" is not monic
        REQUIRE(sf.claims.linear);
        CHECK(sf.claims.linear->d == 4);
        REQUIRE(sf.claims.quantum);
        CHECK(sf.claims.quantum->marker == SingletonClass::kMds);

        auto ex4 = load_spec_file(oracles::corpus_dir() + "/ex4_f17.json");
        CHECK(ex4.gray.l() == 1);  // identity Gray map by default
        CHECK(ex4.claims.construction == "annihilator");
    }

    TEST_CASE("verify reproduces Example 3 end to end") {
        auto sf = load_spec_file(oracles::corpus_dir() + "/ex3_f9.json");
        auto r = run_verify(sf, fast());
        CHECK(r.status == RowStatus::kReproduced);
        CHECK(r.k == 5);
        CHECK(r.linear_dist.d == 4);
        CHECK(r.linear_dist.exact);
        REQUIRE(r.dual_containing);
        CHECK(*r.dual_containing);
        REQUIRE(r.quantum);
        CHECK(r.quantum->n == 8);
        CHECK(r.quantum->k == 2);
        CHECK(r.quantum->d == 4);
        CHECK(r.quantum->cls == SingletonClass::kMds);
        CHECK(verify_exit_code(r) == 0);

        auto j = render_verify_json(r);
        CHECK(j["schema"] == "skewcc.verify/1");
        CHECK(j["status"] == "REPRODUCED");
        CHECK(j["quantum"]["k"] == 2);
    }

    TEST_CASE("corrupted generator fails with a divisor diagnostic and exit 1") {
        auto sf = load_spec_file(oracles::corpus_dir() + "/ex3_f9.json");
        // corrupt g2: x^2 + 1 does not right-divide x^4 - 2 over F_9
        sf.gens[1] = SkewPoly::from_coeffs(sf.rctx.component_ctx(1), parse_poly("x^2+1", sf.rctx.spec.field));
        auto r = run_verify(sf, fast());
        CHECK(r.status == RowStatus::kMismatch);
        REQUIRE_FALSE(r.diagnostics.empty());
        CHECK(r.diagnostics.front().find("not a right divisor") != std::string::npos);
        CHECK(verify_exit_code(r) == 1);
    }

    TEST_CASE("budget degradation reports bounds and never exit 1") {
        auto sf = load_spec_file(oracles::corpus_dir() + "/ex2_f8.json");
        EnumOptions tiny = fast();
        tiny.budget = 1000;  // 8^6 = 262144 on both sides of the auto split
        auto r = run_verify(sf, tiny);
        CHECK_FALSE(r.linear_dist.exact);
        CHECK(r.status == RowStatus::kBoundOnly);
        CHECK(verify_exit_code(r) == 0);
    }

    TEST_CASE("search finds the Example 1 generator (monic-scaled)") {
        auto f4 = FieldSpec::gf(4);
        SearchOptions so{SkewRingCtx::make(f4, 1, f4->generator()),
                         6,
                         f4->one(),
                         4,
                         false,
                         1000,
                         fast()};
        auto hits = run_search(so);
        const auto want = SkewPoly::from_coeffs(so.ctx, parse_poly("wx^4+wx^3+wx+w", f4)).monic_scaled();
        bool found = false;
        for (const auto& h : hits) found = found || h.g == want;
        CHECK(found);

        // r = n leaves only x^n - alpha, the zero code
        SearchOptions full = so;
        full.degree = 6;
        auto zero_hits = run_search(full);
        REQUIRE(zero_hits.size() == 1);
        CHECK(zero_hits[0].k == 0);
    }

    TEST_CASE("dual-containing search reproduces the Example 2 component") {
        auto f8 = FieldSpec::gf(8);
        SearchOptions so{SkewRingCtx::make(f8, 1, f8->zero()), 6, f8->one(), 3, true, 1000, fast()};
        auto hits = run_search(so);
        const auto want =
            SkewPoly::from_coeffs(so.ctx, parse_poly("wx^3+wx^2+(w^2+w)x+w^2+w", f8)).monic_scaled();
        bool found = false;
        for (const auto& h : hits) found = found || h.g == want;
        CHECK(found);
        for (const auto& h : hits) CHECK(is_euclidean_dual_containing_fq(6, f8->one(), h.g));
    }

    TEST_CASE("reproduce of the examples corpus is deterministic across worker counts") {
        EnumOptions base = fast();
        base.budget = 1ull << 20;  // keeps ex2/ex4 in bound-only mode, fast
        std::string first;
        for (int workers : {1, 4, 8}) {
            EnumOptions opt = base;
            opt.workers = workers;
            auto rep = run_reproduce("examples", oracles::corpus_dir(), opt);
            auto text = render_reproduce_text(rep, opt);
            if (first.empty())
                first = text;
            else
                CHECK(first == text);
        }
        CHECK(first.find("ex1_f4") != std::string::npos);
    }

    TEST_CASE("spec errors are distinguishable") {
        CHECK_THROWS_AS(load_spec_file("/nonexistent/path.json"), std::invalid_argument);
        CHECK_THROWS_AS(corpus_files("7", "x"), std::invalid_argument);
        // malformed element: coefficient out of characteristic range
        nlohmann::json j = {
            {"id", "bad"},
            {"field", {{"p", 2}, {"m", 2}, {"modulus", {1, 1, 1}}}},
            {"ring", {{"l", 1}, {"theta_exps", {1}}, {"s", {"0"}}, {"a", {"3"}}}},
            {"n", 2},
            {"generators", {"x+1"}},
        };
        CHECK_THROWS_AS(parse_spec_json(j), std::invalid_argument);
    }

    TEST_CASE("per-position Gray matrices parse and apply") {
        auto f4 = FieldSpec::gf(4);
        auto j = nlohmann::json::parse(R"({
            "id": "perpos",
            "field": {"p": 2, "m": 2, "modulus": [1, 1, 1]},
            "ring": {"l": 2, "theta_exps": [1, 1], "s": ["0", "0"], "a": ["1", "1"]},
            "n": 2,
            "generators": ["x+1", "x+1"],
            "gray": {"matrices": [[["1", "0"], ["0", "1"]], [["w", "0"], ["0", "w"]]]}
        })");
        auto sf = parse_spec_json(j);
        REQUIRE(sf.gray.n() == 2);
        std::vector<RingElement> v = {RingElement({f4->one(), f4->one()}),
                                      RingElement({f4->one(), f4->one()})};
        auto img = phi(v, sf.gray);
        CHECK(img[0] == f4->one());
        CHECK(img[2] == f4->generator());

        // count mismatch is rejected
        j["gray"]["matrices"] = nlohmann::json::parse(R"([[["1", "0"], ["0", "1"]]])");
        CHECK_THROWS_AS(parse_spec_json(j), std::invalid_argument);
    }

    TEST_CASE("verify csv row shape") {
        auto sf = load_spec_file(oracles::corpus_dir() + "/ex3_f9.json");
        auto r = run_verify(sf, fast());
        CHECK(verify_csv_row(r) == "ex3_f9,8,5,4,exact,9");
    }
}

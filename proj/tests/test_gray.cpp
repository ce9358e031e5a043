#include <doctest.h>

#include <algorithm>

#include "skewcc/gray.hpp"
#include "skewcc/textio.hpp"
#include "support/oracles.hpp"

using namespace skewcc;

namespace {

Matrix M2(const FieldSpecPtr& f, const std::string& a, const std::string& b, const std::string& c,
          const std::string& d) {
    Matrix m(f, 2, 2);
    m.set(0, 0, parse_element(a, f));
    m.set(0, 1, parse_element(b, f));
    m.set(1, 0, parse_element(c, f));
    m.set(1, 1, parse_element(d, f));
    return m;
}

}  // namespace

TEST_SUITE("gray") {
    TEST_CASE("identity matrices flatten components") {
        auto f4 = FieldSpec::gf(4);
        auto spec = GrayMapSpec::identity(f4, 2, 3);
        std::vector<RingElement> v = {RingElement({f4->one(), f4->zero()}),
                                      RingElement({f4->generator(), f4->generator()}),
                                      RingElement({f4->zero(), f4->one()})};
        auto img = phi(v, spec);
        REQUIRE(img.size() == 6);
        CHECK(img[0] == f4->one());
        CHECK(img[1] == f4->zero());
        CHECK(img[2] == f4->generator());
        CHECK(img[5] == f4->one());
    }

    TEST_CASE("phi agrees with the matrix product and round-trips") {
        auto f9 = FieldSpec::gf(9);
        auto m = M2(f9, "2w", "w", "w", "w");
        auto spec = GrayMapSpec::broadcast(m, 1);
        auto w = f9->generator();
        auto img = phi({RingElement({w, w})}, spec);
        auto direct = vec_mat({w, w}, m);
        CHECK(img == direct);

        oracles::Rng rng(61);
        auto spec4 = GrayMapSpec::broadcast(m, 4);
        for (int t = 0; t < 200; ++t) {
            std::vector<RingElement> v;
            for (int i = 0; i < 4; ++i) v.push_back(RingElement({rng.element(f9), rng.element(f9)}));
            auto round = phi_inverse(phi(v, spec4), spec4);
            CHECK(round == v);
        }
    }

    TEST_CASE("phi is additive") {
        auto f8 = FieldSpec::gf(8);
        auto m = M2(f8, "w^2+w+1", "1", "1", "w^2+w+1");
        auto spec = GrayMapSpec::broadcast(m, 3);
        oracles::Rng rng(62);
        for (int t = 0; t < 100; ++t) {
            std::vector<RingElement> a, b, sum;
            for (int i = 0; i < 3; ++i) {
                a.push_back(RingElement({rng.element(f8), rng.element(f8)}));
                b.push_back(RingElement({rng.element(f8), rng.element(f8)}));
                sum.push_back(a.back() + b.back());
            }
            auto pa = phi(a, spec), pb = phi(b, spec), ps = phi(sum, spec);
            for (std::size_t i = 0; i < ps.size(); ++i) CHECK(ps[i] == pa[i] + pb[i]);
        }
    }

    TEST_CASE("gray weight equals Hamming weight of the image") {
        auto f9 = FieldSpec::gf(9);
        auto spec = GrayMapSpec::broadcast(M2(f9, "2w", "w", "w", "w"), 4);
        oracles::Rng rng(63);
        std::vector<RingElement> zero(4, RingElement::zero(RingSpec{f9, 2}));
        CHECK(gray_weight(zero, spec) == 0);
        for (int t = 0; t < 200; ++t) {
            std::vector<RingElement> v;
            for (int i = 0; i < 4; ++i) v.push_back(RingElement({rng.element(f9), rng.element(f9)}));
            int wh = 0;
            for (const auto& x : phi(v, spec)) wh += !x.is_zero();
            CHECK(gray_weight(v, spec) == wh);
        }

        // single unit position with identity matrix
        auto idspec = GrayMapSpec::identity(f9, 2, 4);
        std::vector<RingElement> e = zero;
        e[2] = RingElement({f9->one(), f9->generator()});
        CHECK(gray_weight(e, idspec) == 2);
    }

    TEST_CASE("orthogonality predicate") {
        auto f9 = FieldSpec::gf(9);
        auto check9 = check_orthogonality_matrix(GrayMapSpec::broadcast(M2(f9, "2w", "w", "w", "w"), 2));
        CHECK(check9.ok);
        REQUIRE(check9.lambda);
        auto w = f9->generator();
        CHECK(*check9.lambda == f9->from_scalar(2) * w * w);

        auto f8 = FieldSpec::gf(8);
        auto check8 = check_orthogonality_matrix(GrayMapSpec::broadcast(M2(f8, "w^2+w+1", "1", "1", "w^2+w+1"), 2));
        CHECK(check8.ok);

        auto f4 = FieldSpec::gf(4);
        auto bad = check_orthogonality_matrix(GrayMapSpec::broadcast(M2(f4, "1", "0", "1", "1"), 2));
        CHECK_FALSE(bad.ok);
    }

    TEST_CASE("gray image of the zero code is the zero code") {
        auto f9 = FieldSpec::gf(9);
        RingCtx rctx = RingCtx::make(f9, 2, {1, 1}, RingElement::zero(RingSpec{f9, 2}));
        auto ctx0 = rctx.component_ctx(0);
        auto full = SkewPoly::x_pow_minus(ctx0, 2, f9->one());
        RCodeSpec spec{2, rctx, RingElement::one(rctx.spec), {full, full}};
        auto code = build_r_code(spec);
        CHECK(code.dim == 0);
        auto img = gray_image(code, GrayMapSpec::identity(f9, 2, 2));
        CHECK(img.k() == 0);
        CHECK(img.n() == 4);
    }

    TEST_CASE("distance transport: image distance equals the direct Gray distance") {
        // small corpus entries where the whole R-code is enumerable
        for (const char* file : {"/ex1_f4.json", "/ex3_f9.json"}) {
            auto sf = load_spec_file(oracles::corpus_dir() + file);
            auto code = build_r_code(sf.r_spec());
            auto words = oracles::span_r_code(code, 1 << 17);
            int direct = 1 << 20;
            for (const auto& w : words) {
                bool zero = true;
                for (const auto& r : w) zero = zero && r.is_zero();
                if (zero) continue;
                direct = std::min(direct, gray_weight(w, sf.gray));
            }
            auto image = gray_image(code, sf.gray);
            CHECK(image.n() == sf.n * sf.rctx.spec.l);
            CHECK(image.k() == code.dim);
            auto dist = min_distance(image, EnumOptions{1 << 22, 2, 1 << 12, 7});
            REQUIRE(dist.exact);
            CHECK(dist.d == direct);
        }
    }

    TEST_CASE("singular Gray matrices are rejected") {
        auto f4 = FieldSpec::gf(4);
        Matrix sing(f4, 2, 2);
        sing.set(0, 0, f4->one());
        sing.set(1, 0, f4->one());
        CHECK_THROWS_AS(GrayMapSpec::broadcast(sing, 2), std::invalid_argument);
    }
}

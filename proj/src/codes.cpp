#include "skewcc/codes.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace skewcc {

namespace {

// q^k as a saturating value so budget comparisons stay total.
std::uint64_t pow_sat(std::uint64_t q, int k, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Packed enumeration engine.
//
// Messages in F_q^k are walked as base-p odometers over D = m*k digits, one
// digit per F_p-coordinate of the message.  Between consecutive counter
// values exactly one Gray digit advances by +1 (mod p) -- the digit at the
// position of the lowest non-(p-1) odometer digit -- and in characteristic p
// a +1 (mod p) scalar step always adds the same precomputed row.  So each
// step costs one row addition over the support of that row, with the running
// weight updated in place.  Partitioning the global index range over workers
// keeps results independent of the worker count.
// ---------------------------------------------------------------------------
struct PackedCode {
    int q = 0, p = 0, m = 0, n = 0, k = 0, digits = 0;
    std::vector<std::uint8_t> add;            // q*q
    std::vector<std::uint8_t> mul;            // q*q
    std::vector<std::uint8_t> prow;           // digits*n: row for digit d = w^(d%m) * G[d/m]
    std::vector<std::vector<int>> support;    // nonzero columns per digit row
};

PackedCode pack_code(const LinearCode& code) {
    const auto& spec = *code.spec();
    if (spec.q() > 255 || !spec.has_tables())
        throw std::runtime_error("enumeration engine requires q <= 255");
    PackedCode pc;
    pc.q = spec.q();
    pc.p = spec.p();
    pc.m = spec.m();
    pc.n = code.n();
    pc.k = code.k();
    pc.digits = pc.m * pc.k;
    pc.add = spec.add_table8();
    pc.mul = spec.mul_table8();
    pc.prow.assign(static_cast<std::size_t>(pc.digits) * pc.n, 0);
    pc.support.resize(pc.digits);
    for (int d = 0; d < pc.digits; ++d) {
        const int row = d / pc.m;
        const int power = d % pc.m;
        const std::uint32_t scale = spec.pow_idx(static_cast<std::uint32_t>(pc.p), power);  // w^power
        for (int j = 0; j < pc.n; ++j) {
            const std::uint32_t v = spec.mul_idx(scale, code.generators().idx_at(row, j));
            pc.prow[static_cast<std::size_t>(d) * pc.n + j] = static_cast<std::uint8_t>(v);
            if (v != 0) pc.support[d].push_back(j);
        }
    }
    return pc;
}

// Gray digits of counter value t: g_i = (b_i - b_{i+1}) mod p over base-p
// digits b of t.  Used to seed a worker mid-range.
std::vector<int> gray_digits(const PackedCode& pc, std::uint64_t t) {
    std::vector<int> b(pc.digits + 1, 0);
    for (int i = 0; i < pc.digits; ++i) {
        b[i] = static_cast<int>(t % pc.p);
        t /= pc.p;
    }
    std::vector<int> g(pc.digits, 0);
    for (int i = 0; i < pc.digits; ++i) g[i] = ((b[i] - b[i + 1]) % pc.p + pc.p) % pc.p;
    return g;
}

struct WalkState {
    std::vector<std::uint8_t> word;
    std::vector<std::uint8_t> odometer;  // base-p digits of the local counter
    int weight = 0;
};

WalkState seed_state(const PackedCode& pc, std::uint64_t start) {
    WalkState st;
    st.word.assign(pc.n, 0);
    st.odometer.assign(pc.digits + 1, 0);
    std::uint64_t t = start;
    for (int i = 0; i < pc.digits; ++i) {
        st.odometer[i] = static_cast<std::uint8_t>(t % pc.p);
        t /= pc.p;
    }
    const auto g = gray_digits(pc, start);
    for (int d = 0; d < pc.digits; ++d) {
        if (g[d] == 0) continue;
        const std::uint8_t scalar = static_cast<std::uint8_t>(g[d]);  // prime subfield index == value
        const std::uint8_t* row = &pc.prow[static_cast<std::size_t>(d) * pc.n];
        for (int j : pc.support[d]) {
            const std::uint8_t contrib = pc.mul[static_cast<std::size_t>(scalar) * pc.q + row[j]];
            st.word[j] = pc.add[static_cast<std::size_t>(st.word[j]) * pc.q + contrib];
        }
    }
    for (int j = 0; j < pc.n; ++j) st.weight += st.word[j] != 0;
    return st;
}

// Walks Gray indices [begin, end), invoking visit(weight, word) for each.
// The word at index 0 is the zero codeword.
template <typename Visit>
void walk_range(const PackedCode& pc, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    WalkState st = seed_state(pc, begin);
    visit(st.weight, st.word);
    for (std::uint64_t t = begin + 1; t < end; ++t) {
        // advance the odometer; the Gray digit that bumps is the carry depth
        int d = 0;
        while (st.odometer[d] == pc.p - 1) {
            st.odometer[d] = 0;
            ++d;
        }
        ++st.odometer[d];
        const std::uint8_t* row = &pc.prow[static_cast<std::size_t>(d) * pc.n];
        for (int j : pc.support[d]) {
            const std::uint8_t before = st.word[j];
            const std::uint8_t after = pc.add[static_cast<std::size_t>(before) * pc.q + row[j]];
            st.word[j] = after;
            st.weight += (after != 0) - (before != 0);
        }
        visit(st.weight, st.word);
    }
}

// Runs fn(worker_index, begin, end) over an even partition of [0, total).
void parallel_ranges(std::uint64_t total, int workers,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || total < 2) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t b = chunk * w;
        const std::uint64_t e = (w == workers - 1) ? total : chunk * (w + 1);
        pool.emplace_back([&fn, w, b, e] { fn(w, b, e); });
    }
    for (auto& th : pool) th.join();
}

// rref of the generator matrix packed for cheap membership tests.
struct PackedSpace {
    int n = 0;
    int rank = 0;
    std::vector<int> pivots;
    std::vector<std::uint8_t> rows;  // rank * n
    std::vector<std::uint8_t> neg;   // q
};

PackedSpace pack_space(const Matrix& gen) {
    const auto& spec = *gen.spec();
    PackedSpace ps;
    ps.n = gen.cols();
    auto rr = rref(gen);
    ps.rank = rr.rank;
    ps.pivots = rr.pivot_columns;
    ps.rows.assign(static_cast<std::size_t>(rr.rank) * gen.cols(), 0);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < gen.cols(); ++j)
            ps.rows[static_cast<std::size_t>(i) * gen.cols() + j] =
                static_cast<std::uint8_t>(rr.reduced.idx_at(i, j));
    ps.neg.resize(spec.q());
    for (int a = 0; a < spec.q(); ++a) ps.neg[a] = static_cast<std::uint8_t>(spec.neg_idx(a));
    return ps;
}

bool packed_member(const PackedCode& pc, const PackedSpace& ps, const std::vector<std::uint8_t>& word) {
    std::vector<std::uint8_t> w = word;
    for (int r = 0; r < ps.rank; ++r) {
        const std::uint8_t c = w[ps.pivots[r]];
        if (c == 0) continue;
        const std::uint8_t cneg = ps.neg[c];
        const std::uint8_t* row = &ps.rows[static_cast<std::size_t>(r) * ps.n];
        for (int j = 0; j < ps.n; ++j)
            w[j] = pc.add[static_cast<std::size_t>(w[j]) * pc.q + pc.mul[static_cast<std::size_t>(cneg) * pc.q + row[j]]];
    }
    return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

int sampled_upper_bound(const LinearCode& code, const EnumOptions& opt) {
    // Deterministic sampled bound: all generator rows plus `sample` seeded
    // random combinations.  Single-threaded on purpose so worker count can
    // never leak into the result.
    const auto& spec = *code.spec();
    const auto& g = code.generators();
    int best = code.n() + 1;
    for (int i = 0; i < g.rows(); ++i) {
        int wt = 0;
        for (int j = 0; j < g.cols(); ++j) wt += g.idx_at(i, j) != 0;
        if (wt > 0) best = std::min(best, wt);
    }
    std::mt19937_64 rng(opt.seed);
    std::vector<std::uint32_t> word(code.n());
    for (std::uint64_t s = 0; s < opt.sample; ++s) {
        std::fill(word.begin(), word.end(), 0u);
        bool nonzero = false;
        for (int i = 0; i < g.rows(); ++i) {
            const std::uint32_t c = static_cast<std::uint32_t>(rng() % spec.q());
            if (c == 0) continue;
            nonzero = true;
            for (int j = 0; j < g.cols(); ++j)
                word[j] = spec.add_idx(word[j], spec.mul_idx(c, g.idx_at(i, j)));
        }
        if (!nonzero) continue;
        int wt = 0;
        for (auto v : word) wt += v != 0;
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

// Binomial table in __int128 for the MacWilliams transform.
using int128 = __int128;

std::vector<std::vector<int128>> binomials(int n) {
    std::vector<std::vector<int128>> c(n + 1, std::vector<int128>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c;
}

}  // namespace

LinearCode LinearCode::from_generator(Matrix g) {
    if (g.rows() > 0 && rank(g) != g.rows()) throw std::invalid_argument("generator matrix is not full rank");
    return LinearCode(std::move(g));
}

LinearCode LinearCode::zero_code(const FieldSpecPtr& spec, int n) {
    return LinearCode(Matrix(spec, 0, n));
}

void FqCyclicSpec::validate() const {
    if (n < 1) throw std::invalid_argument("code length must be positive");
    if (alpha.is_zero()) throw std::invalid_argument("alpha must be a unit");
    if (g.is_zero() || !g.is_monic()) throw std::invalid_argument("generator must be monic");
    if (g.degree() > n) throw std::invalid_argument("generator degree exceeds length");
    const SkewPoly modulus = SkewPoly::x_pow_minus(ctx, n, alpha);
    if (!right_divides(g, modulus))
        throw std::invalid_argument("generator is not a right divisor of x^n - alpha");
}

void RCodeSpec::validate() const {
    if (static_cast<int>(gens.size()) != rctx.spec.l) throw std::invalid_argument("need one generator per component");
    if (a.l() != rctx.spec.l) throw std::invalid_argument("constant arity mismatch");
    if (!is_unit(a)) throw std::invalid_argument("a must be a unit of R");
    for (int i = 0; i < rctx.spec.l; ++i) component(i).validate();
}

FqCyclicSpec RCodeSpec::component(int i) const {
    return FqCyclicSpec{n, rctx.component_ctx(i), a.comp(i), gens[i]};
}

int RCodeSpec::dim() const {
    int total = 0;
    for (const auto& g : gens) total += n - g.degree();
    return total;
}

std::vector<FieldElement> pseudo_linear_apply(const SkewRingCtx& ctx, const FieldElement& alpha,
                                              const std::vector<FieldElement>& c) {
    const int n = static_cast<int>(c.size());
    if (n == 0) return {};
    std::vector<FieldElement> out;
    out.reserve(n);
    out.push_back(alpha * ctx.apply_theta(c[n - 1]) + ctx.delta(c[0]));
    for (int j = 1; j < n; ++j) out.push_back(ctx.apply_theta(c[j - 1]) + ctx.delta(c[j]));
    return out;
}

std::vector<RingElement> pseudo_linear_apply_r(const RingCtx& ctx, const RingElement& a,
                                               const std::vector<RingElement>& c) {
    const int n = static_cast<int>(c.size());
    if (n == 0) return {};
    std::vector<RingElement> out;
    out.reserve(n);
    out.push_back(a * apply_Theta(ctx.Theta, c[n - 1]) + apply_Delta(ctx, c[0]));
    for (int j = 1; j < n; ++j) out.push_back(apply_Theta(ctx.Theta, c[j - 1]) + apply_Delta(ctx, c[j]));
    return out;
}

LinearCode generator_matrix_fq(const FqCyclicSpec& spec) {
    spec.validate();
    const int k = spec.dim();
    if (k <= 0) return LinearCode::zero_code(spec.ctx.field, spec.n);
    Matrix g(spec.ctx.field, k, spec.n);
    std::vector<FieldElement> row(spec.n, spec.ctx.field->zero());
    for (int j = 0; j <= spec.g.degree(); ++j) row[j] = spec.g.coeff(j);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < spec.n; ++j) g.set(i, j, row[j]);
        if (i + 1 < k) row = pseudo_linear_apply(spec.ctx, spec.alpha, row);
    }
    return LinearCode::from_generator(std::move(g));
}

RCode build_r_code(const RCodeSpec& spec) {
    spec.validate();
    RCode code{spec, {}, 0};
    for (int i = 0; i < spec.rctx.spec.l; ++i) {
        code.comps.push_back(generator_matrix_fq(spec.component(i)));
        code.dim += code.comps.back().k();
    }
    return code;
}

std::vector<std::vector<RingElement>> r_code_basis(const RCode& code) {
    const RingSpec& rs = code.spec.rctx.spec;
    std::vector<std::vector<RingElement>> basis;
    basis.reserve(code.dim);
    for (int i = 0; i < rs.l; ++i) {
        const auto& g = code.comps[i].generators();
        for (int r = 0; r < g.rows(); ++r) {
            std::vector<RingElement> word(code.spec.n, RingElement::zero(rs));
            for (int j = 0; j < code.spec.n; ++j) {
                std::vector<FieldElement> slot(rs.l, rs.field->zero());
                slot[i] = g.at(r, j);
                word[j] = RingElement(std::move(slot));
            }
            basis.push_back(std::move(word));
        }
    }
    return basis;
}

std::vector<FieldElement> flatten_r_word(const std::vector<RingElement>& word) {
    std::vector<FieldElement> out;
    for (const auto& r : word)
        for (int i = 0; i < r.l(); ++i) out.push_back(r.comp(i));
    return out;
}

bool t_closed_fq(const Matrix& rows, const SkewRingCtx& ctx, const FieldElement& alpha) {
    for (int i = 0; i < rows.rows(); ++i) {
        auto image = pseudo_linear_apply(ctx, alpha, rows.row(i));
        if (!row_space_contains(rows, image)) return false;
    }
    return true;
}

bool closure_check(const RCodeSpec& spec) {
    // raw component row matrices (no divisibility requirement)
    const RingSpec& rs = spec.rctx.spec;
    std::vector<std::vector<RingElement>> basis;
    for (int i = 0; i < rs.l; ++i) {
        const auto& g = spec.gens[i];
        if (g.degree() > spec.n) return false;
        const int k = spec.n - std::max(g.degree(), 0);
        const auto cctx = spec.rctx.component_ctx(i);
        std::vector<FieldElement> row(spec.n, rs.field->zero());
        if (g.is_zero()) continue;
        for (int j = 0; j <= g.degree(); ++j) row[j] = g.coeff(j);
        for (int r = 0; r < k; ++r) {
            std::vector<RingElement> word(spec.n, RingElement::zero(rs));
            for (int j = 0; j < spec.n; ++j) {
                std::vector<FieldElement> slot(rs.l, rs.field->zero());
                slot[i] = row[j];
                word[j] = RingElement(std::move(slot));
            }
            basis.push_back(std::move(word));
            if (r + 1 < k) row = pseudo_linear_apply(cctx, spec.a.comp(i), row);
        }
    }
    if (basis.empty()) return true;
    std::vector<std::vector<FieldElement>> flat;
    flat.reserve(basis.size());
    for (const auto& b : basis) flat.push_back(flatten_r_word(b));
    Matrix space = Matrix::from_rows(rs.field, flat);
    for (const auto& b : basis) {
        auto image = pseudo_linear_apply_r(spec.rctx, spec.a, b);
        if (!row_space_contains(space, flatten_r_word(image))) return false;
    }
    return true;
}

DistanceResult min_distance(const LinearCode& code, const EnumOptions& opt) {
    if (code.k() == 0) return {0, true};  // zero code: no nonzero words
    const std::uint64_t total = pow_sat(code.spec()->q(), code.k(), opt.budget);
    if (total > opt.budget) return {sampled_upper_bound(code, opt), false};

    const PackedCode pc = pack_code(code);
    std::vector<int> best(std::max(1, opt.workers), code.n() + 1);
    parallel_ranges(total, opt.workers, [&](int w, std::uint64_t b, std::uint64_t e) {
        int local = code.n() + 1;
        walk_range(pc, b, e, [&](int weight, const std::vector<std::uint8_t>&) {
            if (weight > 0 && weight < local) local = weight;
        });
        best[w] = local;
    });
    return {*std::min_element(best.begin(), best.end()), true};
}

std::vector<std::uint64_t> weight_enumerator(const LinearCode& code, const EnumOptions& opt) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.n()) + 1, 0);
    if (code.k() == 0) {
        counts[0] = 1;
        return counts;
    }
    const std::uint64_t total = pow_sat(code.spec()->q(), code.k(), opt.budget);
    if (total > opt.budget) throw std::runtime_error("weight enumerator exceeds budget");

    const PackedCode pc = pack_code(code);
    const int workers = std::max(1, opt.workers);
    std::vector<std::vector<std::uint64_t>> partial(workers, counts);
    parallel_ranges(total, workers, [&](int w, std::uint64_t b, std::uint64_t e) {
        auto& local = partial[w];
        walk_range(pc, b, e, [&](int weight, const std::vector<std::uint8_t>&) { ++local[weight]; });
    });
    for (const auto& local : partial)
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += local[i];
    return counts;
}

DistanceResult macwilliams_min_distance(const LinearCode& code, const EnumOptions& opt) {
    if (code.k() == 0) return {0, true};
    const LinearCode dual = euclidean_dual(code);
    const std::uint64_t dual_total = pow_sat(code.spec()->q(), dual.k(), opt.budget);
    if (dual_total > opt.budget) throw std::runtime_error("dual enumeration exceeds budget");
    const auto b = weight_enumerator(dual, opt);

    // W_C(x,y) = |C_dual|^-1 * W_dual(x+(q-1)y, x-y), coefficient-extracted:
    // A_j = |C_dual|^-1 * sum_w B_w * K_j(w) with the Krawtchouk polynomial
    // K_j(w) = sum_s (-1)^s (q-1)^(j-s) C(w,s) C(n-w,j-s).
    const int n = code.n();
    const int q = code.spec()->q();
    const auto C = binomials(n);
    const int128 denom = static_cast<int128>(dual_total);
    for (int j = 1; j <= n; ++j) {
        int128 acc = 0;
        for (int w = 0; w <= n; ++w) {
            if (b[w] == 0) continue;
            int128 kraw = 0;
            for (int s = 0; s <= j; ++s) {
                if (s > w || j - s > n - w) continue;
                int128 term = C[w][s] * C[n - w][j - s];
                for (int t = 0; t < j - s; ++t) term *= (q - 1);
                kraw += (s % 2 == 0) ? term : -term;
            }
            acc += static_cast<int128>(b[w]) * kraw;
        }
        if (acc % denom != 0 || acc < 0) throw std::runtime_error("MacWilliams transform produced a non-count");
        if (acc / denom > 0) return {j, true};
    }
    return {0, true};
}

DistanceResult min_distance_auto(const LinearCode& code, const EnumOptions& opt) {
    const std::uint64_t direct = pow_sat(code.spec()->q(), code.k(), opt.budget);
    const std::uint64_t via_dual = pow_sat(code.spec()->q(), code.n() - code.k(), opt.budget);
    if (direct <= opt.budget && direct <= via_dual) return min_distance(code, opt);
    if (via_dual <= opt.budget) return macwilliams_min_distance(code, opt);
    return min_distance(code, opt);  // sampled bound
}

LinearCode euclidean_dual(const LinearCode& code) {
    return LinearCode::from_generator(null_space(code.generators()));
}

SweepResult min_weight_outside(const LinearCode& code, const LinearCode& excluded, const EnumOptions& opt) {
    if (code.k() == 0) return {true, false, 0};
    const std::uint64_t total = pow_sat(code.spec()->q(), code.k(), opt.budget);
    if (total > opt.budget) return {false, false, 0};

    const PackedCode pc = pack_code(code);
    const PackedSpace ps = pack_space(excluded.generators());
    const int workers = std::max(1, opt.workers);
    std::vector<int> best(workers, code.n() + 1);
    std::vector<std::uint8_t> found(workers, 0);
    parallel_ranges(total, workers, [&](int w, std::uint64_t bgn, std::uint64_t end) {
        int local = code.n() + 1;
        bool any = false;
        walk_range(pc, bgn, end, [&](int weight, const std::vector<std::uint8_t>& word) {
            if (weight == 0 || weight >= local) return;
            if (!packed_member(pc, ps, word)) {
                local = weight;
                any = true;
            }
        });
        best[w] = local;
        found[w] = any;
    });
    SweepResult out{true, false, code.n() + 1};
    for (int w = 0; w < workers; ++w)
        if (found[w]) {
            out.any = true;
            out.d = std::min(out.d, best[w]);
        }
    if (!out.any) out.d = 0;
    return out;
}

std::vector<std::vector<FieldElement>> enumerate_codewords(const LinearCode& code, std::uint64_t limit) {
    const std::uint64_t total = pow_sat(code.spec()->q(), code.k(), limit);
    if (total > limit) throw std::runtime_error("codeword enumeration exceeds limit");
    std::vector<std::vector<FieldElement>> out;
    out.reserve(total);
    if (code.k() == 0) {
        out.emplace_back(code.n(), code.spec()->zero());
        return out;
    }
    const PackedCode pc = pack_code(code);
    walk_range(pc, 0, total, [&](int, const std::vector<std::uint8_t>& word) {
        std::vector<FieldElement> w;
        w.reserve(word.size());
        for (auto v : word) w.push_back(code.spec()->from_index(v));
        out.push_back(std::move(w));
    });
    return out;
}

}  // namespace skewcc

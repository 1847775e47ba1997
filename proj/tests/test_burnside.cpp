#include <doctest.h>

#include <tslice/burnside.hpp>

#include <map>

using namespace tslice;

namespace {

BuildConfig cfg() { return BuildConfig{}; }

CtxPtr ctx_of(const std::string& spec) { return GroupCtx::make(builtin_group(spec, cfg())); }

std::vector<int> class_reps(const SubgroupLattice& lat) {
    std::vector<int> reps;
    for (int i = 0; i < lat.size(); ++i)
        if (lat.class_rep[i] == i) reps.push_back(i);
    return reps;
}

} // namespace

TEST_CASE("basis elements are canonicalized to class representatives") {
    auto s3 = ctx_of("S 3");
    // indices 1..3 are the conjugate C2s
    CHECK(burnside_basis(s3, 2) == burnside_basis(s3, 1));
    CHECK(burnside_basis(s3, 3) == burnside_basis(s3, 1));
    CHECK_FALSE(burnside_basis(s3, 4) == burnside_basis(s3, 1));
    std::map<int, Rational> expect = {{1, Rational(1)}};
    CHECK(burnside_basis(s3, 2).coeff == expect);
}

TEST_CASE("ring operations") {
    auto c4 = ctx_of("C 4");
    BurnsideElement e = idempotent_e(c4, 2);
    CHECK((e + Rational(-1) * e).is_zero());
    CHECK(e + burnside_zero(c4) == e);
    BurnsideElement doubled = Rational(2) * burnside_basis(c4, 1);
    std::map<int, Rational> expect = {{1, Rational(2)}};
    CHECK(doubled.coeff == expect);
}

TEST_CASE("idempotent coefficients, hand-computed") {
    auto c2 = ctx_of("C 2");
    std::map<int, Rational> top2 = {{1, Rational(1)}, {0, Rational(-1, 2)}};
    CHECK(idempotent_e(c2, 1).coeff == top2);
    std::map<int, Rational> bot2 = {{0, Rational(1, 2)}};
    CHECK(idempotent_e(c2, 0).coeff == bot2);

    auto c4 = ctx_of("C 4");
    // mu(1, C4) = 0, so the trivial subgroup drops out entirely
    std::map<int, Rational> top4 = {{2, Rational(1)}, {1, Rational(-1, 2)}};
    CHECK(idempotent_e(c4, 2).coeff == top4);
}

TEST_CASE("idempotents sum to the one of the ring") {
    for (const char* s : {"C 2", "C 4", "S 3", "D 8"}) {
        CAPTURE(s);
        auto ctx = ctx_of(s);
        BurnsideElement total = burnside_zero(ctx);
        for (int h : class_reps(ctx->lattice())) total = total + idempotent_e(ctx, h);
        CHECK(total == burnside_basis(ctx, ctx->lattice().top()));
    }
}

TEST_CASE("deflation constants, hand-computed") {
    auto c2 = ctx_of("C 2");
    CHECK(m_constant(*c2, 0) == Rational(1));
    CHECK(m_constant(*c2, 1) == Rational(1, 2));

    auto c4 = ctx_of("C 4");
    CHECK(m_constant(*c4, 0) == Rational(1));
    CHECK(m_constant(*c4, 1) == Rational(1));
    CHECK(m_constant(*c4, 2) == Rational(1, 2));

    auto v4 = ctx_of("D 4");
    const SubgroupLattice& lat = v4->lattice();
    REQUIRE(lat.size() == 5);
    CHECK(m_constant(*v4, 0) == Rational(1));
    for (int i = 1; i <= 3; ++i) CHECK(m_constant(*v4, i) == Rational(0));
    CHECK(m_constant(*v4, 4) == Rational(0));

    auto s3 = ctx_of("S 3");
    CHECK(m_constant(*s3, 0) == Rational(1));
    CHECK(m_constant(*s3, 4) == Rational(0));
    CHECK(m_constant(*s3, 5) == Rational(0));
}

TEST_CASE("deflation carries idempotents to idempotents") {
    auto c4 = ctx_of("C 4");
    BurnsideElement e = idempotent_e(c4, 2);

    // along the bottom nothing happens
    BurnsideElement same = deflate_burnside(e, 0);
    CHECK(same.ctx.get() == c4.get());
    CHECK(same == e);

    // along C2: Def e_G = m_{G,C2} e_{G/C2}
    BurnsideElement down = deflate_burnside(e, 1);
    CtxPtr q = c4->quotient_by(1).ctx;
    CHECK(down.ctx.get() == q.get());
    CHECK(down == m_constant(*c4, 1) * idempotent_e(q, q->lattice().top()));

    // along the top everything lands in the trivial group
    BurnsideElement flat = deflate_burnside(e, 2);
    CtxPtr t = c4->quotient_by(2).ctx;
    CHECK(t->group()->order == 1);
    CHECK(flat == m_constant(*c4, 2) * idempotent_e(t, 0));
}

TEST_CASE("B-group certificates") {
    auto c2 = ctx_of("C 2");
    BGroupCert cert2 = is_b_group(*c2);
    CHECK_FALSE(cert2.is_b_group);
    CHECK(cert2.witness == 1);

    auto c4 = ctx_of("C 4");
    CHECK_FALSE(is_b_group(*c4).is_b_group);

    auto v4 = ctx_of("D 4");
    BGroupCert cert4 = is_b_group(*v4);
    CHECK(cert4.is_b_group);
    CHECK(cert4.witness == -1);

    CHECK(is_b_group(*ctx_of("S 3")).is_b_group);
    CHECK(is_b_group(*ctx_of("C 1")).is_b_group);
}

TEST_CASE("largest B-group quotient") {
    // beta(C2) is trivial: m is nonzero at N = C2 itself
    auto c2 = ctx_of("C 2");
    BetaResult b2 = beta(c2);
    CHECK(b2.quotient->group()->order == 1);
    CHECK(b2.n_idx == 1);
    CHECK(b2.maximal_choices == std::vector<int>{1});

    // beta(C4) is trivial as well
    CHECK(beta(ctx_of("C 4")).quotient->group()->order == 1);

    // a B-group is its own beta, witnessed by the bottom subgroup
    auto v4 = ctx_of("D 4");
    BetaResult b4 = beta(v4);
    CHECK(b4.n_idx == 0);
    CHECK(b4.quotient.get() == v4.get());
    CHECK(is_b_group(*b4.quotient).is_b_group);

    auto s3 = ctx_of("S 3");
    BetaResult b3 = beta(s3);
    CHECK(b3.n_idx == 0);
    CHECK(b3.quotient.get() == s3.get());
}

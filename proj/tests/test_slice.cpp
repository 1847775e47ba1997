#include <doctest.h>

#include <tslice/slice.hpp>

#include <map>

using namespace tslice;

namespace {

BuildConfig cfg() { return BuildConfig{}; }

CtxPtr ctx_of(const std::string& spec) { return GroupCtx::make(builtin_group(spec, cfg())); }

} // namespace

TEST_CASE("slice basis and operations") {
    auto c1 = ctx_of("C 1");
    std::map<int, Rational> unit = {{0, Rational(1)}};
    CHECK(slice_basis(c1, 0, 0).coeff == unit);
    CHECK(xi_idempotent(c1, 0, 0).coeff == unit);

    auto s3 = ctx_of("S 3");
    // the three (C2,C2) slices are conjugate
    CHECK(slice_basis(s3, 1, 1) == slice_basis(s3, 2, 2));
    CHECK_THROWS_AS(slice_basis(s3, 1, 4), Error); // A3 is not inside a C2

    SliceBurnsideElement x = slice_basis(s3, 5, 4);
    CHECK((x + Rational(-1) * x).is_zero());
    CHECK(x + slice_zero(s3) == x);
}

TEST_CASE("slice pair normalizer") {
    auto s3 = ctx_of("S 3");
    CHECK(slice_normalizer_idx(*s3, 5, 5) == 5);
    // N(S3) meet N(C2) = C2
    CHECK(slice_normalizer_idx(*s3, 5, 1) == 1);
    // N(A3) meet N(1) = S3
    CHECK(slice_normalizer_idx(*s3, 4, 0) == 5);
}

TEST_CASE("slice idempotents on C2, hand-computed") {
    auto c2 = ctx_of("C 2");
    const SliceClasses& sc = c2->slice_classes();
    REQUIRE(sc.reps.size() == 3);
    // class indices: 0 = <1,1>, 1 = <C2,1>, 2 = <C2,C2>
    std::map<int, Rational> xi_tt = {{2, Rational(1)}, {1, Rational(-1, 2)}};
    CHECK(xi_idempotent(c2, 1, 1).coeff == xi_tt);
    std::map<int, Rational> xi_t1 = {{1, Rational(1, 2)}, {0, Rational(-1, 2)}};
    CHECK(xi_idempotent(c2, 1, 0).coeff == xi_t1);
    std::map<int, Rational> xi_11 = {{0, Rational(1, 2)}};
    CHECK(xi_idempotent(c2, 0, 0).coeff == xi_11);
}

TEST_CASE("slice idempotents sum to the one of the ring") {
    for (const char* s : {"C 2", "C 4", "S 3", "D 8"}) {
        CAPTURE(s);
        auto ctx = ctx_of(s);
        const SliceClasses& sc = ctx->slice_classes();
        SliceBurnsideElement total = slice_zero(ctx);
        for (auto [t, su] : sc.reps) total = total + xi_idempotent(ctx, t, su);
        int top = ctx->lattice().top();
        CHECK(total == slice_basis(ctx, top, top));
    }
}

TEST_CASE("m_circ values, hand-computed") {
    auto c2 = ctx_of("C 2");
    CHECK(m_circ(*c2, 0, 0) == 1);
    CHECK(m_circ(*c2, 0, 1) == 0);
    CHECK(m_circ(*c2, 1, 1) == 1);

    auto c4 = ctx_of("C 4");
    CHECK(m_circ(*c4, 0, 0) == 1);
    CHECK(m_circ(*c4, 0, 1) == 1);
    CHECK(m_circ(*c4, 0, 2) == 0);
    CHECK(m_circ(*c4, 1, 1) == 1);
    CHECK(m_circ(*c4, 1, 2) == 0);
    CHECK(m_circ(*c4, 2, 2) == 1);
}

TEST_CASE("slice deflation constants, hand-computed") {
    auto c4 = ctx_of("C 4");
    CHECK(m_slice(*c4, 1, 1) == Rational(1, 2));
    CHECK(m_slice(*c4, 1, 0) == Rational(1));
    CHECK(m_slice(*c4, 0, 1) == Rational(1, 2));
    CHECK(m_slice(*c4, 2, 2) == Rational(1, 2));

    auto c2 = ctx_of("C 2");
    CHECK(m_slice(*c2, 0, 1) == Rational(0));
    CHECK(m_slice(*c2, 1, 1) == Rational(1, 2));
    CHECK(m_slice(*c2, 0, 0) == Rational(1));
}

TEST_CASE("the two slice constant evaluators agree everywhere") {
    for (const char* s : {"C 2", "C 4", "D 4", "S 3", "D 8", "Q 8", "A 4"}) {
        CAPTURE(s);
        auto ctx = ctx_of(s);
        const SubgroupLattice& lat = ctx->lattice();
        for (int su = 0; su < lat.size(); ++su)
            for (int n : lat.normal_list())
                CHECK(m_slice_direct(*ctx, su, n) == m_slice_factored(*ctx, su, n));
    }
}

TEST_CASE("slice deflation carries idempotents to idempotents") {
    auto c2 = ctx_of("C 2");
    SliceBurnsideElement xi = xi_idempotent(c2, 1, 1);

    SliceBurnsideElement same = deflate_slice(xi, 0);
    CHECK(same.ctx.get() == c2.get());
    CHECK(same == xi);

    SliceBurnsideElement flat = deflate_slice(xi, 1);
    CtxPtr q = c2->quotient_by(1).ctx;
    CHECK(q->group()->order == 1);
    CHECK(flat == m_slice(*c2, 1, 1) * xi_idempotent(q, 0, 0));

    // xi_{C2,1} deflates to zero along C2: m vanishes
    SliceBurnsideElement gone = deflate_slice(xi_idempotent(c2, 1, 0), 1);
    CHECK(gone == m_slice(*c2, 0, 1) * xi_idempotent(q, 0, 0));
    CHECK(gone.is_zero());
}

TEST_CASE("T-slice and T-circ-slice certificates") {
    auto c4 = ctx_of("C 4");
    TSliceCert t = is_t_slice(*c4, 1);
    CHECK_FALSE(t.holds);
    CHECK(t.witness == 1);
    REQUIRE(t.table.size() == 3);
    CHECK(t.table[0] == std::pair<int, Rational>{0, Rational(1)});
    CHECK(t.table[1] == std::pair<int, Rational>{1, Rational(1, 2)});
    CHECK(t.table[2] == std::pair<int, Rational>{2, Rational(0)});

    TCircCert tc = is_t_circ_slice(*c4, 1);
    CHECK_FALSE(tc.holds);
    CHECK(tc.witness == 1);
    REQUIRE(tc.table.size() == 3);
    CHECK(tc.table[1] == std::pair<int, long long>{1, 1});
    CHECK(tc.table[2] == std::pair<int, long long>{2, 0});

    auto c2 = ctx_of("C 2");
    CHECK(is_t_slice(*c2, 0).holds);
    CHECK(is_t_circ_slice(*c2, 0).holds);
    CHECK_FALSE(is_t_slice(*c2, 1).holds);
    CHECK_FALSE(is_t_circ_slice(*c2, 1).holds);

    auto c1 = ctx_of("C 1");
    CHECK(is_t_slice(*c1, 0).holds);
    CHECK(is_t_circ_slice(*c1, 0).holds);
}

TEST_CASE("rooted slices") {
    auto s3 = ctx_of("S 3");
    RootedSlice r = rooted_slice(*s3, 4, 0);
    CHECK(r.ctx->group()->order == 3);
    CHECK(r.s_idx == 0);

    RootedSlice whole = rooted_slice(*s3, 5, 4);
    CHECK(whole.ctx.get() == s3.get());
    CHECK(whole.s_idx == 4);
}

TEST_CASE("slice isomorphism") {
    auto v4 = ctx_of("D 4");
    CHECK(slice_iso(*v4, 1, *v4, 3).has_value());
    CHECK(slice_iso(*v4, 1, *v4, 1).has_value());
    CHECK_FALSE(slice_iso(*v4, 1, *v4, 4).has_value());

    auto c4 = ctx_of("C 4");
    CHECK_FALSE(slice_iso(*c4, 1, *v4, 1).has_value());
}

TEST_CASE("slice quotient witnesses") {
    auto c4 = ctx_of("C 4");
    auto c2 = ctx_of("C 2");

    // (C4, C2) surjects onto (C2, 1) by killing C2
    auto w = slice_quotient_witness(*c4, 1, *c2, 0);
    REQUIRE(w.has_value());
    CHECK(w->m_idx == 1);
    CHECK(w->iso.is_bijective());

    // every slice is a quotient of itself via the bottom
    auto self = slice_quotient_witness(*c4, 1, *c4, 1);
    REQUIRE(self.has_value());
    CHECK(self->m_idx == 0);

    // (C2, C2) never surjects onto (C2, 1)
    CHECK_FALSE(slice_quotient_witness(*c2, 1, *c2, 0).has_value());
}

TEST_CASE("largest quotient T-circ-slice") {
    auto c4 = ctx_of("C 4");
    TauResult t = tau_circ(c4, 1);
    CHECK(t.m_idx == 1);
    CHECK(t.maximal_choices == std::vector<int>{1});
    CHECK(t.quotient->group()->order == 2);
    CHECK(t.quotient_s == 0);
    CHECK(t.quotient->display_name() == "C2");
    CHECK(t.proj.kernel.members == c4->lattice().subs[1]);

    // (C2, 1) is already a T-circ-slice, so tau is the identity reduction
    auto c2 = ctx_of("C 2");
    TauResult t2 = tau_circ(c2, 0);
    CHECK(t2.m_idx == 0);
    CHECK(t2.quotient.get() == c2.get());
    CHECK(t2.quotient_s == 0);

    // (G, G) always collapses to the trivial slice
    auto s3 = ctx_of("S 3");
    TauResult t3 = tau_circ(s3, 5);
    CHECK(t3.m_idx == 5);
    CHECK(t3.quotient->group()->order == 1);
    CHECK(t3.quotient_s == 0);

    TauResult t4 = tau_circ(c4, 2);
    CHECK(t4.quotient->group()->order == 1);
}

#pragma once

#include "tslice/context.hpp"

namespace tslice {

// Element of the Burnside ring written in the transitive basis [G/K].
// Coefficients are keyed by the class representative of K; zeros are not
// stored.
struct BurnsideElement {
    CtxPtr ctx;
    std::map<int, Rational> coeff;

    bool is_zero() const { return coeff.empty(); }
};

BurnsideElement burnside_zero(CtxPtr ctx);
BurnsideElement burnside_basis(CtxPtr ctx, int k_idx); // [G/K]

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement operator*(const Rational& c, const BurnsideElement& a);
bool operator==(const BurnsideElement& a, const BurnsideElement& b);

// Primitive idempotent attached to the subgroup H:
//   e_H = (1/|N_G(H)|) * sum over K <= H of |K| mu(K, H) [G/K].
BurnsideElement idempotent_e(CtxPtr ctx, int h_idx);

// Deflation along a normal subgroup N: [G/K] -> [(G/N)/(KN/N)]. The result
// lives on the cached quotient context.
BurnsideElement deflate_burnside(const BurnsideElement& a, int n_idx);

// Deflation constant:
//   m_{G,N} = (1/|G|) * sum over X with XN = G of |X| mu(X, G),
// so Def e_G = m_{G,N} e_{G/N}. Memoized on the context.
const Rational& m_constant(GroupCtx& ctx, int n_idx);

struct BGroupCert {
    bool is_b_group;
    int witness; // nontrivial normal subgroup with m != 0, or -1
};

// A group is a B-group when m_{G,N} = 0 for every nontrivial normal N.
BGroupCert is_b_group(GroupCtx& ctx);

struct BetaResult {
    CtxPtr quotient;                  // the resulting group G/N
    int n_idx;                        // chosen normal subgroup
    std::vector<int> maximal_choices; // all inclusion-maximal witnesses
};

// Largest quotient of G that is a B-group: G/N for N inclusion-maximal among
// normal subgroups with m_{G,N} != 0. All maximal choices give isomorphic
// quotients and the result is a B-group; both facts are re-checked.
BetaResult beta(CtxPtr ctx);

} // namespace tslice

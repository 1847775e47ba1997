#pragma once

#include "tslice/burnside.hpp"

namespace tslice {

// Element of the slice Burnside ring written in the basis <T,S> indexed by
// slice conjugacy classes. Zeros are not stored.
struct SliceBurnsideElement {
    CtxPtr ctx;
    std::map<int, Rational> coeff; // slice class index -> coefficient

    bool is_zero() const { return coeff.empty(); }
};

SliceBurnsideElement slice_zero(CtxPtr ctx);
SliceBurnsideElement slice_basis(CtxPtr ctx, int t_idx, int s_idx); // <T,S>

SliceBurnsideElement operator+(const SliceBurnsideElement& a, const SliceBurnsideElement& b);
SliceBurnsideElement operator*(const Rational& c, const SliceBurnsideElement& a);
bool operator==(const SliceBurnsideElement& a, const SliceBurnsideElement& b);

// N_G(T) intersect N_G(S), the stabilizer of the pair under conjugation.
int slice_normalizer_idx(GroupCtx& ctx, int t_idx, int s_idx);

// Primitive idempotent attached to the slice (T, S):
//   xi_{T,S} = (1/|N_G(T,S)|) * sum over U <= S and S <= V <= T of
//              |U| mu(U,S) mu(V,T) <V,U>.
// The inner Moebius values are taken in the lattices of S and of T.
SliceBurnsideElement xi_idempotent(CtxPtr ctx, int t_idx, int s_idx);

// Deflation along a normal subgroup N: <V,U> -> <VN/N, UN/N> on the cached
// quotient context.
SliceBurnsideElement deflate_slice(const SliceBurnsideElement& a, int n_idx);

// m^o_{G,S,N} = sum over X with S <= X <= G and XN = G of mu(X, G).
// Always an integer. Memoized on the context.
long long m_circ(GroupCtx& ctx, int s_idx, int n_idx);

// Slice deflation constant, Def xi_{G,S} = m_{G,S,N} xi_{G/N,SN/N}; two
// independent evaluators, kept separate on purpose:
//   direct:   (|N_G(SN):SN| / |N_G(S)|) * sum over U <= S, S <= V <= G with
//             VN = G and UN = SN of |U| mu(U,S) mu(V,G)
//   factored: (|N_G(SN):SN| / |N_G(S):S|) * m_{S,S^N} * m^o_{G,S,N}
Rational m_slice_direct(GroupCtx& ctx, int s_idx, int n_idx);
Rational m_slice_factored(GroupCtx& ctx, int s_idx, int n_idx);

// Computes both evaluators, traps any disagreement, memoizes.
const Rational& m_slice(GroupCtx& ctx, int s_idx, int n_idx);

struct TSliceCert {
    bool holds;
    int witness; // first nontrivial normal N with m_{G,S,N} != 0, or -1
    std::vector<std::pair<int, Rational>> table; // all normal N, ascending
};

struct TCircCert {
    bool holds;
    int witness;
    std::vector<std::pair<int, long long>> table;
};

// (G,S) is a T-slice / T°-slice when the respective constant vanishes for
// every nontrivial normal N of G.
TSliceCert is_t_slice(GroupCtx& ctx, int s_idx);
TCircCert is_t_circ_slice(GroupCtx& ctx, int s_idx);

// Slices here are in reduced form (T, S) with T the whole ambient group; a
// general pair reduces via rooted_slice.
struct RootedSlice {
    CtxPtr ctx;
    int s_idx;
};
RootedSlice rooted_slice(GroupCtx& ctx, int t_idx, int s_idx);

// Isomorphism of slices: group isomorphism of the ambients carrying one S
// onto the other.
std::optional<GroupMap> slice_iso(GroupCtx& a, int sa_idx, GroupCtx& b, int sb_idx);

struct SliceQuotientWitness {
    int m_idx;    // normal subgroup of the source ambient
    GroupMap iso; // source/M -> target ambient, carrying the slice subgroups
};

// Does (a, sa) surject onto (b, sb) as slices? Searches every normal M of a.
std::optional<SliceQuotientWitness> slice_quotient_witness(GroupCtx& a, int sa_idx, GroupCtx& b,
                                                           int sb_idx);

struct TauResult {
    CtxPtr quotient;                  // ambient group of the result, G/M
    int quotient_s;                   // index of SM/M in the quotient lattice
    int m_idx;                        // chosen witness M
    std::vector<int> maximal_choices; // all inclusion-maximal witnesses
    GroupMap proj;                    // G -> G/M
};

// Largest quotient T°-slice of (G, S): (G/M, SM/M) for M inclusion-maximal
// among normal subgroups with m^o_{G,S,M} != 0, smallest lattice index on
// ties. The result is re-checked to be a T°-slice and all maximal choices
// re-checked to give isomorphic slices.
TauResult tau_circ(CtxPtr ctx, int s_idx);

} // namespace tslice

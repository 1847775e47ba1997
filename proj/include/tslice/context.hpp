#pragma once

#include <memory>
#include <optional>

#include "tslice/lattice.hpp"
#include "tslice/rational.hpp"

namespace tslice {

class GroupCtx;
using CtxPtr = std::shared_ptr<GroupCtx>;

struct QuotientCtx {
    CtxPtr ctx;
    GroupMap proj; // parent group -> quotient group
};

struct RootedCtx {
    CtxPtr ctx;
    std::vector<int> to_parent;
    std::vector<int> from_parent; // -1 outside the subgroup
};

// Shared per-group workspace: the lattice, the Moebius table and the slice
// classes are built on first use, and quotient/subgroup contexts are cached
// so repeated reductions share their own workspaces in turn.
class GroupCtx : public std::enable_shared_from_this<GroupCtx> {
public:
    static CtxPtr make(GroupPtr g);

    const GroupPtr& group() const { return g_; }
    const std::string& display_name(); // recognized structure name, cached

    const SubgroupLattice& lattice();
    const MobiusTable& mobius();
    const SliceClasses& slice_classes();
    bool lattice_ready() const { return lat_.has_value(); }

    // Preload lattice artifacts (from a cache); ignored once built.
    void adopt_lattice(SubgroupLattice lat, MobiusTable mob);

    // n_idx must be a normal subgroup index. The bottom index yields this
    // context itself under the identity projection.
    const QuotientCtx& quotient_by(int n_idx);

    // The top index yields this context itself under identity coordinates.
    const RootedCtx& rooted(int s_idx);

    // memo tables for deflation constants, keyed by lattice indices
    std::map<int, Rational> memo_m;                          // N
    std::map<std::pair<int, int>, long long> memo_mcirc;     // (S, N)
    std::map<std::pair<int, int>, Rational> memo_mslice;     // (S, N)

private:
    explicit GroupCtx(GroupPtr g) : g_(std::move(g)) {}

    GroupPtr g_;
    std::optional<std::string> name_;
    std::optional<SubgroupLattice> lat_;
    std::optional<MobiusTable> mob_;
    std::optional<SliceClasses> slc_;
    std::map<int, QuotientCtx> quotients_;
    std::map<int, RootedCtx> rooted_;
};

} // namespace tslice

#include "tslice/context.hpp"

#include <numeric>

namespace tslice {

CtxPtr GroupCtx::make(GroupPtr g) { return CtxPtr(new GroupCtx(std::move(g))); }

const std::string& GroupCtx::display_name() {
    if (!name_) name_ = describe_group(*g_);
    return *name_;
}

const SubgroupLattice& GroupCtx::lattice() {
    if (!lat_) lat_ = build_lattice(g_);
    return *lat_;
}

const MobiusTable& GroupCtx::mobius() {
    if (!mob_) mob_ = mobius_table(lattice());
    return *mob_;
}

const SliceClasses& GroupCtx::slice_classes() {
    if (!slc_) slc_ = build_slice_classes(lattice());
    return *slc_;
}

void GroupCtx::adopt_lattice(SubgroupLattice lat, MobiusTable mob) {
    if (lat_) return;
    lat_ = std::move(lat);
    mob_ = std::move(mob);
}

const QuotientCtx& GroupCtx::quotient_by(int n_idx) {
    auto it = quotients_.find(n_idx);
    if (it != quotients_.end()) return it->second;

    const SubgroupLattice& lat = lattice();
    if (!lat.is_normal_idx(n_idx)) throw Error("quotient_by: subgroup is not normal");

    QuotientCtx qc;
    if (n_idx == lat.bottom()) {
        std::vector<int> id(g_->order);
        std::iota(id.begin(), id.end(), 0);
        qc = QuotientCtx{shared_from_this(), make_group_map(g_, g_, std::move(id))};
    } else {
        QuotientGroup q = quotient_group(Subgroup{g_, lat.subs[n_idx]});
        qc = QuotientCtx{GroupCtx::make(q.group), std::move(q.projection)};
    }
    return quotients_.emplace(n_idx, std::move(qc)).first->second;
}

const RootedCtx& GroupCtx::rooted(int s_idx) {
    auto it = rooted_.find(s_idx);
    if (it != rooted_.end()) return it->second;

    const SubgroupLattice& lat = lattice();
    RootedCtx rc;
    if (s_idx == lat.top()) {
        std::vector<int> id(g_->order);
        std::iota(id.begin(), id.end(), 0);
        rc = RootedCtx{shared_from_this(), id, id};
    } else {
        RootedSubgroup r = as_group(Subgroup{g_, lat.subs[s_idx]});
        rc = RootedCtx{GroupCtx::make(r.group), std::move(r.to_parent),
                       std::move(r.from_parent)};
    }
    return rooted_.emplace(s_idx, std::move(rc)).first->second;
}

} // namespace tslice

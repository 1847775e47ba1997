#pragma once

#include <string>

#include "tslice/context.hpp"

namespace tslice {

// Content key of a group: stable hash over the multiplication table.
std::string group_cache_key(const FiniteGroup& g);

// Try to preload the lattice and Moebius table from dir. Returns true on a
// hit; any unreadable or stale entry is ignored with a warning on stderr.
bool load_lattice_cache(GroupCtx& ctx, const std::string& dir);

// Persist the context's lattice artifacts (building them if needed). An
// unwritable directory warns on stderr and is otherwise ignored.
void store_lattice_cache(GroupCtx& ctx, const std::string& dir);

} // namespace tslice

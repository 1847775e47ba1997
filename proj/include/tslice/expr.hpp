#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tslice/group.hpp"

namespace tslice {

// Group expression mini-language:
//   expr := term ("x" term)*            products, left-associative
//   term := FAMILY | "gens:" cyclelist | "(" expr ")"
//   FAMILY := C n | D n | S n | A n | Q 8 | E p^k   (case-insensitive letter)
// Whitespace-insensitive; parse and pretty round-trip exactly.
struct GroupExpr;
using ExprPtr = std::shared_ptr<const GroupExpr>;

struct GroupExpr {
    enum class Kind { Family, Gens, Product };
    Kind kind = Kind::Family;

    char letter = 'C'; // family letter, normalized upper-case
    int n = 0;         // C/D/S/A/Q parameter
    int p = 0, k = 0;  // E p^k parameters

    std::vector<Permutation> gens;

    ExprPtr left, right;
};

ExprPtr parse_group_expr(const std::string& text);
std::string pretty_expr(const GroupExpr& e);
bool expr_equal(const GroupExpr& a, const GroupExpr& b);

// Builds the group; the label is exactly pretty_expr(e).
GroupPtr build_group(const GroupExpr& e, const BuildConfig& cfg);

} // namespace tslice

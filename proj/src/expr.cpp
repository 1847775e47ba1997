#include "tslice/expr.hpp"

#include <cctype>

namespace tslice {

namespace {

struct ExprScanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    int read_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) throw ParseError("expected an integer", start);
        long long v = std::stoll(text.substr(start, pos - start));
        if (v > 1'000'000) throw ParseError("integer too large", start);
        return int(v);
    }

    ExprPtr parse_expr() {
        ExprPtr acc = parse_term();
        while (!at_end() && (peek() == 'x' || peek() == 'X')) {
            // 'x' is the product separator; family letters never use it
            ++pos;
            ExprPtr rhs = parse_term();
            auto prod = std::make_shared<GroupExpr>();
            prod->kind = GroupExpr::Kind::Product;
            prod->left = std::move(acc);
            prod->right = std::move(rhs);
            acc = std::move(prod);
        }
        return acc;
    }

    ExprPtr parse_term() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("expected a group term", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_expr();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw ParseError("expected ')'", pos);
            ++pos;
            return inner;
        }
        if (!std::isalpha((unsigned char)c)) throw ParseError("expected a group term", pos);

        // "gens:" prefix?
        if ((c == 'g' || c == 'G') && text.compare(pos, 5, "gens:") == 0) {
            pos += 5;
            return parse_gens();
        }

        char fam = char(std::toupper((unsigned char)c));
        std::size_t letter_pos = pos;
        ++pos;
        auto e = std::make_shared<GroupExpr>();
        e->kind = GroupExpr::Kind::Family;
        e->letter = fam;
        switch (fam) {
        case 'C':
        case 'D':
        case 'S':
        case 'A':
        case 'Q':
            e->n = read_int();
            break;
        case 'E': {
            e->p = read_int();
            skip_ws();
            if (pos >= text.size() || text[pos] != '^')
                throw ParseError("E p^k: expected '^'", pos);
            ++pos;
            e->k = read_int();
            break;
        }
        default:
            throw ParseError(std::string("unknown family letter '") + c + "'", letter_pos);
        }
        return e;
    }

    ExprPtr parse_gens() {
        auto e = std::make_shared<GroupExpr>();
        e->kind = GroupExpr::Kind::Gens;
        std::size_t list_start = pos;
        std::size_t list_end = pos;
        // a cycle list is "(...)" ("," "(...)")*; scan its extent, then reuse
        // the permutation parser on the slice
        while (true) {
            skip_ws();
            if (pos >= text.size() || text[pos] != '(')
                throw ParseError("gens: expected '('", pos);
            while (pos < text.size() && text[pos] != ')') ++pos;
            if (pos >= text.size()) throw ParseError("gens: unterminated cycle", pos);
            ++pos;
            // consecutive cycles of one permutation: another '(' with no comma
            skip_ws();
            if (pos < text.size() && text[pos] == '(') continue;
            list_end = pos;
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        e->gens = parse_permutation_list(text.substr(list_start, list_end - list_start));
        return e;
    }
};

std::string family_spec_of(const GroupExpr& e) {
    if (e.letter == 'E')
        return std::string("E ") + std::to_string(e.p) + "^" + std::to_string(e.k);
    return std::string(1, e.letter) + " " + std::to_string(e.n);
}

} // namespace

ExprPtr parse_group_expr(const std::string& text) {
    ExprScanner sc{text};
    ExprPtr e = sc.parse_expr();
    if (!sc.at_end()) throw ParseError("trailing input after expression", sc.pos);
    return e;
}

std::string pretty_expr(const GroupExpr& e) {
    switch (e.kind) {
    case GroupExpr::Kind::Family:
        if (e.letter == 'E')
            return "E" + std::to_string(e.p) + "^" + std::to_string(e.k);
        return std::string(1, e.letter) + std::to_string(e.n);
    case GroupExpr::Kind::Gens: {
        std::string out = "gens:";
        for (std::size_t i = 0; i < e.gens.size(); ++i)
            out += (i ? ", " : " ") + cycle_string(e.gens[i]);
        return out;
    }
    case GroupExpr::Kind::Product: {
        std::string l = pretty_expr(*e.left);
        if (e.left->kind == GroupExpr::Kind::Gens) l = "(" + l + ")";
        std::string r = pretty_expr(*e.right);
        if (e.right->kind != GroupExpr::Kind::Family) r = "(" + r + ")";
        return l + " x " + r;
    }
    }
    throw Error("pretty_expr: bad expression kind");
}

bool expr_equal(const GroupExpr& a, const GroupExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case GroupExpr::Kind::Family:
        return a.letter == b.letter && a.n == b.n && a.p == b.p && a.k == b.k;
    case GroupExpr::Kind::Gens:
        return a.gens == b.gens;
    case GroupExpr::Kind::Product:
        return expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
    }
    return false;
}

GroupPtr build_group(const GroupExpr& e, const BuildConfig& cfg) {
    GroupPtr raw;
    switch (e.kind) {
    case GroupExpr::Kind::Family:
        raw = builtin_group(family_spec_of(e), cfg);
        break;
    case GroupExpr::Kind::Gens:
        raw = group_from_generators(e.gens, cfg);
        break;
    case GroupExpr::Kind::Product: {
        DirectProduct dp =
            direct_product(build_group(*e.left, cfg), build_group(*e.right, cfg), cfg);
        raw = dp.group;
        break;
    }
    }
    std::string want = pretty_expr(e);
    if (raw->label == want) return raw;
    return make_group(raw->order, raw->mul, raw->generators, want);
}

} // namespace tslice

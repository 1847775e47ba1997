#include "tslice/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "tslice/error.hpp"

namespace tslice {

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images[i] != i) return false;
    return true;
}

Permutation Permutation::identity(int degree) {
    Permutation p;
    p.images.resize(degree);
    for (int i = 0; i < degree; ++i) p.images[i] = i;
    return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error("compose: degree mismatch");
    Permutation r;
    r.images.resize(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.images[i] = p.images[q.images[i]];
    return r;
}

Permutation inverse(const Permutation& p) {
    Permutation r;
    r.images.resize(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.images[p.images[i]] = i;
    return r;
}

void validate_permutation(const Permutation& p) {
    std::vector<bool> seen(p.degree(), false);
    for (int v : p.images) {
        if (v < 0 || v >= p.degree() || seen[v])
            throw Error("permutation image table is not a bijection");
        seen[v] = true;
    }
}

std::string cycle_string(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.degree(), false);
    for (int i = 0; i < p.degree(); ++i) {
        if (done[i] || p.images[i] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j);
            done[j] = true;
            j = p.images[j];
            first = false;
        } while (j != i);
        out += ")";
    }
    if (out.empty()) out = "()";
    return out;
}

namespace {

struct CycleScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
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
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a point (non-negative integer)", start);
        long v = std::stol(std::string(text.substr(start, pos - start)));
        if (v > 1'000'000) throw ParseError("point out of range", start);
        return int(v);
    }

    // one "(a b c)" group; returns the point list
    std::vector<int> read_cycle() {
        skip_ws();
        if (peek() != '(') throw ParseError("expected '('", pos);
        ++pos;
        std::vector<int> pts;
        while (peek() != ')') {
            if (at_end()) throw ParseError("unterminated cycle", pos);
            int v = read_int();
            if (std::find(pts.begin(), pts.end(), v) != pts.end())
                throw ParseError("point repeated inside a cycle", pos);
            pts.push_back(v);
        }
        ++pos; // ')'
        return pts;
    }
};

Permutation cycle_to_perm(const std::vector<int>& pts, int degree) {
    Permutation p = Permutation::identity(degree);
    for (std::size_t i = 0; i < pts.size(); ++i)
        p.images[pts[i]] = pts[(i + 1) % pts.size()];
    return p;
}

} // namespace

std::vector<Permutation> parse_permutation_list(std::string_view text) {
    CycleScanner sc{text};
    std::vector<std::vector<std::vector<int>>> perms; // perm -> cycles -> points
    int max_point = -1;

    perms.emplace_back();
    while (!sc.at_end()) {
        char c = sc.peek();
        if (c == ',') {
            ++sc.pos;
            if (perms.back().empty()) throw ParseError("empty permutation before ','", sc.pos);
            perms.emplace_back();
        } else if (c == '(') {
            auto pts = sc.read_cycle();
            for (int v : pts) max_point = std::max(max_point, v);
            perms.back().push_back(std::move(pts));
        } else {
            throw ParseError("unexpected character in cycle list", sc.pos);
        }
    }
    if (perms.back().empty()) throw ParseError("empty permutation", sc.pos);

    int degree = max_point + 1;
    std::vector<Permutation> out;
    out.reserve(perms.size());
    for (const auto& cycles : perms) {
        Permutation p = Permutation::identity(degree);
        for (const auto& pts : cycles) p = compose(p, cycle_to_perm(pts, degree));
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace tslice

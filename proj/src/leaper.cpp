#include "leaperlab/leaper.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace leaperlab {

Leaper::Leaper(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("leaper parameters must be nonnegative");
    if (a == 0 && b == 0) throw std::invalid_argument("leaper parameters cannot both be zero");
    p = std::min(a, b);
    q = std::max(a, b);
}

std::vector<Cell> Leaper::moves() const {
    std::set<Cell> out;
    for (int sx : {1, -1})
        for (int sy : {1, -1}) {
            out.insert({sx * p, sy * q});
            out.insert({sx * q, sy * p});
        }
    return {out.begin(), out.end()};
}

FreenessClass classify(const Leaper& l) {
    int d = std::gcd(l.p, l.q);
    long long dd = static_cast<long long>(d) * d;
    bool odd_sum = ((l.p + l.q) / d) % 2 != 0;
    long long comps = odd_sum ? dd : 2 * dd;
    if (d == 1) {
        return {odd_sum ? FreenessKind::Free : FreenessKind::HalfFree, 1, comps};
    }
    return {FreenessKind::NonRelativelyPrime, d, comps};
}

int mmod(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("mmod requires positive arguments");
    int r = s % t;
    return std::min(r, t - r);
}

std::pair<long long, long long> Ecf::value() const {
    if (coefficients.empty()) throw std::invalid_argument("empty ecf");
    long long num = coefficients[0], den = 1;
    for (size_t i = 1; i < coefficients.size(); ++i) {
        // c_{i+1} + eps_i / (num/den) = (c * num + eps * den) / num
        long long c = coefficients[i], e = signs[i - 1];
        long long n2 = c * num + e * den;
        std::swap(den, num);
        num = n2;
    }
    long long g = std::gcd(num, den);
    return {num / g, den / g};
}

namespace {

bool in_tree(const Leaper& l, TreeKind kind) {
    return kind == TreeKind::Free ? is_skew_free(l) : is_skew_half_free(l);
}

TreeKind tree_of(const Leaper& l) {
    if (is_skew_free(l)) return TreeKind::Free;
    if (is_skew_half_free(l)) return TreeKind::HalfFree;
    throw std::invalid_argument("leaper is not skew relatively prime");
}

}  // namespace

Leaper lift_leaper(const Leaper& l, LiftType t) {
    switch (t) {
        case LiftType::F: return Leaper(l.p, 2 * l.p + l.q);
        case LiftType::G: return Leaper(l.q, 2 * l.q - l.p);
        case LiftType::H: return Leaper(l.q, l.p + 2 * l.q);
    }
    throw std::logic_error("bad lift type");
}

std::optional<std::pair<Leaper, LiftType>> parent_and_type(const Leaper& l) {
    TreeKind kind = tree_of(l);
    if (l == tree_root(kind)) return std::nullopt;
    int p = l.p, q = l.q;
    if (3 * p < q) return {{Leaper(p, q - 2 * p), LiftType::F}};
    if (2 * p > q) return {{Leaper(2 * p - q, p), LiftType::G}};
    return {{Leaper(q - 2 * p, p), LiftType::H}};
}

char lift_char(LiftType t) {
    switch (t) {
        case LiftType::F: return 'f';
        case LiftType::G: return 'g';
        case LiftType::H: return 'h';
    }
    return '?';
}

std::optional<LiftType> lift_from_char(char c) {
    switch (c) {
        case 'f': return LiftType::F;
        case 'g': return LiftType::G;
        case 'h': return LiftType::H;
    }
    return std::nullopt;
}

Leaper tree_root(TreeKind kind) {
    return kind == TreeKind::Free ? Leaper(1, 2) : Leaper(1, 3);
}

std::string descent(const Leaper& l) {
    std::string word;
    Leaper cur = l;
    for (auto up = parent_and_type(cur); up; up = parent_and_type(cur)) {
        word.push_back(lift_char(up->second));
        cur = up->first;
    }
    return word;
}

Leaper leaper_of(const std::string& word, TreeKind kind) {
    Leaper cur = tree_root(kind);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto t = lift_from_char(*it);
        if (!t) throw std::invalid_argument("descent word must be over {f,g,h}");
        cur = lift_leaper(cur, *t);
    }
    return cur;
}

Ecf ecf(const Leaper& l) {
    TreeKind kind = tree_of(l);
    // reverse the parent chain, then replay the child rules from the root up
    std::vector<LiftType> chain;
    Leaper cur = l;
    for (auto up = parent_and_type(cur); up; up = parent_and_type(cur)) {
        chain.push_back(up->second);
        cur = up->first;
    }
    Ecf e;
    e.coefficients.push_back(kind == TreeKind::Free ? 2 : 3);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        switch (*it) {
            case LiftType::F: e.coefficients.back() += 2; break;
            case LiftType::G:
                e.coefficients.push_back(2);
                e.signs.push_back(-1);
                break;
            case LiftType::H:
                e.coefficients.push_back(2);
                e.signs.push_back(+1);
                break;
        }
    }
    return e;
}

std::string descent_from_ecf(const Ecf& e, TreeKind kind) {
    // read the bracket [c_k, eps_{k-1}, ..., c_1] left to right
    std::string word;
    for (int i = e.depth() - 1; i >= 0; --i) {
        int c = e.coefficients[i];
        int reps = (i == 0 && kind == TreeKind::HalfFree) ? (c - 3) / 2 : c / 2 - 1;
        word.append(static_cast<size_t>(reps), 'f');
        if (i > 0) word.push_back(e.signs[i - 1] < 0 ? 'g' : 'h');
    }
    return word;
}

std::vector<Leaper> tails(const Leaper& l) {
    TreeKind kind = tree_of(l);
    std::vector<Leaper> down;
    Leaper cur = l;
    while (true) {
        down.push_back(cur);
        if (cur.p == 0) break;                              // wazir, free chain done
        if (cur.p == 1 && kind == TreeKind::HalfFree) break;  // innermost half-free tail
        int r = mmod(cur.q, 2 * cur.p);
        cur = (r == 0) ? Leaper(0, 1) : Leaper(r, cur.p);
    }
    std::reverse(down.begin(), down.end());
    return down;
}

int depth(const Leaper& l) {
    auto ts = tails(l);
    return static_cast<int>(ts.size()) - (tree_of(l) == TreeKind::Free ? 1 : 0);
}

std::array<Leaper, 3> tree_children(const Leaper& l) {
    return {lift_leaper(l, LiftType::F), lift_leaper(l, LiftType::G),
            lift_leaper(l, LiftType::H)};
}

std::vector<TreeEntry> tree_enumerate(int bound, TreeKind kind) {
    std::vector<TreeEntry> out;
    Leaper root = tree_root(kind);
    if (bound < root.sum()) return out;
    std::vector<Leaper> frontier{root};
    while (!frontier.empty()) {
        std::vector<Leaper> next;
        for (const Leaper& l : frontier) {
            Ecf e = ecf(l);
            out.push_back({l, e.depth(), descent(l), e});
            for (const Leaper& c : tree_children(l))
                if (c.sum() <= bound) next.push_back(c);
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const TreeEntry& a, const TreeEntry& b) {
        return std::pair(a.leaper.sum(), a.leaper.p) < std::pair(b.leaper.sum(), b.leaper.p);
    });
    return out;
}

}  // namespace leaperlab

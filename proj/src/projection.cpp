#include "leaperlab/projection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace leaperlab {

Projection::Projection(int a_, int b_, int lo_, int hi_) : a(a_), b(b_), lo(lo_), hi(hi_) {
    if (a < 1 || b <= a) throw std::invalid_argument("projection needs 0 < a < b");
    if (lo > hi) throw std::invalid_argument("empty projection interval");
}

Projection::Projection(int a_, int b_, int s) : Projection(a_, b_, 0, s - 1) {}

bool Projection::adjacent(int u, int v) const {
    int d = std::abs(u - v);
    return contains(u) && contains(v) && (d == a || d == b);
}

std::vector<int> Projection::neighbors(int v) const {
    std::vector<int> out;
    for (int d : {-b, -a, a, b})
        if (contains(v + d)) out.push_back(v + d);
    return out;
}

std::vector<std::vector<int>> Projection::components() const {
    int s = size();
    std::vector<int> label(s, -1);
    std::vector<std::vector<int>> comps;
    for (int i = 0; i < s; ++i) {
        if (label[i] >= 0) continue;
        int id = static_cast<int>(comps.size());
        std::vector<int> stack{i}, verts;
        label[i] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u + lo);
            for (int w : neighbors(u + lo)) {
                int j = w - lo;
                if (label[j] < 0) {
                    label[j] = id;
                    stack.push_back(j);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        comps.push_back(std::move(verts));
    }
    return comps;
}

std::vector<int> Projection::component_of(int v) const {
    if (!contains(v)) throw std::invalid_argument("vertex outside projection interval");
    for (auto& c : components())
        if (std::binary_search(c.begin(), c.end(), v)) return c;
    return {};
}

std::vector<std::pair<int, int>> Projection::edges_within(const std::vector<int>& verts) const {
    std::vector<std::pair<int, int>> out;
    for (int v : verts)
        for (int d : {a, b})
            if (contains(v + d) && std::binary_search(verts.begin(), verts.end(), v + d))
                out.emplace_back(v, v + d);
    return out;
}

std::string signature_steps(int a, int b, const std::vector<int>& walk) {
    std::string sig;
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
        int d = std::abs(walk[i + 1] - walk[i]);
        if (d == a)
            sig.push_back('s');
        else if (d == b)
            sig.push_back('l');
        else
            throw std::invalid_argument("not a projection walk");
    }
    return sig;
}

std::string signature(const Projection& pi, const std::vector<int>& walk) {
    for (int v : walk)
        if (!pi.contains(v)) throw std::invalid_argument("walk leaves the interval");
    return signature_steps(pi.a, pi.b, walk);
}

bool complements(const std::string& sigma, const std::string& tau) {
    if (sigma.size() != tau.size()) return false;
    for (size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] == tau[i]) return false;
    return true;
}

namespace {

// Orient a path component so that the first step is a short ascent (the
// paper's left-to-right reading); non-path components yield an empty result.
std::vector<int> path_order(const Projection& pi, const std::vector<int>& comp) {
    if (comp.size() == 1) return comp;
    std::map<int, std::vector<int>> adj;
    for (int v : comp) adj[v] = pi.neighbors(v);
    std::vector<int> ends;
    size_t edge_twice = 0;
    for (auto& [v, ns] : adj) {
        if (ns.size() > 2) return {};
        if (ns.size() == 1) ends.push_back(v);
        edge_twice += ns.size();
    }
    if (ends.size() != 2 || edge_twice / 2 != comp.size() - 1) return {};
    auto traverse = [&](int start) {
        std::vector<int> order{start};
        int prev = start, cur = adj[start][0];
        while (true) {
            order.push_back(cur);
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next == -1) break;
            prev = cur;
            cur = next;
        }
        return order;
    };
    for (int start : ends) {
        auto order = traverse(start);
        if (order.size() == comp.size() && order[1] - order[0] == pi.a) return order;
    }
    auto order = traverse(std::min(ends[0], ends[1]));
    return order.size() == comp.size() ? order : std::vector<int>{};
}

}  // namespace

WeaveClass classify_weave(const Projection& pi, const std::vector<int>& comp) {
    WeaveClass out{};
    if (comp.size() == 1) {
        out.kind = WeaveKind::Simple;
        out.singleton = true;
        return out;
    }
    std::vector<int> order = path_order(pi, comp);
    if (order.empty()) {
        // contains a cycle: never a weave (acyclicity for a = short moves of
        // p = 1; for p >= 2 a cyclic component spans the whole interval and
        // carries both parities of l s^t l)
        out.kind = WeaveKind::NonWeave;
        return out;
    }
    std::string sig = signature_steps(pi.a, pi.b, order);
    bool any_long = sig.find('l') != std::string::npos;
    if (!any_long) {
        out.kind = WeaveKind::Simple;
        return out;
    }
    if (pi.a == 1) {
        // acyclic components of Pi(1, q, s) are all-short paths; a path with
        // a long edge can only arise inside a cyclic graph, handled above
        out.kind = WeaveKind::NonWeave;
        return out;
    }
    // runs of short edges strictly between two long edges must be even
    std::vector<int> runs;          // short-edge counts s_0..s_d
    runs.push_back(0);
    for (char c : sig) {
        if (c == 's')
            ++runs.back();
        else
            runs.push_back(0);
    }
    bool weave = true;
    for (size_t i = 1; i + 1 < runs.size(); ++i)
        if (runs[i] % 2 != 0) weave = false;
    if (!weave) {
        out.kind = WeaveKind::NonWeave;
        return out;
    }
    out.kind = WeaveKind::Compound;
    out.long_edges = static_cast<int>(runs.size()) - 1;
    out.subpath_lengths = runs;
    // w_{i,j} labels: groups of vertices between long edges, walked left to
    // right; label offsets follow the eps = -1 boundary convention
    int r = mmod(pi.b, 2 * pi.a);
    int eps = (pi.b % (2 * pi.a) == r) ? +1 : -1;
    out.groups.emplace_back();
    for (size_t i = 0; i < order.size(); ++i) {
        out.groups.back().push_back(order[i]);
        if (i + 1 < order.size() && std::abs(order[i + 1] - order[i]) == pi.b)
            out.groups.emplace_back();
    }
    for (size_t i = 0; i < out.groups.size(); ++i)
        out.group_label_start.push_back(i == 0 && eps == -1 ? 1 : 0);
    return out;
}

bool is_weave(const Projection& pi, const std::vector<int>& comp) {
    return classify_weave(pi, comp).kind != WeaveKind::NonWeave;
}

WeaveThresholds weave_thresholds(int p, int q) {
    if (p < 1 || q <= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("weave thresholds need relatively prime p < q");
    WeaveThresholds t{};
    if (p == 1) {
        t.simple_bound = q + 1;
        t.weave_bound = q + 1;
        t.nonsingleton_lower = 1;
        t.nonsingleton_upper = q + 1;
        return t;
    }
    t.simple_bound = p + q - mmod(q, p);
    int r = mmod(q, 2 * p);
    t.weave_bound = p + q - mmod(p, r);
    t.nonsingleton_lower = p;
    t.nonsingleton_upper = (4 * p < 3 * q) ? p + q - mmod(p, r) : 3 * q - 2 * p;
    return t;
}

bool has_unbalanced_closed_walk(const Projection& pi) {
    int d = std::gcd(pi.a, pi.b);
    return pi.size() >= pi.a + pi.b - d + 1;
}

bool unbalanced_closed_walk_oracle(const Projection& pi) {
    // spanning forest; a fundamental cycle is unbalanced iff its signed short
    // step count is nonzero
    int s = pi.size();
    std::vector<int> label(s, -1);
    std::vector<long long> short_count(s, 0);  // signed short steps from the root
    for (int i = 0; i < s; ++i) {
        if (label[i] >= 0) continue;
        label[i] = i;
        std::vector<int> stack{i};
        while (!stack.empty()) {
            int u = stack.back();  // index into [0, s)
            stack.pop_back();
            for (int d : {-pi.b, -pi.a, pi.a, pi.b}) {
                int j = u + d;
                if (j < 0 || j >= s) continue;
                long long step = (std::abs(d) == pi.a) ? (d > 0 ? 1 : -1) : 0;
                if (label[j] < 0) {
                    label[j] = i;
                    short_count[j] = short_count[u] + step;
                    stack.push_back(j);
                } else if (short_count[u] + step != short_count[j]) {
                    return true;  // unbalanced fundamental cycle
                }
            }
        }
    }
    return false;
}

ZipResult zip_walks(const std::vector<int>& chi, const std::vector<int>& upsilon, int a, int b) {
    ZipResult res;
    if (chi.size() != upsilon.size()) {
        res.error = "walk lengths differ";
        return res;
    }
    if (chi.empty()) {
        res.error = "empty walks";
        return res;
    }
    std::string sigma = signature_steps(a, b, chi);
    std::string tau = signature_steps(a, b, upsilon);
    if (!complements(sigma, tau)) {
        res.error = "signatures are not complements";
        return res;
    }
    res.ok = true;
    res.walk.reserve(chi.size());
    for (size_t i = 0; i < chi.size(); ++i) res.walk.push_back({chi[i], upsilon[i]});
    return res;
}

FourCycleResult walk_on_four_cycle(const Projection& pi_x, const Projection& pi_y,
                                   const std::vector<int>& chi, int u, int y1) {
    FourCycleResult res;
    int p = pi_y.a, q = pi_y.b;
    if (!pi_y.contains(u) || !pi_y.contains(u + p + q)) {
        res.error = "4-cycle not contained in Pi_Y";
        return res;
    }
    if (y1 != u && y1 != u + p && y1 != u + q && y1 != u + p + q) {
        res.error = "start row not on the 4-cycle";
        return res;
    }
    if (chi.empty()) {
        res.error = "empty x-walk";
        return res;
    }
    std::string sigma = signature(pi_x, chi);
    // each cycle vertex has exactly one short and one long cycle edge
    auto step = [&](int y, char want) {
        int other;
        if (y == u) other = want == 's' ? u + p : u + q;
        else if (y == u + p) other = want == 's' ? u : u + p + q;
        else if (y == u + q) other = want == 's' ? u + p + q : u;
        else other = want == 's' ? u + q : u + p;
        return other;
    };
    res.ok = true;
    res.walk.push_back({chi[0], y1});
    int y = y1;
    for (size_t i = 0; i < sigma.size(); ++i) {
        char complement = sigma[i] == 's' ? 'l' : 's';
        y = step(y, complement);
        res.walk.push_back({chi[i + 1], y});
    }
    return res;
}

}  // namespace leaperlab

#include <algorithm>
#include <functional>

#include "mg/compiler.hpp"
#include "mg/errors.hpp"

namespace mg {

std::optional<CombStructure> detect_hair_comb(const InteractionGraph& g) {
    const int n = g.vertex_count();
    if (n % 2 != 0) return std::nullopt;
    if (n == 2) {
        if (g.edge_count() != 1) return std::nullopt;
        return CombStructure{{0}, {1}};
    }
    std::vector<int> teeth;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) teeth.push_back(v);
    if (static_cast<int>(teeth.size()) != n / 2) return std::nullopt;

    std::vector<int> tooth_of(n, -1);
    std::vector<bool> is_spine(n, false);
    for (int t : teeth) {
        int spine = g.neighbors(t)[0];
        if (g.degree(spine) == 1 || tooth_of[spine] >= 0) return std::nullopt;
        tooth_of[spine] = t;
        is_spine[spine] = true;
    }
    // spines must form a path; walk it from the lower-id end
    std::vector<int> ends;
    for (int v = 0; v < n; ++v) {
        if (!is_spine[v]) continue;
        int spine_nbrs = 0;
        for (int w : g.neighbors(v))
            if (is_spine[w]) ++spine_nbrs;
        if (spine_nbrs + 1 != g.degree(v)) return std::nullopt;  // only teeth besides spine links
        if (spine_nbrs == 1) ends.push_back(v);
        if (spine_nbrs > 2) return std::nullopt;
    }
    if (ends.size() != 2) return std::nullopt;
    CombStructure comb;
    int prev = -1, cur = std::min(ends[0], ends[1]);
    while (cur != -1) {
        comb.backbone.push_back(cur);
        comb.tooth.push_back(tooth_of[cur]);
        int next = -1;
        for (int w : g.neighbors(cur))
            if (is_spine[w] && w != prev) next = w;
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(comb.backbone.size()) != n / 2) return std::nullopt;
    return comb;
}

std::optional<CycleSiteStructure> detect_cycle_with_site(const InteractionGraph& g, int min_len,
                                                         long long budget) {
    const int n = g.vertex_count();
    if (n < 4) return std::nullopt;
    for (int site = 0; site < n; ++site) {
        if (g.degree(site) < 1) continue;
        // longest cycle in g - site that touches a neighbor of site
        InteractionGraph rest(n);  // same ids, site isolated
        for (auto [u, v] : g.edges())
            if (u != site && v != site) rest.add_edge(u, v);
        auto found = longest_cycle_exact(rest, budget);
        if (found.witness.empty() || found.lower_bound < std::max(min_len, 3)) continue;
        const auto& cyc = found.witness;
        std::vector<bool> on_cycle(n, false);
        for (int v : cyc) on_cycle[v] = true;
        int anchor = -1;
        for (int w : g.neighbors(site))
            if (on_cycle[w]) anchor = anchor < 0 ? w : std::min(anchor, w);
        if (anchor < 0) continue;
        // rotate the cycle to start at the anchor, direction toward the
        // smaller-id cycle neighbor
        CycleSiteStructure out;
        out.site = site;
        const int len = static_cast<int>(cyc.size());
        int pos = int(std::find(cyc.begin(), cyc.end(), anchor) - cyc.begin());
        int fwd = cyc[(pos + 1) % len], back = cyc[(pos + len - 1) % len];
        int dir = fwd < back ? 1 : -1;
        for (int k = 0; k < len; ++k) out.cycle.push_back(cyc[((pos + dir * k) % len + len) % len]);
        return out;
    }
    return std::nullopt;
}

std::optional<PathTapsStructure> detect_path_with_two_taps(const InteractionGraph& g,
                                                           int needed_len, long long budget) {
    const int n = g.vertex_count();
    if (needed_len < 2 || n < needed_len + 2) return std::nullopt;
    long long expansions = 0;
    for (int v1 = 0; v1 < n; ++v1) {
        if (g.degree(v1) < 3) continue;
        const auto& nbrs = g.neighbors(v1);
        for (std::size_t ai = 0; ai < nbrs.size(); ++ai) {
            for (std::size_t bi = ai + 1; bi < nbrs.size(); ++bi) {
                const int alpha = nbrs[ai], beta = nbrs[bi];
                // DFS for a simple path of needed_len vertices from v1
                // avoiding alpha and beta.
                std::vector<int> path{v1};
                std::vector<bool> used(n, false);
                used[v1] = used[alpha] = used[beta] = true;
                std::function<bool(int)> dfs = [&](int v) -> bool {
                    if (static_cast<int>(path.size()) >= needed_len) return true;
                    if (++expansions > budget) return false;
                    for (int w : g.neighbors(v)) {
                        if (used[w]) continue;
                        used[w] = true;
                        path.push_back(w);
                        if (dfs(w)) return true;
                        path.pop_back();
                        used[w] = false;
                    }
                    return false;
                };
                if (dfs(v1)) return PathTapsStructure{path, alpha, beta};
                if (expansions > budget) return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

std::vector<ChainPendantStructure> detect_chain_with_pendant(const InteractionGraph& g) {
    const int n = g.vertex_count();
    std::vector<ChainPendantStructure> readings;
    if (n < 4 || g.edge_count() != n - 1 || !g.connected()) return readings;
    std::vector<int> leaves;
    int branch = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) leaves.push_back(v);
        if (g.degree(v) == 3) branch = branch < 0 ? v : -2;
        if (g.degree(v) > 3) return readings;
    }
    if (leaves.size() != 3 || branch < 0) return readings;
    for (int pendant : leaves) {
        if (!g.has_edge(pendant, branch)) continue;
        // chain = the path between the other two leaves
        std::vector<int> others;
        for (int l : leaves)
            if (l != pendant) others.push_back(l);
        std::vector<int> chain{std::min(others[0], others[1])};
        int prev = -1, cur = chain[0];
        while (true) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev && w != pendant) next = w;
            if (next < 0) break;
            chain.push_back(next);
            prev = cur;
            cur = next;
        }
        if (static_cast<int>(chain.size()) != n - 1) continue;
        ChainPendantStructure s;
        s.chain = chain;
        s.pendant = pendant;
        s.attach_index = int(std::find(chain.begin(), chain.end(), branch) - chain.begin());
        readings.push_back(s);
        // the mirrored reading of the same chain
        ChainPendantStructure rev = s;
        std::reverse(rev.chain.begin(), rev.chain.end());
        rev.attach_index = n - 2 - s.attach_index;
        readings.push_back(rev);
    }
    return readings;
}

std::optional<StarStructure> detect_star(const InteractionGraph& g) {
    const int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    int hub = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) hub = v;
        else if (g.degree(v) != 1) return std::nullopt;
    }
    if (hub < 0) return std::nullopt;
    StarStructure s;
    s.hub = hub;
    for (int v = 0; v < n; ++v)
        if (v != hub) s.leaves.push_back(v);
    return s;
}

std::optional<TreeStructure> detect_complete_binary_tree(const InteractionGraph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n - 1 || !g.connected()) return std::nullopt;
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 2) {
            if (root >= 0) return std::nullopt;
            root = v;
        } else if (g.degree(v) != 1 && g.degree(v) != 3) {
            return std::nullopt;
        }
    }
    if (root < 0) return std::nullopt;
    auto dist = bfs_distances(g, root);
    int depth = *std::max_element(dist.begin(), dist.end());
    if (n != (1 << (depth + 1)) - 1) return std::nullopt;
    TreeStructure t;
    t.root = root;
    t.depth = depth;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            if (dist[v] != depth) return std::nullopt;
            t.leaves.push_back(v);
        } else {
            t.internal.push_back(v);
        }
    }
    if (static_cast<int>(t.leaves.size()) != (1 << depth)) return std::nullopt;
    return t;
}

std::optional<WheelStructure> detect_wheel(const InteractionGraph& g) {
    const int n = g.vertex_count();
    if (n < 4) return std::nullopt;
    for (int hub = 0; hub < n; ++hub) {
        if (g.degree(hub) != n - 1) continue;
        bool rim_ok = true;
        for (int v = 0; v < n && rim_ok; ++v)
            if (v != hub && g.degree(v) != 3) rim_ok = false;
        if (!rim_ok) continue;
        // walk the rim cycle from the smallest rim id toward its smaller neighbor
        WheelStructure w;
        w.hub = hub;
        const int start = hub == 0 ? 1 : 0;
        int prev = -1, cur = start;
        do {
            w.rim.push_back(cur);
            std::vector<int> onward;
            for (int x : g.neighbors(cur))
                if (x != hub && x != prev) onward.push_back(x);
            int next = -1;
            if (prev == -1 && onward.size() == 2) next = std::min(onward[0], onward[1]);
            else if (prev != -1 && onward.size() == 1) next = onward[0];
            if (next < 0) break;
            prev = cur;
            cur = next;
        } while (cur != start && w.rim.size() < static_cast<std::size_t>(n));
        if (cur == start && static_cast<int>(w.rim.size()) == n - 1) return w;
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<PoolStructure> detect_ancilla_pool(const InteractionGraph& g, int k) {
    const int n = g.vertex_count();
    // (1) single-vertex pools
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < k + 1) continue;
        PoolStructure p;
        p.pool = {v};
        const auto& nbrs = g.neighbors(v);
        p.plus_site = nbrs.back();
        p.sites.assign(nbrs.begin(), nbrs.end() - 1);
        return p;
    }
    // (2) pool = all non-leaf vertices, sites = leaves
    std::vector<int> leaves, interior;
    for (int v = 0; v < n; ++v)
        (g.degree(v) == 1 ? leaves : interior).push_back(v);
    if (static_cast<int>(leaves.size()) >= k + 1 && !interior.empty()) {
        // interior must be connected
        std::vector<bool> blocked(n, false);
        for (int l : leaves) blocked[l] = true;
        auto dist = bfs_distances(g, interior[0], &blocked);
        bool connected = true;
        for (int v : interior)
            if (dist[v] < 0) connected = false;
        if (connected) {
            PoolStructure p;
            p.pool = interior;
            p.plus_site = leaves.back();
            p.sites.assign(leaves.begin(), leaves.end() - 1);
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace mg

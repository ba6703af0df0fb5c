#include "mg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>

#include "mg/errors.hpp"

namespace mg {

std::string role_name(Role r) {
    switch (r) {
        case Role::Computational: return "computational";
        case Role::AncillaZero: return "ancilla_zero";
        case Role::AncillaPlus: return "ancilla_plus";
        default: return "unassigned";
    }
}

std::optional<Role> role_from_name(const std::string& s) {
    if (s == "computational") return Role::Computational;
    if (s == "ancilla_zero") return Role::AncillaZero;
    if (s == "ancilla_plus") return Role::AncillaPlus;
    if (s == "unassigned") return Role::Unassigned;
    return std::nullopt;
}

InteractionGraph::InteractionGraph(int n) : n_(n), adj_(n), roles_(n, Role::Unassigned) {
    if (n < 1) throw ValidationError("graph needs at least one vertex");
}

void InteractionGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw ValidationError("vertex id out of range: " + std::to_string(v));
}

void InteractionGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("self-loop rejected at vertex " + std::to_string(u));
    if (has_edge(u, v)) throw ValidationError("duplicate edge rejected");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool InteractionGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& InteractionGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int InteractionGraph::edge_count() const {
    int deg_sum = 0;
    for (const auto& a : adj_) deg_sum += static_cast<int>(a.size());
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> InteractionGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Role InteractionGraph::role(int v) const {
    check_vertex(v);
    return roles_[v];
}

void InteractionGraph::set_role(int v, Role r) {
    check_vertex(v);
    roles_[v] = r;
}

bool InteractionGraph::connected() const {
    auto dist = bfs_distances(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::uint64_t InteractionGraph::structure_hash() const {
    std::string repr = std::to_string(n_);
    for (auto [u, v] : edges()) repr += ";" + std::to_string(u) + "," + std::to_string(v);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : repr) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

InteractionGraph make_chain(int n) {
    InteractionGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

InteractionGraph build_family(GraphFamily family, const std::vector<int>& params) {
    auto p = [&](size_t i) {
        require(i < params.size(), "missing family parameter");
        return params[i];
    };
    switch (family) {
        case GraphFamily::Chain: {
            int n = p(0);
            require(n >= 1, "chain needs n >= 1");
            return make_chain(n);
        }
        case GraphFamily::TriangularLadder: {
            int n = p(0);
            require(n >= 2, "triangular ladder needs n >= 2");
            InteractionGraph g = make_chain(n);
            for (int i = 0; i + 2 < n; ++i) g.add_edge(i, i + 2);
            return g;
        }
        case GraphFamily::HairComb: {
            int n = p(0);
            require(n >= 1, "hair comb needs n >= 1");
            InteractionGraph g(2 * n);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            for (int i = 0; i < n; ++i) g.add_edge(i, n + i);
            return g;
        }
        case GraphFamily::Cycle: {
            int n = p(0);
            require(n >= 3, "cycle needs n >= 3");
            InteractionGraph g = make_chain(n);
            g.add_edge(n - 1, 0);
            return g;
        }
        case GraphFamily::CycleWithPendant: {
            int n = p(0), attach = p(1);
            require(n >= 3, "cycle needs n >= 3");
            require(attach >= 0 && attach < n, "attach vertex out of range");
            InteractionGraph g(n + 1);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            g.add_edge(n - 1, 0);
            g.add_edge(attach, n);
            return g;
        }
        case GraphFamily::ChainWithPendant: {
            int n = p(0), attach = p(1);
            require(n >= 2, "chain needs n >= 2");
            require(attach >= 0 && attach < n, "attach vertex out of range");
            InteractionGraph g(n + 1);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            g.add_edge(attach, n);
            return g;
        }
        case GraphFamily::Star: {
            int n = p(0);
            require(n >= 2, "star needs n >= 2");
            InteractionGraph g(n);
            for (int i = 1; i < n; ++i) g.add_edge(0, i);
            return g;
        }
        case GraphFamily::Wheel: {
            int n = p(0);
            require(n >= 3, "wheel needs rim size >= 3");
            InteractionGraph g(n + 1);
            for (int i = 1; i <= n; ++i) {
                g.add_edge(0, i);
                g.add_edge(i, i == n ? 1 : i + 1);
            }
            return g;
        }
        case GraphFamily::CompleteBinaryTree: {
            int depth = p(0);
            require(depth >= 0 && depth <= 20, "tree depth out of range");
            int n = (1 << (depth + 1)) - 1;
            InteractionGraph g(n);
            for (int i = 0; 2 * i + 2 < n; ++i) {
                g.add_edge(i, 2 * i + 1);
                g.add_edge(i, 2 * i + 2);
            }
            return g;
        }
        case GraphFamily::SquareLattice: {
            int w = p(0), h = p(1);
            require(w >= 1 && h >= 1, "lattice needs positive dimensions");
            InteractionGraph g(w * h);
            for (int r = 0; r < h; ++r) {
                for (int c = 0; c < w; ++c) {
                    int v = r * w + c;
                    if (c + 1 < w) g.add_edge(v, v + 1);
                    if (r + 1 < h) g.add_edge(v, v + w);
                }
            }
            return g;
        }
    }
    throw ValidationError("unknown graph family");
}

std::vector<TStructure> find_t_structures(const InteractionGraph& g) {
    std::vector<TStructure> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) out.push_back({g.neighbors(v)[0], v});
    }
    std::sort(out.begin(), out.end(), [](const TStructure& a, const TStructure& b) {
        return a.spine != b.spine ? a.spine < b.spine : a.pendant < b.pendant;
    });
    return out;
}

CycleSearchResult longest_cycle_exact(const InteractionGraph& g, long long budget) {
    require(budget > 0 || budget == 0, "budget must be non-negative");
    CycleSearchResult result;
    const int n = g.vertex_count();
    std::vector<bool> on_path(n, false);
    std::vector<bool> retired(n, false);  // starts already fully explored
    std::vector<int> path;
    long long expansions = 0;
    bool exhausted = (budget == 0);

    // Enumerates simple cycles whose smallest vertex is `start`.
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (exhausted) return;
        if (++expansions > budget) {
            exhausted = true;
            return;
        }
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3 &&
                static_cast<int>(path.size()) > result.lower_bound) {
                result.lower_bound = static_cast<int>(path.size());
                result.witness = path;
            }
            if (w <= start || on_path[w] || retired[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            dfs(start, w);
            path.pop_back();
            on_path[w] = false;
        }
    };

    for (int s = 0; s < n && !exhausted; ++s) {
        on_path[s] = true;
        path.assign(1, s);
        dfs(s, s);
        on_path[s] = false;
        retired[s] = true;
    }
    result.budget_exhausted = exhausted;
    if (!exhausted) result.exact = result.lower_bound;
    return result;
}

std::vector<int> bfs_distances(const InteractionGraph& g, int source,
                               const std::vector<bool>* blocked) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] >= 0 || (blocked && (*blocked)[w])) continue;
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

std::vector<int> shortest_path(const InteractionGraph& g, int u, int v) {
    auto dist = bfs_distances(g, v);  // distances to the target
    if (dist[u] < 0)
        throw RoutingError("no path between " + std::to_string(u) + " and " + std::to_string(v));
    std::vector<int> path{u};
    int cur = u;
    while (cur != v) {
        for (int w : g.neighbors(cur)) {  // ascending: smallest id wins ties
            if (dist[w] == dist[cur] - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

bool is_simple_path_graph(const InteractionGraph& g) {
    const int n = g.vertex_count();
    if (!g.connected() || g.edge_count() != n - 1) return false;
    int leaves = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return false;
        if (g.degree(v) <= 1) ++leaves;
    }
    return n == 1 || leaves == 2;
}

bool is_simple_cycle_graph(const InteractionGraph& g) {
    const int n = g.vertex_count();
    if (n < 3 || !g.connected() || g.edge_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace mg

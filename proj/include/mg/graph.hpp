#pragma once

/** \file
 * Interaction graphs, the named graph families, and structure detection
 * (T structures, cycles, shortest paths).
 */

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mg {

enum class Role { Unassigned, Computational, AncillaZero, AncillaPlus };

std::string role_name(Role r);
std::optional<Role> role_from_name(const std::string& s);

/// Undirected simple graph of qubit sites with per-vertex roles.
class InteractionGraph {
  public:
    explicit InteractionGraph(int n);

    int vertex_count() const { return n_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;  // sorted ascending
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

    Role role(int v) const;
    void set_role(int v, Role r);
    const std::vector<Role>& roles() const { return roles_; }

    bool connected() const;

    /// FNV-1a over the canonical "n;u,v;u,v;..." edge listing.
    std::uint64_t structure_hash() const;

  private:
    void check_vertex(int v) const;
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<Role> roles_;
};

enum class GraphFamily {
    Chain,
    TriangularLadder,
    HairComb,
    Cycle,
    CycleWithPendant,
    ChainWithPendant,
    Star,
    Wheel,
    CompleteBinaryTree,
    SquareLattice,
};

/// Deterministic vertex numbering per family:
///   chain(n): path 0..n-1.
///   triangular_ladder(n): chain plus {i,i+2} edges.
///   hair_comb(n): backbone 0..n-1, tooth of backbone i is vertex n+i.
///   cycle(n): 0..n-1 around.
///   cycle_with_pendant(n, attach): cycle 0..n-1, pendant = vertex n.
///   chain_with_pendant(n, attach): chain 0..n-1, pendant = vertex n.
///   star(n): hub 0, leaves 1..n-1.
///   wheel(n): hub 0, rim cycle 1..n.
///   complete_binary_tree(depth): heap order, root 0, children 2i+1, 2i+2.
///   square_lattice(w, h): row-major, vertex = r*w + c.
/// Throws ValidationError on undersized or out-of-range parameters.
InteractionGraph build_family(GraphFamily family, const std::vector<int>& params);

/// A degree-1 pendant vertex attached to a spine vertex.
struct TStructure {
    int spine;
    int pendant;
};

/// All (spine, pendant) pairs with deg(pendant) = 1, sorted by spine id.
std::vector<TStructure> find_t_structures(const InteractionGraph& g);

struct CycleSearchResult {
    std::optional<int> exact;  // set when the search ran to completion
    int lower_bound = 0;       // best cycle length seen
    bool budget_exhausted = false;
    std::vector<int> witness;  // vertices of the best cycle found
};

/// Exact longest cycle length by exhaustive DFS within a node-expansion
/// budget; reports Unknown (budget_exhausted) plus the best lower bound
/// otherwise. Acyclic graphs report 0.
CycleSearchResult longest_cycle_exact(const InteractionGraph& g, long long budget);

/// Shortest path by BFS, ties broken by smallest next-vertex id.
/// Throws RoutingError when u and v are disconnected.
std::vector<int> shortest_path(const InteractionGraph& g, int u, int v);

/// BFS distances from source (-1 when unreachable). `blocked` vertices are
/// not traversed (the source itself is always expanded).
std::vector<int> bfs_distances(const InteractionGraph& g, int source,
                               const std::vector<bool>* blocked = nullptr);

bool is_simple_path_graph(const InteractionGraph& g);   // bare chain
bool is_simple_cycle_graph(const InteractionGraph& g);  // bare cycle

}  // namespace mg

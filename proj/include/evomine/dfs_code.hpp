#ifndef EVOMINE_DFS_CODE_HPP
#define EVOMINE_DFS_CODE_HPP

#include <string>
#include <vector>

namespace evomine {

// One entry of a DFS code: the edge (from, to) in DFS discovery order plus
// the three labels, as interned ids. Forward edges discover a new vertex
// (from < to); backward edges close a cycle (from > to).
struct DfsEdge {
    int from = 0, to = 0;
    int from_label = 0, edge_label = 0, to_label = 0;

    bool forward() const { return from < to; }
    bool operator==(const DfsEdge&) const = default;
};

using DfsCode = std::vector<DfsEdge>;

// gSpan neighborhood order: backward before forward; backward by (to, label);
// forward from deeper source first, then by labels. Valid for comparing
// extension candidates of a common prefix.
bool dfs_edge_less(const DfsEdge& a, const DfsEdge& b);

// Lexicographic order on whole codes under dfs_edge_less.
bool dfs_code_less(const DfsCode& a, const DfsCode& b);

// DFS indices of the rightmost path, root first, derived from the code.
std::vector<int> rightmost_path(const DfsCode& code);

// Small dense labeled graph used for canonicalization and as the miner's
// pattern representation. Parallel edges with distinct labels are allowed;
// self-loops are not.
struct SmallGraph {
    struct Edge {
        int u = 0, v = 0, label = 0;
    };

    std::vector<int> vlabels;
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<int, int>>> adj; // (neighbor, edge index)

    int node_count() const { return static_cast<int>(vlabels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    void add_edge(int u, int v, int label);
    void build_adjacency();
    bool connected() const;
};

// The minimum DFS code of a connected graph with at least one edge: the
// lexicographically least edge sequence over all depth-first traversals.
// Requires edge_count <= 64.
DfsCode min_dfs_code(const SmallGraph& g);

// Reconstructs the graph a code describes.
SmallGraph graph_of_code(const DfsCode& code);

bool is_min_code(const DfsCode& code);

// Serialization used for canonical code strings:
//   (0,1,A,x,B);(1,2,B,y,C)
// Label text has  \ ( ) , ;  escaped with a backslash.
std::string code_to_string(const DfsCode& code, const std::vector<std::string>& label_names);

} // namespace evomine

#endif

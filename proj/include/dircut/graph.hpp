#pragma once

#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dircut {

using VertexId = int;
using EdgeId = int;
using EdgeLengths = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Edge {
    VertexId tail = -1;
    VertexId head = -1;
    double weight = 0.0;
};

/// Raised by parse_instance; carries the 1-based line number of the bad record.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Directed weighted multigraph with stable edge ids.
///
/// Edge ids index the edge list of the pristine instance and survive removals,
/// so cut sets accumulated while the graph shrinks remain valid against the
/// original graph. remove_edges / remove_vertices are pure and return a
/// reduced copy; a removed vertex takes all incident edges with it.
/// Instances are immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int alive_edge_count() const { return alive_edge_count_; }
    int alive_vertex_count() const { return alive_vertex_count_; }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool edge_alive(EdgeId e) const { return edge_alive_[static_cast<size_t>(e)] != 0; }
    bool vertex_alive(VertexId v) const { return vertex_alive_[static_cast<size_t>(v)] != 0; }

    /// Adjacency over alive edges only, in increasing edge-id order.
    std::span<const EdgeId> out_edges(VertexId v) const { return out_[static_cast<size_t>(v)]; }
    std::span<const EdgeId> in_edges(VertexId v) const { return in_[static_cast<size_t>(v)]; }

    Graph remove_edges(const std::vector<EdgeId>& ids) const;
    Graph remove_vertices(const std::vector<VertexId>& vs) const;

private:
    void rebuild_adjacency();

    int num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<char> edge_alive_;
    std::vector<char> vertex_alive_;
    int alive_edge_count_ = 0;
    int alive_vertex_count_ = 0;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

enum class ProblemKind { MultiMultiway, Multicut };

const char* kind_name(ProblemKind kind);

struct Instance {
    Graph graph;
    ProblemKind kind = ProblemKind::MultiMultiway;
    std::vector<std::vector<VertexId>> groups;         // MultiMultiway terminal sets
    std::vector<std::pair<VertexId, VertexId>> pairs;  // Multicut source/sink pairs

    int k() const {
        return static_cast<int>(kind == ProblemKind::MultiMultiway ? groups.size() : pairs.size());
    }
};

/// Parses the plain-text instance format:
///
///   p <mmw|mcut> <n> <m> <k>
///   e <tail> <head> <weight>     (m lines, weight > 0, no self-loops)
///   g <v1> <v2> ...              (mmw, k lines, >= 2 distinct ids)
///   t <s> <t>                    (mcut, k lines, s != t)
///
/// '#' starts a comment; blank lines are ignored. Throws ParseError.
Instance parse_instance(std::string_view text);

enum class DistMode { DirectedForward, DirectedEither, Undirected };

struct PathResult {
    double length = 0.0;
    std::vector<VertexId> vertices;  // u first, v last
    std::vector<EdgeId> edges;
};

/// Shortest path between two vertices under per-edge lengths.
/// DirectedForward follows edge direction u -> v; DirectedEither takes the
/// shorter of the two directed runs; Undirected ignores direction. Among
/// equal-length paths the lexicographically smallest vertex sequence wins
/// (then edge ids, for parallel edges). nullopt when unreachable.
std::optional<PathResult> shortest_dist(const Graph& g, const EdgeLengths& x, VertexId u,
                                        VertexId v, DistMode mode);

/// Distance labels from source to every vertex (values only, +inf when
/// unreachable). Label-setting with a binary heap; lengths must be >= 0.
std::vector<double> shortest_dist_all(const Graph& g, const EdgeLengths& x, VertexId source,
                                      DistMode mode);

struct DistanceField {
    std::vector<double> dist;        // +inf only when the undirected fallback also fails
    std::vector<char> via_fallback;  // label came from the undirected fallback
};

/// The ball-growing distance: MultiMultiway takes the shorter directed
/// direction, Multicut the forward direction from the center; both fall back
/// to the undirected distance when no directed path exists.
double paper_dist(const Graph& g, const EdgeLengths& x, VertexId center, VertexId v,
                  ProblemKind semantics);
DistanceField paper_dist_all(const Graph& g, const EdgeLengths& x, VertexId center,
                             ProblemKind semantics);

/// Directed reachability over alive edges.
bool reachable(const Graph& g, VertexId from, VertexId to);

/// Deterministic BFS witness path (lowest edge id first); length = hop count.
std::optional<PathResult> bfs_path(const Graph& g, VertexId from, VertexId to);

}  // namespace dircut

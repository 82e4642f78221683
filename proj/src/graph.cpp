#include "dircut/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace dircut {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 0) throw std::invalid_argument("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.tail < 0 || e.tail >= num_vertices_ || e.head < 0 || e.head >= num_vertices_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.tail == e.head) throw std::invalid_argument("self-loop");
        if (!(e.weight > 0.0)) throw std::invalid_argument("nonpositive edge weight");
    }
    edge_alive_.assign(edges_.size(), 1);
    vertex_alive_.assign(static_cast<size_t>(num_vertices_), 1);
    alive_edge_count_ = static_cast<int>(edges_.size());
    alive_vertex_count_ = num_vertices_;
    rebuild_adjacency();
}

void Graph::rebuild_adjacency() {
    out_.assign(static_cast<size_t>(num_vertices_), {});
    in_.assign(static_cast<size_t>(num_vertices_), {});
    for (EdgeId id = 0; id < num_edges(); ++id) {
        if (!edge_alive(id)) continue;
        out_[static_cast<size_t>(edges_[static_cast<size_t>(id)].tail)].push_back(id);
        in_[static_cast<size_t>(edges_[static_cast<size_t>(id)].head)].push_back(id);
    }
}

Graph Graph::remove_edges(const std::vector<EdgeId>& ids) const {
    Graph g = *this;
    for (EdgeId id : ids) {
        if (id < 0 || id >= num_edges()) throw std::invalid_argument("edge id out of range");
        if (g.edge_alive_[static_cast<size_t>(id)]) {
            g.edge_alive_[static_cast<size_t>(id)] = 0;
            --g.alive_edge_count_;
        }
    }
    g.rebuild_adjacency();
    return g;
}

Graph Graph::remove_vertices(const std::vector<VertexId>& vs) const {
    Graph g = *this;
    for (VertexId v : vs) {
        if (v < 0 || v >= num_vertices_) throw std::invalid_argument("vertex id out of range");
        if (g.vertex_alive_[static_cast<size_t>(v)]) {
            g.vertex_alive_[static_cast<size_t>(v)] = 0;
            --g.alive_vertex_count_;
        }
    }
    for (EdgeId id = 0; id < num_edges(); ++id) {
        const Edge& e = edges_[static_cast<size_t>(id)];
        if (g.edge_alive_[static_cast<size_t>(id)] &&
            (!g.vertex_alive_[static_cast<size_t>(e.tail)] ||
             !g.vertex_alive_[static_cast<size_t>(e.head)])) {
            g.edge_alive_[static_cast<size_t>(id)] = 0;
            --g.alive_edge_count_;
        }
    }
    g.rebuild_adjacency();
    return g;
}

const char* kind_name(ProblemKind kind) {
    return kind == ProblemKind::MultiMultiway ? "mmw" : "mcut";
}

namespace {

// One whitespace-tokenized content line of the instance file.
struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++number;
        if (size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::istringstream in{std::string(raw)};
        std::string tok;
        while (in >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("malformed ") + what + " '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line.number, std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

double parse_weight(const Line& line, const std::string& tok) {
    size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line.number, "malformed weight '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line.number, "malformed weight '" + tok + "'");
    return value;
}

int parse_vertex(const Line& line, const std::string& tok, int n) {
    int v = parse_int(line, tok, "vertex id");
    if (v < 0 || v >= n)
        throw ParseError(line.number, "vertex id " + std::to_string(v) + " out of range [0," +
                                          std::to_string(n) + ")");
    return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "malformed header: empty input");

    const Line& header = lines.front();
    if (header.tokens[0] != "p" || header.tokens.size() != 5)
        throw ParseError(header.number, "malformed header: expected 'p <mmw|mcut> <n> <m> <k>'");

    Instance inst;
    const std::string& kind = header.tokens[1];
    if (kind == "mmw")
        inst.kind = ProblemKind::MultiMultiway;
    else if (kind == "mcut")
        inst.kind = ProblemKind::Multicut;
    else
        throw ParseError(header.number, "malformed header: unknown problem kind '" + kind + "'");

    int n = parse_int(header, header.tokens[2], "vertex count");
    int m = parse_int(header, header.tokens[3], "edge count");
    int k = parse_int(header, header.tokens[4], "group/pair count");
    if (n < 0) throw ParseError(header.number, "malformed header: negative vertex count");
    if (m < 0) throw ParseError(header.number, "malformed header: negative edge count");
    if (k < 1) throw ParseError(header.number, "malformed header: need at least one group/pair");

    std::vector<Edge> edges;
    int last_line = header.number;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        last_line = line.number;
        const std::string& tag = line.tokens[0];
        if (tag == "e") {
            if (line.tokens.size() != 4)
                throw ParseError(line.number, "edge record needs '<tail> <head> <weight>'");
            if (static_cast<int>(edges.size()) == m)
                throw ParseError(line.number, "more than " + std::to_string(m) + " edge records");
            Edge e;
            e.tail = parse_vertex(line, line.tokens[1], n);
            e.head = parse_vertex(line, line.tokens[2], n);
            e.weight = parse_weight(line, line.tokens[3]);
            if (e.tail == e.head) throw ParseError(line.number, "self-loop edge");
            if (!(e.weight > 0.0))
                throw ParseError(line.number, "nonpositive weight " + line.tokens[3]);
            edges.push_back(e);
        } else if (tag == "g") {
            if (inst.kind != ProblemKind::MultiMultiway)
                throw ParseError(line.number, "unexpected 'g' record in a mcut instance");
            if (inst.k() == k)
                throw ParseError(line.number, "more than " + std::to_string(k) + " group records");
            std::vector<VertexId> group;
            for (size_t t = 1; t < line.tokens.size(); ++t)
                group.push_back(parse_vertex(line, line.tokens[t], n));
            if (group.size() < 2) throw ParseError(line.number, "group of size < 2");
            std::vector<VertexId> sorted = group;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw ParseError(line.number, "duplicate terminal in group");
            inst.groups.push_back(std::move(group));
        } else if (tag == "t") {
            if (inst.kind != ProblemKind::Multicut)
                throw ParseError(line.number, "unexpected 't' record in a mmw instance");
            if (inst.k() == k)
                throw ParseError(line.number, "more than " + std::to_string(k) + " pair records");
            if (line.tokens.size() != 3)
                throw ParseError(line.number, "pair record needs '<s> <t>'");
            VertexId s = parse_vertex(line, line.tokens[1], n);
            VertexId t = parse_vertex(line, line.tokens[2], n);
            if (s == t) throw ParseError(line.number, "pair with identical endpoints");
            inst.pairs.emplace_back(s, t);
        } else if (tag == "p") {
            throw ParseError(line.number, "duplicate header");
        } else {
            throw ParseError(line.number, "unknown line tag '" + tag + "'");
        }
    }
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(last_line, "expected " + std::to_string(m) + " edge records, found " +
                                        std::to_string(edges.size()));
    if (inst.k() != k)
        throw ParseError(last_line, "expected " + std::to_string(k) + " group/pair records, found " +
                                        std::to_string(inst.k()));

    inst.graph = Graph(n, std::move(edges));
    return inst;
}

namespace {

// Dijkstra state carrying the whole path so ties resolve to the
// lexicographically smallest vertex sequence (then edge ids, for parallel
// edges). Fine at the instance sizes this library targets.
struct PathLabel {
    double dist = kInf;
    std::vector<VertexId> vseq;
    std::vector<EdgeId> eseq;

    bool better_than(const PathLabel& o) const {
        if (dist != o.dist) return dist < o.dist;
        if (vseq != o.vseq) return vseq < o.vseq;
        return eseq < o.eseq;
    }
};

struct StepTarget {
    VertexId vertex;
    EdgeId edge;
};

// Neighbor steps from v under the given mode, undirected traversal included
// when asked. Deterministic order: out-edges by id, then in-edges by id.
void neighbor_steps(const Graph& g, VertexId v, bool undirected, std::vector<StepTarget>& steps) {
    steps.clear();
    for (EdgeId id : g.out_edges(v)) steps.push_back({g.edge(id).head, id});
    if (undirected)
        for (EdgeId id : g.in_edges(v)) steps.push_back({g.edge(id).tail, id});
}

std::optional<PathResult> dijkstra_path(const Graph& g, const EdgeLengths& x, VertexId src,
                                        VertexId dst, bool undirected) {
    if (!g.vertex_alive(src) || !g.vertex_alive(dst)) return std::nullopt;
    const size_t n = static_cast<size_t>(g.num_vertices());
    std::vector<PathLabel> best(n);
    std::vector<char> done(n, 0);

    auto cmp = [](const PathLabel& a, const PathLabel& b) { return b.better_than(a); };
    std::priority_queue<PathLabel, std::vector<PathLabel>, decltype(cmp)> heap(cmp);
    best[static_cast<size_t>(src)] = PathLabel{0.0, {src}, {}};
    heap.push(best[static_cast<size_t>(src)]);

    std::vector<StepTarget> steps;
    while (!heap.empty()) {
        PathLabel cur = heap.top();
        heap.pop();
        VertexId v = cur.vseq.back();
        if (done[static_cast<size_t>(v)]) continue;
        const PathLabel& b = best[static_cast<size_t>(v)];
        if (cur.dist != b.dist || cur.vseq != b.vseq || cur.eseq != b.eseq) continue;
        done[static_cast<size_t>(v)] = 1;
        if (v == dst) break;
        neighbor_steps(g, v, undirected, steps);
        for (const StepTarget& s : steps) {
            if (done[static_cast<size_t>(s.vertex)]) continue;
            if (std::find(cur.vseq.begin(), cur.vseq.end(), s.vertex) != cur.vseq.end()) continue;
            PathLabel cand;
            cand.dist = cur.dist + x[static_cast<size_t>(s.edge)];
            cand.vseq = cur.vseq;
            cand.vseq.push_back(s.vertex);
            cand.eseq = cur.eseq;
            cand.eseq.push_back(s.edge);
            if (cand.better_than(best[static_cast<size_t>(s.vertex)])) {
                best[static_cast<size_t>(s.vertex)] = cand;
                heap.push(std::move(cand));
            }
        }
    }
    const PathLabel& out = best[static_cast<size_t>(dst)];
    if (out.vseq.empty()) return std::nullopt;
    return PathResult{out.dist, out.vseq, out.eseq};
}

std::vector<double> dijkstra_values(const Graph& g, const EdgeLengths& x, VertexId src,
                                    bool reverse, bool undirected) {
    const size_t n = static_cast<size_t>(g.num_vertices());
    std::vector<double> dist(n, kInf);
    if (src < 0 || src >= g.num_vertices() || !g.vertex_alive(src)) return dist;
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[static_cast<size_t>(src)] = 0.0;
    heap.emplace(0.0, src);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d != dist[static_cast<size_t>(v)]) continue;
        auto relax = [&](VertexId to, EdgeId id) {
            double nd = d + x[static_cast<size_t>(id)];
            if (nd < dist[static_cast<size_t>(to)]) {
                dist[static_cast<size_t>(to)] = nd;
                heap.emplace(nd, to);
            }
        };
        if (undirected) {
            for (EdgeId id : g.out_edges(v)) relax(g.edge(id).head, id);
            for (EdgeId id : g.in_edges(v)) relax(g.edge(id).tail, id);
        } else if (reverse) {
            for (EdgeId id : g.in_edges(v)) relax(g.edge(id).tail, id);
        } else {
            for (EdgeId id : g.out_edges(v)) relax(g.edge(id).head, id);
        }
    }
    return dist;
}

}  // namespace

std::optional<PathResult> shortest_dist(const Graph& g, const EdgeLengths& x, VertexId u,
                                        VertexId v, DistMode mode) {
    switch (mode) {
        case DistMode::DirectedForward:
            return dijkstra_path(g, x, u, v, false);
        case DistMode::Undirected:
            return dijkstra_path(g, x, u, v, true);
        case DistMode::DirectedEither: {
            std::optional<PathResult> fwd = dijkstra_path(g, x, u, v, false);
            std::optional<PathResult> rev = dijkstra_path(g, x, v, u, false);
            if (!fwd) return rev;
            if (!rev) return fwd;
            if (fwd->length != rev->length) return fwd->length < rev->length ? fwd : rev;
            if (fwd->vertices != rev->vertices)
                return fwd->vertices < rev->vertices ? fwd : rev;
            return fwd->edges <= rev->edges ? fwd : rev;
        }
    }
    return std::nullopt;
}

std::vector<double> shortest_dist_all(const Graph& g, const EdgeLengths& x, VertexId source,
                                      DistMode mode) {
    switch (mode) {
        case DistMode::DirectedForward:
            return dijkstra_values(g, x, source, false, false);
        case DistMode::Undirected:
            return dijkstra_values(g, x, source, false, true);
        case DistMode::DirectedEither: {
            std::vector<double> fwd = dijkstra_values(g, x, source, false, false);
            std::vector<double> rev = dijkstra_values(g, x, source, true, false);
            for (size_t i = 0; i < fwd.size(); ++i) fwd[i] = std::min(fwd[i], rev[i]);
            return fwd;
        }
    }
    return {};
}

DistanceField paper_dist_all(const Graph& g, const EdgeLengths& x, VertexId center,
                             ProblemKind semantics) {
    DistanceField field;
    std::vector<double> directed =
        shortest_dist_all(g, x, center,
                          semantics == ProblemKind::MultiMultiway ? DistMode::DirectedEither
                                                                  : DistMode::DirectedForward);
    std::vector<double> fallback = shortest_dist_all(g, x, center, DistMode::Undirected);
    field.dist.resize(directed.size());
    field.via_fallback.assign(directed.size(), 0);
    for (size_t i = 0; i < directed.size(); ++i) {
        if (directed[i] < kInf) {
            field.dist[i] = directed[i];
        } else {
            field.dist[i] = fallback[i];
            field.via_fallback[i] = fallback[i] < kInf ? 1 : 0;
        }
    }
    return field;
}

double paper_dist(const Graph& g, const EdgeLengths& x, VertexId center, VertexId v,
                  ProblemKind semantics) {
    return paper_dist_all(g, x, center, semantics).dist[static_cast<size_t>(v)];
}

bool reachable(const Graph& g, VertexId from, VertexId to) {
    if (from < 0 || to < 0 || from >= g.num_vertices() || to >= g.num_vertices()) return false;
    if (!g.vertex_alive(from) || !g.vertex_alive(to)) return false;
    if (from == to) return true;
    std::vector<char> seen(static_cast<size_t>(g.num_vertices()), 0);
    std::queue<VertexId> queue;
    seen[static_cast<size_t>(from)] = 1;
    queue.push(from);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId id : g.out_edges(v)) {
            VertexId head = g.edge(id).head;
            if (seen[static_cast<size_t>(head)]) continue;
            if (head == to) return true;
            seen[static_cast<size_t>(head)] = 1;
            queue.push(head);
        }
    }
    return false;
}

std::optional<PathResult> bfs_path(const Graph& g, VertexId from, VertexId to) {
    if (from < 0 || to < 0 || from >= g.num_vertices() || to >= g.num_vertices())
        return std::nullopt;
    if (!g.vertex_alive(from) || !g.vertex_alive(to)) return std::nullopt;
    std::vector<EdgeId> parent_edge(static_cast<size_t>(g.num_vertices()), -1);
    std::vector<char> seen(static_cast<size_t>(g.num_vertices()), 0);
    std::queue<VertexId> queue;
    seen[static_cast<size_t>(from)] = 1;
    queue.push(from);
    bool found = from == to;
    while (!queue.empty() && !found) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId id : g.out_edges(v)) {
            VertexId head = g.edge(id).head;
            if (seen[static_cast<size_t>(head)]) continue;
            seen[static_cast<size_t>(head)] = 1;
            parent_edge[static_cast<size_t>(head)] = id;
            if (head == to) {
                found = true;
                break;
            }
            queue.push(head);
        }
    }
    if (!found) return std::nullopt;
    PathResult path;
    VertexId v = to;
    while (v != from) {
        EdgeId id = parent_edge[static_cast<size_t>(v)];
        path.edges.push_back(id);
        path.vertices.push_back(v);
        v = g.edge(id).tail;
    }
    path.vertices.push_back(from);
    std::reverse(path.vertices.begin(), path.vertices.end());
    std::reverse(path.edges.begin(), path.edges.end());
    path.length = static_cast<double>(path.edges.size());
    return path;
}

}  // namespace dircut

#include "cssent/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "cssent/errors.hpp"

namespace cssent {

namespace {

class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
};

} // namespace

DuplicatedMatrix split_columns(const BitMatrix& m) {
    std::vector<std::size_t> labels(m.cols());
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    return split_columns(m, labels);
}

DuplicatedMatrix split_columns(const BitMatrix& m, const std::vector<std::size_t>& column_qubit) {
    if (column_qubit.size() != m.cols())
        throw DimensionError("split_columns: label count mismatch");
    // First pass: per input column, the list of row-index groups of size <= 2.
    std::vector<std::vector<std::vector<std::size_t>>> groups(m.cols());
    std::size_t total = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<std::size_t> ones;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (m.get(r, c)) ones.push_back(r);
        }
        if (ones.size() <= 2) {
            groups[c].push_back(std::move(ones));
        } else {
            for (std::size_t i = 0; i < ones.size(); i += 2) {
                std::vector<std::size_t> pair;
                pair.push_back(ones[i]);
                if (i + 1 < ones.size()) pair.push_back(ones[i + 1]);
                groups[c].push_back(std::move(pair));
            }
        }
        total += groups[c].size();
    }

    DuplicatedMatrix out;
    out.matrix = BitMatrix(m.rows(), total);
    out.column_qubit.reserve(total);
    out.is_duplicate.reserve(total);
    std::size_t col = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t g = 0; g < groups[c].size(); ++g) {
            for (std::size_t r : groups[c][g]) out.matrix.set(r, col, true);
            out.column_qubit.push_back(column_qubit[c]);
            out.is_duplicate.push_back(g > 0);
            ++col;
        }
    }
    return out;
}

DuplicatedMatrix duplicate_qubits(const CanonicalBlocks& blocks) {
    return split_columns(blocks.reassemble(), blocks.col_perm);
}

LabeledGraph incidence_graph(const BitMatrix& m) {
    std::vector<std::size_t> labels(m.cols());
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    DuplicatedMatrix dup;
    dup.matrix = m;
    dup.column_qubit = std::move(labels);
    dup.is_duplicate.assign(m.cols(), false);
    return incidence_graph(dup);
}

LabeledGraph incidence_graph(const DuplicatedMatrix& dup) {
    const BitMatrix& m = dup.matrix;
    LabeledGraph g;
    g.vertex_count = m.rows();
    std::size_t boundary = g.vertex_count; // allocated on first weight-1 column
    bool have_boundary = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<std::size_t> ones;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (m.get(r, c)) {
                ones.push_back(r);
                if (ones.size() > 2) throw WeightError("incidence_graph: column weight > 2");
            }
        }
        GraphEdge edge;
        edge.qubit = dup.column_qubit[c];
        edge.duplicate = dup.is_duplicate[c];
        if (ones.size() == 2) {
            edge.u = ones[0];
            edge.v = ones[1];
        } else if (ones.size() == 1) {
            if (!have_boundary) {
                boundary = g.vertex_count++;
                have_boundary = true;
            }
            edge.u = ones[0];
            edge.v = boundary;
        } else {
            edge.u = g.vertex_count++; // fresh isolated pair
            edge.v = g.vertex_count++;
        }
        g.edges.push_back(edge);
    }
    return g;
}

GraphPartition partition_by_qubits(const LabeledGraph& g,
                                   const std::vector<std::size_t>& a_qubits) {
    GraphPartition part;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (std::binary_search(a_qubits.begin(), a_qubits.end(), g.edges[e].qubit))
            part.a_edges.push_back(e);
    }
    return part;
}

std::size_t connected_components(const LabeledGraph& g,
                                 const std::vector<std::size_t>& edge_subset) {
    UnionFind uf(g.vertex_count);
    std::vector<bool> touched(g.vertex_count, false);
    for (std::size_t e : edge_subset) {
        const GraphEdge& edge = g.edges[e];
        touched[edge.u] = touched[edge.v] = true;
        uf.unite(edge.u, edge.v);
    }
    std::size_t count = 0;
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        if (touched[v] && uf.find(v) == v) ++count;
    }
    return count;
}

std::vector<std::size_t> spanning_forest(const LabeledGraph& g,
                                         const std::vector<std::size_t>& edge_subset) {
    UnionFind uf(g.vertex_count);
    std::vector<std::size_t> forest;
    for (std::size_t e : edge_subset) {
        const GraphEdge& edge = g.edges[e];
        if (uf.unite(edge.u, edge.v)) forest.push_back(e);
    }
    return forest;
}

namespace {

std::size_t touched_vertices(const LabeledGraph& g, const std::vector<std::size_t>& edge_subset) {
    std::vector<bool> touched(g.vertex_count, false);
    std::size_t count = 0;
    for (std::size_t e : edge_subset) {
        for (std::size_t v : {g.edges[e].u, g.edges[e].v}) {
            if (!touched[v]) {
                touched[v] = true;
                ++count;
            }
        }
    }
    return count;
}

} // namespace

std::size_t cyclomatic_number(const LabeledGraph& g, const std::vector<std::size_t>& edge_subset) {
    return edge_subset.size() - touched_vertices(g, edge_subset) +
           connected_components(g, edge_subset);
}

std::size_t entropy_graph(const LabeledGraph& g, const GraphPartition& part) {
    std::vector<bool> in_a_edges(g.edges.size(), false);
    for (std::size_t e : part.a_edges) in_a_edges[e] = true;

    std::vector<std::size_t> b_edges;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!in_a_edges[e]) b_edges.push_back(e);
    }
    // Duplicates of one qubit must not straddle the split.
    std::map<std::size_t, bool> qubit_side;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [it, fresh] = qubit_side.emplace(g.edges[e].qubit, in_a_edges[e]);
        if (!fresh && it->second != in_a_edges[e])
            throw DimensionError("entropy_graph: duplicates of a qubit split across A and B");
    }
    if (part.a_edges.empty() || b_edges.empty()) return 0;

    std::vector<bool> touches_a(g.vertex_count, false), touches_b(g.vertex_count, false);
    for (std::size_t e : part.a_edges) {
        touches_a[g.edges[e].u] = touches_a[g.edges[e].v] = true;
    }
    for (std::size_t e : b_edges) {
        touches_b[g.edges[e].u] = touches_b[g.edges[e].v] = true;
    }
    std::size_t shared = 0;
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        if (touches_a[v] && touches_b[v]) ++shared;
    }

    const std::size_t k1 = connected_components(g, part.a_edges);
    const std::size_t k2 = connected_components(g, b_edges);
    std::vector<std::size_t> all_edges(g.edges.size());
    std::iota(all_edges.begin(), all_edges.end(), std::size_t{0});
    const std::size_t k = connected_components(g, all_edges);
    return shared - k1 - k2 + k;
}

std::size_t entropy_graph_for_matrix(const BitMatrix& hz, const Bipartition& part) {
    const CanonicalBlocks blocks = canonicalize(hz, part);
    const DuplicatedMatrix dup = duplicate_qubits(blocks);
    const LabeledGraph g = incidence_graph(dup);
    return entropy_graph(g, partition_by_qubits(g, part.a_set));
}

void save_graph(const LabeledGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "vertices " << g.vertex_count << '\n';
    for (const GraphEdge& e : g.edges) {
        out << e.u << ' ' << e.v << ' ' << e.qubit;
        if (e.duplicate) out << " dup";
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

LabeledGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());
    LabeledGraph g;
    std::string line;
    if (!std::getline(in, line)) throw IoError("graph file: missing header");
    {
        std::istringstream header(line);
        std::string tag;
        if (!(header >> tag >> g.vertex_count) || tag != "vertices")
            throw IoError("graph file: expected 'vertices <count>'");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        GraphEdge e;
        if (!(row >> e.u >> e.v >> e.qubit)) throw IoError("graph file: bad edge line");
        std::string dup;
        if (row >> dup) {
            if (dup != "dup") throw IoError("graph file: bad edge flag '" + dup + "'");
            e.duplicate = true;
        }
        if (e.u >= g.vertex_count || e.v >= g.vertex_count)
            throw IoError("graph file: edge endpoint out of range");
        g.edges.push_back(e);
    }
    return g;
}

} // namespace cssent

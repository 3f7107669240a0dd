#pragma once

#include <filesystem>
#include <vector>

#include "cssent/bitmatrix.hpp"
#include "cssent/entropy.hpp"

namespace cssent {

struct GraphEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    std::size_t qubit = 0;   // label; duplicates of one qubit share it
    bool duplicate = false;  // true for every copy after the first
};

/// Multigraph whose edges carry qubit labels; vertices are check-matrix rows
/// plus any fresh leaf/isolated vertices created for columns of weight < 2.
struct LabeledGraph {
    std::size_t vertex_count = 0;
    std::vector<GraphEdge> edges;
};

/// Edge-index subsystem; duplicates of one qubit must travel together.
struct GraphPartition {
    std::vector<std::size_t> a_edges;
};

/// Column-split matrix plus provenance: which original qubit each column
/// came from and which columns are duplicates.
struct DuplicatedMatrix {
    BitMatrix matrix;
    std::vector<std::size_t> column_qubit;
    std::vector<bool> is_duplicate;
};

/// Split every column of weight > 2 by peeling ones two at a time from the
/// lowest row indices; a weight-w column becomes ceil(w/2) adjacent columns
/// sharing the qubit label. `column_qubit` maps input columns to labels
/// (defaults to the column index).
DuplicatedMatrix split_columns(const BitMatrix& m);
DuplicatedMatrix split_columns(const BitMatrix& m, const std::vector<std::size_t>& column_qubit);

/// Duplicate qubits of a canonical block matrix until every column has
/// weight <= 2. The boundary stripe keeps full row rank, so the entropy is
/// unchanged. Column labels are original qubit ids via the block column
/// permutation.
DuplicatedMatrix duplicate_qubits(const CanonicalBlocks& blocks);

/// Incidence graph of a column-weight <= 2 matrix: one vertex per row;
/// weight-2 columns join their two rows, weight-1 columns attach to one
/// shared boundary vertex, weight-0 columns get a fresh isolated pair.
/// Throws WeightError on a column of weight > 2.
///
/// The boundary vertex's incidence row equals the sum of all matrix rows, a
/// dependent combination, so the graph's cycle space coincides with the
/// matrix kernel and the entropy formula below is exact. (A private leaf per
/// weight-1 column would enlarge the cycle-space complement and break the
/// correspondence.)
LabeledGraph incidence_graph(const BitMatrix& m);
LabeledGraph incidence_graph(const DuplicatedMatrix& dup);

/// Edges whose qubit label is in `a_qubits` (sorted); duplicates follow
/// their qubit automatically.
GraphPartition partition_by_qubits(const LabeledGraph& g, const std::vector<std::size_t>& a_qubits);

/// Connected components of the subgraph induced by edge_subset. Vertices
/// with no incident subset edge are not counted.
std::size_t connected_components(const LabeledGraph& g, const std::vector<std::size_t>& edge_subset);

/// Maximal acyclic subset spanning every vertex touched by edge_subset,
/// chosen greedily in ascending edge-index order.
std::vector<std::size_t> spanning_forest(const LabeledGraph& g,
                                         const std::vector<std::size_t>& edge_subset);

/// |E| - |V_touched| + K of the induced subgraph: the dimension of its cycle
/// space.
std::size_t cyclomatic_number(const LabeledGraph& g, const std::vector<std::size_t>& edge_subset);

/// Graph entropy formula |V_{A + B}| - K1 - K2 + K: shared vertices minus
/// component counts of the two subsystems plus components of the whole
/// graph. Equals the number of independent joint cycles of the two spanning
/// forests. Returns 0 when either side is empty.
std::size_t entropy_graph(const LabeledGraph& g, const GraphPartition& part);

/// Full pipeline for arbitrary CSS check matrices: canonicalize, duplicate
/// columns to weight <= 2, build the incidence graph, and apply the graph
/// formula with duplicates grouped by qubit.
std::size_t entropy_graph_for_matrix(const BitMatrix& hz, const Bipartition& part);

/// Graph export: "vertices <count>" then one "u v qubit [dup]" line per edge.
void save_graph(const LabeledGraph& g, const std::filesystem::path& path);
LabeledGraph load_graph(const std::filesystem::path& path);

} // namespace cssent

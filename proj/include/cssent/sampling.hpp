#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cssent/css_code.hpp"
#include "cssent/entropy.hpp"
#include "cssent/graph.hpp"

namespace cssent {

/// Uniformly random n_a-subset of [0, n); deterministic for a fixed seed.
Bipartition random_subsystem(std::size_t n, std::size_t n_a, std::uint64_t seed);

/// The stabilizer-growth sequence: seed a waiting set with one random hz row,
/// absorb each waiting stabilizer's support (checkpointing after every strict
/// growth), then refill the waiting set with unvisited stabilizers touching A,
/// stopping once n_A >= n/2. Stabilizers within a waiting set are processed in
/// ascending row order.
std::vector<Bipartition> grown_subsystem_sequence(const CssCode& code, std::uint64_t seed);

enum class Regime { small_a, large_a };
enum class TransferClass { I, II, III, IV };

struct TransferCase {
    TransferClass cls = TransferClass::I;
    int case_id = 0;          // 1..14 within the regime's table
    int predicted_delta_i = 0;
    Regime regime = Regime::small_a;
};

/// Classify a single-qubit transfer from B to A on a 4-regular incidence
/// graph (toric style) and predict the entropy-discrepancy change.
///
/// small_a: B must be connected and stay connected after the transfer; cases
/// split on the A-degrees of the edge endpoints and their A-component
/// membership. large_a: A must be connected; cases split on the B-degrees and
/// whether the edge is a bridge of its B-component.
///
/// Returns nullopt for degree patterns the tables omit; throws
/// ClassificationError when the regime preconditions fail.
std::optional<TransferCase> classify_transfer(const LabeledGraph& g, const GraphPartition& part,
                                              std::size_t qubit, Regime regime);

} // namespace cssent

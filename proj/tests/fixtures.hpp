#pragma once

#include <cstdint>
#include <vector>

#include "cssent/css_code.hpp"
#include "cssent/entropy.hpp"

namespace cssent::fixtures {

/// [7,1,3] Hamming-based CSS code: hx = hz = the 3x7 Hamming check matrix.
CssCode hamming_css();

/// Random valid CSS code with n qubits: random hz rows, hx rows drawn from
/// nullspace(hz) combinations, zero rows dropped. Always commutes.
CssCode random_css(std::size_t n, std::uint64_t seed);

// Toric subsystems from the worked examples, under this library's edge
// indexing. All return A-sets for a d x d toric code.
std::vector<std::size_t> toric_single_qubit(std::size_t d);
std::vector<std::size_t> toric_two_adjacent(std::size_t d);
/// Horizontal non-contractible loop: all horizontal edges of lattice row 0.
std::vector<std::size_t> toric_chain(std::size_t d);
/// Vertical ladder: one horizontal edge per lattice row, same column.
std::vector<std::size_t> toric_ladder(std::size_t d);
/// Horizontal loop of row 0 plus a vertical bar at column 0 (connector
/// v(0,0) and the rungs h(i,0), i >= 1); entropy 2d-1 for |00>_L.
std::vector<std::size_t> toric_cross(std::size_t d);
std::vector<std::size_t> toric_all_vertical(std::size_t d);

/// Edges interior to an `a x b` rectangle of plaquettes anchored at (0,0):
/// the induced edge set on those dual vertices (no wraparound use; requires
/// a, b <= d - 1).
std::vector<std::size_t> toric_rectangle_region(std::size_t d, std::size_t a, std::size_t b);

/// Z-type stabilizer rows of the rectangle region's code that touch both the
/// region and its complement (the boundary stabilizer count m).
std::size_t toric_boundary_stabilizers(const CssCode& code, const std::vector<std::size_t>& a_set);

} // namespace cssent::fixtures

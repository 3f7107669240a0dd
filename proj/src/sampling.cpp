#include "cssent/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "cssent/errors.hpp"
#include "cssent/rng.hpp"

namespace cssent {

Bipartition random_subsystem(std::size_t n, std::size_t n_a, std::uint64_t seed) {
    if (n_a > n) throw ParameterError("random_subsystem: n_a exceeds n");
    SplitMix64 rng(seed);
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < n_a; ++i) {
        const std::size_t j = i + rng.bounded(n - i);
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> a(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_a));
    std::sort(a.begin(), a.end());
    return Bipartition(n, std::move(a));
}

std::vector<Bipartition> grown_subsystem_sequence(const CssCode& code, std::uint64_t seed) {
    const BitMatrix& hz = code.hz;
    const std::size_t n = code.n;
    std::vector<Bipartition> checkpoints;
    if (hz.rows() == 0) return checkpoints;

    SplitMix64 rng(seed);
    std::vector<bool> in_a(n, false);
    std::vector<bool> visited(hz.rows(), false);
    std::size_t n_a = 0;

    std::vector<std::size_t> waiting{rng.bounded(hz.rows())};
    visited[waiting[0]] = true;

    auto snapshot = [&]() {
        std::vector<std::size_t> a;
        a.reserve(n_a);
        for (std::size_t q = 0; q < n; ++q) {
            if (in_a[q]) a.push_back(q);
        }
        checkpoints.emplace_back(n, std::move(a));
    };

    while (!waiting.empty()) {
        for (std::size_t row : waiting) {
            std::size_t added = 0;
            for (std::size_t q = 0; q < n; ++q) {
                if (hz.get(row, q) && !in_a[q]) {
                    in_a[q] = true;
                    ++added;
                }
            }
            n_a += added;
            if (added > 0) snapshot();
            if (2 * n_a >= n) return checkpoints;
        }
        // Refill with unvisited stabilizers acting on any qubit of A.
        std::vector<std::size_t> next;
        for (std::size_t row = 0; row < hz.rows(); ++row) {
            if (visited[row]) continue;
            bool touches = false;
            for (std::size_t q = 0; q < n && !touches; ++q) {
                if (hz.get(row, q) && in_a[q]) touches = true;
            }
            if (touches) {
                visited[row] = true;
                next.push_back(row);
            }
        }
        waiting = std::move(next);
    }
    return checkpoints;
}

namespace {

struct EdgeView {
    std::vector<std::vector<std::size_t>> incident; // vertex -> edge ids
    std::vector<bool> in_a;
};

std::size_t degree_within(const EdgeView& view, std::size_t vertex, bool side_a) {
    std::size_t deg = 0;
    for (std::size_t e : view.incident[vertex]) {
        if (view.in_a[e] == side_a) ++deg;
    }
    return deg;
}

bool connected_after_removal(const LabeledGraph& g, const std::vector<std::size_t>& edges,
                             std::size_t removed) {
    std::vector<std::size_t> rest;
    rest.reserve(edges.size());
    for (std::size_t e : edges) {
        if (e != removed) rest.push_back(e);
    }
    if (rest.empty()) return true; // nothing left to disconnect
    return connected_components(g, rest) == 1;
}

/// Is `edge` on a cycle of the subgraph `edges`? Equivalently: are its
/// endpoints still connected after removing it?
bool edge_on_cycle(const LabeledGraph& g, const std::vector<std::size_t>& edges,
                   std::size_t edge) {
    const std::size_t u = g.edges[edge].u;
    const std::size_t v = g.edges[edge].v;
    std::vector<std::vector<std::size_t>> adj(g.vertex_count);
    for (std::size_t e : edges) {
        if (e == edge) continue;
        adj[g.edges[e].u].push_back(g.edges[e].v);
        adj[g.edges[e].v].push_back(g.edges[e].u);
    }
    std::vector<bool> seen(g.vertex_count, false);
    std::vector<std::size_t> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        if (x == v) return true;
        for (std::size_t y : adj[x]) {
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    return false;
}

} // namespace

std::optional<TransferCase> classify_transfer(const LabeledGraph& g, const GraphPartition& part,
                                              std::size_t qubit, Regime regime) {
    // Tables assume a 4-regular simple incidence structure.
    std::vector<std::size_t> degree(g.vertex_count, 0);
    EdgeView view;
    view.incident.resize(g.vertex_count);
    view.in_a.assign(g.edges.size(), false);
    std::size_t transfer_edge = g.edges.size();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].duplicate) throw ClassificationError("classify: duplicated qubits present");
        ++degree[g.edges[e].u];
        ++degree[g.edges[e].v];
        view.incident[g.edges[e].u].push_back(e);
        view.incident[g.edges[e].v].push_back(e);
        if (g.edges[e].qubit == qubit) {
            if (transfer_edge != g.edges.size())
                throw ClassificationError("classify: qubit labels not unique");
            transfer_edge = e;
        }
    }
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        if (degree[v] != 4) throw ClassificationError("classify: graph is not 4-regular");
    }
    if (transfer_edge == g.edges.size()) throw ClassificationError("classify: unknown qubit");
    for (std::size_t e : part.a_edges) view.in_a[e] = true;
    if (view.in_a[transfer_edge]) throw ClassificationError("classify: qubit is not in B");

    std::vector<std::size_t> b_edges;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!view.in_a[e]) b_edges.push_back(e);
    }
    const std::size_t u = g.edges[transfer_edge].u;
    const std::size_t v = g.edges[transfer_edge].v;

    if (regime == Regime::small_a) {
        if (connected_components(g, b_edges) != 1)
            throw ClassificationError("classify: small-A regime requires connected B");
        // Every small-A table row assumes B stays one component.
        if (!connected_after_removal(g, b_edges, transfer_edge)) return std::nullopt;

        std::size_t da_u = degree_within(view, u, true);
        std::size_t da_v = degree_within(view, v, true);
        if (da_u == 0 && da_v == 0)
            return TransferCase{TransferClass::I, 1, 0, regime};
        if (da_u == 0 || da_v == 0) {
            const std::size_t d = std::max(da_u, da_v);
            if (d == 1) return TransferCase{TransferClass::II, 2, 0, regime};
            if (d == 2) return TransferCase{TransferClass::II, 3, 0, regime};
            return TransferCase{TransferClass::II, 4, 1, regime};
        }
        // Both endpoints touch A: same component closes a cycle (class IV),
        // different components merge (class III).
        std::vector<std::size_t> comp(g.vertex_count, g.vertex_count);
        {
            std::vector<std::size_t> parent(g.vertex_count);
            std::iota(parent.begin(), parent.end(), std::size_t{0});
            auto find = [&](std::size_t x) {
                while (parent[x] != x) {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                return x;
            };
            for (std::size_t e : part.a_edges) {
                const std::size_t a = find(g.edges[e].u);
                const std::size_t b = find(g.edges[e].v);
                if (a != b) parent[b] = a;
            }
            for (std::size_t x = 0; x < g.vertex_count; ++x) comp[x] = find(x);
        }
        const bool same_component = comp[u] == comp[v];
        const std::size_t lo = std::min(da_u, da_v);
        const std::size_t hi = std::max(da_u, da_v);
        if (same_component) {
            if (lo == 1 && hi == 1) return TransferCase{TransferClass::IV, 10, 1, regime};
            if (lo == 1 && hi == 2) return TransferCase{TransferClass::IV, 11, 1, regime};
            if (lo == 2 && hi == 2) return TransferCase{TransferClass::IV, 12, 1, regime};
            if (lo == 1 && hi == 3) return TransferCase{TransferClass::IV, 13, 2, regime};
            if (lo == 2 && hi == 3) return TransferCase{TransferClass::IV, 14, 2, regime};
            return std::nullopt; // (3,3) not tabulated
        }
        if (lo == 1 && hi == 1) return TransferCase{TransferClass::III, 5, 0, regime};
        if (lo == 1 && hi == 2) return TransferCase{TransferClass::III, 6, 0, regime};
        if (lo == 2 && hi == 2) return TransferCase{TransferClass::III, 7, 0, regime};
        if (lo == 1 && hi == 3) return TransferCase{TransferClass::III, 8, 1, regime};
        if (lo == 2 && hi == 3) return TransferCase{TransferClass::III, 9, 1, regime};
        return std::nullopt; // (3,3) not tabulated
    }

    // large_a
    if (part.a_edges.empty() || connected_components(g, part.a_edges) != 1)
        throw ClassificationError("classify: large-A regime requires connected A");

    const std::size_t db_u = degree_within(view, u, false);
    const std::size_t db_v = degree_within(view, v, false);
    const std::size_t lo = std::min(db_u, db_v);
    const std::size_t hi = std::max(db_u, db_v);
    const bool bridge = !edge_on_cycle(g, b_edges, transfer_edge);
    if (bridge) {
        if (hi == 1 && lo == 1) return TransferCase{TransferClass::I, 1, 2, regime};
        if (lo == 1) {
            if (hi == 2) return TransferCase{TransferClass::II, 2, 2, regime};
            if (hi == 3) return TransferCase{TransferClass::II, 3, 2, regime};
            return TransferCase{TransferClass::II, 4, 1, regime};
        }
        if (lo == 2 && hi == 2) return TransferCase{TransferClass::III, 5, 2, regime};
        if (lo == 2 && hi == 3) return TransferCase{TransferClass::III, 6, 2, regime};
        if (lo == 2 && hi == 4) return TransferCase{TransferClass::III, 7, 1, regime};
        if (lo == 3 && hi == 4) return TransferCase{TransferClass::III, 8, 1, regime};
        if (lo == 4 && hi == 4) return TransferCase{TransferClass::III, 9, 1, regime};
        return std::nullopt; // (3,3) not tabulated
    }
    if (lo == 2 && hi == 2) return TransferCase{TransferClass::IV, 10, 1, regime};
    if (lo == 2 && hi == 3) return TransferCase{TransferClass::IV, 11, 1, regime};
    if (lo == 2 && hi == 4) return TransferCase{TransferClass::IV, 12, 0, regime};
    if (lo == 3 && hi == 4) return TransferCase{TransferClass::IV, 13, 0, regime};
    if (lo == 4 && hi == 4) return TransferCase{TransferClass::IV, 14, 0, regime};
    return std::nullopt; // (3,3) not tabulated
}

} // namespace cssent

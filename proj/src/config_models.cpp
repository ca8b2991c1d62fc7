#include "configspace/config_models.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace configspace {

namespace {

std::vector<std::vector<int>> adjacency(const OrderedComplex& graph) {
    std::vector<std::vector<int>> adj(graph.vertexCount());
    for (const auto& e : graph.cells(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

// Shortest cycle through the edge (u, v): distance from u to v avoiding that
// edge, plus one.  Returns the cycle's vertex list or empty.
std::vector<int> shortestCycleThrough(const std::vector<std::vector<int>>& adj, int u, int v) {
    int n = static_cast<int>(adj.size());
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue;
    dist[u] = 0;
    queue.push_back(u);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj[x]) {
            if (x == u && y == v) continue;  // skip the edge itself once
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if (dist[v] < 0) return {};
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x]) path.push_back(x);
    return path;  // u ... v reversed; cycle closes through the skipped edge
}

}  // namespace

AbramsVerdict abramsCondition(const OrderedComplex& graph, int k) {
    if (!graph.isGraph())
        throw std::invalid_argument("abramsCondition requires a 1-dimensional complex");
    AbramsVerdict verdict;
    auto adj = adjacency(graph);

    // Cycle bound: every embedded cycle needs at least k+1 edges; it is
    // enough to bound the shortest cycle through every edge.
    for (const auto& e : graph.cells(1)) {
        // Parallel-edge-free simplicial graphs: shortest cycle via BFS.
        std::vector<int> path = shortestCycleThrough(adj, e[0], e[1]);
        if (path.empty()) continue;
        int cycleEdges = static_cast<int>(path.size());
        if (cycleEdges < k + 1) {
            verdict.satisfied = false;
            verdict.reason = "cycle with " + std::to_string(cycleEdges) +
                             " edges; need at least " + std::to_string(k + 1);
            verdict.witness = path;
            return verdict;
        }
    }

    // Path bound: chains of degree-2 vertices between distinct essential
    // vertices need at least k-1 edges.
    for (int v = 0; v < graph.vertexCount(); ++v) {
        if (graph.vertexDegree(v) == 2) continue;
        for (int start : adj[v]) {
            std::vector<int> walk{v, start};
            int prev = v, cur = start;
            while (cur != v && graph.vertexDegree(cur) == 2) {
                int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                walk.push_back(cur);
            }
            if (cur == v) continue;  // loop back to the same essential vertex: cycle bound covers it
            int edges = static_cast<int>(walk.size()) - 1;
            if (edges < k - 1) {
                verdict.satisfied = false;
                verdict.reason = "essential path with " + std::to_string(edges) +
                                 " edges; need at least " + std::to_string(k - 1);
                verdict.witness = walk;
                return verdict;
            }
        }
    }

    verdict.satisfied = true;
    return verdict;
}

OrderedComplex prepareGraph(const OrderedComplex& graph, int k) {
    if (!graph.isGraph())
        throw std::invalid_argument("prepareGraph requires a 1-dimensional complex");
    for (int factor = 1; factor <= 4 * k + 4; ++factor) {
        OrderedComplex candidate = subdivideEdges(graph, factor);
        if (abramsCondition(candidate, k).satisfied) return candidate;
    }
    throw std::logic_error("prepareGraph: no subdivision factor satisfied the condition");
}

ConfigModel deletedProductModel(const OrderedComplex& base, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    ConfigModel model;
    model.base = base;
    model.k = k;
    if (k == 1) {
        model.complex = base;
        model.vertexToAmbient.resize(base.vertexCount());
        for (int v = 0; v < base.vertexCount(); ++v) model.vertexToAmbient[v] = v;
        model.certified = true;
        return model;
    }
    ProductComplex power = staircasePower(base, k);
    ConstrainedSubcomplex sub = constrainedSubcomplex(power, ConstraintSet::allPairs(k));
    model.complex = std::move(sub.complex);
    model.vertexToAmbient = std::move(sub.vertexToAmbient);
    model.certified = base.isGraph() && abramsCondition(base, k).satisfied;
    return model;
}

}  // namespace configspace

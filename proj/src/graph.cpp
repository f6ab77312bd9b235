#include "polyprod/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyprod {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative node count");
    SimpleGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("loop edge");
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& lst : g.adj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    return g;
}

bool SimpleGraph::has_edge(int a, int b) const {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

bool SimpleGraph::connected() const {
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) { seen[w] = 1; ++cnt; stack.push_back(w); }
    }
    return cnt == n;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;  // starts are visited in increasing order, so ordering holds
}

namespace {

// degree of v among alive nodes
int alive_degree(const SimpleGraph& g, const std::vector<char>& alive, int v) {
    int d = 0;
    for (int w : g.adj[v])
        if (alive[w]) ++d;
    return d;
}

// components of the alive subgraph restricted to `nodes`, ordered by
// smallest contained node
std::vector<std::vector<int>> alive_components(const SimpleGraph& g,
                                               const std::vector<char>& alive,
                                               const std::vector<int>& nodes) {
    std::vector<char> seen(g.n, 0);
    std::vector<std::vector<int>> out;
    for (int s : nodes) {
        if (seen[s] || !alive[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (alive[w] && !seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// nodes: a connected alive component; appends the ordering to out.
// Invariant from the removal argument: every component seen here contains a
// node of alive-degree < bound (initially by hypothesis, afterwards because
// it contains a neighbour of the node just removed).
void order_component(const SimpleGraph& g, std::vector<char>& alive,
                     std::vector<int> nodes, int bound, std::vector<int>& out) {
    while (!nodes.empty()) {
        int pick = -1;
        for (int v : nodes) {
            if (alive_degree(g, alive, v) < bound) { pick = v; break; }
        }
        if (pick < 0)
            throw HypothesisError(Hypothesis::NoVertexBelowBound,
                                  "component has no node of degree < " + std::to_string(bound));
        out.push_back(pick);
        alive[pick] = 0;
        nodes.erase(std::find(nodes.begin(), nodes.end(), pick));
        auto comps = alive_components(g, alive, nodes);
        if (comps.size() <= 1) {
            if (comps.empty()) return;
            nodes = std::move(comps.front());
            continue;
        }
        for (auto& comp : comps) order_component(g, alive, std::move(comp), bound, out);
        return;
    }
}

}  // namespace

std::vector<int> vertex_removal_ordering(const SimpleGraph& g, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    if (g.n == 0) return {};
    if (!g.connected())
        throw HypothesisError(Hypothesis::Disconnected, "input graph is not connected");
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > bound)
            throw HypothesisError(Hypothesis::DegreeAboveBound,
                                  "node " + std::to_string(v) + " has degree " +
                                      std::to_string(g.degree(v)) + " > " + std::to_string(bound));
    bool some_low = false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < bound) { some_low = true; break; }
    if (!some_low)
        throw HypothesisError(Hypothesis::NoVertexBelowBound,
                              "every node has degree exactly " + std::to_string(bound));

    std::vector<char> alive(g.n, 1);
    std::vector<int> nodes(g.n);
    for (int v = 0; v < g.n; ++v) nodes[v] = v;
    std::vector<int> out;
    out.reserve(g.n);
    order_component(g, alive, std::move(nodes), bound, out);
    if (static_cast<int>(out.size()) != g.n)
        throw std::logic_error("removal ordering lost nodes");
    return out;
}

bool valid_removal_ordering(const SimpleGraph& g, int bound, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n) return false;
    std::vector<char> alive(g.n, 1);
    std::vector<char> used(g.n, 0);
    for (int v : order) {
        if (v < 0 || v >= g.n || used[v]) return false;
        used[v] = 1;
        if (alive_degree(g, alive, v) >= bound) return false;
        alive[v] = 0;
    }
    return true;
}

}  // namespace polyprod

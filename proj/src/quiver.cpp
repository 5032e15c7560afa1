#include "quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace pathact {

Quiver::Quiver(std::vector<std::string> vertices, IntMat adj)
    : vertices_(std::move(vertices)), adj_(std::move(adj)) {
    const int n = static_cast<int>(vertices_.size());
    if (n < 1)
        throw std::invalid_argument("quiver needs at least one vertex");
    if (adj_.rows() != n || adj_.cols() != n)
        throw std::invalid_argument("adjacency matrix does not match vertex count");
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s)
            if (adj_(t, s) < 0)
                throw std::invalid_argument("adjacency entries must be nonnegative");
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (static_cast<int>(seen.size()) != n)
        throw std::invalid_argument("duplicate vertex names");
    synthesize_edges();
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const int n = static_cast<int>(vertices_.size());
    if (n < 1)
        throw std::invalid_argument("quiver needs at least one vertex");
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (static_cast<int>(seen.size()) != n)
        throw std::invalid_argument("duplicate vertex names");
    adj_ = IntMat(n, n);
    std::set<std::string> edge_names;
    for (auto &e : edges_) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
            throw std::invalid_argument("edge endpoint out of range");
        adj_(e.dst, e.src) += 1;
        if (e.name.empty())
            e.name = "e" + std::to_string(&e - edges_.data());
        if (!edge_names.insert(e.name).second)
            throw std::invalid_argument("duplicate edge name: " + e.name);
    }
}

void Quiver::synthesize_edges() {
    int counter = 0;
    for (int s = 0; s < order(); ++s)
        for (int t = 0; t < order(); ++t)
            for (long k = 0; k < adj_(t, s); ++k)
                edges_.push_back({s, t, "e" + std::to_string(counter++)});
}

int Quiver::vertex_index(const std::string &name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

int Quiver::edge_index(const std::string &name) const {
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].name == name)
            return static_cast<int>(e);
    return -1;
}

namespace {

// Tarjan over the multigraph (multiplicities collapse to reachability).
struct TarjanState {
    const IntMat &adj;
    int n;
    int counter = 0;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int comp_count = 0;

    explicit TarjanState(const IntMat &a)
        : adj(a), n(a.rows()), index(n, -1), low(n, 0), comp(n, -1), on_stack(n, false) {}

    void dfs(int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w = 0; w < n; ++w) {
            if (adj(w, v) == 0)
                continue; // edge v -> w
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = comp_count;
                if (w == v)
                    break;
            }
            ++comp_count;
        }
    }
};

} // namespace

SccResult scc(const Quiver &q) {
    TarjanState st(q.adj());
    for (int v = 0; v < st.n; ++v)
        if (st.index[v] < 0)
            st.dfs(v);

    std::vector<std::vector<int>> groups(st.comp_count);
    for (int v = 0; v < st.n; ++v)
        groups[st.comp[v]].push_back(v);

    // Condensation edges between Tarjan components.
    std::set<std::pair<int, int>> cedges;
    for (int s = 0; s < st.n; ++s)
        for (int t = 0; t < st.n; ++t)
            if (q.adj()(t, s) != 0 && st.comp[s] != st.comp[t])
                cedges.insert({st.comp[s], st.comp[t]});

    // Kahn topological order, ties by smallest contained vertex index.
    std::vector<int> indeg(st.comp_count, 0);
    for (auto &[a, b] : cedges)
        ++indeg[b];
    auto smallest = [&](int c) { return *std::min_element(groups[c].begin(), groups[c].end()); };
    auto cmp = [&](int a, int b) { return smallest(a) > smallest(b); };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (int c = 0; c < st.comp_count; ++c)
        if (indeg[c] == 0)
            ready.push(c);
    std::vector<int> order;
    while (!ready.empty()) {
        int c = ready.top();
        ready.pop();
        order.push_back(c);
        for (auto &[a, b] : cedges)
            if (a == c && --indeg[b] == 0)
                ready.push(b);
    }

    SccResult res;
    res.component_of.assign(st.n, -1);
    std::vector<int> renumber(st.comp_count, -1);
    for (size_t i = 0; i < order.size(); ++i)
        renumber[order[i]] = static_cast<int>(i);
    res.components.resize(st.comp_count);
    for (int c = 0; c < st.comp_count; ++c) {
        auto g = groups[c];
        std::sort(g.begin(), g.end());
        res.components[renumber[c]] = std::move(g);
    }
    for (int v = 0; v < st.n; ++v)
        res.component_of[v] = renumber[st.comp[v]];
    for (auto &[a, b] : cedges)
        res.condensation_edges.push_back({renumber[a], renumber[b]});
    std::sort(res.condensation_edges.begin(), res.condensation_edges.end());
    return res;
}

TildeMatrix tilde(const Quiver &q) {
    const int n = q.order();
    const IntMat &adj = q.adj();

    // Reflexive-transitive reachability.
    std::vector reach(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v)
        reach[v][v] = true;
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s)
            if (adj(t, s) != 0)
                reach[s][t] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;

    // A vertex lies on a directed cycle iff it has a loop or sits in a
    // component of size >= 2.
    const SccResult comps = scc(q);
    std::vector<bool> cyclic(n, false);
    for (int v = 0; v < n; ++v)
        cyclic[v] = adj(v, v) > 0 || comps.components[comps.component_of[v]].size() >= 2;

    TildeMatrix tm;
    tm.vertices = q.vertices();
    tm.m = Mat<ExtNat>(n, n);

    // Finite path counts by DP over a topological order of the condensation;
    // when (w, v) is finite every connecting walk avoids cyclic vertices, so
    // the unrestricted count is exact.
    std::vector<int> topo;
    for (const auto &grp : comps.components)
        for (int v : grp)
            topo.push_back(v);

    for (int v = 0; v < n; ++v) {
        std::vector<Integer> count(n, Integer(0));
        count[v] = 1;
        for (int u : topo) {
            if (count[u] == 0)
                continue;
            for (int w = 0; w < n; ++w)
                if (adj(w, u) != 0 && !cyclic[w]) // cyclic targets become inf anyway
                    count[w] += count[u] * adj(w, u);
        }
        for (int w = 0; w < n; ++w) {
            bool inf = false;
            for (int c = 0; c < n && !inf; ++c)
                inf = cyclic[c] && reach[v][c] && reach[c][w];
            if (inf)
                tm.m(w, v) = ExtNat::infinity();
            else if (reach[v][w])
                tm.m(w, v) = ExtNat(count[w]);
            else
                tm.m(w, v) = ExtNat(0);
        }
    }
    return tm;
}

} // namespace pathact

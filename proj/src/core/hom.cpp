#include "hom.hpp"

#include <algorithm>
#include <array>

namespace homcount {

std::optional<BigCount> MemoCache::find(const Key& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.value;
}

void MemoCache::insert(const Key& key, const BigCount& value, bool fresh) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, Entry{value, fresh});
    if (!inserted && it->second.value != value)
        throw IntegrityError("memo cache: conflicting values for one key");
}

std::vector<std::array<std::string, 3>> MemoCache::freshEntries() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<std::array<std::string, 3>> out;
    for (const auto& [key, entry] : entries_) {
        if (!entry.fresh) continue;
        out.push_back({Certificate(key.first).hex(), Certificate(key.second).hex(),
                       toDecimal(entry.value)});
    }
    return out;  // map order is already sorted by key
}

std::size_t MemoCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

BigCount Engine::bruteForce(const SimpleGraph& g, const TargetGraph& h) const {
    int n = g.vertexCount();
    int hn = h.vertexCount();
    if (n == 0) return 1;
    if (hn == 0) return 0;

    BigCount space = bigPow(static_cast<unsigned long>(hn), static_cast<unsigned long>(n));
    if (space > BigCount(static_cast<unsigned long>(options_.budget)))
        throw BudgetError("brute force: " + toDecimal(space) + " maps exceed budget");

    auto edges = g.edges();
    std::vector<int> psi(n, 0);
    BigCount total = 0;
    while (true) {
        bool ok = true;
        for (auto [u, v] : edges) {
            if (!h.adjacent(psi[u], psi[v])) {
                ok = false;
                break;
            }
        }
        if (ok) total += 1;
        int pos = n - 1;
        while (pos >= 0 && psi[pos] == hn - 1) psi[pos--] = 0;
        if (pos < 0) break;
        psi[pos] += 1;
    }
    return total;
}

std::optional<std::pair<int, int>> recognizeCompleteBipartite(const SimpleGraph& piece) {
    auto c = classifyGraph(piece);
    if (!c.isConnected || !c.isBipartite) return std::nullopt;
    int n = piece.vertexCount();
    if (n == 0) return std::nullopt;
    // Two-colour from vertex 0; connectivity makes the colouring unique.
    std::vector<int> colour(n, -1);
    colour[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        VertexSet m = piece.neighbors(u);
        while (m) {
            int v = lowestBit(m);
            m &= m - 1;
            if (colour[v] < 0) {
                colour[v] = 1 - colour[u];
                stack.push_back(v);
            }
        }
    }
    int a = 0;
    for (int v = 0; v < n; ++v) a += colour[v] == 0;
    int b = n - a;
    if (piece.edgeCount() != a * b) return std::nullopt;
    return std::make_pair(a, b);
}

BigCount Engine::completeBipartiteCount(int a, int b, const TargetGraph& h) const {
    if (a < 0 || b < 0) throw GraphError("negative class size");
    if (a > b) std::swap(a, b);  // hom(K_{a,b}, H) is symmetric in the classes
    int hn = h.vertexCount();
    if (a == 0)
        return bigPow(static_cast<unsigned long>(hn), static_cast<unsigned long>(b));

    // Walk the a-tuples depth-first, keeping the running common
    // neighbourhood; a tuple's contribution is |common|^b.
    BigCount total = 0;
    std::vector<VertexSet> inter(a + 1);
    inter[0] = fullSet(hn);
    std::vector<int> choice(a, 0);
    int depth = 0;
    while (depth >= 0) {
        if (choice[depth] >= hn) {
            choice[depth] = 0;
            --depth;
            if (depth >= 0) ++choice[depth];
            continue;
        }
        inter[depth + 1] = inter[depth] & h.neighbors(choice[depth]);
        if (depth + 1 == a) {
            total += bigPow(static_cast<unsigned long>(popcount(inter[a])),
                            static_cast<unsigned long>(b));
            ++choice[depth];
        } else {
            ++depth;
        }
    }
    return total;
}

namespace {

// Connected visit order maximizing the number of already-placed
// neighbours, ties broken by smaller vertex index.
std::vector<int> backtrackOrder(const SimpleGraph& piece) {
    int n = piece.vertexCount();
    std::vector<int> order;
    order.reserve(n);
    VertexSet placed = 0;
    for (int step = 0; step < n; ++step) {
        int bestV = -1, bestBack = -1;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1) continue;
            int back = popcount(piece.neighbors(v) & placed);
            if (back > bestBack) {
                bestBack = back;
                bestV = v;
            }
        }
        order.push_back(bestV);
        placed |= VertexSet{1} << bestV;
    }
    return order;
}

struct BacktrackState {
    const SimpleGraph& piece;
    const TargetGraph& h;
    const std::vector<int>& order;
    const std::vector<bool>& hasLaterNeighbor;
    std::vector<int> image;  // per position, assigned target vertex
    BigCount total = 0;

    void run(size_t pos, const BigCount& multiplier) {
        if (pos == order.size()) {
            total += multiplier;
            return;
        }
        int v = order[pos];
        VertexSet cands = fullSet(h.vertexCount());
        for (size_t q = 0; q < pos; ++q) {
            if (piece.adjacent(order[q], v)) cands &= h.neighbors(image[q]);
        }
        if (!cands) return;
        if (!hasLaterNeighbor[pos]) {
            // Nothing later looks at this vertex: its choices multiply out.
            run(pos + 1, multiplier * popcount(cands));
            return;
        }
        while (cands) {
            int w = lowestBit(cands);
            cands &= cands - 1;
            image[pos] = w;
            run(pos + 1, multiplier);
        }
    }
};

}  // namespace

BigCount Engine::backtrackCount(const SimpleGraph& piece, const TargetGraph& h) const {
    auto order = backtrackOrder(piece);
    int n = piece.vertexCount();
    std::vector<bool> hasLater(n, false);
    for (int p = 0; p < n; ++p) {
        VertexSet laterVerts = 0;
        for (int q = p + 1; q < n; ++q) laterVerts |= VertexSet{1} << order[q];
        hasLater[p] = (piece.neighbors(order[p]) & laterVerts) != 0;
    }
    BacktrackState state{piece, h, order, hasLater, std::vector<int>(n, 0)};
    state.run(0, BigCount(1));
    return state.total;
}

BigCount Engine::countPiece(const SimpleGraph& piece,
                            const std::vector<TargetGraph>& targetComponents) const {
    BigCount total = 0;
    for (const TargetGraph& hc : targetComponents) {
        if (options_.useBipartiteClosedForm) {
            if (auto ab = recognizeCompleteBipartite(piece)) {
                total += completeBipartiteCount(ab->first, ab->second, hc);
                continue;
            }
        }
        total += backtrackCount(piece, hc);
    }
    return total;
}

BigCount Engine::count(const SimpleGraph& g, const TargetGraph& h) {
    if (g.vertexCount() == 0) return 1;

    Certificate certH = certificateOf(h);
    std::vector<TargetGraph> targetComponents;
    for (VertexSet comp : components(h)) targetComponents.push_back(h.inducedSubgraph(comp));

    BigCount result = 1;
    for (VertexSet comp : components(g)) {
        SimpleGraph piece = g.inducedSubgraph(comp);
        MemoCache::Key key{certificateOf(piece).bytes(), certH.bytes()};
        if (auto hit = memo_.find(key)) {
            result *= *hit;
            continue;
        }
        BigCount value = countPiece(piece, targetComponents);
        memo_.insert(key, value);
        result *= value;
    }
    return result;
}

BigCount Engine::disjointCopies(const SimpleGraph& g, const BigCount& copies,
                                const TargetGraph& connectedTarget) {
    if (copies < 0) throw GraphError("negative copy count");
    if (!classifyGraph(connectedTarget).isConnected)
        throw GraphError("disjointCopies needs a connected target");

    BigCount result = 1;
    for (VertexSet comp : components(g)) {
        SimpleGraph piece = g.inducedSubgraph(comp);
        result *= copies * count(piece, connectedTarget);
    }
    return result;
}

HomMatrix Engine::pathMatrix(const TargetGraph& h, int pathVertices) const {
    if (pathVertices < 2) throw GraphError("path needs at least 2 vertices");
    int n = h.vertexCount();
    HomMatrix adj;
    adj.size = n;
    adj.entries.assign(static_cast<size_t>(n) * n, BigCount(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (h.adjacent(i, j)) adj.at(i, j) = 1;

    HomMatrix m = adj;
    for (int step = 2; step < pathVertices; ++step) {
        HomMatrix next;
        next.size = n;
        next.entries.assign(static_cast<size_t>(n) * n, BigCount(0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (m.at(i, k) == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (h.adjacent(k, j)) next.at(i, j) += m.at(i, k);
            }
        m = std::move(next);
    }
    return m;
}

BigCount Engine::cycleCount(const TargetGraph& h, int cycleLength) const {
    if (cycleLength < 3) throw GraphError("cycle needs length >= 3");
    // Trace of A^r: close the walks counted by the path matrix with one
    // more adjacency step.
    HomMatrix m = pathMatrix(h, cycleLength);  // A^{r-1}
    BigCount total = 0;
    int n = h.vertexCount();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (h.adjacent(j, i)) total += m.at(i, j);
    return total;
}

BigCount Engine::qColourings(const SimpleGraph& g, int q) {
    if (q < 0) throw GraphError("negative colour count");
    if (q == 0) return g.vertexCount() == 0 ? BigCount(1) : BigCount(0);
    return count(g, TargetGraph::completeSimple(q));
}

}  // namespace homcount

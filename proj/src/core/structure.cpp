#include "structure.hpp"

#include <algorithm>

namespace homcount {

SProfile sValue(int delta, const TargetGraph& h, std::uint64_t budget,
                bool collectWitnesses) {
    if (delta < 1) throw GraphError("sValue needs delta >= 1");
    int hn = h.vertexCount();
    if (hn == 0) throw GraphError("sValue needs a nonempty target");

    BigCount space = bigPow(static_cast<unsigned long>(hn), static_cast<unsigned long>(delta));
    if (space > BigCount(static_cast<unsigned long>(budget)))
        throw BudgetError("sValue: " + toDecimal(space) + " tuples exceed budget");

    SProfile profile;
    profile.delta = delta;
    profile.k = h.maxDegree();

    // |common neighbourhood| <= min degree of the used vertices <= k, so
    // "exactly k" is reached only if no element ever shrinks it below k;
    // prune as soon as the running intersection drops under k.
    std::vector<VertexSet> inter(delta + 1);
    inter[0] = fullSet(hn);
    std::vector<int> choice(delta, 0);
    int depth = 0;
    while (depth >= 0) {
        if (choice[depth] >= hn) {
            choice[depth] = 0;
            --depth;
            if (depth >= 0) ++choice[depth];
            continue;
        }
        inter[depth + 1] = inter[depth] & h.neighbors(choice[depth]);
        if (popcount(inter[depth + 1]) < profile.k) {
            ++choice[depth];
            continue;
        }
        if (depth + 1 == delta) {
            profile.sValue += 1;
            if (collectWitnesses)
                profile.witnesses.emplace_back(choice.begin(), choice.end());
            ++choice[depth];
        } else {
            ++depth;
        }
    }
    return profile;
}

namespace {

bool isCompleteLoopedOn(const TargetGraph& h, VertexSet verts, int k) {
    if (popcount(verts) != k) return false;
    VertexSet m = verts;
    while (m) {
        int v = lowestBit(m);
        m &= m - 1;
        if ((h.neighbors(v) & verts) != verts) return false;  // needs loop too
    }
    return true;
}

bool isBalancedBicliqueOn(const TargetGraph& h, VertexSet verts, int k) {
    if (popcount(verts) != 2 * k) return false;
    TargetGraph sub = h.inducedSubgraph(verts);
    auto c = classifyGraph(sub);
    if (!c.isBipartite) return false;  // also rejects loops
    // 2-colour and check completeness across the classes.
    int n = sub.vertexCount();
    std::vector<int> colour(n, -1);
    colour[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        VertexSet m = sub.neighbors(u);
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
    if (a != k) return false;
    return static_cast<int>(sub.edges().size()) == k * k;
}

}  // namespace

TargetClassification classifyTarget(const TargetGraph& h) {
    TargetClassification out;
    out.k = h.maxDegree();
    VertexSet all = fullSet(h.vertexCount());
    auto comps = components(h);
    bool connected = comps.size() <= 1;
    out.isCompleteLoopedK = connected && out.k > 0 && isCompleteLoopedOn(h, all, out.k);
    out.isBalancedBicliqueK = connected && out.k > 0 && isBalancedBicliqueOn(h, all, out.k);
    out.inFamilyHk = true;
    for (VertexSet comp : comps) {
        if (isCompleteLoopedOn(h, comp, out.k) || isBalancedBicliqueOn(h, comp, out.k)) {
            out.inFamilyHk = false;
            break;
        }
    }
    return out;
}

namespace {

bool inducedCycle(const SimpleGraph& g, VertexSet verts) {
    if (popcount(verts) < 3) return false;
    VertexSet m = verts;
    while (m) {
        int v = lowestBit(m);
        m &= m - 1;
        if (popcount(g.neighbors(v) & verts) != 2) return false;
    }
    // Degree-2 everywhere: a cycle iff connected.
    VertexSet start = VertexSet{1} << lowestBit(verts);
    VertexSet comp = start, frontier = start;
    while (frontier) {
        VertexSet next = 0;
        VertexSet f = frontier;
        while (f) {
            int u = lowestBit(f);
            f &= f - 1;
            next |= g.neighbors(u) & verts;
        }
        frontier = next & ~comp;
        comp |= next;
    }
    return comp == verts;
}

bool packCycles(const std::vector<VertexSet>& cycles, size_t from, VertexSet used,
                int need, std::vector<VertexSet>& chosen) {
    if (need == 0) return true;
    for (size_t i = from; i < cycles.size(); ++i) {
        if (cycles[i] & used) continue;
        chosen.push_back(cycles[i]);
        if (packCycles(cycles, i + 1, used | cycles[i], need - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

CyclePacking hasDisjointCycles(const SimpleGraph& g, int d, int cap) {
    if (d < 0) throw GraphError("negative cycle count");
    int n = g.vertexCount();
    if (n > cap || n >= 32) throw BudgetError("hasDisjointCycles: vertex count exceeds cap");

    CyclePacking out;
    if (d == 0) {
        out.found = true;
        return out;
    }
    // Any d disjoint cycles can be replaced by chordless ones inside the
    // same vertex sets, so packing induced cycles is exhaustive.
    std::vector<VertexSet> cycles;
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
        if (inducedCycle(g, s)) cycles.push_back(s);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](VertexSet a, VertexSet b) { return popcount(a) < popcount(b); });

    std::vector<VertexSet> chosen;
    out.found = packCycles(cycles, 0, 0, d, chosen);
    if (out.found) out.cycles = std::move(chosen);
    return out;
}

VertexSet minFeedbackVertexSet(const SimpleGraph& g, int cap) {
    int n = g.vertexCount();
    if (n > cap || n >= 32) throw BudgetError("minFeedbackVertexSet: vertex count exceeds cap");

    auto isForestWithout = [&](VertexSet removed) {
        VertexSet keep = fullSet(n) & ~removed;
        int verts = popcount(keep);
        int edges = 0;
        VertexSet m = keep;
        while (m) {
            int v = lowestBit(m);
            m &= m - 1;
            edges += popcount(g.neighbors(v) & keep);
        }
        edges /= 2;
        int comps = 0;
        VertexSet seen = 0;
        VertexSet rest = keep;
        while (rest) {
            int s = lowestBit(rest);
            VertexSet comp = VertexSet{1} << s, frontier = comp;
            while (frontier) {
                VertexSet next = 0;
                VertexSet f = frontier;
                while (f) {
                    int u = lowestBit(f);
                    f &= f - 1;
                    next |= g.neighbors(u) & keep;
                }
                frontier = next & ~comp;
                comp |= next;
            }
            seen |= comp;
            rest = keep & ~seen;
            ++comps;
        }
        return edges == verts - comps;
    };

    for (int size = 0; size <= n; ++size) {
        // Subsets of a given size in increasing numeric order (Gosper).
        if (size == 0) {
            if (isForestWithout(0)) return 0;
            continue;
        }
        VertexSet s = fullSet(size);
        VertexSet limit = VertexSet{1} << n;
        while (s < limit) {
            if (isForestWithout(s)) return s;
            VertexSet c = s & -s;
            VertexSet r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return fullSet(n);  // unreachable: removing everything leaves a forest
}

bool k0Holds(int t, int alpha, const BigCount& k) {
    unsigned long ta = static_cast<unsigned long>(t) * static_cast<unsigned long>(alpha);
    BigCount lhs = bigPow(factorial(t) * k, ta + 1);
    BigCount rhs = bigPow(static_cast<unsigned long>(t), ta * (ta + 1)) * bigPow(k, ta);
    return lhs > rhs;
}

BigCount computeK0(int t, int alpha) {
    if (t < 3) throw GraphError("computeK0 needs t >= 3");
    if (alpha < 1) throw GraphError("computeK0 needs alpha >= 1");

    // The two sides scale as k^{ta+1} and k^{ta}, so the predicate is
    // monotone in k and binary search applies.
    BigCount hi = 1;
    while (!k0Holds(t, alpha, hi)) hi *= 2;
    BigCount lo = 1;
    while (lo < hi) {
        BigCount mid = (lo + hi) / 2;
        if (k0Holds(t, alpha, mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace homcount

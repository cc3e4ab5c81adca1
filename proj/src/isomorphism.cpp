#include "evomine/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace evomine {

namespace {

struct SearchPlan {
    // Pattern vertices in placement order; every vertex after the first has
    // at least one earlier neighbor (anchor) so candidates come from the
    // anchor's adjacency instead of the whole snapshot.
    std::vector<int> order;
    std::vector<int> anchor;       // position in `order` of one placed neighbor, -1 for the root
    std::vector<int> anchor_label; // snapshot label id of the edge to the anchor
    // All edges to previously placed vertices, as (position, edge label id).
    std::vector<std::vector<std::pair<int, int>>> back_edges;
};

} // namespace

bool is_subgraph(const Pattern& pattern, const Snapshot& snapshot) {
    const int pn = pattern.node_count();
    const int pm = pattern.edge_count();
    if (pn > snapshot.node_count() || pm > snapshot.edge_count()) return false;

    // Translate pattern labels into the snapshot's interned ids. A label the
    // snapshot has never seen cannot be matched.
    std::vector<int> vlabel(pn);
    for (int v = 0; v < pn; ++v) {
        auto id = snapshot.label_id(pattern.node_label(v));
        if (!id) return false;
        vlabel[v] = *id;
    }
    std::vector<std::vector<std::pair<int, int>>> padj(pn); // (nbr, edge label id)
    for (const auto& e : pattern.edges()) {
        auto id = snapshot.label_id(e.label);
        if (!id) return false;
        padj[e.u].push_back({e.v, *id});
        padj[e.v].push_back({e.u, *id});
    }

    // Placement order: rarest snapshot label first, ties by higher pattern
    // degree; subsequent vertices must touch the placed set.
    auto rank = [&](int v) {
        return std::pair{snapshot.node_label_count(vlabel[v]),
                         -static_cast<int>(padj[v].size())};
    };
    SearchPlan plan;
    std::vector<char> placed(pn, 0);
    std::vector<int> pos_of(pn, -1);
    int root = 0;
    for (int v = 1; v < pn; ++v)
        if (rank(v) < rank(root)) root = v;
    plan.order.push_back(root);
    placed[root] = 1;
    pos_of[root] = 0;
    while (static_cast<int>(plan.order.size()) < pn) {
        int best = -1;
        for (int v = 0; v < pn; ++v) {
            if (placed[v]) continue;
            bool touches = std::any_of(padj[v].begin(), padj[v].end(),
                                       [&](auto& nb) { return placed[nb.first]; });
            if (!touches) continue;
            if (best == -1 || rank(v) < rank(best)) best = v;
        }
        // pattern is connected, so a touching vertex always exists
        plan.order.push_back(best);
        placed[best] = 1;
        pos_of[best] = static_cast<int>(plan.order.size()) - 1;
    }

    plan.anchor.assign(pn, -1);
    plan.anchor_label.assign(pn, -1);
    plan.back_edges.assign(pn, {});
    for (int pos = 1; pos < pn; ++pos) {
        int v = plan.order[pos];
        for (auto [nbr, el] : padj[v]) {
            int npos = pos_of[nbr];
            if (npos >= pos) continue;
            if (plan.anchor[pos] == -1 || npos < plan.anchor[pos]) {
                if (plan.anchor[pos] != -1)
                    plan.back_edges[pos].push_back({plan.anchor[pos], plan.anchor_label[pos]});
                plan.anchor[pos] = npos;
                plan.anchor_label[pos] = el;
            } else {
                plan.back_edges[pos].push_back({npos, el});
            }
        }
    }

    std::vector<int> image(pn, -1);          // position -> snapshot node
    std::vector<char> used(snapshot.node_count(), 0);

    auto has_edge = [&](int su, int sv, int el) {
        for (auto [nbr, e] : snapshot.neighbors(su))
            if (nbr == sv && snapshot.edge(e).label == el) return true;
        return false;
    };

    // Depth-first over placement positions.
    std::vector<int> cursor(pn, 0);
    int depth = 0;
    std::vector<std::vector<int>> candidates(pn);
    candidates[0].clear();
    {
        int v = plan.order[0];
        for (int s = 0; s < snapshot.node_count(); ++s)
            if (snapshot.node_label_id(s) == vlabel[v] &&
                snapshot.degree(s) >= static_cast<int>(padj[v].size()))
                candidates[0].push_back(s);
    }
    cursor[0] = 0;
    while (depth >= 0) {
        if (depth == pn) return true;
        bool advanced = false;
        int v = plan.order[depth];
        if (depth > 0 && cursor[depth] == 0) {
            candidates[depth].clear();
            int anchor_img = image[plan.anchor[depth]];
            for (auto [nbr, e] : snapshot.neighbors(anchor_img)) {
                if (used[nbr]) continue;
                if (snapshot.edge(e).label != plan.anchor_label[depth]) continue;
                if (snapshot.node_label_id(nbr) != vlabel[v]) continue;
                if (snapshot.degree(nbr) < static_cast<int>(padj[v].size())) continue;
                if (std::find(candidates[depth].begin(), candidates[depth].end(), nbr) !=
                    candidates[depth].end())
                    continue; // parallel edges can list a neighbor twice
                candidates[depth].push_back(nbr);
            }
        }
        while (cursor[depth] < static_cast<int>(candidates[depth].size())) {
            int s = candidates[depth][cursor[depth]++];
            if (depth == 0 ? false : used[s]) continue;
            bool ok = true;
            for (auto [pos, el] : plan.back_edges[depth])
                if (!has_edge(s, image[pos], el)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[depth] = s;
            used[s] = 1;
            ++depth;
            if (depth < pn) cursor[depth] = 0;
            advanced = true;
            break;
        }
        if (!advanced) {
            --depth;
            if (depth >= 0) {
                used[image[depth]] = 0;
                image[depth] = -1;
            }
        }
    }
    return false;
}

} // namespace evomine

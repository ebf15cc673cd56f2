#include "dualgraph/families.hpp"

#include <algorithm>
#include <sstream>

namespace dualgraph {

const char* family_name(Family f)
{
    switch (f) {
    case Family::NoMatch: return "no_match";
    case Family::Chain: return "chain";
    case Family::Star22d: return "star_2_2_d";
    case Family::Star233: return "star_2_3_3";
    case Family::Star234: return "star_2_3_4";
    case Family::Star235: return "star_2_3_5";
    case Family::TwistedChain: return "twisted_chain";
    case Family::TwistedStar22d: return "twisted_star_2_2_d";
    case Family::TwistedStar233: return "twisted_star_2_3_3";
    case Family::Star236: return "star_2_3_6";
    case Family::Star333: return "star_3_3_3";
    case Family::Star244: return "star_2_4_4";
    case Family::DTilde: return "d_tilde";
    case Family::TwistedStar333: return "twisted_star_3_3_3";
    case Family::TwistedStar244: return "twisted_star_2_4_4";
    case Family::TwistedDTilde: return "twisted_d_tilde";
    case Family::SimpleElliptic: return "simple_elliptic";
    case Family::Cusp: return "cusp";
    case Family::TwistedCusp: return "twisted_cusp";
    }
    return "?";
}

int family_figure(Family f)
{
    switch (f) {
    case Family::NoMatch: return 0;
    case Family::Chain:
    case Family::Star22d:
    case Family::Star233:
    case Family::Star234:
    case Family::Star235:
    case Family::TwistedChain:
    case Family::TwistedStar22d:
    case Family::TwistedStar233: return 1;
    case Family::Star236:
    case Family::Star333:
    case Family::Star244:
    case Family::DTilde:
    case Family::TwistedStar333:
    case Family::TwistedStar244:
    case Family::TwistedDTilde: return 2;
    case Family::SimpleElliptic:
    case Family::Cusp:
    case Family::TwistedCusp: return 3;
    }
    return 0;
}

namespace {

// `*` semantics: any weight divisible by r and at least 2r.
bool free_ok(const Vertex& v, long long r)
{
    return v.r == r && v.g == 0 && v.a % r == 0 && v.a >= 2 * r;
}

bool fixed_ok(const Vertex& v, long long r, long long a)
{
    return v.r == r && v.g == 0 && v.a == a;
}

// --- topology views (underlying simple graph) ---------------------------

int pair_count(const DualGraph& g)
{
    return static_cast<int>(g.edge_list().size());
}

std::optional<std::vector<int>> path_order(const DualGraph& g)
{
    int n = g.size();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<int>{0};
    if (pair_count(g) != n - 1) return std::nullopt;
    int start = -1;
    for (int i = 0; i < n; ++i) {
        int d = g.degree(i);
        if (d > 2 || d == 0) return std::nullopt;
        if (d == 1 && start < 0) start = i;
    }
    if (start < 0) return std::nullopt;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int j : g.neighbors(cur))
            if (j != prev) next = j;
        if (next < 0) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt; // disconnected
    return order;
}

std::optional<std::vector<int>> cycle_order(const DualGraph& g)
{
    int n = g.size();
    if (n < 3) return std::nullopt;
    if (pair_count(g) != n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (g.degree(i) != 2) return std::nullopt;
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < n) {
        std::vector<int> nb = g.neighbors(cur);
        int next = (nb[0] != prev) ? nb[0] : nb[1];
        if (next == 0) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

struct StarView {
    int center = -1;
    std::vector<std::vector<int>> arms; // center-outward
};

std::optional<StarView> star_view(const DualGraph& g)
{
    int n = g.size();
    if (n < 4) return std::nullopt;
    if (pair_count(g) != n - 1) return std::nullopt; // tree
    StarView view;
    for (int i = 0; i < n; ++i) {
        int d = g.degree(i);
        if (d >= 3) {
            if (view.center >= 0) return std::nullopt;
            view.center = i;
        }
    }
    if (view.center < 0) return std::nullopt;
    for (int j : g.neighbors(view.center)) {
        std::vector<int> arm{j};
        int prev = view.center, cur = j;
        while (true) {
            int next = -1;
            for (int k : g.neighbors(cur))
                if (k != prev) {
                    if (next >= 0) return std::nullopt; // branch inside an arm
                    next = k;
                }
            if (next < 0) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        view.arms.push_back(std::move(arm));
    }
    size_t total = 1;
    for (const auto& arm : view.arms) total += arm.size();
    if (total != static_cast<size_t>(n)) return std::nullopt;
    return view;
}

// --- fixed and repeating path templates ----------------------------------

struct Slot {
    long long r;
    long long a; // 0 = free
};

struct PathPattern {
    Family fam;
    int variant;
    std::vector<Slot> pre;
    std::vector<long long> pre_edges;
    bool has_rep = false;
    Slot rep{1, 0};
    int rep_min = 1;
    long long edge_pre_rep = 1, edge_rep_rep = 1, edge_rep_post = 1;
    std::vector<Slot> post;
    std::vector<long long> post_edges;
};

bool slot_ok(const Vertex& v, const Slot& s)
{
    return s.a == 0 ? free_ok(v, s.r) : fixed_ok(v, s.r, s.a);
}

// Full slot/edge sequences for k repetitions.
void expand_pattern(const PathPattern& p, int k, std::vector<Slot>& slots, std::vector<long long>& edges)
{
    slots = p.pre;
    edges = p.pre_edges;
    for (int i = 0; i < k; ++i) {
        if (!slots.empty()) edges.push_back(i == 0 ? p.edge_pre_rep : p.edge_rep_rep);
        slots.push_back(p.rep);
    }
    for (size_t i = 0; i < p.post.size(); ++i) {
        if (!slots.empty()) edges.push_back(i == 0 ? (k > 0 ? p.edge_rep_post : p.edge_pre_rep) : p.post_edges[i - 1]);
        slots.push_back(p.post[i]);
    }
}

bool match_sequence(const DualGraph& g, const std::vector<int>& order, const std::vector<Slot>& slots,
                    const std::vector<long long>& edges)
{
    if (order.size() != slots.size()) return false;
    for (size_t i = 0; i < order.size(); ++i)
        if (!slot_ok(g.vertex(order[i]), slots[i])) return false;
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (g.edge_mult(order[i], order[i + 1]) != edges[i]) return false;
    return true;
}

bool match_path_pattern(const DualGraph& g, const std::vector<int>& order, const PathPattern& p)
{
    int n = static_cast<int>(order.size());
    std::vector<int> rev(order.rbegin(), order.rend());
    auto try_k = [&](int k) {
        std::vector<Slot> slots;
        std::vector<long long> edges;
        expand_pattern(p, k, slots, edges);
        return match_sequence(g, order, slots, edges) || match_sequence(g, rev, slots, edges);
    };
    if (!p.has_rep) return n == static_cast<int>(p.pre.size()) && try_k(0);
    int k = n - static_cast<int>(p.pre.size() + p.post.size());
    return k >= p.rep_min && try_k(k);
}

// Table 1 and table 2 twisted diagrams that are plain chains in shape.
// Listed in match precedence order within their tables.
const std::vector<PathPattern>& fig2_path_patterns()
{
    static const std::vector<PathPattern> table = [] {
        std::vector<PathPattern> t;
        PathPattern p;
        // twisted star (3,3,3), six diagrams
        p = {};
        p.fam = Family::TwistedStar333;
        p.variant = 0;
        p.pre = {{2, 4}, {2, 4}, {1, 0}, {1, 3}};
        p.pre_edges = {2, 2, 1};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedStar333;
        p.variant = 1;
        p.pre = {{2, 4}, {2, 4}, {1, 0}, {1, 2}, {1, 2}};
        p.pre_edges = {2, 2, 1, 1};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedStar333;
        p.variant = 2;
        p.pre = {{3, 6}, {3, 6}, {1, 0}};
        p.pre_edges = {3, 3};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedStar333;
        p.variant = 3;
        p.pre = {{1, 2}, {1, 2}, {1, 0}, {2, 6}};
        p.pre_edges = {1, 1, 2};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedStar333;
        p.variant = 4;
        p.pre = {{2, 6}, {1, 0}, {1, 3}};
        p.pre_edges = {2, 1};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedStar333;
        p.variant = 5;
        p.pre = {{3, 9}, {1, 0}};
        p.pre_edges = {3};
        t.push_back(p);
        // twisted star (2,4,4), two diagrams
        p = {};
        p.fam = Family::TwistedStar244;
        p.variant = 0;
        p.pre = {{2, 4}, {2, 4}, {2, 4}, {1, 0}, {1, 2}};
        p.pre_edges = {2, 2, 2, 1};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedStar244;
        p.variant = 1;
        p.pre = {{1, 2}, {1, 0}, {2, 8}};
        p.pre_edges = {1, 2};
        t.push_back(p);
        // twisted D~, the four chain-shaped diagrams (the two forked ones
        // are matched on star topology)
        p = {};
        p.fam = Family::TwistedDTilde;
        p.variant = 2;
        p.pre = {{4, 8}};
        p.has_rep = true;
        p.rep = {2, 0};
        p.rep_min = 1;
        p.edge_pre_rep = 4;
        p.edge_rep_rep = 2;
        p.edge_rep_post = 2;
        p.post = {{1, 0}};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedDTilde;
        p.variant = 3;
        p.pre = {{2, 4}};
        p.has_rep = true;
        p.rep = {1, 0};
        p.rep_min = 1;
        p.edge_pre_rep = 2;
        p.edge_rep_rep = 1;
        p.edge_rep_post = 2;
        p.post = {{2, 4}};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedDTilde;
        p.variant = 4;
        p.pre = {{1, 0}, {4, 8}};
        p.pre_edges = {4};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedDTilde;
        p.variant = 5;
        p.pre = {{1, 2}, {1, 0}, {3, 6}};
        p.pre_edges = {1, 3};
        t.push_back(p);
        return t;
    }();
    return table;
}

const std::vector<PathPattern>& fig1_path_patterns()
{
    static const std::vector<PathPattern> table = [] {
        std::vector<PathPattern> t;
        PathPattern p;
        // twisted star (2,3,3), two diagrams
        p = {};
        p.fam = Family::TwistedStar233;
        p.variant = 0;
        p.pre = {{2, 4}, {2, 4}, {1, 0}, {1, 2}};
        p.pre_edges = {2, 2, 1};
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedStar233;
        p.variant = 1;
        p.pre = {{2, 6}, {1, 0}, {1, 2}};
        p.pre_edges = {2, 1};
        t.push_back(p);
        // twisted star (2,2,d), two diagrams
        p = {};
        p.fam = Family::TwistedStar22d;
        p.variant = 0;
        p.pre = {{2, 4}};
        p.has_rep = true;
        p.rep = {1, 0};
        p.rep_min = 1;
        p.edge_pre_rep = 2;
        p.edge_rep_rep = 1;
        t.push_back(p);
        p = {};
        p.fam = Family::TwistedStar22d;
        p.variant = 1;
        p.pre = {{3, 6}, {1, 0}};
        p.pre_edges = {3};
        t.push_back(p);
        // twisted chain
        p = {};
        p.fam = Family::TwistedChain;
        p.variant = 0;
        p.pre = {{1, 0}};
        p.has_rep = true;
        p.rep = {2, 0};
        p.rep_min = 1;
        p.edge_pre_rep = 2;
        p.edge_rep_rep = 2;
        t.push_back(p);
        // chain, matched last
        p = {};
        p.fam = Family::Chain;
        p.variant = 0;
        p.has_rep = true;
        p.rep = {1, 0};
        p.rep_min = 1;
        t.push_back(p);
        return t;
    }();
    return table;
}

// --- star tables ----------------------------------------------------------

using Arm = std::vector<long long>;
using ArmSet = std::vector<Arm>; // kept sorted

struct StarFamilyTable {
    Family fam;
    std::vector<ArmSet> variants; // drawn order
};

ArmSet sorted_arms(ArmSet arms)
{
    std::sort(arms.begin(), arms.end());
    return arms;
}

const std::vector<StarFamilyTable>& fig2_star_tables()
{
    static const std::vector<StarFamilyTable> t = {
        {Family::Star236,
         {sorted_arms({{2, 2}, {2}, {2, 2, 2, 2, 2}}),
          sorted_arms({{2, 2}, {2}, {6}}),
          sorted_arms({{3}, {2}, {2, 2, 2, 2, 2}}),
          sorted_arms({{3}, {2}, {6}})}},
        {Family::Star333,
         {sorted_arms({{2, 2}, {3}, {2, 2}}),
          sorted_arms({{2, 2}, {2, 2}, {2, 2}}),
          sorted_arms({{2, 2}, {3}, {3}}),
          sorted_arms({{3}, {3}, {3}})}},
        {Family::Star244,
         {sorted_arms({{2, 2, 2}, {2}, {2, 2, 2}}),
          sorted_arms({{2, 2, 2}, {4}, {2}}),
          sorted_arms({{4}, {2}, {4}})}},
    };
    return t;
}

const std::vector<StarFamilyTable>& fig1_star_tables()
{
    static const std::vector<StarFamilyTable> t = {
        {Family::Star233,
         {sorted_arms({{2, 2}, {2}, {2, 2}}),
          sorted_arms({{2, 2}, {2}, {3}}),
          sorted_arms({{3}, {2}, {3}})}},
        {Family::Star234,
         {sorted_arms({{2, 2}, {2}, {2, 2, 2}}),
          sorted_arms({{2, 2}, {2}, {4}}),
          sorted_arms({{3}, {2}, {2, 2, 2}}),
          sorted_arms({{3}, {2}, {4}})}},
        {Family::Star235,
         {sorted_arms({{2, 2}, {2}, {2, 2, 2, 2}}),
          sorted_arms({{3}, {2}, {2, 2, 2, 2}}),
          sorted_arms({{2, 2}, {2}, {2, 3}}),
          sorted_arms({{2, 2}, {2}, {3, 2}}),
          sorted_arms({{3}, {2}, {5}}),
          sorted_arms({{2, 2}, {2}, {5}}),
          sorted_arms({{3}, {2}, {2, 3}}),
          sorted_arms({{3}, {2}, {3, 2}})}},
    };
    return t;
}

// Determinant of the continued-fraction chain with weights (a_1..a_k);
// used only as a descriptive parameter for the (2,2,d) family.
long long chain_determinant(const Arm& weights)
{
    long long prev2 = 0, prev1 = 1;
    for (long long a : weights) {
        long long d = a * prev1 - prev2;
        prev2 = prev1;
        prev1 = d;
    }
    return prev1;
}

// --- per-family recognizers ----------------------------------------------

FamilyMatch make_match(Family fam, int variant, std::map<std::string, long long> params = {})
{
    FamilyMatch m;
    m.family = fam;
    m.figure = family_figure(fam);
    m.variant = variant;
    m.params = std::move(params);
    return m;
}

std::optional<FamilyMatch> match_cusp_cycle(const DualGraph& g, const std::vector<int>& order)
{
    long long r = g.vertex(order[0]).r;
    int n = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i) {
        if (!free_ok(g.vertex(order[i]), r)) return std::nullopt;
        if (g.edge_mult(order[i], order[(i + 1) % n]) != r) return std::nullopt;
    }
    return make_match(Family::Cusp, 0, {{"r", r}, {"n", n}});
}

std::optional<FamilyMatch> match_cusp_two(const DualGraph& g, const std::vector<int>& order)
{
    if (order.size() != 2) return std::nullopt;
    long long r = g.vertex(order[0]).r;
    if (!free_ok(g.vertex(order[0]), r) || !free_ok(g.vertex(order[1]), r)) return std::nullopt;
    if (g.edge_mult(order[0], order[1]) != 2 * r) return std::nullopt;
    return make_match(Family::Cusp, 1, {{"r", r}, {"n", 2}});
}

std::optional<FamilyMatch> match_twisted_cusp(const DualGraph& g, const std::vector<int>& order)
{
    int n = static_cast<int>(order.size());
    if (n < 3) return std::nullopt;
    long long r = g.vertex(order[0]).r;
    if (g.vertex(order[n - 1]).r != r) return std::nullopt;
    if (!free_ok(g.vertex(order[0]), r) || !free_ok(g.vertex(order[n - 1]), r)) return std::nullopt;
    for (int i = 1; i < n - 1; ++i)
        if (!free_ok(g.vertex(order[i]), 2 * r)) return std::nullopt;
    for (int i = 0; i + 1 < n; ++i)
        if (g.edge_mult(order[i], order[i + 1]) != 2 * r) return std::nullopt;
    return make_match(Family::TwistedCusp, 0, {{"r", r}, {"n", n}});
}

bool plain_star_prereqs(const DualGraph& g, const StarView& view)
{
    // The non-twisted star diagrams: three arms, everything r=1 g=0,
    // simple edges, center weight free.
    if (view.arms.size() != 3) return false;
    for (int i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        if (v.r != 1 || v.g != 0) return false;
    }
    for (const Edge& e : g.edge_list())
        if (e.mult != 1) return false;
    return free_ok(g.vertex(view.center), 1);
}

ArmSet arm_weights(const DualGraph& g, const StarView& view)
{
    ArmSet arms;
    for (const auto& arm : view.arms) {
        Arm w;
        for (int idx : arm) w.push_back(g.vertex(idx).a);
        arms.push_back(std::move(w));
    }
    return sorted_arms(arms);
}

std::optional<FamilyMatch> match_star_tables(const DualGraph& g, const StarView& view,
                                             const std::vector<StarFamilyTable>& tables)
{
    if (!plain_star_prereqs(g, view)) return std::nullopt;
    ArmSet arms = arm_weights(g, view);
    for (const StarFamilyTable& fam : tables)
        for (size_t v = 0; v < fam.variants.size(); ++v)
            if (arms == fam.variants[v])
                return make_match(fam.fam, static_cast<int>(v), {{"n", g.size()}});
    return std::nullopt;
}

std::optional<FamilyMatch> match_star22d(const DualGraph& g, const StarView& view)
{
    if (!plain_star_prereqs(g, view)) return std::nullopt;
    // two single -2 leaf arms; the rest is the free tail
    std::vector<int> leaf_arms, other_arms;
    for (size_t i = 0; i < view.arms.size(); ++i) {
        const auto& arm = view.arms[i];
        if (arm.size() == 1 && g.vertex(arm[0]).a == 2)
            leaf_arms.push_back(static_cast<int>(i));
        else
            other_arms.push_back(static_cast<int>(i));
    }
    if (leaf_arms.size() < 2 || leaf_arms.size() + other_arms.size() != 3) return std::nullopt;
    int tail_index = other_arms.empty() ? leaf_arms[2] : other_arms[0];
    const auto& tail = view.arms[static_cast<size_t>(tail_index)];
    Arm tail_w;
    for (int idx : tail) {
        if (!free_ok(g.vertex(idx), 1)) return std::nullopt;
        tail_w.push_back(g.vertex(idx).a);
    }
    return make_match(Family::Star22d, 0,
                      {{"n", g.size()},
                       {"tail_len", static_cast<long long>(tail.size())},
                       {"d", chain_determinant(tail_w)}});
}

// Twisted D~ forked diagrams:
//   variant 0: center r=2 free, two (r=2, a=4) leaves on double edges, one
//              arm of r=2 free vertices (double edges) ending in an r=1
//              free vertex, also on a double edge.
//   variant 1: center r=1 free, two (r=1, a=2) leaves on single edges, one
//              arm of r=1 free vertices (single edges) ending in an
//              (r=2, a=4) vertex on a double edge.
std::optional<FamilyMatch> match_twisted_dtilde_fork(const DualGraph& g, const StarView& view)
{
    if (view.arms.size() != 3) return std::nullopt;
    const Vertex& center = g.vertex(view.center);

    for (int variant : {0, 1}) {
        long long rc = variant == 0 ? 2 : 1;
        if (!free_ok(center, rc)) continue;
        std::vector<int> leaf_arms, long_arms;
        for (size_t i = 0; i < view.arms.size(); ++i) {
            const auto& arm = view.arms[i];
            const Vertex& first = g.vertex(arm[0]);
            long long mult = g.edge_mult(view.center, arm[0]);
            bool is_leaf = arm.size() == 1 && fixed_ok(first, rc, 2 * rc) && mult == (variant == 0 ? 2 : 1);
            if (is_leaf && leaf_arms.size() < 2)
                leaf_arms.push_back(static_cast<int>(i));
            else
                long_arms.push_back(static_cast<int>(i));
        }
        if (leaf_arms.size() != 2 || long_arms.size() != 1) continue;
        const auto& arm = view.arms[static_cast<size_t>(long_arms[0])];
        int len = static_cast<int>(arm.size());
        bool arm_ok = true;
        int prev = view.center;
        for (int k = 0; k < len && arm_ok; ++k) {
            const Vertex& v = g.vertex(arm[static_cast<size_t>(k)]);
            long long mult = g.edge_mult(prev, arm[static_cast<size_t>(k)]);
            bool last = k == len - 1;
            if (variant == 0)
                arm_ok = mult == 2 && (last ? free_ok(v, 1) : free_ok(v, 2));
            else
                arm_ok = last ? (mult == 2 && fixed_ok(v, 2, 4)) : (mult == 1 && free_ok(v, 1));
            prev = arm[static_cast<size_t>(k)];
        }
        if (arm_ok) return make_match(Family::TwistedDTilde, variant, {{"n", g.size()}});
    }
    return std::nullopt;
}

// D~ shape: a central path of free vertices with two -2 leaves attached at
// each end (the length-one central path is a single vertex with four
// leaves). Everything r=1, g=0, simple edges.
std::optional<FamilyMatch> match_dtilde(const DualGraph& g)
{
    int n = g.size();
    if (n < 5) return std::nullopt;
    if (pair_count(g) != n - 1) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (g.vertex(i).r != 1 || g.vertex(i).g != 0) return std::nullopt;
    for (const Edge& e : g.edge_list())
        if (e.mult != 1) return std::nullopt;

    std::vector<int> leaves;
    std::vector<int> core;
    for (int i = 0; i < n; ++i)
        (g.degree(i) == 1 ? leaves : core).push_back(i);
    if (leaves.size() != 4) return std::nullopt;
    for (int l : leaves)
        if (g.vertex(l).a != 2) return std::nullopt;
    for (int c : core)
        if (!free_ok(g.vertex(c), 1)) return std::nullopt;

    // core must be a path whose two ends each carry exactly two leaves
    std::vector<int> leaf_count(static_cast<size_t>(n), 0);
    for (int l : leaves) leaf_count[static_cast<size_t>(g.neighbors(l)[0])]++;

    if (core.size() == 1) {
        if (leaf_count[static_cast<size_t>(core[0])] != 4) return std::nullopt;
        return make_match(Family::DTilde, 0, {{"n", n - 1}, {"core_len", 1}});
    }
    int ends = 0;
    for (int c : core) {
        int core_deg = 0;
        for (int j : g.neighbors(c))
            if (g.degree(j) > 1) ++core_deg;
        int lc = leaf_count[static_cast<size_t>(c)];
        if (core_deg == 1) {
            if (lc != 2) return std::nullopt;
            ++ends;
        } else if (core_deg == 2) {
            if (lc != 0) return std::nullopt;
        } else {
            return std::nullopt;
        }
    }
    if (ends != 2) return std::nullopt;
    return make_match(Family::DTilde, 0,
                      {{"n", n - 1}, {"core_len", static_cast<long long>(core.size())}});
}

std::optional<FamilyMatch> match_path_patterns(const DualGraph& g, const std::vector<int>& order,
                                               const std::vector<PathPattern>& patterns)
{
    for (const PathPattern& p : patterns)
        if (match_path_pattern(g, order, p)) {
            std::map<std::string, long long> params{{"n", g.size()}};
            return make_match(p.fam, p.variant, std::move(params));
        }
    return std::nullopt;
}

} // namespace

FamilyMatch match_family(const DualGraph& g)
{
    FamilyMatch no_match;
    int n = g.size();
    if (n == 0) return no_match;

    // table 3
    if (n == 1) {
        const Vertex& v = g.vertex(0);
        if (v.r == 1 && v.g == 1 && v.a >= 2)
            return make_match(Family::SimpleElliptic, 0, {{"a", v.a}});
    }
    if (auto cyc = cycle_order(g)) {
        if (auto m = match_cusp_cycle(g, *cyc)) return *m;
        return no_match; // no other template is a cycle
    }
    auto path = path_order(g);
    if (path) {
        if (auto m = match_cusp_two(g, *path)) return *m;
        if (auto m = match_twisted_cusp(g, *path)) return *m;
        // table 2 chain-shaped diagrams
        if (auto m = match_path_patterns(g, *path, fig2_path_patterns())) return *m;
        // table 1 chain-shaped diagrams (Chain itself is last in the table)
        if (auto m = match_path_patterns(g, *path, fig1_path_patterns())) return *m;
        return no_match;
    }
    auto star = star_view(g);
    if (star && star->arms.size() == 3) {
        // table 2 before table 1
        if (auto m = match_twisted_dtilde_fork(g, *star)) return *m;
        if (auto m = match_star_tables(g, *star, fig2_star_tables())) return *m;
        if (auto m = match_star_tables(g, *star, fig1_star_tables())) return *m;
        if (auto m = match_star22d(g, *star)) return *m;
    }
    if (auto m = match_dtilde(g)) return *m;
    return no_match;
}

ExpectedClass expected_numeric_class(const FamilyMatch& m)
{
    if (!m.matched()) throw std::invalid_argument("expected_numeric_class: no match");
    switch (m.figure) {
    case 1: return {NumericClass::klt, false};
    case 2: return {NumericClass::lc_not_klt, false};
    case 3: return {NumericClass::lc_not_klt, true};
    default: throw std::invalid_argument("expected_numeric_class: bad figure");
    }
}

ConsistencyVerdict cross_check(const DualGraph& g)
{
    ConsistencyVerdict verdict;
    verdict.match = match_family(g);
    verdict.numeric = classify_numerical(g); // throws not_a_dual_graph if indefinite

    if (!verdict.match.matched()) {
        verdict.kind = Consistency::unmatched;
        return verdict;
    }
    ExpectedClass expected = expected_numeric_class(verdict.match);
    bool ok = expected.klass == verdict.numeric.klass;
    if (ok && expected.klass == NumericClass::lc_not_klt)
        ok = expected.delta_equals_E == verdict.numeric.delta_equals_E;
    if (ok) {
        verdict.kind = Consistency::consistent;
    } else {
        verdict.kind = Consistency::inconsistent;
        std::ostringstream msg;
        msg << "matched " << family_name(verdict.match.family) << " (table " << verdict.match.figure
            << ", diagram " << verdict.match.variant << ") expecting " << numeric_class_name(expected.klass);
        if (expected.klass == NumericClass::lc_not_klt)
            msg << (expected.delta_equals_E ? " with delta = E" : " with delta != E");
        msg << ", computed " << numeric_class_name(verdict.numeric.klass);
        if (verdict.numeric.klass == NumericClass::lc_not_klt)
            msg << (verdict.numeric.delta_equals_E ? " with delta = E" : " with delta != E");
        verdict.details = msg.str();
    }
    return verdict;
}

// --------------------------------------------------------------------------
// Template instantiation sweep.

namespace {

DualGraph build_path(const std::vector<Slot>& slots, const std::vector<long long>& weights,
                     const std::vector<long long>& edges)
{
    std::vector<Vertex> verts;
    std::vector<Edge> es;
    for (size_t i = 0; i < slots.size(); ++i)
        verts.push_back({"E" + std::to_string(i + 1), slots[i].r, 0, weights[i]});
    for (size_t i = 0; i + 1 < slots.size(); ++i)
        es.push_back({static_cast<int>(i), static_cast<int>(i + 1), edges[i]});
    return DualGraph::from_parts(std::move(verts), es);
}

// All weight assignments: fixed slots keep their weight, free slots run
// over {2r, ..., cap*r} step r.
void for_each_weights(const std::vector<Slot>& slots, long long cap,
                      const std::function<void(const std::vector<long long>&)>& fn)
{
    std::vector<long long> w(slots.size());
    std::vector<size_t> free_idx;
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].a != 0)
            w[i] = slots[i].a;
        else
            free_idx.push_back(i);
    }
    std::vector<long long> step(free_idx.size(), 2);
    while (true) {
        for (size_t k = 0; k < free_idx.size(); ++k)
            w[free_idx[k]] = step[k] * slots[free_idx[k]].r;
        fn(w);
        size_t k = 0;
        while (k < free_idx.size()) {
            if (++step[k] <= cap) break;
            step[k] = 2;
            ++k;
        }
        if (k == free_idx.size()) break;
    }
}

} // namespace

void for_each_template_instance(const SweepBounds& bounds,
                                const std::function<void(const DualGraph&, Family, int)>& fn)
{
    const int L = bounds.max_len;
    const long long W = bounds.weight_cap;

    auto emit_path_pattern = [&](const PathPattern& p) {
        auto emit_k = [&](int k) {
            std::vector<Slot> slots;
            std::vector<long long> edges;
            expand_pattern(p, k, slots, edges);
            for_each_weights(slots, W, [&](const std::vector<long long>& w) {
                fn(build_path(slots, w, edges), p.fam, p.variant);
            });
        };
        if (!p.has_rep) {
            emit_k(0);
            return;
        }
        int fixed = static_cast<int>(p.pre.size() + p.post.size());
        for (int k = p.rep_min; fixed + k <= L; ++k) emit_k(k);
    };
    for (const PathPattern& p : fig2_path_patterns()) emit_path_pattern(p);
    for (const PathPattern& p : fig1_path_patterns()) emit_path_pattern(p);

    // star families with fixed arms
    auto emit_star_tables = [&](const std::vector<StarFamilyTable>& tables) {
        for (const StarFamilyTable& fam : tables) {
            for (size_t variant = 0; variant < fam.variants.size(); ++variant) {
                const ArmSet& arms = fam.variants[variant];
                for (long long step = 2; step <= W; ++step) {
                    std::vector<Vertex> verts{{"E1", 1, 0, step}};
                    std::vector<Edge> edges;
                    for (const Arm& arm : arms) {
                        int prev = 0;
                        for (long long a : arm) {
                            verts.push_back({"E" + std::to_string(verts.size() + 1), 1, 0, a});
                            edges.push_back({prev, static_cast<int>(verts.size() - 1), 1});
                            prev = static_cast<int>(verts.size() - 1);
                        }
                    }
                    fn(DualGraph::from_parts(std::move(verts), edges), fam.fam,
                       static_cast<int>(variant));
                }
            }
        }
    };
    emit_star_tables(fig2_star_tables());
    emit_star_tables(fig1_star_tables());

    // star (2,2,d): free tail of length 1..L
    for (int tail = 1; tail <= L; ++tail) {
        std::vector<Slot> slots{{1, 0}, {1, 2}, {1, 2}};
        for (int i = 0; i < tail; ++i) slots.push_back({1, 0});
        for_each_weights(slots, W, [&](const std::vector<long long>& w) {
            std::vector<Vertex> verts;
            for (size_t i = 0; i < slots.size(); ++i)
                verts.push_back({"E" + std::to_string(i + 1), 1, 0, w[i]});
            std::vector<Edge> edges{{0, 1, 1}, {0, 2, 1}};
            int prev = 0;
            for (int i = 0; i < tail; ++i) {
                edges.push_back({prev, 3 + i, 1});
                prev = 3 + i;
            }
            fn(DualGraph::from_parts(std::move(verts), edges), Family::Star22d, 0);
        });
    }

    // D~: central path of length 1..L with two -2 leaves at each end
    for (int core = 1; core <= L; ++core) {
        std::vector<Slot> slots;
        for (int i = 0; i < core; ++i) slots.push_back({1, 0});
        for_each_weights(slots, W, [&](const std::vector<long long>& w) {
            std::vector<Vertex> verts;
            std::vector<Edge> edges;
            for (int i = 0; i < core; ++i) {
                verts.push_back({"E" + std::to_string(i + 1), 1, 0, w[static_cast<size_t>(i)]});
                if (i > 0) edges.push_back({i - 1, i, 1});
            }
            auto add_leaf = [&](int attach) {
                verts.push_back({"E" + std::to_string(verts.size() + 1), 1, 0, 2});
                edges.push_back({attach, static_cast<int>(verts.size() - 1), 1});
            };
            add_leaf(0);
            add_leaf(0);
            add_leaf(core - 1);
            add_leaf(core - 1);
            fn(DualGraph::from_parts(std::move(verts), edges), Family::DTilde, 0);
        });
    }

    // twisted D~ forked diagrams: arm of length 1..L hanging off the fork
    for (int variant : {0, 1}) {
        long long rc = variant == 0 ? 2 : 1;
        for (int arm_len = 1; arm_len <= L; ++arm_len) {
            std::vector<Slot> slots{{rc, 0}}; // center
            for (int i = 0; i < arm_len - 1; ++i) slots.push_back({rc, 0});
            slots.push_back(variant == 0 ? Slot{1, 0} : Slot{2, 4}); // far end of the arm
            for_each_weights(slots, W, [&](const std::vector<long long>& w) {
                std::vector<Vertex> verts;
                std::vector<Edge> edges;
                for (size_t i = 0; i < slots.size(); ++i) {
                    verts.push_back({"E" + std::to_string(i + 1), slots[i].r, 0, w[i]});
                    if (i > 0) {
                        long long mult = variant == 0 ? 2 : (i + 1 == slots.size() ? 2 : 1);
                        edges.push_back({static_cast<int>(i - 1), static_cast<int>(i), mult});
                    }
                }
                long long leaf_mult = variant == 0 ? 2 : 1;
                for (int l = 0; l < 2; ++l) {
                    verts.push_back({"E" + std::to_string(verts.size() + 1), rc, 0, 2 * rc});
                    edges.push_back({0, static_cast<int>(verts.size() - 1), leaf_mult});
                }
                fn(DualGraph::from_parts(std::move(verts), edges), Family::TwistedDTilde, variant);
            });
        }
    }

    // simple elliptic
    for (long long a = 2; a <= W; ++a) {
        fn(DualGraph::from_parts({{"E1", 1, 1, a}}, {}), Family::SimpleElliptic, 0);
    }

    // cusps and twisted cusps for parameter r = 1..max_r
    for (long long r = 1; r <= bounds.max_r; ++r) {
        { // length 2 diagram
            std::vector<Slot> slots{{r, 0}, {r, 0}};
            for_each_weights(slots, W, [&](const std::vector<long long>& w) {
                fn(build_path(slots, w, {2 * r}), Family::Cusp, 1);
            });
        }
        for (int n = 3; n <= L; ++n) { // cycles
            std::vector<Slot> slots(static_cast<size_t>(n), Slot{r, 0});
            for_each_weights(slots, W, [&](const std::vector<long long>& w) {
                std::vector<Vertex> verts;
                std::vector<Edge> edges;
                for (int i = 0; i < n; ++i) {
                    verts.push_back({"E" + std::to_string(i + 1), r, 0, w[static_cast<size_t>(i)]});
                    edges.push_back({i, (i + 1) % n, r});
                }
                fn(DualGraph::from_parts(std::move(verts), edges), Family::Cusp, 0);
            });
        }
        for (int n = 3; n <= L; ++n) { // twisted cusps
            std::vector<Slot> slots;
            slots.push_back({r, 0});
            for (int i = 0; i < n - 2; ++i) slots.push_back({2 * r, 0});
            slots.push_back({r, 0});
            std::vector<long long> edges(static_cast<size_t>(n - 1), 2 * r);
            for_each_weights(slots, W, [&](const std::vector<long long>& w) {
                fn(build_path(slots, w, edges), Family::TwistedCusp, 0);
            });
        }
    }
}

} // namespace dualgraph

#include "dualgraph/transforms.hpp"

#include <algorithm>
#include <set>

#include "dualgraph/discrepancy.hpp"
#include "dualgraph/families.hpp"

namespace dualgraph {

namespace {

std::string fresh_id(const DualGraph& g)
{
    std::set<std::string> used;
    for (const Vertex& v : g.vertices()) used.insert(v.id);
    for (int k = 1;; ++k) {
        std::string id = "C" + std::to_string(k);
        if (!used.count(id)) return id;
    }
}

void check_site(const DualGraph& g, const BlowUpSite& site)
{
    if (site.vertex < 0 || site.vertex >= g.size())
        throw std::invalid_argument("blow_up: vertex index out of range");
    if (site.kind == BlowUpSite::Kind::on_curve) {
        const Vertex& v = g.vertex(site.vertex);
        if (v.r != 1) throw std::invalid_argument("blow_up: centre must lie on a curve with r=1");
        long long m = site.multiplicity;
        if (m < 1) throw std::invalid_argument("blow_up: multiplicity must be >= 1");
        if (v.g < m * (m - 1) / 2)
            throw std::invalid_argument("blow_up: vertex genus too small for an ordinary point of this multiplicity");
    } else {
        if (site.other < 0 || site.other >= g.size() || site.other == site.vertex)
            throw std::invalid_argument("blow_up: bad intersection site");
        if (g.edge_mult(site.vertex, site.other) < 1)
            throw std::invalid_argument("blow_up: the two curves do not meet");
        if (g.vertex(site.vertex).r != 1 || g.vertex(site.other).r != 1)
            throw std::invalid_argument("blow_up: centre must lie on curves with r=1");
    }
}

} // namespace

DualGraph blow_up(const DualGraph& g, const BlowUpSite& site)
{
    check_site(g, site);
    std::vector<Vertex> verts = g.vertices();
    std::vector<Edge> edges = g.edge_list();
    int c = g.size();
    verts.push_back({fresh_id(g), 1, 0, 1});

    if (site.kind == BlowUpSite::Kind::on_curve) {
        long long m = site.multiplicity;
        Vertex& v = verts[static_cast<size_t>(site.vertex)];
        v.a += m * m;
        v.g -= m * (m - 1) / 2;
        edges.push_back({site.vertex, c, m});
    } else {
        verts[static_cast<size_t>(site.vertex)].a += 1;
        verts[static_cast<size_t>(site.other)].a += 1;
        for (Edge& e : edges) {
            if ((e.i == site.vertex && e.j == site.other) || (e.i == site.other && e.j == site.vertex))
                e.mult -= 1;
        }
        edges.erase(std::remove_if(edges.begin(), edges.end(),
                                   [](const Edge& e) { return e.mult == 0; }),
                    edges.end());
        edges.push_back({site.vertex, c, 1});
        edges.push_back({site.other, c, 1});
    }
    return DualGraph::from_parts(std::move(verts), edges, /*minimal_mode=*/false);
}

Rational predicted_new_discrepancy(const DualGraph& g, const BlowUpSite& site)
{
    check_site(g, site);
    std::vector<Rational> d = delta_coefficients(g);
    if (site.kind == BlowUpSite::Kind::on_curve)
        return Rational(site.multiplicity) * d[static_cast<size_t>(site.vertex)] - Rational(1);
    return d[static_cast<size_t>(site.vertex)] + d[static_cast<size_t>(site.other)] - Rational(1);
}

DualGraph cusp_base_change(const DualGraph& g)
{
    FamilyMatch m = match_family(g);
    if (m.family != Family::Cusp)
        throw std::invalid_argument("cusp_base_change: graph is not a cusp");
    long long r = m.params.at("r");
    long long n = m.params.at("n");
    if (r == 1) return g;

    // Original cycle order. The two-vertex diagram is its own order.
    std::vector<int> order;
    if (n == 2) {
        order = {0, 1};
    } else {
        order.push_back(0);
        int prev = -1, cur = 0;
        while (static_cast<int>(order.size()) < n) {
            std::vector<int> nb = g.neighbors(cur);
            int next = (nb[0] != prev) ? nb[0] : nb[1];
            order.push_back(next);
            prev = cur;
            cur = next;
        }
    }

    long long total = r * n;
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
    for (long long k = 0; k < total; ++k) {
        const Vertex& src = g.vertex(order[static_cast<size_t>(k % n)]);
        verts.push_back({"E" + std::to_string(k + 1), 1, 0, src.a / r});
        edges.push_back({static_cast<int>(k), static_cast<int>((k + 1) % total), 1});
    }
    return DualGraph::from_parts(std::move(verts), edges, g.minimal_mode());
}

} // namespace dualgraph

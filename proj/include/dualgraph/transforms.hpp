#ifndef DUALGRAPH_TRANSFORMS_HPP
#define DUALGRAPH_TRANSFORMS_HPP

#include "dualgraph/dual_graph.hpp"
#include "dualgraph/rational.hpp"

namespace dualgraph {

// Blow-up centre, always a rational point of degree one.
//   on_curve: a point of multiplicity m on curve `vertex` (m=1 smooth
//             point, m=2 a node, which costs one unit of genus)
//   on_intersection: a transversal meeting point of two curves
struct BlowUpSite {
    enum class Kind { on_curve, on_intersection };
    Kind kind = Kind::on_curve;
    int vertex = -1;
    long long multiplicity = 1; // on_curve only
    int other = -1;             // on_intersection only

    static BlowUpSite on_curve(int vertex, long long m = 1)
    {
        BlowUpSite s;
        s.kind = Kind::on_curve;
        s.vertex = vertex;
        s.multiplicity = m;
        return s;
    }
    static BlowUpSite on_intersection(int i, int j)
    {
        BlowUpSite s;
        s.kind = Kind::on_intersection;
        s.vertex = i;
        s.other = j;
        return s;
    }
};

// One point blow-up. The new exceptional curve gets (r=1, g=0, a=1) and the
// output graph carries minimal_mode=false. Affected vertices must have r=1.
//   on_curve(i, m):        a_i += m^2, g_i -= m(m-1)/2, new edge i-C of mult m
//   on_intersection(i, j): a_i += 1, a_j += 1, e_ij -= 1, new edges i-C, j-C
// Throws std::invalid_argument on an invalid site.
DualGraph blow_up(const DualGraph& g, const BlowUpSite& site);

// Coefficient the new curve must receive, computed independently of the
// linear solve on the blown-up graph: sum of m_i * d_i over the incident
// old vertices, minus one.
Rational predicted_new_discrepancy(const DualGraph& g, const BlowUpSite& site);

// Splits a cusp of parameter r and length n into the cusp of parameter 1
// and length r*n: every vertex becomes r vertices of weight a_i/r, orbits
// interleaved so consecutive cycle positions come from consecutive original
// vertices. Identity for r=1. Throws std::invalid_argument unless the graph
// matches the cusp family (the two-vertex diagram included).
DualGraph cusp_base_change(const DualGraph& g);

} // namespace dualgraph

#endif

#include "dualgraph/discrepancy.hpp"

namespace dualgraph {

std::vector<long long> canonical_degrees(const DualGraph& g)
{
    std::vector<long long> deg(static_cast<size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        deg[static_cast<size_t>(i)] = v.r * (2 * v.g - 2) + v.a;
    }
    return deg;
}

std::vector<Rational> delta_coefficients(const DualGraph& g)
{
    IntMatrix m = intersection_matrix(g);
    if (!is_negative_definite(m)) throw not_a_dual_graph();

    std::vector<long long> deg = canonical_degrees(g);
    std::vector<long long> b(deg.size());
    bool all_zero = true;
    for (size_t i = 0; i < deg.size(); ++i) {
        b[i] = -deg[i];
        if (b[i] != 0) all_zero = false;
    }
    if (all_zero) return std::vector<Rational>(deg.size(), Rational(0));
    return solve_exact(m, b);
}

DiscrepancyResult classify_numerical(const DualGraph& g)
{
    DiscrepancyResult res;
    res.canonical_degrees = canonical_degrees(g);
    res.delta = delta_coefficients(g);
    res.discrepancies.reserve(res.delta.size());
    for (const Rational& d : res.delta) res.discrepancies.push_back(-d);

    const Rational one(1);
    bool any_over = false, any_equal = false, all_equal = true;
    for (const Rational& d : res.delta) {
        if (d > one) any_over = true;
        if (d == one)
            any_equal = true;
        else
            all_equal = false;
    }
    if (any_over)
        res.klass = NumericClass::not_lc;
    else if (any_equal)
        res.klass = NumericClass::lc_not_klt;
    else
        res.klass = NumericClass::klt;
    res.delta_equals_E = !res.delta.empty() && all_equal;
    return res;
}

const char* numeric_class_name(NumericClass k)
{
    switch (k) {
    case NumericClass::klt: return "klt";
    case NumericClass::lc_not_klt: return "lc";
    case NumericClass::not_lc: return "not_lc";
    }
    return "?";
}

} // namespace dualgraph

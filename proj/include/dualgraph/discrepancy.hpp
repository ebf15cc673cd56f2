#ifndef DUALGRAPH_DISCREPANCY_HPP
#define DUALGRAPH_DISCREPANCY_HPP

#include <vector>

#include "dualgraph/dual_graph.hpp"
#include "dualgraph/rational.hpp"

namespace dualgraph {

// Raised when the intersection matrix is not negative definite: either the
// boundary-divisor system is singular or the graph cannot come from a
// resolution of a normal surface singularity.
class not_a_dual_graph : public std::runtime_error {
public:
    not_a_dual_graph()
        : std::runtime_error("intersection matrix is not negative definite; not a dual graph")
    {
    }
};

enum class NumericClass { klt, lc_not_klt, not_lc };

// Exact classification data for one graph:
//   canonical_degrees[i] = (K.E_i) = r_i (2 g_i - 2) + a_i
//   delta[i]             = coefficient of the boundary divisor at E_i
//   discrepancies[i]     = -delta[i]
// Class thresholds are exact rational comparisons against 1.
struct DiscrepancyResult {
    std::vector<long long> canonical_degrees;
    std::vector<Rational> delta;
    std::vector<Rational> discrepancies;
    NumericClass klass = NumericClass::klt;
    bool delta_equals_E = false; // all delta coefficients exactly 1
};

std::vector<long long> canonical_degrees(const DualGraph& g);

// Unique exact solution d of  M d = b,  b_i = -(K.E_i).
// Throws not_a_dual_graph unless M is negative definite.
std::vector<Rational> delta_coefficients(const DualGraph& g);

DiscrepancyResult classify_numerical(const DualGraph& g);

const char* numeric_class_name(NumericClass k); // "klt" | "lc" | "not_lc"

} // namespace dualgraph

#endif

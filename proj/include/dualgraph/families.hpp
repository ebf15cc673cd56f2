#ifndef DUALGRAPH_FAMILIES_HPP
#define DUALGRAPH_FAMILIES_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "dualgraph/discrepancy.hpp"
#include "dualgraph/dual_graph.hpp"

namespace dualgraph {

// The classification tables. Table 1 holds the numerically klt graphs,
// table 2 the rational log canonical (not klt) ones, table 3 the
// non-rational log canonical ones.
enum class Family {
    NoMatch,
    // table 1
    Chain,
    Star22d,
    Star233,
    Star234,
    Star235,
    TwistedChain,
    TwistedStar22d,
    TwistedStar233,
    // table 2
    Star236,
    Star333,
    Star244,
    DTilde,
    TwistedStar333,
    TwistedStar244,
    TwistedDTilde,
    // table 3
    SimpleElliptic,
    Cusp,
    TwistedCusp,
};

const char* family_name(Family f);
int family_figure(Family f); // 1, 2, 3; 0 for NoMatch

struct FamilyMatch {
    Family family = Family::NoMatch;
    int figure = 0;
    int variant = 0; // index of the matched drawn diagram within its subfigure
    std::map<std::string, long long> params;

    bool matched() const { return family != Family::NoMatch; }
};

// First matching template under the documented precedence: table 3, then
// table 2, then table 1, with a bare Chain tried last. Matching is purely
// combinatorial; negative definiteness is not consulted.
FamilyMatch match_family(const DualGraph& g);

struct ExpectedClass {
    NumericClass klass = NumericClass::klt;
    bool delta_equals_E = false;
};

// Table 1 -> klt; table 2 -> lc with delta != E; table 3 -> lc with
// delta == E. Throws std::invalid_argument on NoMatch.
ExpectedClass expected_numeric_class(const FamilyMatch& m);

enum class Consistency { consistent, inconsistent, unmatched };

struct ConsistencyVerdict {
    Consistency kind = Consistency::unmatched;
    FamilyMatch match;
    DiscrepancyResult numeric;
    std::string details; // filled for inconsistent
};

// Runs match_family and classify_numerical and compares the two verdicts.
// Throws not_a_dual_graph when the graph is not negative definite.
ConsistencyVerdict cross_check(const DualGraph& g);

// Exhaustive instantiation of every drawn diagram: variable lengths up to
// max_len, the free `*` weights over {2r, ..., weight_cap*r} step r, and the
// cusp/twisted-cusp parameter r up to max_r. Instances are emitted before
// any negative-definiteness filtering.
struct SweepBounds {
    int max_len = 6;
    long long weight_cap = 8;
    long long max_r = 3;
};

void for_each_template_instance(
    const SweepBounds& bounds,
    const std::function<void(const DualGraph&, Family, int variant)>& fn);

} // namespace dualgraph

#endif

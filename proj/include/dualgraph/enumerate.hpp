#ifndef DUALGRAPH_ENUMERATE_HPP
#define DUALGRAPH_ENUMERATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "dualgraph/families.hpp"

namespace dualgraph {

struct EnumBounds {
    int max_vertices = 2;
    long long max_a = 6;
    long long max_r = 1;
    long long max_g = 0;
    long long max_edge_mult = 4;
};

// Streams one representative per isomorphism class of the connected graphs
// that satisfy every validation rule in minimal mode and are negative
// definite, within the given bounds. Deterministic order.
void enumerate_graphs(const EnumBounds& bounds, const std::function<void(const DualGraph&)>& fn);

struct UnmatchedEntry {
    std::string key; // canonical form
    NumericClass klass = NumericClass::klt;
};

struct InconsistentEntry {
    std::string key;
    std::string details;
};

struct AuditReport {
    // labeled candidates that satisfy the validation rules and are
    // connected, before the negative-definiteness filter and dedup
    long long total_enumerated = 0;
    // isomorphism classes that survive all filters and get cross-checked
    long long negative_definite_count = 0;
    long long klt_count = 0;
    long long lc_count = 0;
    long long not_lc_count = 0;
    long long consistent_count = 0;
    // graphs beyond the lc range never match a diagram; they are only
    // counted, not pinned
    long long unmatched_not_lc = 0;
    // klt / lc graphs that match no diagram: the pinned regression set
    std::vector<UnmatchedEntry> unmatched;       // sorted by key
    std::vector<InconsistentEntry> inconsistent; // sorted by key; empty is the pass condition

    bool passed(const std::vector<UnmatchedEntry>& allowlist) const;
};

// Cross-checks every enumerated graph. Work is sharded over `jobs` threads;
// the report is an order-independent merge.
AuditReport audit(const EnumBounds& bounds, int jobs = 1);

// Allowlist file: one "<canonical key> <class>" pair per line.
std::vector<UnmatchedEntry> read_allowlist(const std::string& path);
void write_allowlist(const std::string& path, const std::vector<UnmatchedEntry>& entries);

} // namespace dualgraph

#endif

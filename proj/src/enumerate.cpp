#include "dualgraph/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <thread>

namespace dualgraph {

namespace {

struct VertexType {
    long long r, g, a;
};

std::vector<VertexType> vertex_types(const EnumBounds& b)
{
    std::vector<VertexType> types;
    for (long long r = 1; r <= b.max_r; ++r)
        for (long long g = 0; g <= b.max_g; ++g)
            for (long long a = 2 * r; a <= b.max_a; a += r) types.push_back({r, g, a});
    return types;
}

long long lcm(long long x, long long y)
{
    return x / std::gcd(x, y) * y;
}

// Edge assignments for a fixed vertex-type multiset, one pair at a time.
// Values respect the divisibility rule and the multiplicity cap.
struct EdgeOdometer {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<long long>> choices; // per pair, including 0
    std::vector<size_t> pos;

    EdgeOdometer(const std::vector<VertexType>& verts, long long max_mult)
    {
        int n = static_cast<int>(verts.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pairs.push_back({i, j});
                std::vector<long long> vals{0};
                long long step = lcm(verts[static_cast<size_t>(i)].r, verts[static_cast<size_t>(j)].r);
                for (long long m = step; m <= max_mult; m += step) vals.push_back(m);
                choices.push_back(std::move(vals));
            }
        pos.assign(pairs.size(), 0);
    }

    long long mult(size_t k) const { return choices[k][pos[k]]; }

    bool advance()
    {
        size_t k = 0;
        while (k < pos.size()) {
            if (++pos[k] < choices[k].size()) return true;
            pos[k] = 0;
            ++k;
        }
        return false;
    }
};

bool connected(int n, const std::vector<unsigned>& adj_mask)
{
    unsigned seen = 1u;
    unsigned frontier = 1u;
    while (frontier) {
        unsigned next = 0;
        for (int i = 0; i < n; ++i)
            if (frontier & (1u << i)) next |= adj_mask[static_cast<size_t>(i)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n >= 32 ? ~0u : (1u << n) - 1u);
}

// Multisets are the unit of work: isomorphic graphs always share one, so
// deduplication is local to a multiset and sharding over multisets is safe.
template <typename Fn>
void for_each_multiset(int n_types, int n, std::vector<int>& multiset, const Fn& fn)
{
    if (static_cast<int>(multiset.size()) == n) {
        fn(multiset);
        return;
    }
    int lo = multiset.empty() ? 0 : multiset.back();
    for (int t = lo; t < n_types; ++t) {
        multiset.push_back(t);
        for_each_multiset(n_types, n, multiset, fn);
        multiset.pop_back();
    }
}

struct MultisetJob {
    std::vector<VertexType> verts;
};

std::vector<MultisetJob> all_jobs(const EnumBounds& b)
{
    std::vector<VertexType> types = vertex_types(b);
    std::vector<MultisetJob> jobs;
    for (int n = 1; n <= b.max_vertices; ++n) {
        std::vector<int> multiset;
        for_each_multiset(static_cast<int>(types.size()), n, multiset, [&](const std::vector<int>& ms) {
            MultisetJob job;
            for (int t : ms) job.verts.push_back(types[static_cast<size_t>(t)]);
            jobs.push_back(std::move(job));
        });
    }
    return jobs;
}

// Runs fn on one representative per isomorphism class within the job;
// counts labeled connected candidates in `candidates`.
void scan_job(const MultisetJob& job, long long max_edge_mult, long long& candidates,
              const std::function<void(const DualGraph&)>& fn)
{
    int n = static_cast<int>(job.verts.size());
    if (n == 1) {
        ++candidates;
        std::vector<Vertex> vs{{"E1", job.verts[0].r, job.verts[0].g, job.verts[0].a}};
        DualGraph g = DualGraph::from_parts(std::move(vs), {});
        if (is_negative_definite(intersection_matrix(g))) fn(g);
        return;
    }

    EdgeOdometer odo(job.verts, max_edge_mult);
    std::set<std::string> seen;
    while (true) {
        std::vector<unsigned> adj(static_cast<size_t>(n), 0);
        for (size_t k = 0; k < odo.pairs.size(); ++k) {
            if (odo.mult(k) > 0) {
                auto [i, j] = odo.pairs[k];
                adj[static_cast<size_t>(i)] |= 1u << j;
                adj[static_cast<size_t>(j)] |= 1u << i;
            }
        }
        if (connected(n, adj)) {
            ++candidates;
            std::vector<Vertex> vs;
            for (int i = 0; i < n; ++i)
                vs.push_back({"E" + std::to_string(i + 1), job.verts[static_cast<size_t>(i)].r,
                              job.verts[static_cast<size_t>(i)].g, job.verts[static_cast<size_t>(i)].a});
            std::vector<Edge> es;
            for (size_t k = 0; k < odo.pairs.size(); ++k)
                if (odo.mult(k) > 0) es.push_back({odo.pairs[k].first, odo.pairs[k].second, odo.mult(k)});
            DualGraph g = DualGraph::from_parts(std::move(vs), es);
            if (is_negative_definite(intersection_matrix(g))) {
                std::string key = canonical_form(g);
                if (seen.insert(key).second) fn(g);
            }
        }
        if (!odo.advance()) break;
    }
}

} // namespace

namespace {

void check_bounds(const EnumBounds& b)
{
    if (b.max_vertices > 12) throw std::invalid_argument("enumeration bounds exceed desk scale (max 12 vertices)");
    if (b.max_r < 1 || b.max_g < 0 || b.max_edge_mult < 0 || b.max_a < 2)
        throw std::invalid_argument("enumeration bounds are not sane");
}

} // namespace

void enumerate_graphs(const EnumBounds& bounds, const std::function<void(const DualGraph&)>& fn)
{
    check_bounds(bounds);
    long long candidates = 0;
    for (const MultisetJob& job : all_jobs(bounds)) scan_job(job, bounds.max_edge_mult, candidates, fn);
}

bool AuditReport::passed(const std::vector<UnmatchedEntry>& allowlist) const
{
    if (!inconsistent.empty()) return false;
    std::set<std::pair<std::string, int>> allowed;
    for (const UnmatchedEntry& e : allowlist) allowed.insert({e.key, static_cast<int>(e.klass)});
    for (const UnmatchedEntry& e : unmatched)
        if (!allowed.count({e.key, static_cast<int>(e.klass)})) return false;
    return true;
}

AuditReport audit(const EnumBounds& bounds, int jobs)
{
    check_bounds(bounds);
    std::vector<MultisetJob> work = all_jobs(bounds);
    if (jobs < 1) jobs = 1;
    if (!work.empty() && static_cast<size_t>(jobs) > work.size()) jobs = static_cast<int>(work.size());
    if (work.empty()) jobs = 1;

    std::vector<AuditReport> partial(static_cast<size_t>(jobs));
    auto run_shard = [&](int shard) {
        AuditReport& rep = partial[static_cast<size_t>(shard)];
        for (size_t w = static_cast<size_t>(shard); w < work.size(); w += static_cast<size_t>(jobs)) {
            scan_job(work[w], bounds.max_edge_mult, rep.total_enumerated, [&](const DualGraph& g) {
                ++rep.negative_definite_count;
                ConsistencyVerdict verdict = cross_check(g);
                switch (verdict.numeric.klass) {
                case NumericClass::klt: ++rep.klt_count; break;
                case NumericClass::lc_not_klt: ++rep.lc_count; break;
                case NumericClass::not_lc: ++rep.not_lc_count; break;
                }
                switch (verdict.kind) {
                case Consistency::consistent: ++rep.consistent_count; break;
                case Consistency::unmatched:
                    if (verdict.numeric.klass == NumericClass::not_lc)
                        ++rep.unmatched_not_lc;
                    else
                        rep.unmatched.push_back({canonical_form(g), verdict.numeric.klass});
                    break;
                case Consistency::inconsistent:
                    rep.inconsistent.push_back({canonical_form(g), verdict.details});
                    break;
                }
            });
        }
    };

    if (jobs == 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> threads;
        for (int s = 0; s < jobs; ++s) threads.emplace_back(run_shard, s);
        for (std::thread& t : threads) t.join();
    }

    AuditReport merged;
    for (const AuditReport& rep : partial) {
        merged.total_enumerated += rep.total_enumerated;
        merged.negative_definite_count += rep.negative_definite_count;
        merged.klt_count += rep.klt_count;
        merged.lc_count += rep.lc_count;
        merged.not_lc_count += rep.not_lc_count;
        merged.consistent_count += rep.consistent_count;
        merged.unmatched_not_lc += rep.unmatched_not_lc;
        merged.unmatched.insert(merged.unmatched.end(), rep.unmatched.begin(), rep.unmatched.end());
        merged.inconsistent.insert(merged.inconsistent.end(), rep.inconsistent.begin(), rep.inconsistent.end());
    }
    std::sort(merged.unmatched.begin(), merged.unmatched.end(),
              [](const UnmatchedEntry& x, const UnmatchedEntry& y) { return x.key < y.key; });
    std::sort(merged.inconsistent.begin(), merged.inconsistent.end(),
              [](const InconsistentEntry& x, const InconsistentEntry& y) { return x.key < y.key; });
    return merged;
}

std::vector<UnmatchedEntry> read_allowlist(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open allowlist '" + path + "'");
    std::vector<UnmatchedEntry> entries;
    std::string key, klass;
    while (in >> key >> klass) {
        UnmatchedEntry e;
        e.key = key;
        if (klass == "klt")
            e.klass = NumericClass::klt;
        else if (klass == "lc")
            e.klass = NumericClass::lc_not_klt;
        else if (klass == "not_lc")
            e.klass = NumericClass::not_lc;
        else
            throw std::runtime_error("bad class '" + klass + "' in allowlist");
        entries.push_back(std::move(e));
    }
    return entries;
}

void write_allowlist(const std::string& path, const std::vector<UnmatchedEntry>& entries)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write allowlist '" + path + "'");
    for (const UnmatchedEntry& e : entries) out << e.key << " " << numeric_class_name(e.klass) << "\n";
}

} // namespace dualgraph

#include "dualgraph/dual_graph.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace dualgraph {

DualGraph DualGraph::from_parts(std::vector<Vertex> vertices, const std::vector<Edge>& edges,
                                bool minimal_mode)
{
    DualGraph g;
    int n = static_cast<int>(vertices.size());
    std::set<std::string> seen;
    for (const Vertex& v : vertices) {
        if (!seen.insert(v.id).second)
            throw std::invalid_argument("duplicate vertex id '" + v.id + "'");
    }
    g.vertices_ = std::move(vertices);
    g.mult_.assign(static_cast<size_t>(n) * n, 0);
    for (const Edge& e : edges) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.i == e.j) throw std::invalid_argument("self-loops are not allowed");
        if (e.mult <= 0) throw std::invalid_argument("edge multiplicity must be positive");
        g.mult_[static_cast<size_t>(e.i) * n + e.j] += e.mult;
        g.mult_[static_cast<size_t>(e.j) * n + e.i] += e.mult;
    }
    g.minimal_ = minimal_mode;
    return g;
}

std::vector<int> DualGraph::neighbors(int i) const
{
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (edge_mult(i, j) > 0) out.push_back(j);
    return out;
}

int DualGraph::degree(int i) const
{
    int d = 0;
    for (int j = 0; j < size(); ++j)
        if (edge_mult(i, j) > 0) ++d;
    return d;
}

std::vector<Edge> DualGraph::edge_list() const
{
    std::vector<Edge> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (edge_mult(i, j) > 0) out.push_back({i, j, edge_mult(i, j)});
    return out;
}

int DualGraph::index_of(const std::string& id) const
{
    for (int i = 0; i < size(); ++i)
        if (vertices_[static_cast<size_t>(i)].id == id) return i;
    return -1;
}

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split_tokens(const std::string& line)
{
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long parse_int(const Token& tok, const std::string& text, int line)
{
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw parse_error(line, tok.column, "expected an integer, got '" + text + "'");
    }
    if (pos != text.size())
        throw parse_error(line, tok.column, "trailing characters in integer '" + text + "'");
    return v;
}

} // namespace

DualGraph parse_graph(const std::string& source)
{
    std::vector<Vertex> vertices;
    std::map<std::string, int> index;
    struct RawEdge {
        std::string a, b;
        long long m;
        int line, column;
    };
    std::vector<RawEdge> raw_edges;
    bool minimal = true;

    std::istringstream in(source);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<Token> toks = split_tokens(line);
        if (toks.empty() || toks[0].text[0] == '#') continue;

        const std::string& kw = toks[0].text;
        if (kw == "vertex") {
            if (toks.size() < 2) throw parse_error(lineno, toks[0].column, "vertex needs an id");
            Vertex v;
            v.id = toks[1].text;
            bool have_a = false;
            for (size_t t = 2; t < toks.size(); ++t) {
                const std::string& s = toks[t].text;
                size_t eq = s.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw parse_error(lineno, toks[t].column, "expected key=value, got '" + s + "'");
                std::string key = s.substr(0, eq);
                long long val = parse_int(toks[t], s.substr(eq + 1), lineno);
                if (key == "r")
                    v.r = val;
                else if (key == "g")
                    v.g = val;
                else if (key == "a") {
                    v.a = val;
                    have_a = true;
                } else
                    throw parse_error(lineno, toks[t].column, "unknown vertex attribute '" + key + "'");
            }
            if (!have_a) throw parse_error(lineno, toks[0].column, "vertex '" + v.id + "' is missing a=");
            if (v.r <= 0) throw parse_error(lineno, toks[0].column, "r must be >= 1");
            if (v.g < 0) throw parse_error(lineno, toks[0].column, "g must be >= 0");
            if (v.a <= 0) throw parse_error(lineno, toks[0].column, "a must be >= 1");
            if (index.count(v.id))
                throw parse_error(lineno, toks[1].column, "duplicate vertex id '" + v.id + "'");
            index[v.id] = static_cast<int>(vertices.size());
            vertices.push_back(std::move(v));
        } else if (kw == "edge") {
            if (toks.size() < 3) throw parse_error(lineno, toks[0].column, "edge needs two vertex ids");
            RawEdge e{toks[1].text, toks[2].text, 1, lineno, toks[0].column};
            for (size_t t = 3; t < toks.size(); ++t) {
                const std::string& s = toks[t].text;
                if (s.rfind("m=", 0) != 0)
                    throw parse_error(lineno, toks[t].column, "unknown edge attribute '" + s + "'");
                e.m = parse_int(toks[t], s.substr(2), lineno);
            }
            if (e.m <= 0) throw parse_error(lineno, toks[0].column, "edge multiplicity must be >= 1");
            raw_edges.push_back(std::move(e));
        } else if (kw == "minimal") {
            if (toks.size() != 2 || (toks[1].text != "true" && toks[1].text != "false"))
                throw parse_error(lineno, toks[0].column, "minimal expects true or false");
            minimal = toks[1].text == "true";
        } else {
            throw parse_error(lineno, toks[0].column, "unknown directive '" + kw + "'");
        }
    }

    std::vector<Edge> edges;
    for (const RawEdge& e : raw_edges) {
        auto ia = index.find(e.a);
        auto ib = index.find(e.b);
        if (ia == index.end()) throw parse_error(e.line, e.column, "unknown vertex '" + e.a + "' in edge");
        if (ib == index.end()) throw parse_error(e.line, e.column, "unknown vertex '" + e.b + "' in edge");
        if (ia->second == ib->second)
            throw parse_error(e.line, e.column, "self-loop on vertex '" + e.a + "'");
        edges.push_back({ia->second, ib->second, e.m});
    }
    return DualGraph::from_parts(std::move(vertices), edges, minimal);
}

std::string to_text(const DualGraph& g)
{
    std::ostringstream out;
    if (!g.minimal_mode()) out << "minimal false\n";
    for (int i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        out << "vertex " << v.id;
        if (v.r != 1) out << " r=" << v.r;
        if (v.g != 0) out << " g=" << v.g;
        out << " a=" << v.a << "\n";
    }
    for (const Edge& e : g.edge_list()) {
        out << "edge " << g.vertex(e.i).id << " " << g.vertex(e.j).id;
        if (e.mult != 1) out << " m=" << e.mult;
        out << "\n";
    }
    return out.str();
}

ValidationReport validate(const DualGraph& g)
{
    ValidationReport rep;
    auto flag = [&](const std::string& rule, const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back({rule, msg});
    };

    if (g.empty()) {
        flag("nonempty", "graph has no vertices");
        return rep;
    }

    for (int i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        if (v.a % v.r != 0)
            flag("divides-self", "vertex '" + v.id + "': r=" + std::to_string(v.r) +
                                     " does not divide a=" + std::to_string(v.a));
        if (g.minimal_mode() && v.a < 2 * v.r)
            flag("minimal-bound", "vertex '" + v.id + "': a=" + std::to_string(v.a) +
                                      " violates a >= 2r (minimal resolution)");
    }
    for (const Edge& e : g.edge_list()) {
        const Vertex& vi = g.vertex(e.i);
        const Vertex& vj = g.vertex(e.j);
        if (e.mult % vi.r != 0 || e.mult % vj.r != 0)
            flag("divides-edge", "edge " + vi.id + "-" + vj.id + ": multiplicity " +
                                     std::to_string(e.mult) + " must be divisible by r of both ends");
    }

    std::vector<bool> seen(static_cast<size_t>(g.size()), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        flag("connected", "graph is not connected");

    return rep;
}

IntMatrix intersection_matrix(const DualGraph& g)
{
    IntMatrix m(g.size());
    for (int i = 0; i < g.size(); ++i) {
        m.at(i, i) = -g.vertex(i).a;
        for (int j = 0; j < g.size(); ++j)
            if (i != j) m.at(i, j) = g.edge_mult(i, j);
    }
    return m;
}

long long graph_parameter(const DualGraph& g)
{
    if (g.empty()) throw std::invalid_argument("graph_parameter: empty graph");
    long long r = g.vertex(0).r;
    for (int i = 1; i < g.size(); ++i) r = std::min(r, g.vertex(i).r);
    return r;
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// Colour refinement followed by a backtracking search for the minimal
// ordered encoding. At step k only vertices whose (colour, edge pattern to
// the placed prefix) is minimal can extend the prefix, branching on ties;
// this is exact because the encoding is compared prefix-wise on exactly
// those values.

namespace {

struct CanonState {
    const DualGraph* g;
    std::vector<int> colors;
};

std::vector<int> refine_colors(const DualGraph& g)
{
    int n = g.size();
    using Attr = std::tuple<long long, long long, long long>;
    std::vector<Attr> attrs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        attrs[static_cast<size_t>(i)] = {g.vertex(i).r, g.vertex(i).g, g.vertex(i).a};

    std::vector<Attr> sorted_attrs = attrs;
    std::sort(sorted_attrs.begin(), sorted_attrs.end());
    sorted_attrs.erase(std::unique(sorted_attrs.begin(), sorted_attrs.end()), sorted_attrs.end());
    std::vector<int> colors(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        colors[static_cast<size_t>(i)] = static_cast<int>(
            std::lower_bound(sorted_attrs.begin(), sorted_attrs.end(), attrs[static_cast<size_t>(i)]) -
            sorted_attrs.begin());

    while (true) {
        using Sig = std::pair<int, std::vector<std::pair<long long, int>>>;
        std::vector<Sig> sigs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            Sig s;
            s.first = colors[static_cast<size_t>(i)];
            for (int j : g.neighbors(i))
                s.second.push_back({g.edge_mult(i, j), colors[static_cast<size_t>(j)]});
            std::sort(s.second.begin(), s.second.end());
            sigs[static_cast<size_t>(i)] = std::move(s);
        }
        std::vector<Sig> sorted_sigs = sigs;
        std::sort(sorted_sigs.begin(), sorted_sigs.end());
        sorted_sigs.erase(std::unique(sorted_sigs.begin(), sorted_sigs.end()), sorted_sigs.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            next[static_cast<size_t>(i)] = static_cast<int>(
                std::lower_bound(sorted_sigs.begin(), sorted_sigs.end(), sigs[static_cast<size_t>(i)]) -
                sorted_sigs.begin());
        if (next == colors) break;
        colors = std::move(next);
    }
    return colors;
}

// Row contributed by placing vertex v at position k: colour, attributes,
// multiplicities towards positions 0..k-1.
std::vector<long long> encode_row(const DualGraph& g, const std::vector<int>& colors,
                                  const std::vector<int>& placed, int v)
{
    std::vector<long long> row;
    row.reserve(4 + placed.size());
    row.push_back(colors[static_cast<size_t>(v)]);
    row.push_back(g.vertex(v).r);
    row.push_back(g.vertex(v).g);
    row.push_back(g.vertex(v).a);
    for (int p : placed) row.push_back(g.edge_mult(v, p));
    return row;
}

void search_min_encoding(const DualGraph& g, const std::vector<int>& colors, std::vector<int>& placed,
                         std::vector<bool>& used, std::vector<long long>& current,
                         std::vector<long long>& best, bool& have_best, long long& steps)
{
    // Dual graphs at desk scale branch a handful of times; only dense
    // all-symmetric multigraphs can explode, and those get refused rather
    // than hanging.
    if (++steps > 20'000'000)
        throw std::runtime_error("canonical_form: graph is too symmetric to canonicalise at desk scale");
    int n = g.size();
    if (static_cast<int>(placed.size()) == n) {
        if (!have_best || current < best) {
            best = current;
            have_best = true;
        }
        return;
    }

    std::vector<std::pair<std::vector<long long>, int>> rows;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<size_t>(v)]) rows.push_back({encode_row(g, colors, placed, v), v});
    std::sort(rows.begin(), rows.end());
    const std::vector<long long>& min_row = rows.front().first;

    for (const auto& [row, v] : rows) {
        if (row != min_row) break;
        size_t mark = current.size();
        current.insert(current.end(), row.begin(), row.end());
        // Prune against the best complete encoding found so far.
        bool viable = true;
        if (have_best) {
            if (current.size() <= best.size()) {
                auto cmp = std::lexicographical_compare_three_way(current.begin(), current.end(),
                                                                  best.begin(),
                                                                  best.begin() + static_cast<long>(current.size()));
                if (cmp > 0) viable = false;
            }
        }
        if (viable) {
            used[static_cast<size_t>(v)] = true;
            placed.push_back(v);
            search_min_encoding(g, colors, placed, used, current, best, have_best, steps);
            placed.pop_back();
            used[static_cast<size_t>(v)] = false;
        }
        current.resize(mark);
    }
}

} // namespace

std::string canonical_form(const DualGraph& g)
{
    int n = g.size();
    if (n == 0) return "n=0";
    std::vector<int> colors = refine_colors(g);
    std::vector<int> placed;
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::vector<long long> current, best;
    bool have_best = false;
    long long steps = 0;
    search_min_encoding(g, colors, placed, used, current, best, have_best, steps);

    std::ostringstream out;
    out << "n=" << n << ";";
    for (long long v : best) out << v << ",";
    return out.str();
}

std::string to_dot(const DualGraph& g)
{
    std::ostringstream out;
    out << "graph dual {\n";
    out << "  node [shape=circle];\n";
    for (int i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        std::string label;
        if (v.r != 1) label += std::to_string(v.r) + "\\n";
        label += "-" + std::to_string(v.a);
        if (v.g != 0) label += "\\n" + std::to_string(v.g);
        out << "  \"" << v.id << "\" [label=\"" << label << "\"];\n";
    }
    for (const Edge& e : g.edge_list()) {
        const std::string& a = g.vertex(e.i).id;
        const std::string& b = g.vertex(e.j).id;
        if (e.mult <= 3) {
            for (long long k = 0; k < e.mult; ++k) out << "  \"" << a << "\" -- \"" << b << "\";\n";
        } else {
            out << "  \"" << a << "\" -- \"" << b << "\" [label=\"⟨" << e.mult << "⟩\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace dualgraph

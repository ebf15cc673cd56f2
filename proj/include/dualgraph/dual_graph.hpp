#ifndef DUALGRAPH_DUAL_GRAPH_HPP
#define DUALGRAPH_DUAL_GRAPH_HPP

#include <string>
#include <vector>

#include "dualgraph/int_matrix.hpp"

namespace dualgraph {

// One exceptional curve of a resolution.
//   r : dimension of its field of global functions over the base residue field
//   g : arithmetic genus relative to that field
//   a : negated self-intersection, a = -(E^2) > 0
struct Vertex {
    std::string id;
    long long r = 1;
    long long g = 0;
    long long a = 0;
};

struct Edge {
    int i = 0;
    int j = 0;
    long long mult = 1;
};

class parse_error : public std::runtime_error {
public:
    parse_error(int line, int column, const std::string& what_failed)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what_failed),
          line(line),
          column(column)
    {
    }
    int line;
    int column;
};

// Weighted multigraph of exceptional curves. Vertices keep their input
// order; edge multiplicities are symmetric and self-loops are rejected at
// construction. Values are immutable once built.
class DualGraph {
public:
    DualGraph() = default;

    // Structural checks only (unique ids, index range, positive mult,
    // no self-loops); the mathematical rules live in validate().
    static DualGraph from_parts(std::vector<Vertex> vertices, const std::vector<Edge>& edges,
                                bool minimal_mode = true);

    int size() const { return static_cast<int>(vertices_.size()); }
    bool empty() const { return vertices_.empty(); }
    const Vertex& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    bool minimal_mode() const { return minimal_; }

    long long edge_mult(int i, int j) const
    {
        return i == j ? 0 : mult_[static_cast<size_t>(i) * vertices_.size() + static_cast<size_t>(j)];
    }

    // Neighbours with positive multiplicity, ascending.
    std::vector<int> neighbors(int i) const;
    int degree(int i) const;

    // Edges as (i, j, mult) with i < j, ascending.
    std::vector<Edge> edge_list() const;

    int index_of(const std::string& id) const; // -1 when absent

    DualGraph with_minimal_mode(bool minimal) const
    {
        DualGraph g = *this;
        g.minimal_ = minimal;
        return g;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<long long> mult_; // n*n symmetric, zero diagonal
    bool minimal_ = true;
};

struct Violation {
    std::string rule;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Text format, line oriented:
//   # comment
//   vertex <id> [r=<int>] [g=<int>] a=<int>
//   edge <id1> <id2> [m=<int>]        (repeated lines sum)
//   minimal <true|false>              (optional, default true)
DualGraph parse_graph(const std::string& source);
std::string to_text(const DualGraph& g);

// Rules: non-empty, connected, r | a, r_i | e_ij and r_j | e_ij, and in
// minimal mode a >= 2r. Negative definiteness is deliberately not checked
// here; it is a separate operation.
ValidationReport validate(const DualGraph& g);

// M_ii = -a_i, M_ij = e_ij.
IntMatrix intersection_matrix(const DualGraph& g);

// min_i r_i; throws std::invalid_argument on the empty graph.
long long graph_parameter(const DualGraph& g);

// Isomorphism-class key: equal exactly for isomorphic weighted multigraphs.
std::string canonical_form(const DualGraph& g);

// Graphviz output following the drawing conventions: "-a" inside the
// circle, r above when r > 1, g below when g > 0, parallel edges up to
// multiplicity 3, a labelled single edge beyond that.
std::string to_dot(const DualGraph& g);

} // namespace dualgraph

#endif

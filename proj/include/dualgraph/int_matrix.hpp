#ifndef DUALGRAPH_INT_MATRIX_HPP
#define DUALGRAPH_INT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "dualgraph/rational.hpp"

namespace dualgraph {

// Dense square integer matrix, row-major. Small sizes only (graphs at desk
// scale); no sparsity games.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}

    int size() const { return n_; }
    long long& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    long long at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool is_symmetric() const
    {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<long long> a_;
};

// Leading principal minors by fraction-free (Bareiss) elimination.
// minors[k] = det of the (k+1) x (k+1) upper-left block, exactly.
// Stops after a zero pivot: the remaining entries are left as 0 and
// `complete` is false. A zero leading minor already rules out definiteness,
// which is all the callers need.
struct MinorSequence {
    std::vector<int128> minors;
    bool complete = true;
};

MinorSequence leading_principal_minors(const IntMatrix& m);

// Sylvester test in exact arithmetic: (-1)^k * minors[k-1] > 0 for all k.
bool is_negative_definite(const IntMatrix& m);

// Unique solution of m*x = b for nonsingular m, by fraction-free elimination
// with partial pivoting and exact rational back-substitution.
// Throws std::domain_error if m is singular.
std::vector<Rational> solve_exact(const IntMatrix& m, const std::vector<long long>& b);

} // namespace dualgraph

#endif

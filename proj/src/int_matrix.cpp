#include "dualgraph/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace dualgraph {

namespace {

// Work copy in 128 bits; Bareiss keeps every intermediate an exact minor,
// so checked ops bound the whole computation.
std::vector<int128> widen(const IntMatrix& m, int cols, const std::vector<long long>* rhs)
{
    int n = m.size();
    std::vector<int128> w(static_cast<size_t>(n) * cols);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * cols + j] = m.at(i, j);
        if (rhs) w[static_cast<size_t>(i) * cols + n] = (*rhs)[static_cast<size_t>(i)];
    }
    return w;
}

} // namespace

MinorSequence leading_principal_minors(const IntMatrix& m)
{
    int n = m.size();
    MinorSequence out;
    out.minors.assign(static_cast<size_t>(n), 0);
    if (n == 0) return out;

    std::vector<int128> w = widen(m, n, nullptr);
    auto at = [&](int i, int j) -> int128& { return w[static_cast<size_t>(i) * n + j]; };

    int128 prev = 1;
    for (int k = 0; k < n; ++k) {
        int128 pivot = at(k, k);
        out.minors[static_cast<size_t>(k)] = pivot;
        if (pivot == 0) {
            out.complete = false;
            return out;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                int128 v = checked_sub(checked_mul(at(i, j), pivot), checked_mul(at(i, k), at(k, j)));
                at(i, j) = v / prev; // exact division (Bareiss)
            }
            at(i, k) = 0;
        }
        prev = pivot;
    }
    return out;
}

bool is_negative_definite(const IntMatrix& m)
{
    MinorSequence seq = leading_principal_minors(m);
    if (!seq.complete) return false;
    bool positive = false; // expected sign of minors[k]: -,+,-,+,...
    for (int128 minor : seq.minors) {
        if (positive ? (minor <= 0) : (minor >= 0)) return false;
        positive = !positive;
    }
    return m.size() > 0;
}

std::vector<Rational> solve_exact(const IntMatrix& m, const std::vector<long long>& b)
{
    int n = m.size();
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_exact: size mismatch");
    if (n == 0) return {};

    int cols = n + 1;
    std::vector<int128> w = widen(m, cols, &b);
    auto at = [&](int i, int j) -> int128& { return w[static_cast<size_t>(i) * cols + j]; };

    int128 prev = 1;
    for (int k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) throw std::domain_error("solve_exact: singular matrix");
            for (int j = 0; j < cols; ++j) std::swap(at(k, j), at(swap_row, j));
        }
        int128 pivot = at(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < cols; ++j)
                at(i, j) = checked_sub(checked_mul(at(i, j), pivot), checked_mul(at(i, k), at(k, j))) / prev;
            at(i, k) = 0;
        }
        prev = pivot;
    }

    std::vector<Rational> x(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Rational acc(at(i, n), 1);
        for (int j = i + 1; j < n; ++j)
            acc = acc - Rational(at(i, j), 1) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = acc / Rational(at(i, i), 1);
    }
    return x;
}

} // namespace dualgraph

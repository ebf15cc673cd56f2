#ifndef DUALGRAPH_WEIERSTRASS_HPP
#define DUALGRAPH_WEIERSTRASS_HPP

#include <array>
#include <stdexcept>
#include <vector>

namespace dualgraph {

// Plane cubic a*y^2 + x^3 + b*x + c over the prime field F_p, p > 3, a != 0.
// Coefficients are stored reduced to [0, p).
struct WeierstrassCubic {
    long long p = 5;
    long long a = 1;
    long long b = 0;
    long long c = 0;

    static WeierstrassCubic make(long long p, long long a, long long b, long long c);
};

enum class CurveKind { smooth, node, cusp };

struct CurveReport {
    long long discriminant = 0; // -4b^3 - 27c^2 mod p
    CurveKind kind = CurveKind::smooth;
    std::array<long long, 2> point{0, 0}; // singular point; meaningful unless smooth
};

// Element of F_{p^2} as u + v*s with s^2 a fixed non-residue; degree-one
// points have v = 0 in both coordinates.
struct ScanPoint {
    std::array<long long, 2> x{0, 0};
    std::array<long long, 2> y{0, 0};
    friend bool operator==(const ScanPoint&, const ScanPoint&) = default;
};

long long discriminant(const WeierstrassCubic& w);

// Closed-form analysis: smooth iff the discriminant is nonzero; otherwise
// the singular point is (-3c/(2b), 0) for b != 0 and (0,0) for b = 0, a
// node in the first case and a cusp in the second.
CurveReport analyze_cubic(const WeierstrassCubic& w);

// Independent brute-force check of the Jacobian criterion over F_p
// (ext_degree 1) or F_{p^2} (ext_degree 2): all points with
// f = df/dx = df/dy = 0. Field size is capped at 10^6.
std::vector<ScanPoint> jacobian_scan(const WeierstrassCubic& w, int ext_degree);

// Degree bookkeeping for a curve with constants field of dimension r and
// genus g: deg(omega) = r(2g-2), chi(O) = r(1-g).
struct CurveInvariantData {
    long long omega_degree = 0;
    long long chi_O = 0;
};
CurveInvariantData curve_degree_helpers(long long r, long long g);

} // namespace dualgraph

#endif

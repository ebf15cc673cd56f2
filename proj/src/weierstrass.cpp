#include "dualgraph/weierstrass.hpp"

namespace dualgraph {

namespace {

long long mod_reduce(long long v, long long p)
{
    v %= p;
    if (v < 0) v += p;
    return v;
}

long long mul_mod(long long x, long long y, long long p)
{
    return static_cast<long long>((static_cast<__int128>(x) * y) % p);
}

long long pow_mod(long long base, long long exp, long long p)
{
    long long r = 1 % p;
    base = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

long long inv_mod(long long x, long long p)
{
    return pow_mod(x, p - 2, p);
}

bool is_prime(long long p)
{
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long smallest_non_residue(long long p)
{
    for (long long t = 2; t < p; ++t)
        if (pow_mod(t, (p - 1) / 2, p) == p - 1) return t;
    throw std::logic_error("no quadratic non-residue found");
}

// F_{p^2} = F_p[s]/(s^2 - t), elements (u, v) = u + v s.
struct Fp2 {
    long long p;
    long long t;

    std::array<long long, 2> mul(std::array<long long, 2> x, std::array<long long, 2> y) const
    {
        return {mod_reduce(mul_mod(x[0], y[0], p) + mul_mod(mul_mod(x[1], y[1], p), t, p), p),
                mod_reduce(mul_mod(x[0], y[1], p) + mul_mod(x[1], y[0], p), p)};
    }
    std::array<long long, 2> add(std::array<long long, 2> x, std::array<long long, 2> y) const
    {
        return {mod_reduce(x[0] + y[0], p), mod_reduce(x[1] + y[1], p)};
    }
    std::array<long long, 2> scale(long long k, std::array<long long, 2> x) const
    {
        return {mul_mod(mod_reduce(k, p), x[0], p), mul_mod(mod_reduce(k, p), x[1], p)};
    }
    bool is_zero(std::array<long long, 2> x) const { return x[0] == 0 && x[1] == 0; }
};

} // namespace

WeierstrassCubic WeierstrassCubic::make(long long p, long long a, long long b, long long c)
{
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("field modulus must be a prime > 3");
    WeierstrassCubic w;
    w.p = p;
    w.a = mod_reduce(a, p);
    w.b = mod_reduce(b, p);
    w.c = mod_reduce(c, p);
    if (w.a == 0) throw std::invalid_argument("leading coefficient a must be nonzero mod p");
    return w;
}

long long discriminant(const WeierstrassCubic& w)
{
    long long p = w.p;
    long long b3 = mul_mod(mul_mod(w.b, w.b, p), w.b, p);
    long long c2 = mul_mod(w.c, w.c, p);
    return mod_reduce(-4 * b3 % p - 27 * c2 % p, p);
}

CurveReport analyze_cubic(const WeierstrassCubic& w)
{
    CurveReport rep;
    rep.discriminant = discriminant(w);
    long long p = w.p;
    if (rep.discriminant != 0) {
        rep.kind = CurveKind::smooth;
        return rep;
    }
    if (w.b != 0) {
        // double (not triple) root of the cubic: x0 = -3c / (2b)
        long long x0 = mul_mod(mod_reduce(-3 * w.c % p, p), inv_mod(mod_reduce(2 * w.b, p), p), p);
        rep.kind = CurveKind::node;
        rep.point = {x0, 0};
    } else {
        // b = 0 forces c = 0: triple root at the origin
        rep.kind = CurveKind::cusp;
        rep.point = {0, 0};
    }
    return rep;
}

std::vector<ScanPoint> jacobian_scan(const WeierstrassCubic& w, int ext_degree)
{
    if (ext_degree != 1 && ext_degree != 2)
        throw std::invalid_argument("jacobian_scan: extension degree must be 1 or 2");
    long long p = w.p;
    double field_size = ext_degree == 1 ? static_cast<double>(p) : static_cast<double>(p) * p;
    if (field_size > 1e6) throw std::invalid_argument("jacobian_scan: field too large");

    std::vector<ScanPoint> hits;
    if (ext_degree == 1) {
        for (long long x = 0; x < p; ++x) {
            long long dfdx = mod_reduce(3 * mul_mod(x, x, p) + w.b, p);
            if (dfdx != 0) continue;
            long long x3 = mul_mod(mul_mod(x, x, p), x, p);
            for (long long y = 0; y < p; ++y) {
                long long dfdy = mul_mod(2 * w.a % p, y, p);
                if (dfdy != 0) continue;
                long long f = mod_reduce(mul_mod(w.a, mul_mod(y, y, p), p) + x3 + mul_mod(w.b, x, p) + w.c, p);
                if (f == 0) hits.push_back({{x, 0}, {y, 0}});
            }
        }
        return hits;
    }

    Fp2 F{p, smallest_non_residue(p)};
    for (long long x0 = 0; x0 < p; ++x0) {
        for (long long x1 = 0; x1 < p; ++x1) {
            std::array<long long, 2> x{x0, x1};
            std::array<long long, 2> x2 = F.mul(x, x);
            std::array<long long, 2> dfdx = F.add(F.scale(3, x2), {w.b, 0});
            if (!F.is_zero(dfdx)) continue;
            std::array<long long, 2> x3bxc =
                F.add(F.add(F.mul(x2, x), F.scale(w.b, x)), {w.c, 0});
            for (long long y0 = 0; y0 < p; ++y0) {
                for (long long y1 = 0; y1 < p; ++y1) {
                    std::array<long long, 2> y{y0, y1};
                    if (!F.is_zero(F.scale(2 * w.a % p, y))) continue;
                    std::array<long long, 2> f = F.add(F.scale(w.a, F.mul(y, y)), x3bxc);
                    if (F.is_zero(f)) hits.push_back({x, y});
                }
            }
        }
    }
    return hits;
}

CurveInvariantData curve_degree_helpers(long long r, long long g)
{
    if (r < 1 || g < 0) throw std::invalid_argument("curve_degree_helpers: need r >= 1, g >= 0");
    return {r * (2 * g - 2), r * (1 - g)};
}

} // namespace dualgraph

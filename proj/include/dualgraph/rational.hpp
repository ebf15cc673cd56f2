#ifndef DUALGRAPH_RATIONAL_HPP
#define DUALGRAPH_RATIONAL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dualgraph {

using int128 = __int128;

// All exact arithmetic in this project runs on checked 128-bit integers.
// Any overflow throws instead of wrapping; results are never approximate.
class arithmetic_overflow : public std::overflow_error {
public:
    arithmetic_overflow() : std::overflow_error("exact arithmetic overflow (value exceeds 128 bits)") {}
};

inline int128 checked_add(int128 x, int128 y)
{
    int128 r;
    if (__builtin_add_overflow(x, y, &r)) throw arithmetic_overflow();
    return r;
}

inline int128 checked_sub(int128 x, int128 y)
{
    int128 r;
    if (__builtin_sub_overflow(x, y, &r)) throw arithmetic_overflow();
    return r;
}

inline int128 checked_mul(int128 x, int128 y)
{
    int128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw arithmetic_overflow();
    return r;
}

inline int128 checked_neg(int128 x)
{
    return checked_sub(0, x);
}

inline int128 gcd128(int128 x, int128 y)
{
    if (x < 0) x = checked_neg(x);
    if (y < 0) y = checked_neg(y);
    while (y != 0) {
        int128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

std::string to_string(int128 v);

// Normalized fraction: den > 0, gcd(|num|, den) == 1.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(int128 n, int128 d)
    {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = checked_neg(n);
            d = checked_neg(d);
        }
        int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& x, const Rational& y)
    {
        return Rational(checked_add(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)),
                        checked_mul(x.den_, y.den_));
    }
    friend Rational operator-(const Rational& x, const Rational& y)
    {
        return Rational(checked_sub(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)),
                        checked_mul(x.den_, y.den_));
    }
    friend Rational operator*(const Rational& x, const Rational& y)
    {
        return Rational(checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_));
    }
    friend Rational operator/(const Rational& x, const Rational& y)
    {
        if (y.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(checked_mul(x.num_, y.den_), checked_mul(x.den_, y.num_));
    }
    Rational operator-() const
    {
        Rational r;
        r.num_ = checked_neg(num_);
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& x, const Rational& y)
    {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y)
    {
        return checked_mul(x.num_, y.den_) < checked_mul(y.num_, x.den_);
    }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    // Normalized "p/q"; integers print without the "/q" part.
    std::string str() const
    {
        if (den_ == 1) return dualgraph::to_string(num_);
        return dualgraph::to_string(num_) + "/" + dualgraph::to_string(den_);
    }

private:
    int128 num_ = 0;
    int128 den_ = 1;
};

inline std::string to_string(int128 v)
{
    if (v == 0) return "0";
    bool neg = v < 0;
    // Peel digits off the absolute value; INT128_MIN has no positive twin,
    // so negate digit by digit.
    std::string s;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        if (d < 0) d = -d;
        s.push_back(static_cast<char>('0' + d));
        v /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace dualgraph

#endif

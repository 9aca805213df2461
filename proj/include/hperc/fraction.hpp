#ifndef HPERC_FRACTION_HPP
#define HPERC_FRACTION_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hperc {

// Exact reduced rational. Carrier for lambda, lambda_star and all balance
// comparisons; no floating point enters that logic. Magnitudes here stay
// tiny (edge counts of graphs on <= 28 vertices) but comparisons go through
// 128-bit products anyway.
struct Fraction {
    long long num = 0;
    long long den = 1;  // > 0 always

    Fraction() = default;
    Fraction(long long n, long long d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }

    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    bool operator<(const Fraction& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    bool operator<=(const Fraction& o) const { return *this < o || *this == o; }
    bool operator>(const Fraction& o) const { return o < *this; }
    bool operator>=(const Fraction& o) const { return o <= *this; }

    Fraction reciprocal() const {
        if (num == 0) throw std::domain_error("reciprocal of zero");
        return Fraction(den, num);
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace hperc

#endif

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace planar {

// Exact rational over int64. Values stay tiny (class-size bookkeeping), no
// overflow guard needed beyond normalization.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integer() const { return den == 1; }
    std::int64_t as_integer() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
        return num;
    }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
    friend Rational operator/(Rational a, Rational b) { return Rational(a.num * b.den, a.den * b.num); }
    Rational operator-() const { return Rational(-num, den); }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(Rational a, Rational b) { return b < a; }
    friend bool operator>=(Rational a, Rational b) { return b <= a; }
};

// polynomial in n of degree <= 2 with rational coefficients
struct Poly2 {
    Rational c0, c1, c2;  // c0 + c1*n + c2*n^2

    static Poly2 constant(Rational c) { return {c, 0, 0}; }
    static Poly2 linear(Rational c0, Rational c1) { return {c0, c1, 0}; }

    Rational at(std::int64_t n) const { return c0 + c1 * Rational(n) + c2 * Rational(n) * Rational(n); }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend Poly2 operator-(const Poly2& a, const Poly2& b) {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
    }
    friend bool operator==(const Poly2& a, const Poly2& b) {
        return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
    }
    friend Poly2 operator*(Rational s, const Poly2& p) { return {s * p.c0, s * p.c1, s * p.c2}; }
    // product of two linear polynomials
    friend Poly2 mul_linear(const Poly2& a, const Poly2& b) {
        if (!(a.c2 == Rational(0)) || !(b.c2 == Rational(0)))
            throw std::domain_error("mul_linear: arguments must be linear");
        return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c1 * b.c1};
    }
    std::string str() const {
        return "(" + c2.str() + ")n^2 + (" + c1.str() + ")n + (" + c0.str() + ")";
    }
};

}  // namespace planar

#pragma once
/*
================================================================================
 poly3.hpp — sparse trivariate polynomials with exact derivatives
--------------------------------------------------------------------------------
 Small algebra used by the vector-identity suite: test vector fields are
 low-degree polynomials in Cartesian (X, Y, Z), so gradients, divergences and
 curls are computed symbolically and the identity residuals contain no
 finite-difference error at all — only floating-point rounding.
================================================================================
*/

#include <array>
#include <cmath>
#include <map>

namespace helix {

class Poly3 {
public:
    using Mono = std::array<int, 3>;  // exponents of X^i Y^j Z^l

    Poly3() = default;
    explicit Poly3(double c) {
        if (c != 0.0) terms_[{0, 0, 0}] = c;
    }
    static Poly3 variable(int axis) {
        Poly3 p;
        Mono m{0, 0, 0};
        m[axis] = 1;
        p.terms_[m] = 1.0;
        return p;
    }

    void add_term(const Mono& m, double c) {
        if (c == 0.0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted && (it->second += c) == 0.0) terms_.erase(it);
    }

    Poly3 operator+(const Poly3& o) const {
        Poly3 r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Poly3 operator-(const Poly3& o) const {
        Poly3 r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Poly3 operator*(const Poly3& o) const {
        Poly3 r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
        return r;
    }
    Poly3 operator*(double s) const {
        Poly3 r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    Poly3 derivative(int axis) const {
        Poly3 r;
        for (const auto& [m, c] : terms_) {
            if (m[axis] == 0) continue;
            Mono d = m;
            --d[axis];
            r.add_term(d, c * m[axis]);
        }
        return r;
    }

    double eval(double X, double Y, double Z) const {
        double sum = 0.0;
        for (const auto& [m, c] : terms_)
            sum += c * std::pow(X, m[0]) * std::pow(Y, m[1]) * std::pow(Z, m[2]);
        return sum;
    }

private:
    std::map<Mono, double> terms_;
};

using VecPoly3 = std::array<Poly3, 3>;

inline VecPoly3 gradient(const Poly3& f) {
    return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

inline Poly3 divergence(const VecPoly3& v) {
    return v[0].derivative(0) + v[1].derivative(1) + v[2].derivative(2);
}

inline VecPoly3 curl(const VecPoly3& v) {
    return {v[2].derivative(1) - v[1].derivative(2),
            v[0].derivative(2) - v[2].derivative(0),
            v[1].derivative(0) - v[0].derivative(1)};
}

inline VecPoly3 cross(const VecPoly3& a, const VecPoly3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline Poly3 dot(const VecPoly3& a, const VecPoly3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// (a . grad) b, componentwise.
inline VecPoly3 advect(const VecPoly3& a, const VecPoly3& b) {
    VecPoly3 r;
    for (int i = 0; i < 3; ++i)
        r[i] = a[0] * b[i].derivative(0) + a[1] * b[i].derivative(1) + a[2] * b[i].derivative(2);
    return r;
}

// Lie bracket [a, b] = (a . grad) b - (b . grad) a.
inline VecPoly3 lie_bracket(const VecPoly3& a, const VecPoly3& b) {
    const VecPoly3 ab = advect(a, b), ba = advect(b, a);
    return {ab[0] - ba[0], ab[1] - ba[1], ab[2] - ba[2]};
}

inline std::array<double, 3> eval(const VecPoly3& v, double X, double Y, double Z) {
    return {v[0].eval(X, Y, Z), v[1].eval(X, Y, Z), v[2].eval(X, Y, Z)};
}

} // namespace helix

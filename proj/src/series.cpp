#include "helix/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace helix {
namespace {

// ---- truncated polynomial arithmetic in s (dense coefficient vectors) ------

template <class T>
using Poly = std::vector<T>;

template <class T>
Poly<T> padded(const Poly<T>& p, std::size_t len) {
    Poly<T> q = p;
    q.resize(len, T(0));
    return q;
}

template <class T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r = padded(a, std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b, std::size_t len) {
    Poly<T> r(len, T(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == T(0)) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

template <class T>
Poly<T> scale(const Poly<T>& a, const T& f) {
    Poly<T> r = a;
    for (auto& x : r) x *= f;
    return r;
}

// d/ds
template <class T>
Poly<T> diff(const Poly<T>& a) {
    if (a.size() <= 1) return Poly<T>{T(0)};
    Poly<T> r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = T(i) * a[i];
    return r;
}

// multiply by s^p
template <class T>
Poly<T> shift(const Poly<T>& a, std::size_t p, std::size_t len) {
    Poly<T> r(len, T(0));
    for (std::size_t i = 0; i < a.size() && i + p < len; ++i) r[i + p] = a[i];
    return r;
}

// Coefficient vectors of the two denominator-cleared equations, truncated to
// `len` coefficients, for candidate series h, c.
template <class T>
void cleared_equations(const Poly<T>& h, const Poly<T>& c, const T& k,
                       std::size_t len, Poly<T>& e1, Poly<T>& e2) {
    const T K  = T(1) + k * k;
    const T k2 = k * k;

    Poly<T> t{T(0), T(0), T(1)};  // t = s^2
    Poly<T> S = add(scale(mul(h, h, len), K),
                    scale(mul(t, add(c, Poly<T>{k2}), len), T(-3)));
    Poly<T> D = add(mul(h, S, len), shift(Poly<T>{T(18) * k}, 4, len));
    Poly<T> Nh = add(mul(add(c, Poly<T>{k2}), S, len),
                     scale(mul(t, add(scale(h, k), shift(Poly<T>{T(6)}, 2, len)), len),
                           T(6) * K));
    Poly<T> Nc = add(scale(S, k), scale(mul(t, h, len), T(6) * K));

    e1 = add(scale(mul(diff(h), D, len), T(2) * K),
             scale(shift(Nh, 1, len), T(-2)));
    e2 = add(mul(diff(c), D, len), scale(shift(Nc, 1, len), T(-2)));
}

// Shared recurrence: works for exact rationals and for doubles.
template <class T>
void expand_impl(const T& k, int order, Poly<T>& a, Poly<T>& c) {
    const std::size_t L = static_cast<std::size_t>(order) + 3;
    a.assign(order + 1, T(0));
    c.assign(order + 1, T(0));
    a[0] = T(0);
    c[0] = T(1);
    if (order >= 1) {
        a[1] = T(1);         // normalization; a1^2 = 1 from the leading balance
        c[1] = T(2) * k;     // next-order balance
    }
    Poly<T> e1, e2;
    for (int n = 2; n <= order; ++n) {
        // the s^(n+2) coefficients of both equations are affine in (a_n, c_n):
        // probe at (0,0), (1,0), (0,1) and solve the resulting 2x2 system
        T e0[2], ea[2], ec[2];
        for (int probe = 0; probe < 3; ++probe) {
            a[n] = T(probe == 1 ? 1 : 0);
            c[n] = T(probe == 2 ? 1 : 0);
            Poly<T> ha(a.begin(), a.begin() + n + 1);
            Poly<T> ca(c.begin(), c.begin() + n + 1);
            cleared_equations(ha, ca, k, L, e1, e2);
            T* slot = probe == 0 ? e0 : (probe == 1 ? ea : ec);
            slot[0] = e1[n + 2];
            slot[1] = e2[n + 2];
        }
        const T m00 = ea[0] - e0[0], m01 = ec[0] - e0[0];
        const T m10 = ea[1] - e0[1], m11 = ec[1] - e0[1];
        const T det = m00 * m11 - m01 * m10;
        if (det == T(0))
            throw std::runtime_error("expand_profile_series: singular linear system at order " +
                                     std::to_string(n));
        a[n] = (-e0[0] * m11 + m01 * e0[1]) / det;
        c[n] = (-m00 * e0[1] + e0[0] * m10) / det;
    }
}

} // namespace

SeriesPair expand_profile_series(const Rational& k, int order) {
    if (order < 1)
        throw std::invalid_argument("expand_profile_series: order must be >= 1");
    if (k < 0)
        throw std::invalid_argument("expand_profile_series: k must be >= 0");
    SeriesPair sp;
    sp.k = k;
    sp.k_value = to_double(k);
    sp.order = order;
    sp.exact = true;
    expand_impl<Rational>(k, order, sp.h_coeffs, sp.c_coeffs);
    sp.h_dbl.reserve(sp.h_coeffs.size());
    sp.c_dbl.reserve(sp.c_coeffs.size());
    for (const auto& x : sp.h_coeffs) sp.h_dbl.push_back(to_double(x));
    for (const auto& x : sp.c_coeffs) sp.c_dbl.push_back(to_double(x));
    return sp;
}

SeriesPair expand_profile_series(double k, int order) {
    if (order < 1)
        throw std::invalid_argument("expand_profile_series: order must be >= 1");
    if (k < 0.0)
        throw std::invalid_argument("expand_profile_series: k must be >= 0");
    SeriesPair sp;
    sp.k_value = k;
    sp.order = order;
    sp.exact = false;
    expand_impl<double>(k, order, sp.h_dbl, sp.c_dbl);
    return sp;
}

SeriesEval eval_profile_series(const SeriesPair& series, double s) {
    double h = 0.0, c = 0.0;
    for (std::size_t i = series.h_dbl.size(); i-- > 0;) h = h * s + series.h_dbl[i];
    for (std::size_t i = series.c_dbl.size(); i-- > 0;) c = c * s + series.c_dbl[i];
    const double k = series.k_value;
    const double t = s * s;
    const double S = h * h * (1.0 + k * k) - 3.0 * t * (c + k * k);
    return {h, c, S};
}

void eval_profile_series_exact(const SeriesPair& series, const Rational& s,
                               Rational& h_out, Rational& c_out, Rational& S_out) {
    if (!series.exact)
        throw std::invalid_argument("eval_profile_series_exact: series is not exact");
    Rational h = 0, c = 0;
    for (std::size_t i = series.h_coeffs.size(); i-- > 0;) h = h * s + series.h_coeffs[i];
    for (std::size_t i = series.c_coeffs.size(); i-- > 0;) c = c * s + series.c_coeffs[i];
    const Rational t = s * s;
    const Rational K = Rational(1) + series.k * series.k;
    h_out = h;
    c_out = c;
    S_out = h * h * K - 3 * t * (c + series.k * series.k);
}

double series_ode_residual(double k, const SeriesPair& series,
                           std::span<const double> s_samples) {
    if (s_samples.empty())
        throw std::invalid_argument("series_ode_residual: empty sample list");
    const double K = 1.0 + k * k;
    double worst = 0.0;
    for (const double s : s_samples) {
        double h = 0.0, c = 0.0, hp = 0.0, cp = 0.0;
        for (std::size_t i = series.h_dbl.size(); i-- > 0;) {
            hp = hp * s + h;               // Horner for value and d/ds together
            h  = h * s + series.h_dbl[i];
        }
        for (std::size_t i = series.c_dbl.size(); i-- > 0;) {
            cp = cp * s + c;
            c  = c * s + series.c_dbl[i];
        }
        const double t  = s * s;
        const double S  = h * h * K - 3.0 * t * (c + k * k);
        const double D  = h * S + 18.0 * k * t * t;
        const double Nh = (k * k + c) * S + 6.0 * t * K * (k * h + 6.0 * t);
        const double Nc = k * S + 6.0 * t * K * h;
        const double e1 = hp * 2.0 * K * D - 2.0 * s * Nh;
        const double e2 = cp * D - 2.0 * s * Nc;
        worst = std::max({worst, std::fabs(e1), std::fabs(e2)});
    }
    return worst;
}

} // namespace helix

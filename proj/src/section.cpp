#include "helix/section.hpp"
#include "helix/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace helix {

SectionValues section_coefficients(double x, double t, const ProfileCurve& curve) {
    if (!(x > 0.0))
        throw std::domain_error("section_coefficients: x must be > 0");
    const double k = curve.k;
    const double K = 1.0 + k * k;
    const double W = x * x + k * k;

    SectionValues s;
    if (t <= 0.0) {
        // h = 0, c = 1 closed forms; profile t-derivatives diverge here
        s.h = 0.0;
        s.c = 1.0;
        s.S = 0.0;
        s.F = W * (x * x - 1.0) / (2.0 * x * K);
        s.G = -x * x * s.F * s.F / W;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        s.hp = s.cp = s.hpp = s.cpp = nan;
        s.Ft = s.Fx = s.Ftt = nan;
        s.Gx = s.Gtt = nan;
        // limit of G_t as t -> 0+ is finite only on the helix itself
        s.Gt = (std::fabs(x - 1.0) < 1e-9) ? 2.0 / K : nan;
        return s;
    }

    const ProfileValues pv = profile_eval_extended(curve, t);
    const ProfileDerivs pd = profile_rhs(k, t, pv.h, pv.c);
    const double h = pv.h, c = pv.c;
    const double hp = pd.hp, cp = pd.cp, hpp = pd.hpp, cpp = pd.cpp;

    s.h = h;
    s.c = c;
    s.hp = hp;
    s.cp = cp;
    s.hpp = hpp;
    s.cpp = cpp;
    s.S = pd.S;

    s.F = k * h / x + W * (x * x - c) / (2.0 * x * K);
    s.Ft = k * hp / x - W * cp / (2.0 * x * K);
    s.Ftt = k * hpp / x - W * cpp / (2.0 * x * K);
    s.Fx = -k * h / (x * x) + (3.0 * x * x + (k * k - c) + k * k * c / (x * x)) / (2.0 * K);

    s.G = x * x * (3.0 * t / K - (s.F * s.F + h * h) / W);
    s.Gt = x * x * (3.0 / K - (2.0 * s.F * s.Ft + 2.0 * h * hp) / W);
    s.Gtt = x * x * (-(2.0 * s.Ft * s.Ft + 2.0 * s.F * s.Ftt + 2.0 * hp * hp + 2.0 * h * hpp) / W);
    s.Gx = 2.0 * s.G / x - 2.0 * x * x * s.F * s.Fx / W +
           2.0 * x * x * x * (s.F * s.F + h * h) / (W * W);
    return s;
}

double section_G(double x, double t, const ProfileCurve& curve) {
    if (!(x > 0.0))
        throw std::domain_error("section_G: x must be > 0");
    const double k = curve.k;
    const double K = 1.0 + k * k;
    const double W = x * x + k * k;
    double h, c;
    if (t <= 0.0) {
        h = 0.0;
        c = 1.0;
    } else {
        const ProfileValues pv = profile_eval_extended(curve, t);
        h = pv.h;
        c = pv.c;
    }
    const double F = k * h / x + W * (x * x - c) / (2.0 * x * K);
    return x * x * (3.0 * std::max(t, 0.0) / K - (F * F + h * h) / W);
}

double radial_relation_residual(double k, double x, double h, double c) {
    const double K = 1.0 + k * k;
    const double W = x * x + k * k;
    const double F = k * h / x + W * (x * x - c) / (2.0 * x * K);
    const double Fx = -k * h / (x * x) + (3.0 * x * x + (k * k - c) + k * k * c / (x * x)) / (2.0 * K);
    return Fx - F * (x * x - k * k) / (x * W) + 2.0 * k * h / W - W / K;
}

double boundary_sextic(double k, double x, double t, double h, double c) {
    const double K = 1.0 + k * k;
    const double x2 = x * x;
    return x2 * x2 * x2 + (k * k - 2.0 * c) * x2 * x2 +
           (4.0 * K * (k * h - 3.0 * t) + c * c - 2.0 * k * k * c) * x2 +
           4.0 * K * (h * k * k - k * c + h) * h + k * k * c * c;
}

} // namespace helix

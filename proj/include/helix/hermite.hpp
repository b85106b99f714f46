#pragma once
// Two-point quintic Hermite segment on [t0, t0+H], parametrized by u in [0,1].
// Matches value, first and second derivative at both ends (derivative data in
// the original variable; scaled internally by H). Used for dense output of
// the profile continuation and of the transverse-ray integration, where
// exact derivatives at the nodes come from the respective right-hand sides.

namespace helix {

inline double quintic_hermite(double H, double u, double f0, double d0, double a0,
                              double f1, double d1, double a1) {
    const double D0 = d0 * H, A0 = a0 * H * H;
    const double D1 = d1 * H, A1 = a1 * H * H;
    const double c0 = f0, c1 = D0, c2 = 0.5 * A0;
    const double r0 = f1 - (c0 + c1 + c2);
    const double r1 = D1 - (c1 + 2.0 * c2);
    const double r2 = A1 - 2.0 * c2;
    const double c3 = 10.0 * r0 - 4.0 * r1 + 0.5 * r2;
    const double c4 = -15.0 * r0 + 7.0 * r1 - r2;
    const double c5 = 6.0 * r0 - 3.0 * r1 + 0.5 * r2;
    return c0 + u * (c1 + u * (c2 + u * (c3 + u * (c4 + u * c5))));
}

// Derivative of the same segment with respect to the original variable.
inline double quintic_hermite_prime(double H, double u, double f0, double d0, double a0,
                                    double f1, double d1, double a1) {
    const double D0 = d0 * H, A0 = a0 * H * H;
    const double D1 = d1 * H, A1 = a1 * H * H;
    const double c1 = D0, c2 = 0.5 * A0;
    const double r0 = f1 - (f0 + c1 + c2);
    const double r1 = D1 - (c1 + 2.0 * c2);
    const double r2 = A1 - 2.0 * c2;
    const double c3 = 10.0 * r0 - 4.0 * r1 + 0.5 * r2;
    const double c4 = -15.0 * r0 + 7.0 * r1 - r2;
    const double c5 = 6.0 * r0 - 3.0 * r1 + 0.5 * r2;
    return (c1 + u * (2.0 * c2 + u * (3.0 * c3 + u * (4.0 * c4 + u * 5.0 * c5)))) / H;
}

} // namespace helix

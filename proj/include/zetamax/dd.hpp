#pragma once

#include <cmath>

namespace zetamax {

// Minimal double-double arithmetic (~106-bit significand). Only the
// operations needed for phase reduction of t*log(n) at large t are
// provided; this is not a general extended-precision type.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

namespace dd {

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD add(DD a, double b) {
    DD s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD sub(DD a, DD b) { return add(a, DD{-b.hi, -b.lo}); }

inline DD mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD mul(double a, DD b) { return mul(b, a); }

inline DD two_pi() {
    // hi is 2*pi rounded to double, lo the residual
    return {6.2831853071795864769e+00, 2.4492935982947063545e-16};
}

// log(x) as a double-double, via 80-bit long double where available.
inline DD log_dd(double x) {
    long double l = std::log(static_cast<long double>(x));
    double hi = static_cast<double>(l);
    double lo = static_cast<double>(l - static_cast<long double>(hi));
    return {hi, lo};
}

// Reduce a double-double phase modulo 2*pi into [-pi, pi].
inline double mod_two_pi(DD phase) {
    DD tp = two_pi();
    double q = std::nearbyint(phase.hi / tp.hi);
    DD r = sub(phase, mul(tp, q));
    // one correction pass in case rounding put us just outside
    if (r.hi > 3.15) r = sub(r, tp);
    if (r.hi < -3.15) r = add(r, tp);
    return r.hi + r.lo;
}

} // namespace dd
} // namespace zetamax

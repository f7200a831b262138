#include "fsw/rootfind.hpp"

#include <cmath>

namespace fsw {

double refine_root(const std::function<double(double)>& f,
                   const std::function<double(double)>& df,
                   double a, double b, double width) {
    double fa = f(a);
    if (fa == 0.0) return a;
    double fb = f(b);
    if (fb == 0.0) return b;
    for (int i = 0; i < 200 && b - a > width; ++i) {
        double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;  // interval at floating-point resolution
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    double x = 0.5 * (a + b);
    if (df) {
        double fx = f(x);
        double d = df(x);
        if (std::isfinite(d) && d != 0.0) {
            double x2 = x - fx / d;
            if (x2 > a && x2 < b && std::abs(f(x2)) <= std::abs(fx)) x = x2;
        }
    }
    return x;
}

double minimize(const std::function<double(double)>& f,
                double a, double b, double tol) {
    const double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < 200 && b - a > tol; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace fsw

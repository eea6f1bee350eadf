#include "rcs/special.hpp"

#include <cmath>

namespace rcs {

namespace {

// log(sin(pi z)) with controlled branch, for the reflection formula.
Complex log_sin_pi(Complex z) {
    const Complex i(0.0, 1.0);
    Complex piz = M_PI * z;
    if (piz.imag() > 0.0)
        return -i * M_PI_2 - M_LN2 - i * piz + std::log(std::exp(2.0 * i * piz) - 1.0);
    return -i * M_PI_2 - M_LN2 + i * piz + std::log(1.0 - std::exp(-2.0 * i * piz));
}

} // namespace

Complex log_gamma(Complex z) {
    if (z.real() < 0.5)
        return std::log(Complex(M_PI)) - log_sin_pi(z) - log_gamma(1.0 - z);

    static const double coef[14] = {
        57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
        -0.491913816097620199,   3.39946499848118887e-5,  4.65236289270485756e-5,
        -9.83744753048795646e-5, 1.58088703224912494e-4,  -2.10264441724104883e-4,
        2.17439618115212643e-4,  -1.64318106536763890e-4, 8.44182239838527433e-5,
        -2.61908384015814087e-5, 3.68991826595316234e-6};

    Complex x = z;
    Complex y = z;
    Complex tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    Complex ser = 0.999999999999997092;
    for (double c : coef) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double arg_gamma(Complex z) { return log_gamma(z).imag(); }

double half_lgamma_ratio(double a, double b) {
    return std::exp(0.5 * (std::lgamma(a) - std::lgamma(b)));
}

double laguerre(int n, double nu, double x) {
    if (n < 0) return 0.0;
    double l0 = 1.0;
    if (n == 0) return l0;
    double l1 = 1.0 + nu - x;
    for (int k = 1; k < n; ++k) {
        double l2 = ((2.0 * k + nu + 1.0 - x) * l1 - (k + nu) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

} // namespace rcs

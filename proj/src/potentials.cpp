#include "rcs/potentials.hpp"

#include <cmath>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "rcs/special.hpp"

namespace rcs {

RadialComponent combine(const RadialComponent& a, const RadialComponent& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    RadialComponent out;
    auto fa = a.smooth, fb = b.smooth;
    out.smooth = [fa, fb](Complex r) {
        Complex v(0.0);
        if (fa) v += fa(r);
        if (fb) v += fb(r);
        return v;
    };
    out.coulomb_coeff = a.coulomb_coeff + b.coulomb_coeff;
    out.max_arg = std::min(a.max_arg, b.max_arg);
    out.name = a.name + "+" + b.name;
    return out;
}

double theta_ceiling(const PotentialSpec& spec) {
    double ceil = M_PI_2;
    if (!spec.V.empty() && spec.eta_V != 0.0) ceil = std::min(ceil, spec.V.max_arg);
    if (!spec.S.empty() && spec.eta_S != 0.0) ceil = std::min(ceil, spec.S.max_arg);
    if (!spec.W.empty() && spec.eta_W != 0.0) ceil = std::min(ceil, spec.W.max_arg);
    return ceil;
}

std::string theta_limiting_component(const PotentialSpec& spec) {
    double ceil = M_PI_2;
    std::string who = "none";
    auto consider = [&](const RadialComponent& c, double eta) {
        if (!c.empty() && eta != 0.0 && c.max_arg < ceil) {
            ceil = c.max_arg;
            who = c.name;
        }
    };
    consider(spec.V, spec.eta_V);
    consider(spec.S, spec.eta_S);
    consider(spec.W, spec.eta_W);
    return who;
}

TransformedPotential transform(const PotentialSpec& spec, const BasisParams& b,
                               const PhysicsParams& p) {
    const double kap = p.effective_kappa();
    const double Z = p.effective_Z();
    const double gk = b.gamma / kap;
    const double zk = Z / kap;
    const double la2 = p.lambda * p.lambda;
    const double eW = p.branch == Branch::negative ? -spec.eta_W : spec.eta_W;

    const bool hasV = !spec.V.empty() && spec.eta_V != 0.0;
    const bool hasS = !spec.S.empty() && spec.eta_S != 0.0;
    const bool hasW = !spec.W.empty() && eW != 0.0;

    TransformedPotential tp;
    tp.gamma = b.gamma;
    tp.kappa = kap;
    tp.Z = Z;
    tp.lambda = p.lambda;

    auto mix = [&](double cv, double cs, double cw) -> RadialFn {
        RadialFn fv = spec.V.smooth, fs = spec.S.smooth, fw = spec.W.smooth;
        return [=](Complex r) {
            Complex v(0.0);
            if (fv && cv != 0.0) v += cv * fv(r);
            if (fs && cs != 0.0) v += cs * fs(r);
            if (fw && cw != 0.0) v += cw * fw(r);
            return v;
        };
    };

    tp.has_plus = hasV || hasS || hasW;
    tp.has_minus = tp.has_plus;
    tp.has_zero = hasW || (hasS && Z != 0.0 && p.lambda != 0.0);

    tp.u_plus = mix(spec.eta_V, gk * spec.eta_S, zk * eW);
    tp.u_minus = mix(spec.eta_V, -gk * spec.eta_S, -zk * eW);
    tp.u_zero = mix(0.0, -la2 * zk * spec.eta_S, gk * eW);

    tp.c_plus = spec.eta_V * spec.V.coulomb_coeff + gk * spec.eta_S * spec.S.coulomb_coeff +
                zk * eW * spec.W.coulomb_coeff;
    tp.c_minus = spec.eta_V * spec.V.coulomb_coeff - gk * spec.eta_S * spec.S.coulomb_coeff -
                 zk * eW * spec.W.coulomb_coeff;
    tp.c_zero = gk * eW * spec.W.coulomb_coeff - la2 * zk * spec.eta_S * spec.S.coulomb_coeff;
    return tp;
}

PotentialRules make_potential_rules(const BasisParams& b, int K) {
    PotentialRules r;
    r.nu_rule = build_rule(b.nu, K);
    r.two_gamma_rule = build_rule(2.0 * std::abs(b.gamma), K);
    return r;
}

ComplexDense coulomb_sample_matrix(double nu, Complex omega_scaled, int N) {
    ComplexDense m(N, N);
    for (int i = 0; i < N; ++i) {
        for (int j = i; j < N; ++j) {
            // i <= j: omega_s/nu * sqrt(G(j+1) G(i+nu+1) / (G(i+1) G(j+nu+1)))
            double lg = 0.5 * (std::lgamma(j + 1.0) + std::lgamma(i + nu + 1.0) -
                               std::lgamma(i + 1.0) - std::lgamma(j + nu + 1.0));
            m(i, j) = m(j, i) = omega_scaled * std::exp(lg) / nu;
        }
    }
    return m;
}

ComplexDense potential_matrix(const TransformedPotential& tp,
                              const BasisParams& b, const PhysicsParams& p,
                              const PotentialRules& rules, double theta) {
    const int N = b.N;
    if (rules.nu_rule.K < N + 1 || rules.two_gamma_rule.K < N + 1)
        throw IndexOverflow("potential_matrix requires K >= N+1");

    const double kap = p.effective_kappa();
    const double Z = p.effective_Z();
    const double ga = std::abs(b.gamma);
    const double la = p.lambda;
    const Complex ws = b.omega * std::exp(Complex(0.0, -theta));
    const Complex sp = 1.0 + 2.0 * Z / (kap * ws);
    const Complex sm = 1.0 - 2.0 * Z / (kap * ws);
    const Complex rm = sp * sm;
    const Complex zk2 = 2.0 * Z / (kap * ws);

    ComplexDense out = ComplexDense::Zero(N, N);

    if (tp.has_plus) {
        auto up = tp.u_plus;
        const double cp = tp.c_plus;
        // R(r) = (omega_s r) U+(r); the 1/r coefficient turns into a constant
        auto R = [up, cp, ws](Complex r) {
            return ws * r * up(r) + ws * cp;
        };
        SampledMatrix ra = sample(rules.nu_rule, R, ws, N);
        out += la * la * ra.entries;
    }

    ComplexDense s0, smm;
    if (tp.has_zero) {
        s0 = sample(rules.two_gamma_rule, tp.u_zero, ws, N + 1).entries;
        if (tp.c_zero != 0.0)
            s0 += tp.c_zero * coulomb_sample_matrix(2.0 * ga, ws, N + 1);
    }
    if (tp.has_minus) {
        smm = sample(rules.two_gamma_rule, tp.u_minus, ws, N + 1).entries;
        if (tp.c_minus != 0.0)
            smm += tp.c_minus * coulomb_sample_matrix(2.0 * ga, ws, N + 1);
    }

    if (!tp.has_zero && !tp.has_minus) return out;

    auto S0 = [&](int i, int j) -> Complex {
        if (i < 0 || j < 0) return 0.0;
        return s0(i, j);
    };
    auto Sm = [&](int i, int j) -> Complex {
        if (i < 0 || j < 0) return 0.0;
        return smm(i, j);
    };

    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            Complex cross(0.0), lower(0.0);
            if (kap > 0) {
                const double ai = i + 2.0 * ga + 1.0, bi = i + 1.0;
                const double aj = j + 2.0 * ga + 1.0, bj = j + 1.0;
                if (tp.has_zero)
                    cross = (la * ws / 2.0) *
                            (sm * std::sqrt(ai * aj) * S0(i, j) -
                             sp * std::sqrt(bi * bj) * S0(i + 1, j + 1) +
                             zk2 * (std::sqrt(ai * bj) * S0(i, j + 1) +
                                    std::sqrt(bi * aj) * S0(i + 1, j)));
                if (tp.has_minus)
                    lower = (la * ws / 4.0) * (la * ws / 4.0) *
                            (sm * sm * std::sqrt(ai * aj) * Sm(i, j) +
                             sp * sp * std::sqrt(bi * bj) * Sm(i + 1, j + 1) +
                             rm * (std::sqrt(ai * bj) * Sm(i, j + 1) +
                                   std::sqrt(bi * aj) * Sm(i + 1, j)));
            } else {
                const double ai = i + 2.0 * ga, bi = i;
                const double aj = j + 2.0 * ga, bj = j;
                if (tp.has_zero)
                    cross = -(la * ws / 2.0) *
                            (sp * std::sqrt(ai * aj) * S0(i, j) -
                             sm * std::sqrt(bi * bj) * S0(i - 1, j - 1) -
                             zk2 * (std::sqrt(ai * bj) * S0(i, j - 1) +
                                    std::sqrt(bi * aj) * S0(i - 1, j)));
                if (tp.has_minus)
                    lower = (la * ws / 4.0) * (la * ws / 4.0) *
                            (sp * sp * std::sqrt(ai * aj) * Sm(i, j) +
                             sm * sm * std::sqrt(bi * bj) * Sm(i - 1, j - 1) +
                             rm * (std::sqrt(ai * bj) * Sm(i, j - 1) +
                                   std::sqrt(bi * aj) * Sm(i - 1, j)));
            }
            out(i, j) += la * cross + la * la * lower;
        }
    }
    return out;
}

RadialComponent woods_saxon(double V0, double R0, double r0) {
    if (!(V0 > 0.0) || !(R0 > 0.0) || !(r0 > 0.0))
        throw ConfigError("woods-saxon requires V0, R0, r0 > 0");
    RadialComponent c;
    c.name = "woods-saxon";
    c.max_arg = 0.9 * std::atan(M_PI * r0 / R0);
    c.smooth = [V0, R0, r0](Complex r) -> Complex {
        // nearest pole: R0 + i pi r0 (2k+1)
        const double pi_r0 = M_PI * r0;
        double k = std::round((std::abs(r.imag()) / pi_r0 - 1.0) / 2.0);
        if (k >= 0.0) {
            Complex pole(R0, (2.0 * k + 1.0) * pi_r0 * (r.imag() < 0 ? -1.0 : 1.0));
            if (std::abs(r - pole) < 1e-3 * r0)
                throw PotentialSingular("woods-saxon evaluated too close to a pole");
        }
        Complex z = (r - R0) / r0;
        if (z.real() > 600.0) return 0.0;
        return -V0 / (1.0 + std::exp(z));
    };
    return c;
}

RadialComponent power_exp(double c0, double p, double a) {
    if (p < 0.0) throw ConfigError("power-exp requires exponent p >= 0");
    RadialComponent c;
    c.name = "power-exp";
    c.max_arg = M_PI_2;
    c.smooth = [c0, p, a](Complex r) { return c0 * std::pow(r, p) * std::exp(-a * r); };
    return c;
}

RadialComponent coulomb_sphere(double Zc, double Rc) {
    if (!(Rc > 0.0)) throw ConfigError("coulomb-sphere requires Rc > 0");
    RadialComponent c;
    c.name = "coulomb-sphere";
    c.max_arg = 0.0; // piecewise: cannot be continued off the real axis
    c.smooth = [Zc, Rc](Complex r) -> Complex {
        double rr = r.real();
        if (rr >= Rc) return Zc / rr;
        return Zc * (3.0 - (rr / Rc) * (rr / Rc)) / (2.0 * Rc);
    };
    return c;
}

RadialComponent sphere_coulomb_correction(double Z, double Rc) {
    if (!(Rc > 0.0)) throw ConfigError("sphere correction requires Rc > 0");
    RadialComponent c;
    c.name = "coulomb-sphere-correction";
    c.max_arg = 0.0;
    // windowed piece; the -Z/r part lives in coulomb_coeff and cancels against
    // +Z/r beyond Rc, so the component is exactly 0 for r >= Rc
    c.coulomb_coeff = -Z;
    c.smooth = [Z, Rc](Complex r) -> Complex {
        double rr = r.real();
        if (rr >= Rc) return Z / rr;
        return Z * (3.0 / (2.0 * Rc) - rr * rr / (2.0 * Rc * Rc * Rc));
    };
    return c;
}

RadialComponent tabulated(const std::vector<double>& r,
                          const std::vector<double>& v) {
    if (r.size() < 5 || r.size() != v.size())
        throw ConfigError("tabulated potential needs >= 5 equally spaced samples");
    const double h = r[1] - r[0];
    for (size_t i = 1; i + 1 < r.size(); ++i)
        if (std::abs((r[i + 1] - r[i]) - h) > 1e-9 * std::max(1.0, h))
            throw ConfigError("tabulated potential grid must be uniform");
    auto spline = std::make_shared<
        boost::math::interpolators::cardinal_cubic_b_spline<double>>(
        v.begin(), v.end(), r.front(), h);
    const double rmin = r.front(), rmax = r.back();
    RadialComponent c;
    c.name = "tabulated";
    c.max_arg = 0.0; // grid data cannot be continued to complex radius
    c.smooth = [spline, rmin, rmax](Complex rc) -> Complex {
        double rr = rc.real();
        if (rr < rmin || rr > rmax) return 0.0;
        return (*spline)(rr);
    };
    return c;
}

NuclearUnits nuclear_constants(Particle particle) {
    NuclearUnits u;
    if (particle == Particle::neutron) {
        // CODATA-2006 mass ratio applied to the fixed proton factors
        const double ratio = 939.565346 / 938.272013;
        u.energy_to_mc2 *= ratio;
        u.lambda_fm /= ratio;
        // coulomb_scale stays tied to the proton charge unit
    }
    return u;
}

std::pair<PhysicsParams, PotentialSpec> convert_nuclear(const NuclearSetup& s) {
    const NuclearUnits u = nuclear_constants(s.particle);

    PhysicsParams p;
    p.lambda = u.lambda_fm;
    p.kappa = s.kappa;
    p.branch = s.branch;
    p.Z = s.point_coulomb ? s.Zcharge / u.coulomb_scale : 0.0;

    PotentialSpec spec;
    spec.unit_system = UnitSystem::nuclear;
    spec.short_range_certificate = s.R0_fm + 20.0 * s.r0_fm;
    const double v0 = s.V0_MeV * u.energy_to_mc2;
    RadialComponent ws = woods_saxon(v0, s.R0_fm, s.r0_fm);
    spec.eta_V = s.eta_V;
    spec.eta_S = s.eta_S;
    spec.eta_W = s.eta_W;
    if (s.eta_V != 0.0) spec.V = ws;
    if (s.eta_S != 0.0) spec.S = ws;
    if (s.eta_W != 0.0) spec.W = ws;
    if (s.Rc_fm) {
        // full sphere potential in the vector channel, Z = 0 reference
        RadialComponent vc = coulomb_sphere(s.Zcharge / u.coulomb_scale, *s.Rc_fm);
        if (spec.eta_V == 0.0) {
            spec.V = vc;
            spec.eta_V = 1.0;
        } else {
            // keep eta_V acting on the nuclear part only
            RadialComponent scaled_ws = spec.V;
            const double eta = spec.eta_V;
            auto f = scaled_ws.smooth;
            scaled_ws.smooth = [f, eta](Complex r) { return eta * f(r); };
            spec.V = combine(scaled_ws, vc);
            spec.eta_V = 1.0;
        }
    }
    return {p, spec};
}

} // namespace rcs

// Substitutions between the non-divergence unknown u and the divergence-form
// unknown v, the clamped diffusion coefficient and the smoothed Heaviside.
#pragma once

namespace ddeg {

enum class RegimeKind { sub, log, super };

struct Regime {
    double m = 1.0;
    RegimeKind kind = RegimeKind::log;
};

Regime make_regime(double m);

// v = phi(u):  u^{1-m}/(1-m) for m < 1,  ln u for m = 1,  u^{1-m}/(m-1) for m > 1.
// Requires u > 0.
double phi(double u, const Regime& r);

// Inverse of phi. Requires v > 0 for the sub/super regimes.
double psi(double v, const Regime& r);

// |Psi'(v)| computed through the identity |Psi'(v)| = Psi(v)^m.
double psi_prime_abs(double v, const Regime& r);

struct CutoffParams {
    double epsilon = 0.0;  // in (0, 1]
    double K = 0.0;        // sup of the initial data
};

// max{eps^m, min{|Psi'(v)|, (K+eps)^m}}, total: out-of-domain v clamps
// to the nearer band edge.
double cutoff_A(double v, const Regime& r, const CutoffParams& c);

// H_eps(t) = int_0^t (2/eps)(1 - s/eps)_+ ds for t >= 0, zero for t <= 0.
double smoothed_heaviside(double t, double eps);

}  // namespace ddeg

// Uniform 1D grid, nodal/face fields and the discrete calculus used everywhere else.
#pragma once

#include <functional>
#include <vector>

namespace ddeg {

struct Grid {
    double a = 0.0;   // left endpoint
    double b = 1.0;   // right endpoint
    int n = 0;        // node count
    double h = 0.0;   // spacing (b-a)/(n-1)

    Grid() = default;
    Grid(double a_, double b_, int n_);

    double x(int i) const { return a + i * h; }
    bool operator==(const Grid&) const = default;
};

// One value per grid node.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    ScalarField(const Grid& g, std::vector<double> vals);
    ScalarField(const Grid& g, double fill);

    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }
    int size() const { return static_cast<int>(values.size()); }
};

// One value per cell face (midpoints between nodes), n-1 entries.
struct FaceField {
    Grid grid;
    std::vector<double> values;

    FaceField() = default;
    FaceField(const Grid& g, std::vector<double> vals);
    FaceField(const Grid& g, double fill);

    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }
    int size() const { return static_cast<int>(values.size()); }
};

ScalarField sample(const Grid& g, const std::function<double(double)>& f);

// g_i = (f_{i+1} - f_i)/h, face-centered.
FaceField gradient(const ScalarField& f);

// Adjoint of gradient under the discrete pairings below: interior nodes get
// (g_i - g_{i-1})/h, boundary nodes are set to zero.
ScalarField divergence(const FaceField& g);

// Trapezoidal rule over nodes.
double integrate(const ScalarField& f);

// Midpoint rule over faces (weight h per face).
double integrate(const FaceField& f);

double max_abs(const ScalarField& f);
double max_abs(const FaceField& f);

// p(x) samples with cached bounds and a discrete log-Holder modulus.
struct ExponentField {
    Grid grid;
    std::vector<double> p;
    double p_minus = 0.0;
    double p_plus = 0.0;
    double log_holder_modulus = 0.0;

    double operator[](int i) const { return p[i]; }
};

// max over node pairs with 0 < |x_i-x_j| <= 1/2 of |p_i-p_j| * log(1/|x_i-x_j|).
double log_holder_estimate(const Grid& g, const std::vector<double>& p);

// Validates 1 < min p and caches p_minus/p_plus/log_holder_modulus.
ExponentField make_exponent_field(const Grid& g, std::vector<double> p);
ExponentField make_exponent_field(const Grid& g, const std::function<double(double)>& p);

// Face-sampled exponent: arithmetic mean of the two adjacent nodal values.
std::vector<double> face_exponents(const ExponentField& q);

}  // namespace ddeg

#include "ftn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace ftn {
namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// 7-point Gauss weights; the Gauss nodes are the odd-indexed Kronrod nodes.
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv_lo[7], fv_hi[7];
    const double fc = f(center);
    for (int j = 0; j < 7; ++j) {
        fv_lo[j] = f(center - half * kKronrodNodes[j]);
        fv_hi[j] = f(center + half * kKronrodNodes[j]);
    }

    double result_gauss = kGaussWeights[3] * fc;
    for (int j = 0; j < 3; ++j)
        result_gauss += kGaussWeights[j] * (fv_lo[2 * j + 1] + fv_hi[2 * j + 1]);

    double result_kronrod = kKronrodWeights[7] * fc;
    for (int j = 0; j < 7; ++j)
        result_kronrod += kKronrodWeights[j] * (fv_lo[j] + fv_hi[j]);

    // QUADPACK-style scaled error estimate.
    const double mean = 0.5 * result_kronrod;
    double resasc = kKronrodWeights[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kKronrodWeights[j] * (std::fabs(fv_lo[j] - mean) + std::fabs(fv_hi[j] - mean));
    resasc *= std::fabs(half);

    double err = std::fabs((result_kronrod - result_gauss) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));

    return Panel{a, b, result_kronrod * half, err};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints,
                           const QuadratureSettings& settings) {
    settings.validate();
    if (a == b)
        return QuadratureResult{0.0, 0.0, 0};
    if (a > b) {
        QuadratureResult r = integrate(f, b, a, breakpoints, settings);
        r.value = -r.value;
        return r;
    }

    std::vector<double> edges;
    edges.push_back(a);
    for (double p : breakpoints)
        if (p > a && p < b)
            edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel> panels;
    double total = 0.0, total_err = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = evaluate_panel(f, edges[i], edges[i + 1]);
        total += p.value;
        total_err += p.error;
        panels.push(p);
    }

    int splits = 0;
    auto tolerance = [&] { return std::max(settings.abs_tol, settings.rel_tol * std::fabs(total)); };
    while (total_err > tolerance() && splits < settings.max_subdivisions) {
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval no longer splittable in double precision
            panels.push(worst);
            break;
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++splits;
    }

    QuadratureResult result{total, total_err, splits};
    if (total_err > tolerance())
        throw ConvergenceError("quadrature failed to converge within max_subdivisions", result);
    return result;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSettings& settings) {
    return integrate(f, a, b, std::span<const double>{}, settings);
}

} // namespace ftn

#include "nsmild/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "nsmild/errors.hpp"

namespace nsmild {

namespace {

// QUADPACK QK15 abscissae/weights (positive half; node 7 is the center).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double value;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - hw * kXgk[i]);
        fv[14 - i] = f(c + hw * kXgk[i]);
    }
    fv[7] = f(c);
    evals += 15;
    double kronrod = kWgk[7] * fv[7];
    for (int i = 0; i < 7; ++i) kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 3; ++i) {
        const int j = 2 * i + 1;
        gauss += kWg[i] * (fv[j] + fv[14 - j]);
    }
    return {kronrod * hw, std::abs(kronrod - gauss) * hw};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol,
           int depth, int max_depth, double& value, double& error, long& evals) {
    const PanelEstimate est = gk15(f, a, b, evals);
    if (est.error <= tol || depth >= max_depth) {
        value += est.value;
        error += est.error;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, tol * 0.5, depth + 1, max_depth, value, error, evals);
    adapt(f, c, b, tol * 0.5, depth + 1, max_depth, value, error, evals);
}

} // namespace

QuadratureResult adaptive_gk(const std::function<double(double)>& f, double a, double b,
                             double tol, int max_depth) {
    if (!(tol > 0.0)) throw DomainError("adaptive_gk: tol must be positive");
    QuadratureResult res;
    if (a == b) return res;
    adapt(f, a, b, tol, 0, max_depth, res.value, res.error, res.evaluations);
    if (res.error > 4.0 * tol + 1e-300)
        throw QuadratureError("adaptive_gk: tolerance not reached", res.error);
    return res;
}

QuadratureResult adaptive_gk_oscillatory(const std::function<double(double)>& f, double a,
                                         double b, double omega, double tol) {
    if (!(tol > 0.0)) throw DomainError("adaptive_gk_oscillatory: tol must be positive");
    QuadratureResult res;
    if (a == b) return res;
    // pre-split so each panel covers at most ~one oscillation period
    const double length = b - a;
    int panels = 1;
    if (omega * length > 10.0)
        panels = static_cast<int>(std::ceil(omega * length / 3.14159265358979323846));
    panels = std::min(panels, 4096);
    const double per_tol = tol / panels;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + length * i / panels;
        const double hi = a + length * (i + 1) / panels;
        adapt(f, lo, hi, per_tol, 0, 30, res.value, res.error, res.evaluations);
    }
    if (res.error > 4.0 * tol + 1e-300)
        throw QuadratureError("adaptive_gk_oscillatory: tolerance not reached", res.error);
    return res;
}

const GaussLegendre& gauss_legendre_unit(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    constexpr double kPi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        // Newton on P_n, standard initial guess
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // map [-1,1] -> [0,1]
        gl.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        gl.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * pp * pp);
    }
    auto [pos, ok] = cache.emplace(n, std::move(gl));
    return pos->second;
}

} // namespace nsmild

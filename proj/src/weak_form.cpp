#include "nsmild/weak_form.hpp"

#include <cmath>

#include "nsmild/errors.hpp"
#include "nsmild/norms.hpp"
#include "nsmild/operators.hpp"
#include "nsmild/random_fields.hpp"
#include "nsmild/transforms.hpp"

namespace nsmild {

std::string test_class_name(TestClass c) {
    switch (c) {
        case TestClass::product_class: return "product";
        case TestClass::t1: return "t1";
        case TestClass::t_chi: return "t_chi";
    }
    return "?";
}

double TemporalBump::value(double s) const {
    const double y = (s - center) / width;
    if (std::abs(y) >= 1.0) return 0.0;
    return std::pow(1.0 - y * y, order);
}

double TemporalBump::derivative(double s) const {
    const double y = (s - center) / width;
    if (std::abs(y) >= 1.0) return 0.0;
    return order * std::pow(1.0 - y * y, order - 1) * (-2.0 * y) / width;
}

std::string TestFunction::id() const {
    return test_class_name(cls) + "-" + std::to_string(seed);
}

namespace {

TemporalBump draw_bump(Rng& rng, double T) {
    // support kept strictly inside [0.05 T, 0.95 T]
    TemporalBump b;
    b.center = rng.uniform(0.3 * T, 0.65 * T);
    const double max_width = std::min(b.center - 0.05 * T, 0.95 * T - b.center);
    b.width = std::min(max_width, 0.25 * T) * rng.uniform(0.8, 1.0);
    b.order = 8;
    return b;
}

} // namespace

TestFunction generate_test_function(std::uint64_t seed, TestClass cls, const GridSpec& grid,
                                    double T, double chi_r) {
    if (!(T > 0.0)) throw DomainError("generate_test_function: T must be positive");
    if (cls == TestClass::t_chi && !(chi_r > 0.0))
        throw DomainError("generate_test_function: chi class needs r > 0");

    TestFunction phi{grid, cls, T, cls == TestClass::t_chi ? chi_r : 0.0, seed, {}, {}};

    Rng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(cls) + 1);
    const double l = grid.box_length;
    const std::array<double, 3> center{0.5 * l, 0.5 * l, 0.5 * l};

    switch (cls) {
        case TestClass::product_class: {
            phi.bumps.push_back(draw_bump(rng, T));
            phi.spatial.push_back(
                localized_divergence_free_field(grid, seed * 11 + 1, center, l / 8.0));
            break;
        }
        case TestClass::t1: {
            phi.bumps.push_back(draw_bump(rng, T));
            phi.bumps.push_back(draw_bump(rng, T));
            phi.spatial.push_back(
                localized_divergence_free_field(grid, seed * 11 + 1, center, l / 8.0));
            phi.spatial.push_back(
                localized_divergence_free_field(grid, seed * 11 + 5, center, l / 10.0));
            break;
        }
        case TestClass::t_chi: {
            phi.bumps.push_back(draw_bump(rng, T));
            VectorField raw = random_smooth_field(grid, seed * 11 + 3);
            phi.spatial.push_back(leray_project(chi_mollify(chi_r, raw)));
            break;
        }
    }
    return phi;
}

WeakFormEvaluator::WeakFormEvaluator(const Trajectory& traj, std::vector<TestFunction> phis,
                                     bool include_nonlinearity)
    : traj_(traj), phis_(std::move(phis)), nonlinearity_(include_nonlinearity) {
    const std::size_t nt = traj.times.size();
    std::vector<std::vector<SpectralField>> basis(phis_.size());
    table_.resize(phis_.size());
    for (std::size_t p = 0; p < phis_.size(); ++p) {
        for (const auto& b : phis_[p].bumps)
            if (b.support_end() > phis_[p].horizon)
                throw DomainError("weak_residual: temporal support extends past T");
        basis[p].reserve(phis_[p].terms());
        for (const auto& f : phis_[p].spatial) basis[p].push_back(forward_transform(f));
        table_[p].resize(phis_[p].terms());
        for (auto& s : table_[p]) {
            s.u_phi.assign(nt, 0.0);
            s.gu_gphi.assign(nt, 0.0);
            s.n_phi.assign(nt, 0.0);
        }
    }

    // one sweep over stored times computes every pairing series
    for (std::size_t n = 0; n < nt; ++n) {
        const SpectralField u_hat = forward_transform(traj.states[n]);
        SpectralField n_hat(traj.grid);
        if (nonlinearity_) n_hat = nonlinear_spectral(u_hat);
        for (std::size_t p = 0; p < phis_.size(); ++p)
            for (std::size_t b = 0; b < table_[p].size(); ++b) {
                table_[p][b].u_phi[n] = inner_product_spectral(u_hat, basis[p][b]);
                table_[p][b].gu_gphi[n] = gradient_inner_product_spectral(u_hat, basis[p][b]);
                if (nonlinearity_)
                    table_[p][b].n_phi[n] = inner_product_spectral(n_hat, basis[p][b]);
            }
    }
}

WeakResidualReport WeakFormEvaluator::residual(std::size_t phi_index, double t) const {
    if (phi_index >= phis_.size()) throw DomainError("WeakFormEvaluator: bad index");
    const TestFunction& phi = phis_[phi_index];
    if (!(t <= phi.horizon))
        throw DomainError("weak_residual: t beyond the test-function horizon");
    const int it = traj_.index_of_time(t);
    if (it < 0) throw DomainError("weak_residual: t is not a stored trajectory time");

    const auto& series = table_[phi_index];
    double int_dt = 0.0, int_grad = 0.0, int_nl = 0.0;
    for (int n = 0; n <= it; ++n) {
        const double s = traj_.times[static_cast<std::size_t>(n)];
        double w = 0.0;
        if (it > 0) {
            const double delta = traj_.times[1] - traj_.times[0];
            w = (n == 0 || n == it) ? 0.5 * delta : delta;
        }
        for (std::size_t b = 0; b < series.size(); ++b) {
            int_dt += w * phi.bumps[b].derivative(s) * series[b].u_phi[n];
            int_grad += w * phi.bumps[b].value(s) * series[b].gu_gphi[n];
            int_nl += w * phi.bumps[b].value(s) * series[b].n_phi[n];
        }
    }

    double rhs0 = 0.0, rhst = 0.0;
    for (std::size_t b = 0; b < series.size(); ++b) {
        rhs0 += phi.bumps[b].value(0.0) * series[b].u_phi[0];
        rhst += phi.bumps[b].value(t) * series[b].u_phi[static_cast<std::size_t>(it)];
    }

    WeakResidualReport rep;
    rep.test_id = phi.id();
    rep.t = t;
    rep.lhs = -int_dt + int_grad + int_nl;
    rep.rhs = rhs0 - rhst;
    rep.gap = std::abs(rep.lhs - rep.rhs);
    rep.scale = std::abs(int_dt) + std::abs(int_grad) + std::abs(int_nl) + std::abs(rhs0) +
                std::abs(rhst);
    return rep;
}

WeakResidualReport weak_residual(const Trajectory& traj, const TestFunction& phi, double t,
                                 bool include_nonlinearity) {
    WeakFormEvaluator ev(traj, {phi}, include_nonlinearity);
    return ev.residual(0, t);
}

std::vector<double> weak_continuity_probe(const Trajectory& traj, const VectorField& f, double t,
                                          const std::vector<double>& approach) {
    const int it = traj.index_of_time(t);
    if (it < 0) throw DomainError("weak_continuity_probe: t is not a stored time");
    const VectorField& u_t = traj.states[static_cast<std::size_t>(it)];
    std::vector<double> out;
    out.reserve(approach.size());
    for (double s : approach) {
        const int is = traj.index_of_time(s);
        if (is < 0) throw DomainError("weak_continuity_probe: approach time out of range");
        const VectorField diff =
            linear_combination(1.0, traj.states[static_cast<std::size_t>(is)], -1.0, u_t);
        out.push_back(inner_product(diff, f));
    }
    return out;
}

} // namespace nsmild

// SPDX-License-Identifier: Apache-2.0
//
// Relative entropy of entanglement by descent over mixtures of product states.
//
// sigma = (1 - eps) sum_m w_m |a_m b_m><a_m b_m| + eps I/4, with w = softmax(u) and
// |a> = (cos(t/2), e^{i f} sin(t/2)). The objective S(rho || sigma) is minimized
// with L-BFGS over (u, t_a, f_a, t_b, f_b); its gradient comes from the Frechet
// derivative of the matrix logarithm, X = Dlog(sigma)[rho], through
// dS/dsigma = -X.
#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <vector>

#include "entqfi/measures.hpp"

namespace entqfi {

namespace {

constexpr int kParamsPerComponent = 5;  // logit + two Bloch angle pairs
constexpr int kLbfgsMemory = 8;
constexpr int kPatience = 3;  // consecutive small sweeps before stopping
constexpr double kLn2 = std::numbers::ln2;

using Vec = Eigen::VectorXd;

struct Qubit2
{
    Eigen::Vector2cd ket;
    Eigen::Vector2cd d_theta;
    Eigen::Vector2cd d_phi;
};

Qubit2 bloch_ket(double theta, double phi)
{
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Complex e = std::polar(1.0, phi);
    Qubit2 q;
    q.ket << c, e * s;
    q.d_theta << -0.5 * s, 0.5 * e * c;
    q.d_phi << 0.0, Complex{0.0, 1.0} * e * s;
    return q;
}

Vector4c kron2(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b)
{
    return Vector4c(a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1));
}

// (log x - log y) / (x - y), with the x == y limit 1/x.
double log_divided_difference(double x, double y)
{
    const double d = x - y;
    if (std::abs(d) <= 1e-8 * std::max(x, y)) {
        return 2.0 / (x + y);
    }
    return std::log1p(d / y) / d;
}

class Objective
{
  public:
    Objective(const Matrix4c& rho, int components, double eps_mix)
        : rho_(rho), m_(components), eps_(eps_mix)
    {
        Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho_, Eigen::EigenvaluesOnly);
        for (double p : es.eigenvalues()) {
            if (p > tol::zero_cutoff) {
                neg_entropy_ += p * std::log(p);
            }
        }
    }

    int dimension() const { return kParamsPerComponent * m_; }

    std::vector<double> weights(const Vec& x) const
    {
        double top = x.head(m_).maxCoeff();
        std::vector<double> w(static_cast<std::size_t>(m_));
        double total = 0.0;
        for (int k = 0; k < m_; ++k) {
            w[k] = std::exp(x(k) - top);
            total += w[k];
        }
        for (double& v : w) {
            v /= total;
        }
        return w;
    }

    Matrix4c sigma(const Vec& x, double eps) const
    {
        const std::vector<double> w = weights(x);
        Matrix4c s = eps * Matrix4c::Identity() / 4.0;
        for (int k = 0; k < m_; ++k) {
            const Vector4c v = product_ket(x, k).ket;
            s += (1.0 - eps) * w[k] * (v * v.adjoint());
        }
        return 0.5 * (s + s.adjoint());
    }

    /// S(rho || sigma(x)) in bits; fills grad when non-null.
    double operator()(const Vec& x, Vec* grad) const
    {
        const std::vector<double> w = weights(x);
        std::vector<Product> kets;
        kets.reserve(static_cast<std::size_t>(m_));
        Matrix4c s = eps_ * Matrix4c::Identity() / 4.0;
        for (int k = 0; k < m_; ++k) {
            kets.push_back(product_ket(x, k));
            s += (1.0 - eps_) * w[k] * (kets.back().ket * kets.back().ket.adjoint());
        }
        s = 0.5 * (s + s.adjoint()).eval();

        Eigen::SelfAdjointEigenSolver<Matrix4c> es(s);
        Eigen::Vector4d ev = es.eigenvalues().cwiseMax(1e-300);
        const Matrix4c& basis = es.eigenvectors();
        const Matrix4c rt = basis.adjoint() * rho_ * basis;

        double cross = 0.0;
        for (int j = 0; j < 4; ++j) {
            cross -= rt(j, j).real() * std::log(ev(j));
        }
        const double value = (neg_entropy_ + cross) / kLn2;
        if (grad == nullptr) {
            return value;
        }

        Matrix4c xt;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                xt(i, j) = rt(i, j) * log_divided_difference(ev(i), ev(j));
            }
        }
        const Matrix4c dlog = basis * xt * basis.adjoint();

        grad->setZero(dimension());
        const double scale = -(1.0 - eps_) / kLn2;
        std::vector<double> dw(static_cast<std::size_t>(m_));
        double mean = 0.0;
        for (int k = 0; k < m_; ++k) {
            const Product& p = kets[k];
            const Vector4c xk = dlog * p.ket;
            dw[k] = scale * p.ket.dot(xk).real();
            mean += w[k] * dw[k];
            const double f = 2.0 * scale * w[k];
            const int o = m_ + 4 * k;
            (*grad)(o + 0) = f * p.d_theta_a.dot(xk).real();
            (*grad)(o + 1) = f * p.d_phi_a.dot(xk).real();
            (*grad)(o + 2) = f * p.d_theta_b.dot(xk).real();
            (*grad)(o + 3) = f * p.d_phi_b.dot(xk).real();
        }
        for (int k = 0; k < m_; ++k) {
            (*grad)(k) = w[k] * (dw[k] - mean);
        }
        return value;
    }

  private:
    struct Product
    {
        Vector4c ket, d_theta_a, d_phi_a, d_theta_b, d_phi_b;
    };

    Product product_ket(const Vec& x, int k) const
    {
        const int o = m_ + 4 * k;
        const Qubit2 a = bloch_ket(x(o + 0), x(o + 1));
        const Qubit2 b = bloch_ket(x(o + 2), x(o + 3));
        return {kron2(a.ket, b.ket), kron2(a.d_theta, b.ket), kron2(a.d_phi, b.ket),
                kron2(a.ket, b.d_theta), kron2(a.ket, b.d_phi)};
    }

    Matrix4c rho_;
    int m_;
    double eps_;
    double neg_entropy_ = 0.0;  // tr(rho ln rho)
};

struct StartResult
{
    Vec x;
    double value;
    int iterations;
    bool converged;
    double residual;
};

StartResult minimize(const Objective& f, Vec x, const ReeSolverConfig& cfg)
{
    Vec g;
    double fx = f(x, &g);
    std::deque<std::pair<Vec, Vec>> history;  // (s, y)
    StartResult out{x, fx, 0, false, 0.0};
    int small_sweeps = 0;

    for (int it = 1; it <= cfg.max_sweeps; ++it) {
        // L-BFGS two-loop recursion.
        Vec q = g;
        std::vector<double> alpha(history.size());
        for (std::size_t i = history.size(); i-- > 0;) {
            const auto& [s, y] = history[i];
            alpha[i] = s.dot(q) / y.dot(s);
            q -= alpha[i] * y;
        }
        if (!history.empty()) {
            const auto& [s, y] = history.back();
            q *= s.dot(y) / y.dot(y);
        } else {
            q /= std::max(1.0, g.norm());
        }
        for (std::size_t i = 0; i < history.size(); ++i) {
            const auto& [s, y] = history[i];
            const double beta = y.dot(q) / y.dot(s);
            q += (alpha[i] - beta) * s;
        }
        Vec dir = -q;
        double slope = g.dot(dir);
        if (!(slope < 0.0)) {
            history.clear();
            dir = -g / std::max(1.0, g.norm());
            slope = g.dot(dir);
        }

        // Backtracking Armijo line search.
        double step = 1.0;
        Vec xn, gn;
        double fn = fx;
        bool accepted = false;
        for (int tries = 0; tries < 50; ++tries) {
            xn = x + step * dir;
            fn = f(xn, &gn);
            if (std::isfinite(fn) && fn <= fx + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        out.iterations = it;
        if (!accepted) {
            // No representable decrease left along a descent direction.
            out.converged = true;
            out.residual = 0.0;
            break;
        }

        const double improvement = fx - fn;
        Vec s = xn - x;
        Vec y = gn - g;
        if (s.dot(y) > 1e-16 * s.norm() * y.norm()) {
            history.emplace_back(std::move(s), std::move(y));
            if (history.size() > kLbfgsMemory) {
                history.pop_front();
            }
        }
        x = std::move(xn);
        g = std::move(gn);
        fx = fn;
        out.residual = improvement;

        small_sweeps = improvement < cfg.threshold ? small_sweeps + 1 : 0;
        if (small_sweeps >= kPatience) {
            out.converged = true;
            break;
        }
    }
    out.x = std::move(x);
    out.value = fx;
    return out;
}

Vec random_start(int components, RngStream& rng)
{
    Vec x(kParamsPerComponent * components);
    for (int k = 0; k < components; ++k) {
        x(k) = 0.1 * rng.normal();
    }
    for (int k = 0; k < 2 * components; ++k) {
        const int o = components + 2 * k;
        x(o) = std::acos(1.0 - 2.0 * rng.uniform());                // polar angle, uniform on sphere
        x(o + 1) = 2.0 * std::numbers::pi * rng.uniform();          // azimuth
    }
    return x;
}

}  // namespace

ReeSolution ree(const DensityMatrix& rho, const ReeSolverConfig& cfg)
{
    if (cfg.components < 1 || cfg.multistarts < 1 || cfg.max_sweeps < 1 || !(cfg.threshold > 0.0) ||
        !(cfg.eps_mix >= 0.0 && cfg.eps_mix < 1.0)) {
        throw ConfigError("ree: invalid solver configuration");
    }
    const Matrix4c m = rho.matrix4();

    if (cfg.shortcut_separable && is_separable(rho)) {
        return ReeSolution{0.0, rho, 0, true, 0.0};
    }

    const Objective f(m, cfg.components, cfg.eps_mix);
    RngStream rng = cfg.stream;
    StartResult best{};
    best.value = kInfiniteEntropy;
    for (int start = 0; start < cfg.multistarts; ++start) {
        StartResult r = minimize(f, random_start(cfg.components, rng), cfg);
        if (r.value < best.value) {
            best = std::move(r);
        }
    }

    // Polish: drop the identity admixture when the pure mixture still covers supp(rho).
    DensityMatrix closest(ComplexMatrix(f.sigma(best.x, cfg.eps_mix)));
    double value = relative_entropy(rho, closest);
    if (cfg.eps_mix > 0.0) {
        DensityMatrix bare(ComplexMatrix(f.sigma(best.x, 0.0)));
        const double bare_value = relative_entropy(rho, bare);
        if (bare_value <= value) {
            closest = std::move(bare);
            value = bare_value;
        }
    }
    if (!is_separable(closest)) {
        throw EigenError("ree: closest state failed the PPT check", "");
    }
    return ReeSolution{value, std::move(closest), best.iterations, best.converged, best.residual};
}

}  // namespace entqfi

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "coinfock/errors.hpp"

namespace coinfock {

/// Radial grid r_j = j h, j = 0..J, Dirichlet at r_J = R; unknowns live on
/// nodes 0..J-1.
struct RadialGrid {
    int J = 0;
    double R = 0.0;
    double h = 0.0;

    static RadialGrid of(int J, double R)
    {
        if (J < 8) throw BadParameter("RadialGrid: J >= 8 required");
        if (!(R > 0.0)) throw BadParameter("RadialGrid: R > 0 required");
        return RadialGrid{J, R, R / J};
    }
};

/// Stiffness/mass pencil of the coupled s-wave problem. The quadratic form is
/// sum_j |u_{j+1} - u_j|^2 / h with u_J = 0; the mass is the trapezoid weight
/// plus 1/lambda^2 at node 0, which carries the singular component through
/// the domain constraint c = u(0)/lambda.
struct RadialPencil {
    RadialGrid grid;
    double lambda = 1.0;
    double mass_m = 1.0;
    Eigen::MatrixXd K;
    Eigen::VectorXd M;       // diagonal
    int singular_dim = 1;    // leading rows carrying the singular component
};

inline RadialPencil build_1p(int J, double R, double lambda, double mass_m)
{
    if (lambda == 0.0) throw BadParameter("build_1p: lambda must be nonzero");
    if (!(mass_m > 0.0)) throw BadParameter("build_1p: mass must be positive");
    RadialPencil p;
    p.grid = RadialGrid::of(J, R);
    p.lambda = lambda;
    p.mass_m = mass_m;
    const double h = p.grid.h;
    p.K = Eigen::MatrixXd::Zero(J, J);
    for (int j = 0; j < J; ++j) {
        p.K(j, j) += 1.0 / h;
        if (j + 1 < J) {
            p.K(j + 1, j + 1) += 1.0 / h;
            p.K(j, j + 1) -= 1.0 / h;
            p.K(j + 1, j) -= 1.0 / h;
        }
    }
    p.M = Eigen::VectorXd::Constant(J, h);
    p.M(0) = h / 2.0 + 1.0 / (lambda * lambda);
    p.singular_dim = 1;
    return p;
}

/// Control variant with node 0 cut off from the rest; its unit vector becomes
/// an exact eigenvector.
inline RadialPencil decouple_node0(RadialPencil p)
{
    p.K(0, 1) = 0.0;
    p.K(1, 0) = 0.0;
    return p;
}

/// Two-particle pencil: K2 = K (x) Mc + M (x) Kc over the relative radial
/// grid and a periodic 1-d center coordinate of Lc sites.
struct TwoParticlePencil {
    RadialPencil radial;
    int Lc = 1;
    Eigen::MatrixXd Kc;
    Eigen::VectorXd Mc;      // identity
    Eigen::MatrixXd K;       // K2
    Eigen::VectorXd M;       // M2 diagonal
    double mass_m = 1.0;
    int singular_dim = 1;    // Lc leading rows (node-0 channel across the center)
};

inline TwoParticlePencil build_2p(int J, double R, int Lc, double lambda, double mass_m)
{
    if (Lc < 1) throw BadParameter("build_2p: Lc >= 1 required");
    TwoParticlePencil tp;
    tp.radial = build_1p(J, R, lambda, mass_m);
    tp.Lc = Lc;
    tp.mass_m = mass_m;
    tp.Kc = Eigen::MatrixXd::Zero(Lc, Lc);
    if (Lc > 1)
        for (int i = 0; i < Lc; ++i) {
            tp.Kc(i, i) += 2.0;
            tp.Kc(i, (i + 1) % Lc) -= 1.0;
            tp.Kc(i, (i - 1 + Lc) % Lc) -= 1.0;
        }
    tp.Mc = Eigen::VectorXd::Ones(Lc);
    const int N = J * Lc;
    tp.K = Eigen::MatrixXd::Zero(N, N);
    tp.M = Eigen::VectorXd::Zero(N);
    for (int a = 0; a < J; ++a)
        for (int b = 0; b < J; ++b)
            if (tp.radial.K(a, b) != 0.0)
                for (int c = 0; c < Lc; ++c) tp.K(a * Lc + c, b * Lc + c) += tp.radial.K(a, b);
    for (int a = 0; a < J; ++a)
        for (int c = 0; c < Lc; ++c)
            for (int d = 0; d < Lc; ++d)
                if (tp.Kc(c, d) != 0.0) tp.K(a * Lc + c, a * Lc + d) += tp.radial.M(a) * tp.Kc(c, d);
    for (int a = 0; a < J; ++a)
        for (int c = 0; c < Lc; ++c) tp.M(a * Lc + c) = tp.radial.M(a);
    tp.singular_dim = Lc;
    return tp;
}

/// Generalized eigensolution K v = E M v with M-orthonormal eigenvectors.
struct Spectrum {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::MatrixXd vectors;      // columns, v_i^T M v_j = delta_ij
};

inline Spectrum solve_pencil(const Eigen::MatrixXd& K, const Eigen::VectorXd& M)
{
    const Eigen::VectorXd s = M.cwiseSqrt().cwiseInverse();
    Eigen::MatrixXd B = s.asDiagonal() * K * s.asDiagonal();
    B = 0.5 * (B + B.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
    if (es.info() != Eigen::Success) throw NumericalFailure("solve_pencil: eigensolver failed");
    Spectrum sp;
    sp.eigenvalues = es.eigenvalues();
    sp.vectors = s.asDiagonal() * es.eigenvectors();
    // residual guard
    double worst = 0.0;
    for (int i = 0; i < sp.eigenvalues.size(); ++i) {
        Eigen::VectorXd r = K * sp.vectors.col(i) - sp.eigenvalues(i) * (M.asDiagonal() * sp.vectors.col(i));
        worst = std::max(worst, r.norm() / sp.vectors.col(i).norm());
    }
    double scale = std::max(1.0, sp.eigenvalues.cwiseAbs().maxCoeff());
    if (worst / scale > 1e-8) throw NumericalFailure("solve_pencil: residual too large");
    return sp;
}

template <typename Pencil>
Spectrum spectrum(const Pencil& p)
{
    return solve_pencil(p.K, p.M);
}

/// Squared-M-norm split per time step: singular (leading rows) + regular =
/// total, conserved under the unitary evolution.
struct EvolutionTrace {
    std::vector<double> times;
    std::vector<double> norm_total;
    std::vector<double> norm_singular;
    std::vector<double> norm_regular;
};

template <typename Pencil>
EvolutionTrace evolve(const Pencil& p, const Eigen::VectorXcd& psi0, const std::vector<double>& times)
{
    if (psi0.size() != p.M.size()) throw BadParameter("evolve: state size mismatch");
    if (psi0.norm() == 0.0) throw BadParameter("evolve: zero initial state");
    Spectrum sp = spectrum(p);
    const Eigen::MatrixXcd V = sp.vectors.cast<std::complex<double>>();
    Eigen::VectorXcd weighted = psi0;
    for (int i = 0; i < weighted.size(); ++i) weighted(i) *= p.M(i);
    const Eigen::VectorXcd coef = V.transpose() * weighted;
    EvolutionTrace tr;
    for (double t : times) {
        Eigen::VectorXcd phase(coef.size());
        for (int i = 0; i < coef.size(); ++i)
            phase(i) = std::exp(std::complex<double>(0.0, -sp.eigenvalues(i) * t / (2.0 * p.mass_m))) * coef(i);
        Eigen::VectorXcd psi = V * phase;
        double total = 0.0, sing = 0.0;
        for (int i = 0; i < psi.size(); ++i) {
            double w = p.M(i) * std::norm(psi(i));
            total += w;
            if (i < p.singular_dim) sing += w;
        }
        tr.times.push_back(t);
        tr.norm_total.push_back(total);
        tr.norm_singular.push_back(sing);
        tr.norm_regular.push_back(total - sing);
    }
    return tr;
}

/// Minimum M-geometry angle between the singular-node unit vector and the
/// eigenvectors; bounded away from zero exactly when the coupling mixes the
/// components.
struct MixingReport {
    double min_angle = 0.0;
    std::vector<double> angles;
};

template <typename Pencil>
MixingReport mixing_diagnostics(const Pencil& p)
{
    Spectrum sp = spectrum(p);
    MixingReport rep;
    rep.min_angle = 4.0;
    const double m0 = std::sqrt(p.M(0));
    for (int i = 0; i < sp.eigenvalues.size(); ++i) {
        double num = std::abs(p.M(0) * sp.vectors(0, i));
        double den = m0 * std::sqrt((sp.vectors.col(i).array().square() * p.M.array()).sum());
        double c = std::min(1.0, num / den);
        double angle = std::acos(c);
        rep.angles.push_back(angle);
        rep.min_angle = std::min(rep.min_angle, angle);
    }
    return rep;
}

inline void write_spectrum_csv(const Spectrum& sp, const std::string& params_json, std::ostream& os)
{
    os << "# " << params_json << '\n';
    os << "index,eigenvalue\n";
    for (int i = 0; i < sp.eigenvalues.size(); ++i) os << i << ',' << sp.eigenvalues(i) << '\n';
}

inline void write_evolution_csv(const EvolutionTrace& tr, const std::string& params_json, std::ostream& os)
{
    os << "# " << params_json << '\n';
    os << "t,norm_total,norm_singular,norm_regular\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i)
        os << tr.times[i] << ',' << tr.norm_total[i] << ',' << tr.norm_singular[i] << ','
           << tr.norm_regular[i] << '\n';
}

}  // namespace coinfock

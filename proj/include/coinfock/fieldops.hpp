#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <vector>

#include "coinfock/components.hpp"

namespace coinfock {

inline double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// A smearing function f on the lattice.
struct Smearing {
    Lattice lattice;
    VectorC values;

    static Smearing of(Lattice lat, VectorC v)
    {
        if (v.size() != lat.num_sites) throw BadParameter("Smearing: one value per site required");
        return Smearing{lat, std::move(v)};
    }
    double norm() const { return values.norm(); }
};

namespace detail {

inline std::vector<std::vector<int>> blocks_by_size(const Rgs& r, int nb)
{
    std::vector<std::vector<int>> members(static_cast<std::size_t>(nb));
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        members[r[static_cast<std::size_t>(i)]].push_back(i);
    return members;
}

}  // namespace detail

/// phi_-^k(x): sector n -> n-k, the trailing k indices pinned to site x; for
/// k > n the zero vector of the scalar sector.
inline ComponentVector annihilate_k_at(SiteId x, int k, const ComponentVector& src)
{
    const auto& in = *src.space;
    const int n = in.particles();
    const int L = in.lattice().num_sites;
    if (k < 1) throw BadParameter("annihilate_k_at: k must be positive");
    if (x < 0 || x >= L) throw BadParameter("annihilate_k_at: site out of range");
    if (k > n) return ComponentVector::zero(ComponentSpace::make(in.lattice(), 0));
    const int m = n - k;
    auto outs = ComponentSpace::make(in.lattice(), m);
    ComponentVector out = ComponentVector::zero(outs);
    const double c = std::sqrt(factorial(n) / factorial(m));
    for (int p = 0; p < outs->num_partitions(); ++p) {
        const int nb = outs->num_blocks(p);
        Rgs rin = outs->partition_rgs(p);
        rin.insert(rin.end(), static_cast<std::size_t>(k), static_cast<std::uint8_t>(nb));
        const int pin = in.partition_rank(rin);
        std::int64_t stride = 1;
        for (int j = 0; j < nb; ++j) stride *= L;
        const std::int64_t off_out = outs->offset(p);
        const std::int64_t off_in = in.offset(pin) + static_cast<std::int64_t>(x) * stride;
        for (std::int64_t z = 0; z < outs->plane_dim(p); ++z)
            out.amplitudes[off_out + z] = c * src.amplitudes[off_in + z];
    }
    return out;
}

/// psi_+^k(x): sector n -> n+k with the trailing k indices as one fresh block
/// pinned at x (no symmetrization).
inline ComponentVector create_k_unsym(SiteId x, int k, const ComponentVector& src, int max_sector)
{
    const auto& in = *src.space;
    const int n = in.particles();
    const int L = in.lattice().num_sites;
    if (k < 1) throw BadParameter("create_k_unsym: k must be positive");
    if (x < 0 || x >= L) throw BadParameter("create_k_unsym: site out of range");
    if (n + k > max_sector) throw TruncationExceeded("create_k_unsym: target sector beyond truncation");
    const int m = n + k;
    auto outs = ComponentSpace::make(in.lattice(), m);
    ComponentVector out = ComponentVector::zero(outs);
    const double c = std::sqrt(factorial(m) / factorial(n));
    for (int p = 0; p < in.num_partitions(); ++p) {
        const int nb = in.num_blocks(p);
        Rgs rout = in.partition_rgs(p);
        rout.insert(rout.end(), static_cast<std::size_t>(k), static_cast<std::uint8_t>(nb));
        const int pout = outs->partition_rank(rout);
        std::int64_t stride = 1;
        for (int j = 0; j < nb; ++j) stride *= L;
        const std::int64_t off_in = in.offset(p);
        const std::int64_t off_out = outs->offset(pout) + static_cast<std::int64_t>(x) * stride;
        for (std::int64_t z = 0; z < in.plane_dim(p); ++z)
            out.amplitudes[off_out + z] = c * src.amplitudes[off_in + z];
    }
    return out;
}

/// phi_+^k(x): sector n -> n+k; sum over the k-blocks of the target
/// decomposition pinned at x.
inline ComponentVector create_k_at(SiteId x, int k, const ComponentVector& src, int max_sector)
{
    const auto& in = *src.space;
    const int n = in.particles();
    const int L = in.lattice().num_sites;
    if (k < 1) throw BadParameter("create_k_at: k must be positive");
    if (x < 0 || x >= L) throw BadParameter("create_k_at: site out of range");
    if (n + k > max_sector) throw TruncationExceeded("create_k_at: target sector beyond truncation");
    const int m = n + k;
    auto outs = ComponentSpace::make(in.lattice(), m);
    ComponentVector out = ComponentVector::zero(outs);
    const double c = factorial(k) * std::sqrt(factorial(n) / factorial(m));
    for (int p = 0; p < outs->num_partitions(); ++p) {
        const Rgs& r = outs->partition_rgs(p);
        const int nb = outs->num_blocks(p);
        auto members = detail::blocks_by_size(r, nb);
        for (int j = 0; j < nb; ++j) {
            if (static_cast<int>(members[static_cast<std::size_t>(j)].size()) != k) continue;
            // delete block j; remaining positions relabel order-preserving
            Rgs rin;
            rin.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < m; ++i) {
                int b = r[static_cast<std::size_t>(i)];
                if (b == j) continue;
                rin.push_back(static_cast<std::uint8_t>(b > j ? b - 1 : b));
            }
            const int pin = in.partition_rank(rin);
            const std::int64_t off_out = outs->offset(p);
            const std::int64_t off_in = in.offset(pin);
            std::vector<std::int64_t> pw(static_cast<std::size_t>(nb) + 1, 1);
            for (int t = 0; t < nb; ++t) pw[static_cast<std::size_t>(t) + 1] = pw[static_cast<std::size_t>(t)] * L;
            for (std::int64_t z = 0; z < outs->plane_dim(p); ++z) {
                const SiteId dj = static_cast<SiteId>((z / pw[static_cast<std::size_t>(j)]) % L);
                if (dj != x) continue;
                const std::int64_t lo = z % pw[static_cast<std::size_t>(j)];
                const std::int64_t hi = z / pw[static_cast<std::size_t>(j) + 1];
                const std::int64_t zin = lo + hi * pw[static_cast<std::size_t>(j)];
                out.amplitudes[off_out + z] += c * src.amplitudes[off_in + zin];
            }
        }
    }
    return out;
}

enum class FieldKind { annihilate, create };

/// phi_-^k(f) = sum_x conj(f(x)) phi_-^k(x); phi_+^k(f) = sum_x f(x) phi_+^k(x).
inline ComponentVector smear(FieldKind kind, int k, const Smearing& f, const ComponentVector& src,
                             int max_sector)
{
    const int L = src.space->lattice().num_sites;
    ComponentVector acc;
    for (SiteId x = 0; x < L; ++x) {
        ComponentVector term = kind == FieldKind::annihilate ? annihilate_k_at(x, k, src)
                                                             : create_k_at(x, k, src, max_sector);
        Complex w = kind == FieldKind::annihilate ? std::conj(f.values[x]) : f.values[x];
        if (x == 0) {
            acc = std::move(term);
            acc.amplitudes *= w;
        } else {
            acc.amplitudes += w * term.amplitudes;
        }
    }
    return acc;
}

inline ComponentVector smear_unsym(int k, const Smearing& f, const ComponentVector& src, int max_sector)
{
    const int L = src.space->lattice().num_sites;
    ComponentVector acc;
    for (SiteId x = 0; x < L; ++x) {
        ComponentVector term = create_k_unsym(x, k, src, max_sector);
        if (x == 0) {
            acc = std::move(term);
            acc.amplitudes *= f.values[x];
        } else {
            acc.amplitudes += f.values[x] * term.amplitudes;
        }
    }
    return acc;
}

/// Closed-form interaction action: sector n -> n-k+h, prefactor
/// h! sqrt(n!/(n-k+h)!), summed over h-blocks of the target decomposition
/// with a fresh k-block pinned to the block value. Zero for k > n.
inline ComponentVector interaction_direct(int h, int k, const ComponentVector& src, int max_sector)
{
    const auto& in = *src.space;
    const int n = in.particles();
    const int L = in.lattice().num_sites;
    if (h < 1 || k < 1) throw BadParameter("interaction_direct: h,k must be positive");
    const int m = n - k + h;
    if (m > max_sector) throw TruncationExceeded("interaction_direct: target sector beyond truncation");
    if (k > n) return ComponentVector::zero(ComponentSpace::make(in.lattice(), std::max(m, 0)));
    auto outs = ComponentSpace::make(in.lattice(), m);
    ComponentVector out = ComponentVector::zero(outs);
    const double c = factorial(h) * std::sqrt(factorial(n) / factorial(m));
    for (int p = 0; p < outs->num_partitions(); ++p) {
        const Rgs& r = outs->partition_rgs(p);
        const int nb = outs->num_blocks(p);
        auto members = detail::blocks_by_size(r, nb);
        for (int j = 0; j < nb; ++j) {
            if (static_cast<int>(members[static_cast<std::size_t>(j)].size()) != h) continue;
            Rgs rin;
            rin.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < m; ++i) {
                int b = r[static_cast<std::size_t>(i)];
                if (b == j) continue;
                rin.push_back(static_cast<std::uint8_t>(b > j ? b - 1 : b));
            }
            rin.insert(rin.end(), static_cast<std::size_t>(k), static_cast<std::uint8_t>(nb - 1));
            const int pin = in.partition_rank(rin);
            const std::int64_t off_out = outs->offset(p);
            const std::int64_t off_in = in.offset(pin);
            std::vector<std::int64_t> pw(static_cast<std::size_t>(nb) + 1, 1);
            for (int t = 0; t < nb; ++t) pw[static_cast<std::size_t>(t) + 1] = pw[static_cast<std::size_t>(t)] * L;
            const std::int64_t top = pw[static_cast<std::size_t>(nb) - 1];  // L^(nb-1)
            for (std::int64_t z = 0; z < outs->plane_dim(p); ++z) {
                const SiteId dj = static_cast<SiteId>((z / pw[static_cast<std::size_t>(j)]) % L);
                const std::int64_t lo = z % pw[static_cast<std::size_t>(j)];
                const std::int64_t hi = z / pw[static_cast<std::size_t>(j) + 1];
                const std::int64_t zin = lo + hi * pw[static_cast<std::size_t>(j)] + static_cast<std::int64_t>(dj) * top;
                out.amplitudes[off_out + z] += c * src.amplitudes[off_in + zin];
            }
        }
    }
    return out;
}

/// Independent route: sum_x S psi_+^h(x) phi_-^k(x).
inline ComponentVector interaction_composed(int h, int k, const ComponentVector& src, int max_sector)
{
    const auto& in = *src.space;
    const int n = in.particles();
    const int L = in.lattice().num_sites;
    if (h < 1 || k < 1) throw BadParameter("interaction_composed: h,k must be positive");
    const int m = n - k + h;
    if (m > max_sector) throw TruncationExceeded("interaction_composed: target sector beyond truncation");
    if (k > n) return ComponentVector::zero(ComponentSpace::make(in.lattice(), std::max(m, 0)));
    ComponentVector acc = ComponentVector::zero(ComponentSpace::make(in.lattice(), m));
    for (SiteId x = 0; x < L; ++x)
        acc.amplitudes += create_k_unsym(x, h, annihilate_k_at(x, k, src), max_sector).amplitudes;
    return symmetrize(acc);
}

/// Dense matrix between two component sectors. All sheet points carry unit
/// measure, so the measure-weight matrices of the adjoint formula are
/// identities and the weighted adjoint is the conjugate transpose.
struct OperatorMatrix {
    std::shared_ptr<const ComponentSpace> domain;
    std::shared_ptr<const ComponentSpace> codomain;
    MatrixC entries;

    OperatorMatrix adjoint_weighted() const { return {codomain, domain, entries.adjoint()}; }
};

inline OperatorMatrix materialize(std::shared_ptr<const ComponentSpace> dom,
                                  std::shared_ptr<const ComponentSpace> cod,
                                  const std::function<ComponentVector(const ComponentVector&)>& op)
{
    OperatorMatrix M{dom, cod, MatrixC::Zero(cod->dim(), dom->dim())};
    for (std::int64_t j = 0; j < dom->dim(); ++j) {
        ComponentVector e = ComponentVector::zero(dom);
        e.amplitudes[j] = 1.0;
        M.entries.col(j) = op(e).amplitudes;
    }
    return M;
}

inline void write_matrix_csv(const OperatorMatrix& M, std::ostream& os)
{
    os << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < M.entries.rows(); ++i)
        for (Eigen::Index j = 0; j < M.entries.cols(); ++j) {
            Complex v = M.entries(i, j);
            if (v != Complex{0.0, 0.0}) os << i << ',' << j << ',' << v.real() << ',' << v.imag() << '\n';
        }
}

/// Interaction Hamiltonian terms: coupling * (H^h_k + H^k_h).
struct CouplingSpec {
    struct Term {
        int h;
        int k;
        double coupling;
    };
    std::vector<Term> terms;
};

/// Concatenated component sectors 0..n_max of the truncated Fock space.
struct FockBasis {
    Lattice lattice;
    int n_max = 0;
    std::vector<std::shared_ptr<const ComponentSpace>> sectors;
    std::vector<std::int64_t> offsets;
    std::int64_t dim = 0;

    static FockBasis make(Lattice lat, int n_max)
    {
        if (n_max < 0) throw BadParameter("FockBasis: negative truncation");
        FockBasis f;
        f.lattice = lat;
        f.n_max = n_max;
        for (int n = 0; n <= n_max; ++n) {
            f.sectors.push_back(ComponentSpace::make(lat, n));
            f.offsets.push_back(f.dim);
            f.dim += f.sectors.back()->dim();
        }
        return f;
    }
};

namespace detail {

inline void add_block(MatrixC& M, const FockBasis& fb, int nto, int nfrom, const MatrixC& B)
{
    M.block(fb.offsets[static_cast<std::size_t>(nto)], fb.offsets[static_cast<std::size_t>(nfrom)],
            B.rows(), B.cols()) += B;
}

}  // namespace detail

/// Matrix of H^h_k on the truncated space (blocks n -> n-k+h wherever both
/// sectors exist).
inline MatrixC fock_interaction_matrix(const FockBasis& fb, int h, int k)
{
    MatrixC M = MatrixC::Zero(fb.dim, fb.dim);
    for (int n = k; n <= fb.n_max; ++n) {
        int m = n - k + h;
        if (m < 0 || m > fb.n_max) continue;
        auto B = materialize(fb.sectors[static_cast<std::size_t>(n)], fb.sectors[static_cast<std::size_t>(m)],
                             [&](const ComponentVector& v) { return interaction_direct(h, k, v, fb.n_max); });
        detail::add_block(M, fb, m, n, B.entries);
    }
    return M;
}

/// sum over terms of coupling * (H^h_k + H^k_h); empty spec gives the zero
/// matrix.
inline OperatorMatrix build_interaction_hamiltonian(const FockBasis& fb, const CouplingSpec& spec)
{
    MatrixC M = MatrixC::Zero(fb.dim, fb.dim);
    for (const auto& t : spec.terms) {
        if (t.h < 1 || t.k < 1) throw BadParameter("CouplingSpec: h,k must be positive");
        M += t.coupling * (fock_interaction_matrix(fb, t.h, t.k) + fock_interaction_matrix(fb, t.k, t.h));
    }
    // domain == codomain == the whole truncated space; expose per-sector handles
    return OperatorMatrix{nullptr, nullptr, std::move(M)};
}

/// phi^k(f) = phi_+^k(f) + phi_-^k(f) on the truncated space (creation blocks
/// only where the target sector exists, so every block is paired with its
/// adjoint).
inline MatrixC fock_field_matrix(const FockBasis& fb, int k, const Smearing& f)
{
    MatrixC M = MatrixC::Zero(fb.dim, fb.dim);
    for (int n = 0; n <= fb.n_max; ++n) {
        if (n + k <= fb.n_max) {
            auto B = materialize(fb.sectors[static_cast<std::size_t>(n)], fb.sectors[static_cast<std::size_t>(n + k)],
                                 [&](const ComponentVector& v) { return smear(FieldKind::create, k, f, v, fb.n_max); });
            detail::add_block(M, fb, n + k, n, B.entries);
        }
        if (n - k >= 0) {
            auto B = materialize(fb.sectors[static_cast<std::size_t>(n)], fb.sectors[static_cast<std::size_t>(n - k)],
                                 [&](const ComponentVector& v) { return smear(FieldKind::annihilate, k, f, v, fb.n_max); });
            detail::add_block(M, fb, n - k, n, B.entries);
        }
    }
    return M;
}

/// Residuals of the smeared commutation rules, evaluated on the symmetric
/// compressions of all sectors where both operator orderings stay within the
/// truncation.
struct CommutatorReport {
    double scalar_residual = 0.0;      // against delta_{kh} h! <f|g> I
    double minus_minus_residual = 0.0;
    double plus_plus_residual = 0.0;
    Complex expected_constant{0.0, 0.0};
};

inline CommutatorReport commutator_check(Lattice lat, int n_max, int k, int h, const Smearing& f,
                                         const Smearing& g)
{
    if (n_max < k + h) throw TruncationExceeded("commutator_check: truncation below k+h");
    CommutatorReport rep;
    rep.expected_constant = (k == h) ? factorial(h) * f.values.dot(g.values) : Complex{0.0, 0.0};
    for (int n = 0; n + h <= n_max; ++n) {
        const int m = n + h - k;
        if (m < 0) continue;
        auto dom = ComponentSpace::make(lat, n);
        auto mid_up = ComponentSpace::make(lat, n + h);
        auto cod = ComponentSpace::make(lat, m);
        auto up = materialize(dom, mid_up, [&](const ComponentVector& v) { return smear(FieldKind::create, h, g, v, n_max); });
        auto down = materialize(mid_up, cod, [&](const ComponentVector& v) { return smear(FieldKind::annihilate, k, f, v, n_max); });
        MatrixC path1 = down.entries * up.entries;
        MatrixC path2 = MatrixC::Zero(cod->dim(), dom->dim());
        if (n >= k) {
            auto mid_dn = ComponentSpace::make(lat, n - k);
            auto d2 = materialize(dom, mid_dn, [&](const ComponentVector& v) { return smear(FieldKind::annihilate, k, f, v, n_max); });
            auto u2 = materialize(mid_dn, cod, [&](const ComponentVector& v) { return smear(FieldKind::create, h, g, v, n_max); });
            path2 = u2.entries * d2.entries;
        }
        MatrixC Qd = symmetric_basis(*dom);
        MatrixC Qc = symmetric_basis(*cod);
        MatrixC comp = Qc.adjoint() * (path1 - path2) * Qd;
        if (m == n) comp -= rep.expected_constant * MatrixC::Identity(comp.rows(), comp.cols());
        rep.scalar_residual = std::max(rep.scalar_residual, comp.cwiseAbs().maxCoeff());
    }
    // [phi_-^k(f), phi_-^h(g)] = 0 on symmetric inputs
    for (int n = k + h; n <= n_max; ++n) {
        auto dom = ComponentSpace::make(lat, n);
        auto a1 = materialize(dom, ComponentSpace::make(lat, n - h),
                              [&](const ComponentVector& v) { return smear(FieldKind::annihilate, h, g, v, n_max); });
        auto a2 = materialize(ComponentSpace::make(lat, n - h), ComponentSpace::make(lat, n - h - k),
                              [&](const ComponentVector& v) { return smear(FieldKind::annihilate, k, f, v, n_max); });
        auto b1 = materialize(dom, ComponentSpace::make(lat, n - k),
                              [&](const ComponentVector& v) { return smear(FieldKind::annihilate, k, f, v, n_max); });
        auto b2 = materialize(ComponentSpace::make(lat, n - k), ComponentSpace::make(lat, n - h - k),
                              [&](const ComponentVector& v) { return smear(FieldKind::annihilate, h, g, v, n_max); });
        MatrixC Qd = symmetric_basis(*dom);
        double r = ((a2.entries * a1.entries - b2.entries * b1.entries) * Qd).cwiseAbs().maxCoeff();
        rep.minus_minus_residual = std::max(rep.minus_minus_residual, r);
    }
    // [phi_+^k(f), phi_+^h(g)] = 0 on symmetric inputs
    for (int n = 0; n + k + h <= n_max; ++n) {
        auto dom = ComponentSpace::make(lat, n);
        auto a1 = materialize(dom, ComponentSpace::make(lat, n + h),
                              [&](const ComponentVector& v) { return smear(FieldKind::create, h, g, v, n_max); });
        auto a2 = materialize(ComponentSpace::make(lat, n + h), ComponentSpace::make(lat, n + h + k),
                              [&](const ComponentVector& v) { return smear(FieldKind::create, k, f, v, n_max); });
        auto b1 = materialize(dom, ComponentSpace::make(lat, n + k),
                              [&](const ComponentVector& v) { return smear(FieldKind::create, k, f, v, n_max); });
        auto b2 = materialize(ComponentSpace::make(lat, n + k), ComponentSpace::make(lat, n + k + h),
                              [&](const ComponentVector& v) { return smear(FieldKind::create, h, g, v, n_max); });
        MatrixC Qd = symmetric_basis(*dom);
        double r = ((a2.entries * a1.entries - b2.entries * b1.entries) * Qd).cwiseAbs().maxCoeff();
        rep.plus_plus_residual = std::max(rep.plus_plus_residual, r);
    }
    return rep;
}

/// Krylov-style probe of the vacuum-cyclicity conjecture: rank of the span of
/// field-operator words applied to the vacuum, against the symmetric
/// truncated dimension.
struct CyclicityProbe {
    int rank = 0;
    int symmetric_dim = 0;
};

inline CyclicityProbe vacuum_cyclicity_probe(Lattice lat, int n_max, int k_max)
{
    FockBasis fb = FockBasis::make(lat, n_max);
    std::vector<MatrixC> ops;
    for (int k = 1; k <= k_max; ++k)
        for (SiteId s = 0; s < lat.num_sites; ++s) {
            VectorC delta = VectorC::Zero(lat.num_sites);
            delta[s] = 1.0;
            Smearing f = Smearing::of(lat, delta);
            // creation and annihilation kept separate so words can stay
            // inside the truncation
            MatrixC up = MatrixC::Zero(fb.dim, fb.dim);
            MatrixC dn = MatrixC::Zero(fb.dim, fb.dim);
            for (int n = 0; n <= fb.n_max; ++n) {
                if (n + k <= fb.n_max) {
                    auto B = materialize(fb.sectors[static_cast<std::size_t>(n)], fb.sectors[static_cast<std::size_t>(n + k)],
                                         [&](const ComponentVector& v) { return smear(FieldKind::create, k, f, v, fb.n_max); });
                    detail::add_block(up, fb, n + k, n, B.entries);
                }
                if (n - k >= 0) {
                    auto B = materialize(fb.sectors[static_cast<std::size_t>(n)], fb.sectors[static_cast<std::size_t>(n - k)],
                                         [&](const ComponentVector& v) { return smear(FieldKind::annihilate, k, f, v, fb.n_max); });
                    detail::add_block(dn, fb, n - k, n, B.entries);
                }
            }
            ops.push_back(std::move(up));
            ops.push_back(std::move(dn));
        }
    std::vector<VectorC> span;
    VectorC vac = VectorC::Zero(fb.dim);
    vac[0] = 1.0;
    span.push_back(vac);
    std::vector<VectorC> frontier{vac};
    const int depth = 2 * n_max;
    for (int d = 0; d < depth; ++d) {
        std::vector<VectorC> next;
        for (const auto& v : frontier)
            for (const auto& O : ops) {
                VectorC w = O * v;
                if (w.norm() > 1e-12) {
                    next.push_back(w);
                    span.push_back(w);
                }
            }
        frontier = std::move(next);
        if (span.size() > 4096) break;
    }
    MatrixC S(fb.dim, static_cast<Eigen::Index>(span.size()));
    for (std::size_t j = 0; j < span.size(); ++j) S.col(static_cast<Eigen::Index>(j)) = span[j];
    Eigen::ColPivHouseholderQR<MatrixC> qr(S);
    qr.setThreshold(1e-9);
    CyclicityProbe probe;
    probe.rank = static_cast<int>(qr.rank());
    for (int n = 0; n <= n_max; ++n)
        probe.symmetric_dim += static_cast<int>(symmetric_basis(*fb.sectors[static_cast<std::size_t>(n)]).cols());
    return probe;
}

}  // namespace coinfock

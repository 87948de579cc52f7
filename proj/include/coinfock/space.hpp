#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "coinfock/partitions.hpp"

namespace coinfock {

using Complex = std::complex<double>;
using VectorC = Eigen::VectorXcd;
using MatrixC = Eigen::MatrixXcd;

struct Lattice {
    int num_sites = 1;

    static Lattice of(int L)
    {
        if (L < 1) throw BadParameter("Lattice: need at least one site");
        return Lattice{L};
    }
    friend bool operator==(const Lattice& a, const Lattice& b) { return a.num_sites == b.num_sites; }
};

/// Sector over canonical indices {1..n} with precomputed coincidence weights,
/// one amplitude slot per lattice configuration (dimension L^n).
/// Index i (0-based position) contributes stride L^i to the config index.
class SectorSpace {
public:
    static std::shared_ptr<const SectorSpace> make(Lattice lattice, int n)
    {
        return std::shared_ptr<const SectorSpace>(new SectorSpace(lattice, n));
    }

    Lattice lattice() const { return lattice_; }
    int particles() const { return n_; }
    IndexSet indices() const { return IndexSet::first_n(n_); }
    std::int64_t dim() const { return dim_; }
    std::uint64_t weight(std::int64_t config_id) const { return weights_[static_cast<std::size_t>(config_id)]; }
    const std::vector<std::uint64_t>& weights() const { return weights_; }

    std::vector<SiteId> sites_of(std::int64_t config_id) const
    {
        std::vector<SiteId> s(static_cast<std::size_t>(n_));
        const int L = lattice_.num_sites;
        for (int i = 0; i < n_; ++i) {
            s[static_cast<std::size_t>(i)] = static_cast<SiteId>(config_id % L);
            config_id /= L;
        }
        return s;
    }

    std::int64_t config_id_of(const std::vector<SiteId>& sites) const
    {
        std::int64_t id = 0;
        const int L = lattice_.num_sites;
        for (int i = n_ - 1; i >= 0; --i) {
            SiteId s = sites[static_cast<std::size_t>(i)];
            if (s < 0 || s >= L) throw BadParameter("SectorSpace: site out of range");
            id = id * L + s;
        }
        return id;
    }

    Config config_of(std::int64_t config_id) const
    {
        return Config::of(indices(), sites_of(config_id));
    }

    friend bool operator==(const SectorSpace& a, const SectorSpace& b)
    {
        return a.lattice_ == b.lattice_ && a.n_ == b.n_;
    }

private:
    SectorSpace(Lattice lattice, int n) : lattice_(lattice), n_(n)
    {
        if (n < 0) throw BadParameter("SectorSpace: negative sector");
        dim_ = 1;
        for (int i = 0; i < n; ++i) {
            dim_ *= lattice.num_sites;
            if (dim_ > (1 << 20)) throw SectorTooLarge("SectorSpace: L^n exceeds 2^20");
        }
        weights_.resize(static_cast<std::size_t>(dim_), 1);
        if (n >= 1)
            for (std::int64_t c = 0; c < dim_; ++c)
                weights_[static_cast<std::size_t>(c)] = coincidence_weight(config_of(c));
    }

    Lattice lattice_;
    int n_;
    std::int64_t dim_;
    std::vector<std::uint64_t> weights_;
};

/// Dense amplitudes over the configurations of a sector, normed with the
/// coincidence weights carried by the space handle.
struct WeightedVector {
    std::shared_ptr<const SectorSpace> space;
    VectorC amplitudes;

    static WeightedVector zero(std::shared_ptr<const SectorSpace> sp)
    {
        WeightedVector v;
        v.amplitudes = VectorC::Zero(sp->dim());
        v.space = std::move(sp);
        return v;
    }
};

inline void require_same_space(const WeightedVector& a, const WeightedVector& b)
{
    if (!a.space || !b.space || !(*a.space == *b.space))
        throw SpaceMismatch("weighted vectors live in different sectors");
}

/// <a|b> = sum_x w(x) conj(a(x)) b(x); conjugate-linear in the first slot.
inline Complex inner_product(const WeightedVector& a, const WeightedVector& b)
{
    require_same_space(a, b);
    Complex acc = 0.0;
    for (std::int64_t c = 0; c < a.space->dim(); ++c)
        acc += static_cast<double>(a.space->weight(c)) * std::conj(a.amplitudes[c]) * b.amplitudes[c];
    return acc;
}

inline double norm2(const WeightedVector& a) { return inner_product(a, a).real(); }

/// U_sigma: [U a](x) = a(f_sigma^{-1} x).
inline WeightedVector permute(const Permutation& sigma, const WeightedVector& a)
{
    const auto& sp = *a.space;
    if (sigma.domain() != sp.indices()) throw NotABijection("permute: permutation must act on the sector's indices");
    // [U a](x) = a(x o sigma): slot i reads the site at sigma(i)
    std::vector<int> read_from(static_cast<std::size_t>(sp.particles()));
    for (int i = 0; i < sp.particles(); ++i)
        read_from[static_cast<std::size_t>(i)] = sp.indices().position_of(sigma.apply(sp.indices().at(i)));
    WeightedVector out = WeightedVector::zero(a.space);
    for (std::int64_t c = 0; c < sp.dim(); ++c) {
        auto sites = sp.sites_of(c);
        std::vector<SiteId> pre(sites.size());
        for (std::size_t i = 0; i < sites.size(); ++i)
            pre[i] = sites[static_cast<std::size_t>(read_from[i])];
        out.amplitudes[c] = a.amplitudes[sp.config_id_of(pre)];
    }
    return out;
}

inline std::vector<Permutation> all_permutations(const IndexSet& domain)
{
    std::vector<int> im = domain.elements();
    std::sort(im.begin(), im.end());
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::of(domain, im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

/// S = (1/n!) sum_sigma U_sigma.
inline WeightedVector symmetrize(const WeightedVector& a)
{
    const int n = a.space->particles();
    if (n <= 1) return a;
    if (n > 8) throw CardinalityTooLarge("symmetrize: sector too large");
    WeightedVector acc = WeightedVector::zero(a.space);
    auto perms = all_permutations(a.space->indices());
    for (const auto& sigma : perms) acc.amplitudes += permute(sigma, a).amplitudes;
    acc.amplitudes /= static_cast<double>(perms.size());
    return acc;
}

/// mu_P(Delta): configurations of Delta lying on C_P (unit cell weight).
inline std::uint64_t measure_of(const Partition& p, const std::vector<std::int64_t>& subset,
                                const SectorSpace& sp)
{
    std::uint64_t count = 0;
    for (std::int64_t c : subset)
        count += static_cast<std::uint64_t>(membership_C(p, sp.config_of(c)));
    return count;
}

/// mu^{coincidence}(Delta) = sum over Delta of the per-config weight.
inline std::uint64_t measure_total(const std::vector<std::int64_t>& subset, const SectorSpace& sp)
{
    std::uint64_t acc = 0;
    for (std::int64_t c : subset) acc += sp.weight(c);
    return acc;
}

/// Per-partition restriction tables over the exact-pattern cells B_P.
/// Component norms carry the cell weight so that the squared norms add up to
/// the weighted norm exactly.
struct SectorDecomposition {
    std::vector<Partition> partitions;
    std::vector<std::vector<std::int64_t>> config_ids;  // aligned with partitions
    std::vector<VectorC> amplitudes;
    std::vector<double> component_norm2;
};

inline SectorDecomposition decompose(const WeightedVector& a)
{
    const auto& sp = *a.space;
    SectorDecomposition d;
    d.partitions = enumerate_partitions(sp.indices());
    d.config_ids.resize(d.partitions.size());
    d.amplitudes.resize(d.partitions.size());
    d.component_norm2.assign(d.partitions.size(), 0.0);
    std::map<std::vector<int>, std::size_t> rank;
    for (std::size_t i = 0; i < d.partitions.size(); ++i) rank[d.partitions[i].rgs()] = i;
    std::vector<std::vector<Complex>> amp(d.partitions.size());
    for (std::int64_t c = 0; c < sp.dim(); ++c) {
        std::size_t i = sp.particles() == 0 ? 0 : rank.at(equality_pattern(sp.config_of(c)).rgs());
        d.config_ids[i].push_back(c);
        amp[i].push_back(a.amplitudes[c]);
        d.component_norm2[i] += static_cast<double>(sp.weight(c)) * std::norm(a.amplitudes[c]);
    }
    for (std::size_t i = 0; i < amp.size(); ++i)
        d.amplitudes[i] = Eigen::Map<VectorC>(amp[i].data(), static_cast<Eigen::Index>(amp[i].size()));
    return d;
}

inline WeightedVector recompose(const SectorDecomposition& d, std::shared_ptr<const SectorSpace> sp)
{
    WeightedVector out = WeightedVector::zero(std::move(sp));
    for (std::size_t i = 0; i < d.config_ids.size(); ++i)
        for (std::size_t j = 0; j < d.config_ids[i].size(); ++j)
            out.amplitudes[d.config_ids[i][j]] = d.amplitudes[i][static_cast<Eigen::Index>(j)];
    return out;
}

/// Truncated coincidence Fock vector: one sector per particle number 0..n_max.
struct FockVector {
    std::vector<WeightedVector> sectors;

    static FockVector vacuum(Lattice lattice, int n_max)
    {
        FockVector f;
        for (int n = 0; n <= n_max; ++n)
            f.sectors.push_back(WeightedVector::zero(SectorSpace::make(lattice, n)));
        f.sectors[0].amplitudes[0] = 1.0;
        return f;
    }
    int n_max() const { return static_cast<int>(sectors.size()) - 1; }
};

/// CSV snapshot: config tuple (space separated sites), weight, re, im.
inline void write_csv(const WeightedVector& a, std::ostream& os)
{
    os << "config,weight,re,im\n";
    for (std::int64_t c = 0; c < a.space->dim(); ++c) {
        auto sites = a.space->sites_of(c);
        for (std::size_t i = 0; i < sites.size(); ++i) os << (i ? " " : "") << sites[i];
        os << ',' << a.space->weight(c) << ',' << a.amplitudes[c].real() << ',' << a.amplitudes[c].imag()
           << '\n';
    }
}

}  // namespace coinfock

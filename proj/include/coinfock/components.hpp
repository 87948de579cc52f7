#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "coinfock/space.hpp"

namespace coinfock {

/// Positional set partition of {0..n-1} as a restricted growth string;
/// block ids are assigned in least-element order.
using Rgs = std::vector<std::uint8_t>;

inline std::vector<Rgs> enumerate_rgs(int n)
{
    std::vector<Rgs> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    Rgs r(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(r);
        int i = n - 1;
        for (; i > 0; --i) {
            std::uint8_t mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, r[static_cast<std::size_t>(j)]);
            if (r[static_cast<std::size_t>(i)] <= mx) break;
        }
        if (i == 0) break;
        ++r[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) r[static_cast<std::size_t>(j)] = 0;
    }
    return out;
}

inline int rgs_num_blocks(const Rgs& r)
{
    int nb = 0;
    for (auto v : r) nb = std::max(nb, static_cast<int>(v) + 1);
    return nb;
}

/// Sector space resolved into its direct-sum components: one amplitude table
/// per partition plane. A basis point is a partition of the index positions
/// together with one site value per block; every point carries unit measure,
/// so the inner product is the plain complex dot product.
class ComponentSpace {
public:
    static std::shared_ptr<const ComponentSpace> make(Lattice lattice, int n)
    {
        return std::shared_ptr<const ComponentSpace>(new ComponentSpace(lattice, n));
    }

    Lattice lattice() const { return lattice_; }
    int particles() const { return n_; }
    std::int64_t dim() const { return dim_; }
    int num_partitions() const { return static_cast<int>(parts_.size()); }
    const Rgs& partition_rgs(int p) const { return parts_[static_cast<std::size_t>(p)]; }
    int num_blocks(int p) const { return nblocks_[static_cast<std::size_t>(p)]; }
    std::int64_t offset(int p) const { return offsets_[static_cast<std::size_t>(p)]; }
    std::int64_t plane_dim(int p) const { return plane_dims_[static_cast<std::size_t>(p)]; }

    int partition_rank(const Rgs& r) const
    {
        auto it = rank_.find(r);
        if (it == rank_.end()) throw BadParameter("ComponentSpace: unknown partition");
        return it->second;
    }

    std::int64_t index(int p, const std::vector<SiteId>& block_values) const
    {
        std::int64_t z = 0;
        const int L = lattice_.num_sites;
        for (int j = num_blocks(p) - 1; j >= 0; --j) z = z * L + block_values[static_cast<std::size_t>(j)];
        return offset(p) + z;
    }

    struct Sheet {
        int partition;
        std::vector<SiteId> block_values;
    };

    Sheet sheet_of(std::int64_t idx) const
    {
        int p = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), idx) - offsets_.begin()) - 1;
        std::int64_t z = idx - offset(p);
        std::vector<SiteId> vals(static_cast<std::size_t>(num_blocks(p)));
        const int L = lattice_.num_sites;
        for (int j = 0; j < num_blocks(p); ++j) {
            vals[static_cast<std::size_t>(j)] = static_cast<SiteId>(z % L);
            z /= L;
        }
        return {p, std::move(vals)};
    }

    /// lattice configuration obtained by spreading block values over indices
    std::vector<SiteId> sites_of_sheet(int p, const std::vector<SiteId>& block_values) const
    {
        const Rgs& r = parts_[static_cast<std::size_t>(p)];
        std::vector<SiteId> sites(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) sites[i] = block_values[r[i]];
        return sites;
    }

    friend bool operator==(const ComponentSpace& a, const ComponentSpace& b)
    {
        return a.lattice_ == b.lattice_ && a.n_ == b.n_;
    }

private:
    ComponentSpace(Lattice lattice, int n) : lattice_(lattice), n_(n)
    {
        if (n < 0) throw BadParameter("ComponentSpace: negative sector");
        if (n > 10) throw CardinalityTooLarge("ComponentSpace: sector too large");
        parts_ = enumerate_rgs(n);
        dim_ = 0;
        for (std::size_t p = 0; p < parts_.size(); ++p) {
            int nb = rgs_num_blocks(parts_[p]);
            std::int64_t pd = 1;
            for (int j = 0; j < nb; ++j) pd *= lattice.num_sites;
            nblocks_.push_back(nb);
            offsets_.push_back(dim_);
            plane_dims_.push_back(pd);
            rank_[parts_[p]] = static_cast<int>(p);
            dim_ += pd;
            if (dim_ > (1 << 20)) throw SectorTooLarge("ComponentSpace: dimension exceeds 2^20");
        }
    }

    Lattice lattice_;
    int n_;
    std::int64_t dim_ = 0;
    std::vector<Rgs> parts_;
    std::vector<int> nblocks_;
    std::vector<std::int64_t> offsets_;
    std::vector<std::int64_t> plane_dims_;
    std::map<Rgs, int> rank_;
};

struct ComponentVector {
    std::shared_ptr<const ComponentSpace> space;
    VectorC amplitudes;

    static ComponentVector zero(std::shared_ptr<const ComponentSpace> sp)
    {
        ComponentVector v;
        v.amplitudes = VectorC::Zero(sp->dim());
        v.space = std::move(sp);
        return v;
    }
};

inline void require_same_space(const ComponentVector& a, const ComponentVector& b)
{
    if (!a.space || !b.space || !(*a.space == *b.space))
        throw SpaceMismatch("component vectors live in different sectors");
}

inline Complex inner_product(const ComponentVector& a, const ComponentVector& b)
{
    require_same_space(a, b);
    return a.amplitudes.dot(b.amplitudes);  // Eigen dot conjugates the left factor
}

inline double norm2(const ComponentVector& a) { return a.amplitudes.squaredNorm(); }

/// Coherent embedding of a weighted sector vector: every plane carries the
/// restriction of the same configuration function. Isometric: the plain norm
/// of the image equals the coincidence-weighted norm of the input.
inline ComponentVector embed(const WeightedVector& a)
{
    auto cs = ComponentSpace::make(a.space->lattice(), a.space->particles());
    ComponentVector out = ComponentVector::zero(cs);
    for (std::int64_t i = 0; i < cs->dim(); ++i) {
        auto sh = cs->sheet_of(i);
        out.amplitudes[i] = a.amplitudes[a.space->config_id_of(cs->sites_of_sheet(sh.partition, sh.block_values))];
    }
    return out;
}

/// Positional permutation of {0..n-1}: perm[i] is the image of position i.
using PosPerm = std::vector<int>;

inline std::vector<PosPerm> all_pos_perms(int n)
{
    PosPerm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<PosPerm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Basis image of a sheet under f_sigma: blocks are relabeled through sigma
/// and re-sorted by least element, block values follow their blocks.
inline std::int64_t permuted_sheet_index(const ComponentSpace& sp, std::int64_t idx, const PosPerm& sigma)
{
    auto sh = sp.sheet_of(idx);
    const Rgs& r = sp.partition_rgs(sh.partition);
    const int n = sp.particles();
    const int nb = sp.num_blocks(sh.partition);
    // least element of each image block
    std::vector<int> least(static_cast<std::size_t>(nb), n);
    for (int i = 0; i < n; ++i) {
        int b = r[static_cast<std::size_t>(i)];
        least[static_cast<std::size_t>(b)] = std::min(least[static_cast<std::size_t>(b)], sigma[static_cast<std::size_t>(i)]);
    }
    std::vector<int> order(static_cast<std::size_t>(nb));
    for (int j = 0; j < nb; ++j) order[static_cast<std::size_t>(j)] = j;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return least[static_cast<std::size_t>(a)] < least[static_cast<std::size_t>(b)]; });
    std::vector<int> newid(static_cast<std::size_t>(nb));
    for (int j = 0; j < nb; ++j) newid[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] = j;
    Rgs q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        q[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] =
            static_cast<std::uint8_t>(newid[static_cast<std::size_t>(r[static_cast<std::size_t>(i)])]);
    std::vector<SiteId> vals(static_cast<std::size_t>(nb));
    for (int j = 0; j < nb; ++j) vals[static_cast<std::size_t>(newid[static_cast<std::size_t>(j)])] = sh.block_values[static_cast<std::size_t>(j)];
    return sp.index(sp.partition_rank(q), vals);
}

/// U_sigma on component vectors.
inline ComponentVector apply_permutation(const PosPerm& sigma, const ComponentVector& a)
{
    const auto& sp = *a.space;
    if (static_cast<int>(sigma.size()) != sp.particles())
        throw NotABijection("apply_permutation: wrong permutation size");
    ComponentVector out = ComponentVector::zero(a.space);
    for (std::int64_t i = 0; i < sp.dim(); ++i)
        out.amplitudes[permuted_sheet_index(sp, i, sigma)] = a.amplitudes[i];
    return out;
}

inline ComponentVector symmetrize(const ComponentVector& a)
{
    const int n = a.space->particles();
    if (n <= 1) return a;
    if (n > 8) throw CardinalityTooLarge("symmetrize: sector too large");
    ComponentVector acc = ComponentVector::zero(a.space);
    auto perms = all_pos_perms(n);
    for (const auto& sigma : perms) acc.amplitudes += apply_permutation(sigma, a).amplitudes;
    acc.amplitudes /= static_cast<double>(perms.size());
    return acc;
}

/// Orthonormal basis of the symmetric subspace: normalized indicators of the
/// permutation orbits of basis sheets. Columns are orthonormal.
inline MatrixC symmetric_basis(const ComponentSpace& sp)
{
    const int n = sp.particles();
    auto perms = all_pos_perms(n);
    std::vector<char> seen(static_cast<std::size_t>(sp.dim()), 0);
    std::vector<VectorC> cols;
    for (std::int64_t i = 0; i < sp.dim(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<std::int64_t> orbit;
        for (const auto& sigma : perms) {
            std::int64_t j = permuted_sheet_index(sp, i, sigma);
            if (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                orbit.push_back(j);
            }
        }
        VectorC v = VectorC::Zero(sp.dim());
        for (std::int64_t j : orbit) v[j] = 1.0;
        v /= std::sqrt(static_cast<double>(orbit.size()));
        cols.push_back(std::move(v));
    }
    MatrixC Q(sp.dim(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) Q.col(static_cast<Eigen::Index>(c)) = cols[c];
    return Q;
}

}  // namespace coinfock

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "coinfock/fieldops.hpp"
#include "coinfock/freeham.hpp"
#include "coinfock/report.hpp"
#include "coinfock/rng.hpp"
#include "coinfock/space.hpp"

namespace coinfock {

inline VectorC random_vector(Xoshiro256ss& rng, Eigen::Index dim)
{
    VectorC v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = rng.complex_sym();
    if (v.norm() > 0) v /= v.norm();
    return v;
}

inline ComponentVector random_component(Xoshiro256ss& rng, std::shared_ptr<const ComponentSpace> sp)
{
    ComponentVector v;
    v.amplitudes = random_vector(rng, sp->dim());
    v.space = std::move(sp);
    return v;
}

inline ComponentVector random_symmetric(Xoshiro256ss& rng, std::shared_ptr<const ComponentSpace> sp)
{
    ComponentVector v = symmetrize(random_component(rng, std::move(sp)));
    double n = v.amplitudes.norm();
    if (n > 0) v.amplitudes /= n;
    return v;
}

inline WeightedVector random_weighted(Xoshiro256ss& rng, std::shared_ptr<const SectorSpace> sp)
{
    WeightedVector v;
    v.amplitudes = random_vector(rng, sp->dim());
    v.space = std::move(sp);
    return v;
}

// ---------------------------------------------------------------------------
// partition lattice and indicator identities
// ---------------------------------------------------------------------------

namespace detail {

/// 1 iff all coordinates indexed by I coincide.
inline int member_plane(const IndexSet& I, const Config& x)
{
    if (I.size() <= 1) return 1;
    SiteId v = x.site_of(I.least());
    for (int e : I.elements())
        if (x.site_of(e) != v) return 0;
    return 1;
}

inline std::vector<IndexSet> nonempty_subsets(const IndexSet& ground)
{
    std::vector<IndexSet> out;
    const int n = ground.size();
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) elems.push_back(ground.at(i));
        out.push_back(IndexSet::of(std::move(elems)));
    }
    return out;
}

inline Config restrict_config(const Config& x, const IndexSet& sub)
{
    std::vector<SiteId> sites;
    sites.reserve(static_cast<std::size_t>(sub.size()));
    for (int e : sub.elements()) sites.push_back(x.site_of(e));
    return Config::of(sub, sites);
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b)
{
    std::vector<int> elems;
    for (int e : a.elements())
        if (!b.contains(e)) elems.push_back(e);
    return IndexSet::of(std::move(elems));
}

/// Canonical sheet (rgs, block values) from positional blocks with values.
inline std::pair<Rgs, std::vector<SiteId>> assemble_sheet(
    int n, std::vector<std::pair<std::vector<int>, SiteId>> blocks)
{
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
    Rgs r(static_cast<std::size_t>(n));
    std::vector<SiteId> vals;
    vals.reserve(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        for (int i : blocks[j].first) r[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
        vals.push_back(blocks[j].second);
    }
    return {std::move(r), std::move(vals)};
}

inline std::vector<std::vector<int>> positional_blocks(const Rgs& r)
{
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(rgs_num_blocks(r)));
    for (int i = 0; i < static_cast<int>(r.size()); ++i) blocks[r[static_cast<std::size_t>(i)]].push_back(i);
    return blocks;
}

}  // namespace detail

/// Partition counts, refinement order against plane inclusion, joins,
/// exact-pattern cells, weights, permutation composition.
inline std::vector<Check> checks_partition_lattice(int L, int n_cap, std::uint64_t seed)
{
    std::vector<Check> out;
    Xoshiro256ss rng(seed);
    {
        const std::uint64_t expected[] = {1, 1, 2, 5, 15, 52};
        int bad = 0;
        for (int n = 0; n <= 5; ++n)
            if (enumerate_partitions(IndexSet::first_n(n)).size() != expected[n]) ++bad;
        out.push_back(Check::of("partition_counts_match_bell", "partition counts equal Bell numbers", bad, 0));
    }
    {
        int bad = 0;
        for (int n = 0; n <= std::min(n_cap, 3); ++n) {
            auto sp = SectorSpace::make(Lattice::of(L), n);
            auto parts = enumerate_partitions(sp->indices());
            for (const auto& p1 : parts)
                for (const auto& p2 : parts) {
                    bool leq = refines_leq(p1, p2);
                    bool incl = true;
                    for (std::int64_t c = 0; c < sp->dim(); ++c) {
                        auto x = sp->config_of(c);
                        if (membership_C(p2, x) > membership_C(p1, x)) { incl = false; break; }
                    }
                    if (leq != incl) ++bad;
                }
        }
        out.push_back(Check::of("refinement_order_is_plane_inclusion",
                                "coarser partitions have smaller coincidence planes", bad, 0));
    }
    {
        int bad = 0;
        for (int n = 1; n <= std::min(n_cap, 4); ++n) {
            auto sp = SectorSpace::make(Lattice::of(L), n);
            auto parts = enumerate_partitions(sp->indices());
            for (const auto& p1 : parts)
                for (const auto& p2 : parts) {
                    Partition pj = join(p1, p2);
                    for (std::int64_t c = 0; c < sp->dim(); ++c) {
                        auto x = sp->config_of(c);
                        if (membership_C(pj, x) != membership_C(p1, x) * membership_C(p2, x)) ++bad;
                    }
                }
        }
        out.push_back(Check::of("join_gives_plane_intersection",
                                "intersection of coincidence planes is the plane of the join", bad, 0));
    }
    {
        int bad = 0;
        for (int n = 1; n <= std::min(n_cap, 4); ++n) {
            auto sp = SectorSpace::make(Lattice::of(L), n);
            auto parts = enumerate_partitions(sp->indices());
            for (std::int64_t c = 0; c < sp->dim(); ++c) {
                auto x = sp->config_of(c);
                Partition q = equality_pattern(x);
                for (const auto& p : parts) {
                    int in_cell = (q == p) ? 1 : 0;
                    int derived = membership_C(p, x);
                    for (const auto& pp : parts)
                        if (pp != p && refines_leq(p, pp) && membership_C(pp, x)) derived = 0;
                    if (in_cell != derived) ++bad;
                }
            }
        }
        out.push_back(Check::of("pattern_cells_partition_configs",
                                "exact-pattern cells cover the configuration space disjointly", bad, 0));
    }
    {
        int bad = 0;
        for (int n = 1; n <= std::min(n_cap, 4); ++n) {
            auto sp = SectorSpace::make(Lattice::of(L), n);
            auto parts = enumerate_partitions(sp->indices());
            for (std::int64_t c = 0; c < sp->dim(); ++c) {
                auto x = sp->config_of(c);
                std::uint64_t count = 0;
                for (const auto& p : parts) count += static_cast<std::uint64_t>(membership_C(p, x));
                if (count != coincidence_weight(x)) ++bad;
            }
        }
        out.push_back(Check::of("coincidence_weight_counts_planes",
                                "per-configuration weight counts the planes through it", bad, 0));
    }
    {
        int bad = 0;
        const int n = std::min(n_cap, 3);
        auto ground = IndexSet::first_n(n);
        auto sp = SectorSpace::make(Lattice::of(L), n);
        auto perms = all_permutations(ground);
        auto parts = enumerate_partitions(ground);
        for (const auto& s1 : perms)
            for (const auto& s2 : perms) {
                Permutation s12 = s1.compose(s2);
                for (int rep = 0; rep < 3; ++rep) {
                    auto x = sp->config_of(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(sp->dim()))));
                    if (!(act(s1, act(s2, x)) == act(s12, x))) ++bad;
                }
                const auto& p = parts[rng.below(parts.size())];
                if (!(act(s1, act(s2, p)) == act(s12, p))) ++bad;
            }
        out.push_back(Check::of("permutation_action_composes",
                                "relabeling actions compose with permutation products", bad, 0));
    }
    return out;
}

/// Pointwise and measure identities of the exact-coincidence indicator.
inline std::vector<Check> checks_indicator_identities(int L, int n_cap, std::uint64_t seed)
{
    std::vector<Check> out;
    Xoshiro256ss rng(seed);

    // relabeling: indicator_B(I, f_sigma^{-1} x) == indicator_B(sigma(I), x)
    {
        int bad = 0;
        for (int n = 1; n <= std::min(n_cap, 4); ++n) {
            auto ground = IndexSet::first_n(n);
            auto sp = SectorSpace::make(Lattice::of(L), n);
            auto perms = all_permutations(ground);
            auto subsets = detail::nonempty_subsets(ground);
            for (const auto& sigma : perms) {
                Permutation inv = sigma.inverse();
                for (const auto& I : subsets)
                    for (std::int64_t c = 0; c < sp->dim(); ++c) {
                        auto x = sp->config_of(c);
                        if (indicator_B(I, act(inv, x)) != indicator_B(act(sigma, I), x)) ++bad;
                    }
            }
        }
        out.push_back(Check::of("indicator_relabels_under_permutations",
                                "exact-coincidence indicator transforms by set relabeling", bad, 0));
    }

    // products over disjoint I, J agree in all three arrangements
    {
        int bad = 0;
        for (int n = 2; n <= std::min(n_cap, 4); ++n) {
            auto ground = IndexSet::first_n(n);
            auto sp = SectorSpace::make(Lattice::of(L), n);
            auto subsets = detail::nonempty_subsets(ground);
            for (const auto& I : subsets)
                for (const auto& J : subsets) {
                    bool disjoint = true;
                    for (int e : I.elements())
                        if (J.contains(e)) { disjoint = false; break; }
                    if (!disjoint || I.size() + J.size() > n) continue;
                    IndexSet nmi = detail::set_difference(ground, I);
                    IndexSet nmj = detail::set_difference(ground, J);
                    for (std::int64_t c = 0; c < sp->dim(); ++c) {
                        auto x = sp->config_of(c);
                        int a = indicator_B(I, x) * indicator_B(J, detail::restrict_config(x, nmi));
                        int b = indicator_B(I, detail::restrict_config(x, nmj)) * indicator_B(J, x);
                        int d = indicator_B(I, x) * indicator_B(J, x);
                        if (a != b || b != d) ++bad;
                    }
                }
        }
        out.push_back(Check::of("indicator_products_agree",
                                "three arrangements of disjoint-set indicator products coincide", bad, 0));
    }

    // diagonal pinning: integrating the J-block out of a gated component
    // function reduces to the three-case expression
    {
        double worst = 0.0;
        for (int n = 2; n <= std::min(n_cap, 4); ++n) {
            auto cs = ComponentSpace::make(Lattice::of(L), n);
            ComponentVector h = random_component(rng, cs);
            for (int maskJ = 1; maskJ < (1 << n); ++maskJ)
                for (int maskI = 1; maskI < (1 << n); ++maskI) {
                    std::vector<int> J, I, rest;
                    for (int i = 0; i < n; ++i) {
                        if (maskJ & (1 << i)) J.push_back(i); else rest.push_back(i);
                        if (maskI & (1 << i)) I.push_back(i);
                    }
                    const int m = static_cast<int>(rest.size());
                    if (m == 0) continue;
                    auto cm = ComponentSpace::make(Lattice::of(L), m);
                    std::vector<int> pos_in_rest(static_cast<std::size_t>(n), -1);
                    for (int t = 0; t < m; ++t) pos_in_rest[static_cast<std::size_t>(rest[static_cast<std::size_t>(t)])] = t;
                    const bool I_disjoint_J = (maskI & maskJ) == 0;
                    const bool I_equals_J = maskI == maskJ;
                    std::vector<int> I_rel;
                    if (I_disjoint_J)
                        for (int i : I) I_rel.push_back(pos_in_rest[static_cast<std::size_t>(i)]);
                    for (std::int64_t sh = 0; sh < cm->dim(); ++sh) {
                        auto s = cm->sheet_of(sh);
                        auto qblocks = detail::positional_blocks(cm->partition_rgs(s.partition));
                        Complex lhs = 0.0, rhs = 0.0;
                        for (SiteId y = 0; y < L; ++y) {
                            std::vector<std::pair<std::vector<int>, SiteId>> blocks;
                            for (std::size_t b = 0; b < qblocks.size(); ++b) {
                                std::vector<int> orig;
                                for (int i : qblocks[b]) orig.push_back(rest[static_cast<std::size_t>(i)]);
                                blocks.emplace_back(std::move(orig), s.block_values[b]);
                            }
                            blocks.emplace_back(J, y);
                            auto [r, vals] = detail::assemble_sheet(n, std::move(blocks));
                            Complex hv = h.amplitudes[cs->index(cs->partition_rank(r), vals)];
                            // lhs gate: I is a block of the assembled decomposition
                            bool gate = false;
                            for (const auto& b : detail::positional_blocks(r)) {
                                if (static_cast<int>(b.size()) != static_cast<int>(I.size())) continue;
                                if (std::equal(b.begin(), b.end(), I.begin())) { gate = true; break; }
                            }
                            if (gate) lhs += hv;
                            if (I_equals_J) rhs += hv;
                            else if (I_disjoint_J) {
                                bool g2 = false;
                                for (const auto& b : qblocks)
                                    if (b.size() == I_rel.size() && std::equal(b.begin(), b.end(), I_rel.begin())) { g2 = true; break; }
                                if (g2) rhs += hv;
                            }
                        }
                        worst = std::max(worst, std::abs(lhs - rhs));
                    }
                }
        }
        out.push_back(Check::of("indicator_pinned_block_sum_reduces",
                                "summing a pinned block out of a gated component function "
                                "leaves the three-case expression",
                                worst, 1e-12));
    }

    // gated component integral factorizes into pinned-block times remainder
    {
        double worst = 0.0;
        for (int n = 1; n <= std::min(n_cap, 4); ++n) {
            auto cs = ComponentSpace::make(Lattice::of(L), n);
            ComponentVector h = random_component(rng, cs);
            for (int maskI = 1; maskI < (1 << n); ++maskI) {
                std::vector<int> I, rest;
                for (int i = 0; i < n; ++i)
                    if (maskI & (1 << i)) I.push_back(i); else rest.push_back(i);
                Complex lhs = 0.0;
                for (std::int64_t sh = 0; sh < cs->dim(); ++sh) {
                    auto s = cs->sheet_of(sh);
                    for (const auto& b : detail::positional_blocks(cs->partition_rgs(s.partition)))
                        if (b.size() == I.size() && std::equal(b.begin(), b.end(), I.begin())) {
                            lhs += h.amplitudes[sh];
                            break;
                        }
                }
                Complex rhs = 0.0;
                const int m = static_cast<int>(rest.size());
                for (const auto& q : enumerate_rgs(m)) {
                    auto qb = detail::positional_blocks(q);
                    const int nb = static_cast<int>(qb.size());
                    std::vector<SiteId> vals(static_cast<std::size_t>(nb), 0);
                    std::int64_t combos = 1;
                    for (int j = 0; j < nb; ++j) combos *= L;
                    for (std::int64_t zc = 0; zc < combos; ++zc) {
                        std::int64_t z = zc;
                        for (int j = 0; j < nb; ++j) {
                            vals[static_cast<std::size_t>(j)] = static_cast<SiteId>(z % L);
                            z /= L;
                        }
                        for (SiteId y = 0; y < L; ++y) {
                            std::vector<std::pair<std::vector<int>, SiteId>> blocks;
                            for (int j = 0; j < nb; ++j) {
                                std::vector<int> orig;
                                for (int i : qb[static_cast<std::size_t>(j)]) orig.push_back(rest[static_cast<std::size_t>(i)]);
                                blocks.emplace_back(std::move(orig), vals[static_cast<std::size_t>(j)]);
                            }
                            blocks.emplace_back(I, y);
                            auto [r, v] = detail::assemble_sheet(n, std::move(blocks));
                            rhs += h.amplitudes[cs->index(cs->partition_rank(r), v)];
                        }
                    }
                }
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
        out.push_back(Check::of("indicator_measure_factorizes",
                                "gated component sum equals pinned-block times remainder measure",
                                worst, 1e-12));
    }
    return out;
}

// ---------------------------------------------------------------------------
// sector measure and permutation identities
// ---------------------------------------------------------------------------

inline std::vector<Check> checks_measure_decomposition(int L_max, int n_cap, int pairs, std::uint64_t seed)
{
    std::vector<Check> out;
    Xoshiro256ss rng(seed);
    double worst_inner = 0.0, worst_parseval = 0.0, worst_roundtrip = 0.0;
    int done = 0;
    while (done < pairs) {
        for (int L = 2; L <= L_max && done < pairs; ++L)
            for (int n = 1; n <= n_cap && done < pairs; ++n) {
                auto sp = SectorSpace::make(Lattice::of(L), n);
                auto a = random_weighted(rng, sp);
                auto b = random_weighted(rng, sp);
                Complex w = inner_product(a, b);
                Complex oracle = 0.0;
                for (const auto& p : enumerate_partitions(sp->indices()))
                    for (std::int64_t c = 0; c < sp->dim(); ++c)
                        if (membership_C(p, sp->config_of(c)))
                            oracle += std::conj(a.amplitudes[c]) * b.amplitudes[c];
                worst_inner = std::max(worst_inner, std::abs(w - oracle));
                auto d = decompose(a);
                double total = 0.0;
                for (double c2 : d.component_norm2) total += c2;
                worst_parseval = std::max(worst_parseval, std::abs(total - norm2(a)));
                auto r = recompose(d, sp);
                worst_roundtrip = std::max(worst_roundtrip, (r.amplitudes - a.amplitudes).cwiseAbs().maxCoeff());
                ++done;
            }
    }
    out.push_back(Check::of("weighted_inner_product_equals_component_sum",
                            "weighted inner product equals the plane-by-plane component sum",
                            worst_inner, 1e-12));
    out.push_back(Check::of("component_norms_add_up",
                            "squared component norms sum to the weighted squared norm",
                            worst_parseval, 1e-12));
    out.push_back(Check::of("decompose_recompose_roundtrip",
                            "component decomposition is invertible", worst_roundtrip, 1e-12));
    return out;
}

inline std::vector<Check> checks_permutation_invariance(int L, int n_cap, std::uint64_t seed)
{
    std::vector<Check> out;
    Xoshiro256ss rng(seed);
    {
        int bad = 0;
        for (int n = 1; n <= n_cap; ++n) {
            auto sp = SectorSpace::make(Lattice::of(L), n);
            for (const auto& sigma : all_permutations(sp->indices()))
                for (std::int64_t c = 0; c < sp->dim(); ++c) {
                    auto x = sp->config_of(c);
                    if (coincidence_weight(act(sigma, x)) != coincidence_weight(x)) ++bad;
                }
        }
        out.push_back(Check::of("coincidence_measure_permutation_invariant",
                                "the per-configuration weight is invariant under relabeling", bad, 0));
    }
    {
        int bad = 0;
        for (int n = 2; n <= n_cap; ++n) {
            auto sp = SectorSpace::make(Lattice::of(L), n);
            auto parts = enumerate_partitions(sp->indices());
            for (int rep = 0; rep < 5; ++rep) {
                std::vector<std::int64_t> delta;
                for (std::int64_t c = 0; c < sp->dim(); ++c)
                    if (rng.below(3) == 0) delta.push_back(c);
                for (const auto& sigma : all_permutations(sp->indices())) {
                    std::vector<std::int64_t> image;
                    for (std::int64_t c : delta) {
                        auto y = act(sigma, sp->config_of(c));
                        image.push_back(sp->config_id_of(y.sites()));
                    }
                    for (const auto& p : parts)
                        if (measure_of(p, delta, *sp) != measure_of(act(sigma, p), image, *sp)) ++bad;
                    if (measure_total(delta, *sp) != measure_total(image, *sp)) ++bad;
                }
            }
        }
        out.push_back(Check::of("plane_measures_relabel_with_sets",
                                "plane measures transform with the relabeled plane", bad, 0));
    }
    {
        double worst = 0.0;
        for (int n = 1; n <= n_cap; ++n) {
            auto sp = SectorSpace::make(Lattice::of(L), n);
            auto perms = all_permutations(sp->indices());
            for (int rep = 0; rep < 4; ++rep) {
                auto a = random_weighted(rng, sp);
                for (const auto& sigma : perms)
                    worst = std::max(worst, std::abs(norm2(permute(sigma, a)) - norm2(a)));
                const auto& s1 = perms[rng.below(perms.size())];
                const auto& s2 = perms[rng.below(perms.size())];
                auto lhs = permute(s1, permute(s2, a));
                auto rhs = permute(s1.compose(s2), a);
                worst = std::max(worst, (lhs.amplitudes - rhs.amplitudes).cwiseAbs().maxCoeff());
            }
        }
        out.push_back(Check::of("relabeling_operators_unitary",
                                "relabeling operators preserve the norm and compose", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (int n = 2; n <= std::min(n_cap, 4); ++n) {
            auto sp = SectorSpace::make(Lattice::of(L), n);
            auto perms = all_permutations(sp->indices());
            for (int rep = 0; rep < 4; ++rep) {
                auto a = random_weighted(rng, sp);
                auto b = random_weighted(rng, sp);
                auto sa = symmetrize(a);
                auto ssa = symmetrize(sa);
                worst = std::max(worst, (ssa.amplitudes - sa.amplitudes).cwiseAbs().maxCoeff());
                worst = std::max(worst,
                                 std::abs(inner_product(sa, b) - inner_product(a, symmetrize(b))));
                const auto& sigma = perms[rng.below(perms.size())];
                worst = std::max(worst, (permute(sigma, sa).amplitudes - sa.amplitudes).cwiseAbs().maxCoeff());
            }
        }
        out.push_back(Check::of("symmetrizer_is_orthogonal_projector",
                                "the symmetrizer is idempotent, self-adjoint and permutation-fixed",
                                worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (int n = 1; n <= std::min(n_cap, 4); ++n) {
            auto sp = SectorSpace::make(Lattice::of(L), n);
            for (int rep = 0; rep < 4; ++rep) {
                auto a = random_weighted(rng, sp);
                auto b = random_weighted(rng, sp);
                auto ea = embed(a);
                auto eb = embed(b);
                worst = std::max(worst, std::abs(inner_product(ea, eb) - inner_product(a, b)));
            }
        }
        out.push_back(Check::of("component_embedding_isometric",
                                "the coherent embedding into the component sum preserves inner products",
                                worst, 1e-12));
    }
    return out;
}

// ---------------------------------------------------------------------------
// field operator identities
// ---------------------------------------------------------------------------

inline std::vector<Check> checks_adjointness(int L, int n_cap, int k_max, std::uint64_t seed)
{
    std::vector<Check> out;
    Xoshiro256ss rng(seed);
    for (int k = 1; k <= k_max; ++k) {
        double worst_pair = 0.0, worst_matrix = 0.0, worst_sym = 0.0;
        for (int n = 0; n + k <= n_cap; ++n) {
                auto dom = ComponentSpace::make(Lattice::of(L), n);
                auto cod = ComponentSpace::make(Lattice::of(L), n + k);
                MatrixC Qd = symmetric_basis(*dom);
                MatrixC Qc = symmetric_basis(*cod);
                for (SiteId x = 0; x < L; ++x) {
                    auto up = materialize(dom, cod, [&](const ComponentVector& v) {
                        return create_k_at(x, k, v, n + k);
                    });
                    auto upu = materialize(dom, cod, [&](const ComponentVector& v) {
                        return create_k_unsym(x, k, v, n + k);
                    });
                    auto down = materialize(cod, dom, [&](const ComponentVector& v) {
                        return annihilate_k_at(x, k, v);
                    });
                    worst_matrix = std::max(
                        worst_matrix, (upu.entries - down.adjoint_weighted().entries).cwiseAbs().maxCoeff());
                    // creator = symmetrization of the adjoint, on symmetric inputs
                    MatrixC proj_adj = Qc * (Qc.adjoint() * down.adjoint_weighted().entries);
                    worst_sym = std::max(worst_sym, ((up.entries - proj_adj) * Qd).cwiseAbs().maxCoeff());
                    for (int rep = 0; rep < 3; ++rep) {
                        auto a = random_component(rng, dom);
                        auto b = random_symmetric(rng, cod);
                        Complex l = inner_product(create_k_at(x, k, a, n + k), b);
                        Complex r = inner_product(a, annihilate_k_at(x, k, b));
                        worst_pair = std::max(worst_pair, std::abs(l - r));
                    }
                }
            }
        out.push_back(Check::of("creator_adjoint_to_annihilator_k" + std::to_string(k),
                                "creation pairs against annihilation in the sector inner products",
                                worst_pair, 1e-12));
        out.push_back(Check::of("unsym_creator_is_matrix_adjoint_k" + std::to_string(k),
                                "the unsymmetrized creator matrix is the annihilator adjoint",
                                worst_matrix, 1e-12));
        out.push_back(Check::of("creator_is_symmetrized_adjoint_k" + std::to_string(k),
                                "the creator equals the symmetric compression of the adjoint",
                                worst_sym, 1e-12));
    }
    return out;
}

inline std::vector<Check> checks_commutators(int L, int n_max, int k_max, int h_max, int pairs,
                                             std::uint64_t seed)
{
    std::vector<Check> out;
    Xoshiro256ss rng(seed);
    Lattice lat = Lattice::of(L);
    for (int k = 1; k <= k_max; ++k)
        for (int h = 1; h <= h_max; ++h) {
            if (k + h > n_max) continue;
            double scalar = 0.0, mm = 0.0, pp = 0.0;
            for (int rep = 0; rep < pairs; ++rep) {
                Smearing f = Smearing::of(lat, random_vector(rng, L));
                Smearing g = Smearing::of(lat, random_vector(rng, L));
                auto rep_kh = commutator_check(lat, n_max, k, h, f, g);
                scalar = std::max(scalar, rep_kh.scalar_residual);
                mm = std::max(mm, rep_kh.minus_minus_residual);
                pp = std::max(pp, rep_kh.plus_plus_residual);
            }
            out.push_back(Check::of(
                "commutator_scalar_k" + std::to_string(k) + "_h" + std::to_string(h),
                "annihilator-creator commutator is the matched-order scalar", scalar,
                k == h ? 1e-10 : 1e-12));
            out.push_back(Check::of(
                "commutator_annihilators_vanish_k" + std::to_string(k) + "_h" + std::to_string(h),
                "annihilators of different orders commute", mm, 1e-12));
            out.push_back(Check::of(
                "commutator_creators_vanish_k" + std::to_string(k) + "_h" + std::to_string(h),
                "creators of different orders commute", pp, 1e-12));
        }
    return out;
}

inline std::vector<Check> checks_norm_bounds(int L, int n_cap, int k_max, int smearings,
                                             std::uint64_t seed)
{
    std::vector<Check> out;
    Xoshiro256ss rng(seed);
    Lattice lat = Lattice::of(L);
    for (int k = 1; k <= k_max; ++k) {
        double over_minus = 0.0, over_plus = 0.0, eq_resid = 0.0;
        for (int rep = 0; rep < smearings; ++rep) {
            Smearing f = Smearing::of(lat, random_vector(rng, L));
            for (int n = k; n <= n_cap; ++n) {
                auto dom = ComponentSpace::make(lat, n);
                auto cod = ComponentSpace::make(lat, n - k);
                auto A = materialize(dom, cod, [&](const ComponentVector& v) {
                    return smear(FieldKind::annihilate, k, f, v, n_cap);
                });
                double bound = std::sqrt(factorial(n) / factorial(n - k)) * f.norm();
                double smax = A.entries.jacobiSvd().singularValues()(0);
                over_minus = std::max(over_minus, (smax - bound) / bound);
                auto C = materialize(cod, dom, [&](const ComponentVector& v) {
                    return smear(FieldKind::create, k, f, v, n_cap);
                });
                double cmax = C.entries.jacobiSvd().singularValues()(0);
                over_plus = std::max(over_plus, (cmax - bound) / bound);
                // the unsymmetrized creator is a multiple of an isometry on the
                // symmetric domain: every singular value sits on the bound
                auto U = materialize(cod, dom, [&](const ComponentVector& v) {
                    return smear_unsym(k, f, v, n_cap);
                });
                MatrixC Q = symmetric_basis(*cod);
                Eigen::VectorXd sv = (U.entries * Q).jacobiSvd().singularValues();
                eq_resid = std::max(eq_resid, std::abs(sv(0) - bound) / bound);
                eq_resid = std::max(eq_resid, std::abs(sv(sv.size() - 1) - bound) / bound);
            }
        }
        out.push_back(Check::of("annihilator_norm_bound_k" + std::to_string(k),
                                "smeared annihilator norm bounded by the falling-factorial root",
                                std::max(0.0, over_minus), 1e-10));
        out.push_back(Check::of("creator_norm_bound_k" + std::to_string(k),
                                "smeared creator norm bounded by the rising-factorial root",
                                std::max(0.0, over_plus), 1e-10));
        out.push_back(Check::of("unsym_creator_norm_equality_k" + std::to_string(k),
                                "the unsymmetrized creator attains its bound as an equality",
                                eq_resid, 1e-10));
    }
    return out;
}

inline std::vector<Check> checks_interaction(int L, int n_max, int hk_max, int vectors_per_pair,
                                             std::uint64_t seed)
{
    std::vector<Check> out;
    Xoshiro256ss rng(seed);
    Lattice lat = Lattice::of(L);
    for (int h = 1; h <= hk_max; ++h)
        for (int k = 1; k <= hk_max; ++k) {
            std::vector<int> sectors;
            for (int n = k; n <= n_max; ++n)
                if (n - k + h <= n_max) sectors.push_back(n);
            if (sectors.empty()) continue;
            double worst = 0.0;
            for (int done = 0; done < vectors_per_pair; ++done) {
                int n = sectors[static_cast<std::size_t>(done) % sectors.size()];
                auto src = random_symmetric(rng, ComponentSpace::make(lat, n));
                auto d = interaction_direct(h, k, src, n_max);
                auto c = interaction_composed(h, k, src, n_max);
                worst = std::max(worst, (d.amplitudes - c.amplitudes).cwiseAbs().maxCoeff());
            }
            out.push_back(Check::of(
                "interaction_routes_agree_h" + std::to_string(h) + "_k" + std::to_string(k),
                "closed-form interaction action equals the composed construction", worst, 1e-12));
        }
    // pairing of the unsymmetrized interaction kernels
    {
        double worst = 0.0;
        for (int h = 1; h <= hk_max; ++h)
            for (int k = 1; k <= hk_max; ++k) {
                int n = std::max(k, 2);
                int m = n - k + h;
                if (m < h || n > n_max || m > n_max) continue;
                auto a = random_symmetric(rng, ComponentSpace::make(lat, n));
                auto b = random_symmetric(rng, ComponentSpace::make(lat, m));
                ComponentVector ga = ComponentVector::zero(ComponentSpace::make(lat, m));
                ComponentVector gb = ComponentVector::zero(ComponentSpace::make(lat, n));
                for (SiteId x = 0; x < L; ++x) {
                    ga.amplitudes += create_k_unsym(x, h, annihilate_k_at(x, k, a), n_max).amplitudes;
                    gb.amplitudes += create_k_unsym(x, k, annihilate_k_at(x, h, b), n_max).amplitudes;
                }
                worst = std::max(worst, std::abs(inner_product(ga, b) - inner_product(a, gb)));
            }
        out.push_back(Check::of("interaction_kernels_pair_symmetrically",
                                "swapped-order interaction kernels pair to equal inner products",
                                worst, 1e-12));
    }
    // self-adjointness of coupling * (H^h_k + H^k_h) on the symmetric subspace
    {
        FockBasis fb = FockBasis::make(lat, std::min(n_max, 3));
        CouplingSpec spec;
        spec.terms.push_back({2, 1, 0.7});
        auto H = build_interaction_hamiltonian(fb, spec);
        std::vector<MatrixC> qs;
        std::int64_t symdim = 0;
        for (const auto& s : fb.sectors) {
            qs.push_back(symmetric_basis(*s));
            symdim += qs.back().cols();
        }
        MatrixC Q = MatrixC::Zero(fb.dim, symdim);
        std::int64_t col = 0;
        for (std::size_t i = 0; i < qs.size(); ++i) {
            Q.block(fb.offsets[i], col, qs[i].rows(), qs[i].cols()) = qs[i];
            col += qs[i].cols();
        }
        MatrixC Hs = Q.adjoint() * H.entries * Q;
        double resid = (Hs - Hs.adjoint()).cwiseAbs().maxCoeff();
        out.push_back(Check::of("interaction_hamiltonian_selfadjoint",
                                "the emission-absorption Hamiltonian is self-adjoint", resid, 1e-12));

        CouplingSpec empty;
        auto H0 = build_interaction_hamiltonian(fb, empty);
        out.push_back(Check::of("empty_coupling_gives_zero",
                                "an empty coupling list yields the zero operator",
                                H0.entries.cwiseAbs().maxCoeff(), 0.0));
    }
    // the pair-creation chain doubles the one-particle norm
    {
        auto s1 = ComponentSpace::make(lat, 1);
        auto psi1 = random_component(rng, s1);
        ComponentVector psi2 = ComponentVector::zero(ComponentSpace::make(lat, 2));
        for (SiteId x = 0; x < L; ++x)
            psi2.amplitudes += create_k_at(x, 2, annihilate_k_at(x, 1, psi1), 2).amplitudes;
        double resid = std::abs(norm2(psi2) - 2.0 * norm2(psi1));
        out.push_back(Check::of("pair_creation_chain_doubles_norm",
                                "creating a coincident pair from one particle doubles the squared norm",
                                resid, 1e-12));
    }
    // banded sector structure of the Fock matrices
    {
        FockBasis fb = FockBasis::make(lat, std::min(n_max, 3));
        Smearing f = Smearing::of(lat, random_vector(rng, L));
        double resid = 0.0;
        for (int k = 1; k <= hk_max; ++k) {
            MatrixC M = fock_field_matrix(fb, k, f);
            for (int nf = 0; nf <= fb.n_max; ++nf)
                for (int nt = 0; nt <= fb.n_max; ++nt) {
                    if (std::abs(nt - nf) == k) continue;
                    resid = std::max(resid, M.block(fb.offsets[static_cast<std::size_t>(nt)],
                                                    fb.offsets[static_cast<std::size_t>(nf)],
                                                    fb.sectors[static_cast<std::size_t>(nt)]->dim(),
                                                    fb.sectors[static_cast<std::size_t>(nf)]->dim())
                                                .cwiseAbs()
                                                .maxCoeff());
                }
        }
        out.push_back(Check::of("fock_matrices_strictly_banded",
                                "field operators shift the particle number by exactly their order",
                                resid, 0.0));
    }
    return out;
}

inline std::vector<Check> checks_cyclicity(int L, int n_max, int k_max)
{
    auto probe = vacuum_cyclicity_probe(Lattice::of(L), n_max, k_max);
    std::vector<Check> out;
    out.push_back(Check::of(
        "vacuum_cyclicity_rank_" + std::to_string(probe.rank) + "_of_" +
            std::to_string(probe.symmetric_dim),
        "field-operator words on the vacuum span the truncated symmetric space",
        static_cast<double>(probe.symmetric_dim - probe.rank), 0.0));
    return out;
}

// ---------------------------------------------------------------------------
// free Hamiltonian
// ---------------------------------------------------------------------------

inline std::vector<Check> checks_freeham_1p(int J, double R, double lambda, double mass)
{
    std::vector<Check> out;
    auto p = build_1p(J, R, lambda, mass);
    out.push_back(Check::of("stiffness_exactly_symmetric", "the quadratic form matrix is symmetric",
                            (p.K - p.K.transpose()).cwiseAbs().maxCoeff(), 0.0));
    Spectrum sp = spectrum(p);
    out.push_back(Check::of("pencil_positive", "the coupled radial operator is positive",
                            std::max(0.0, -sp.eigenvalues.minCoeff()), 1e-10));
    Eigen::MatrixXd G = sp.vectors.transpose() * p.M.asDiagonal() * sp.vectors;
    out.push_back(Check::of("eigenvectors_mass_orthonormal", "eigenvectors are orthonormal in the mass geometry",
                            (G - Eigen::MatrixXd::Identity(J, J)).cwiseAbs().maxCoeff(), 1e-10));
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(J);
    psi0(0) = 1.0;
    std::vector<double> times;
    for (int i = 0; i <= 100; ++i) times.push_back(0.1 * i);
    auto tr = evolve(p, psi0, times);
    double drift = 0.0;
    for (double v : tr.norm_total) drift = std::max(drift, std::abs(v - tr.norm_total[0]));
    out.push_back(Check::of("evolution_conserves_mass_norm", "spectral evolution conserves the mass norm",
                            drift / tr.norm_total[0], 1e-10));
    double reg1 = 0.0;
    for (std::size_t i = 0; i < tr.times.size(); ++i)
        if (std::abs(tr.times[i] - 1.0) < 1e-12) reg1 = tr.norm_regular[i];
    out.push_back(Check::of("singular_start_leaks_into_regular",
                            "evolution moves norm from the singular into the regular component",
                            1e-6 - reg1, 0.0));
    auto mix = mixing_diagnostics(p);
    out.push_back(Check::of("singular_node_not_an_eigenvector",
                            "the singular unit vector stays away from every eigenvector",
                            1e-4 - mix.min_angle, 0.0));
    auto ctrl = mixing_diagnostics(decouple_node0(p));
    out.push_back(Check::of("decoupled_control_aligns",
                            "with the coupling removed the singular node is an exact eigenvector",
                            ctrl.min_angle, 1e-10));
    return out;
}

inline std::vector<Check> checks_freeham_2p(int J, double R, int Lc, double lambda, double mass)
{
    std::vector<Check> out;
    auto tp = build_2p(J, R, Lc, lambda, mass);
    out.push_back(Check::of("two_particle_stiffness_symmetric", "the Kronecker-sum stiffness is symmetric",
                            (tp.K - tp.K.transpose()).cwiseAbs().maxCoeff(), 0.0));
    Spectrum sp = spectrum(tp);
    out.push_back(Check::of("two_particle_pencil_positive", "the two-particle coupled operator is positive",
                            std::max(0.0, -sp.eigenvalues.minCoeff()), 1e-10));
    // cross-check: eigenvalues are the union over center modes of shifted
    // one-particle spectra
    Spectrum s1 = spectrum(tp.radial);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esc(tp.Kc);
    std::vector<double> expected;
    for (int c = 0; c < Lc; ++c)
        for (int i = 0; i < s1.eigenvalues.size(); ++i)
            expected.push_back(s1.eigenvalues(i) + esc.eigenvalues()(c));
    std::sort(expected.begin(), expected.end());
    double worst = 0.0;
    for (int i = 0; i < sp.eigenvalues.size(); ++i)
        worst = std::max(worst, std::abs(sp.eigenvalues(i) - expected[static_cast<std::size_t>(i)]));
    out.push_back(Check::of("center_mode_block_diagonalization",
                            "the spectrum is the union of center-mode-shifted radial spectra",
                            worst, 1e-8));
    return out;
}

}  // namespace coinfock

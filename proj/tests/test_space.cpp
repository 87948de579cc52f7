#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "coinfock/space.hpp"
#include "coinfock/verify.hpp"

using namespace coinfock;

TEST_CASE("sector space basics")
{
    auto sp = SectorSpace::make(Lattice::of(3), 2);
    REQUIRE(sp->dim() == 9);
    SECTION("weights are one off the diagonal, two on it")
    {
        for (std::int64_t c = 0; c < sp->dim(); ++c) {
            auto s = sp->sites_of(c);
            REQUIRE(sp->weight(c) == (s[0] == s[1] ? 2u : 1u));
        }
    }
    SECTION("config codec round-trips")
    {
        for (std::int64_t c = 0; c < sp->dim(); ++c) REQUIRE(sp->config_id_of(sp->sites_of(c)) == c);
    }
    REQUIRE_THROWS_AS(SectorSpace::make(Lattice::of(64), 5), SectorTooLarge);
    REQUIRE_THROWS_AS(Lattice::of(0), BadParameter);
}

TEST_CASE("inner product")
{
    const int L = 4;
    auto sp = SectorSpace::make(Lattice::of(L), 2);
    SECTION("constant vector norm counts the weighted cells")
    {
        WeightedVector ones = WeightedVector::zero(sp);
        ones.amplitudes.setOnes();
        REQUIRE(norm2(ones) == Catch::Approx(static_cast<double>(L * L + L)));
    }
    SECTION("a point mass on an all-distinct configuration has norm one")
    {
        WeightedVector v = WeightedVector::zero(sp);
        v.amplitudes[sp->config_id_of({0, 1})] = 1.0;
        REQUIRE(norm2(v) == Catch::Approx(1.0));
    }
    SECTION("space mismatch is rejected")
    {
        auto other = WeightedVector::zero(SectorSpace::make(Lattice::of(L), 1));
        WeightedVector v = WeightedVector::zero(sp);
        REQUIRE_THROWS_AS(inner_product(v, other), SpaceMismatch);
    }
    SECTION("conjugate-linear in the first argument")
    {
        Xoshiro256ss rng(3);
        auto a = random_weighted(rng, sp);
        auto b = random_weighted(rng, sp);
        Complex z{0.5, -2.0};
        WeightedVector za = a;
        za.amplitudes *= z;
        REQUIRE(std::abs(inner_product(za, b) - std::conj(z) * inner_product(a, b)) < 1e-12);
    }
}

TEST_CASE("decompose")
{
    const int L = 3;
    auto sp = SectorSpace::make(Lattice::of(L), 2);
    SECTION("component table sizes split off-diagonal and diagonal cells")
    {
        WeightedVector ones = WeightedVector::zero(sp);
        ones.amplitudes.setOnes();
        auto d = decompose(ones);
        REQUIRE(d.partitions.size() == 2);
        std::size_t diag = d.partitions[0].num_blocks() == 1 ? 0 : 1;
        REQUIRE(d.config_ids[diag].size() == 3);
        REQUIRE(d.config_ids[1 - diag].size() == 6);
    }
    SECTION("a diagonal point mass has a single component")
    {
        WeightedVector v = WeightedVector::zero(sp);
        v.amplitudes[sp->config_id_of({2, 2})] = 1.0;
        auto d = decompose(v);
        int nonzero = 0;
        for (std::size_t i = 0; i < d.partitions.size(); ++i)
            if (d.component_norm2[i] > 0) {
                ++nonzero;
                REQUIRE(d.partitions[i].num_blocks() == 1);
            }
        REQUIRE(nonzero == 1);
    }
    SECTION("round trip and exact norm split on random vectors")
    {
        for (const auto& c : checks_measure_decomposition(4, 3, 50, 17)) {
            INFO(c.name << " residual=" << c.residual);
            REQUIRE(c.pass);
        }
    }
}

TEST_CASE("permute and symmetrize")
{
    const int L = 3;
    auto sp = SectorSpace::make(Lattice::of(L), 2);
    auto swap = Permutation::of(sp->indices(), {2, 1});
    SECTION("transposition relabels configurations")
    {
        WeightedVector v = WeightedVector::zero(sp);
        v.amplitudes[sp->config_id_of({0, 1})] = 1.0;
        auto w = permute(swap, v);
        REQUIRE(w.amplitudes[sp->config_id_of({1, 0})] == Complex{1.0, 0.0});
        REQUIRE(w.amplitudes[sp->config_id_of({0, 1})] == Complex{0.0, 0.0});
    }
    SECTION("identity fixes everything")
    {
        Xoshiro256ss rng(5);
        auto a = random_weighted(rng, sp);
        auto b = permute(Permutation::identity(sp->indices()), a);
        REQUIRE((b.amplitudes - a.amplitudes).cwiseAbs().maxCoeff() == 0.0);
    }
    SECTION("symmetric input is unchanged")
    {
        Xoshiro256ss rng(6);
        auto a = symmetrize(random_weighted(rng, sp));
        auto b = symmetrize(a);
        REQUIRE((b.amplitudes - a.amplitudes).cwiseAbs().maxCoeff() < 1e-15);
    }
    SECTION("unitarity, projector and invariance properties")
    {
        for (const auto& c : checks_permutation_invariance(3, 3, 23)) {
            INFO(c.name << " residual=" << c.residual);
            REQUIRE(c.pass);
        }
    }
}

TEST_CASE("plane measures")
{
    const int L = 3;
    auto sp = SectorSpace::make(Lattice::of(L), 2);
    std::vector<std::int64_t> all;
    for (std::int64_t c = 0; c < sp->dim(); ++c) all.push_back(c);
    REQUIRE(measure_of(Partition::finest(sp->indices()), all, *sp) == 9);
    std::vector<std::int64_t> diag;
    for (int s = 0; s < L; ++s) diag.push_back(sp->config_id_of({s, s}));
    REQUIRE(measure_of(Partition::coarsest(sp->indices()), diag, *sp) == 3);
    REQUIRE(measure_total(all, *sp) == 12);
}

TEST_CASE("csv snapshot")
{
    auto sp = SectorSpace::make(Lattice::of(2), 2);
    WeightedVector v = WeightedVector::zero(sp);
    v.amplitudes[sp->config_id_of({1, 1})] = Complex{0.5, -1.0};
    std::ostringstream os;
    write_csv(v, os);
    std::string text = os.str();
    REQUIRE(text.find("config,weight,re,im") == 0);
    REQUIRE(text.find("1 1,2,0.5,-1") != std::string::npos);
}

TEST_CASE("scalar sector")
{
    auto sp = SectorSpace::make(Lattice::of(5), 0);
    REQUIRE(sp->dim() == 1);
    WeightedVector v = WeightedVector::zero(sp);
    v.amplitudes[0] = Complex{3.0, -4.0};
    REQUIRE(norm2(v) == Catch::Approx(25.0));
    auto d = decompose(v);
    REQUIRE(d.partitions.size() == 1);
    REQUIRE(d.component_norm2[0] == Catch::Approx(25.0));
    auto r = recompose(d, sp);
    REQUIRE(r.amplitudes[0] == v.amplitudes[0]);
}

TEST_CASE("fock vector")
{
    auto f = FockVector::vacuum(Lattice::of(2), 3);
    REQUIRE(f.n_max() == 3);
    REQUIRE(f.sectors[0].amplitudes[0] == Complex{1.0, 0.0});
    REQUIRE(norm2(f.sectors[2]) == 0.0);
}

#include <catch2/catch_amalgamated.hpp>

#include "coinfock/components.hpp"
#include "coinfock/verify.hpp"

using namespace coinfock;

TEST_CASE("component space dimensions")
{
    // sum over partitions of L^(number of blocks)
    REQUIRE(ComponentSpace::make(Lattice::of(3), 0)->dim() == 1);
    REQUIRE(ComponentSpace::make(Lattice::of(3), 1)->dim() == 3);
    REQUIRE(ComponentSpace::make(Lattice::of(3), 2)->dim() == 12);   // 9 + 3
    REQUIRE(ComponentSpace::make(Lattice::of(3), 3)->dim() == 57);   // 27 + 3*9 + 3
    REQUIRE(ComponentSpace::make(Lattice::of(2), 2)->dim() == 6);
}

TEST_CASE("sheet index round trip")
{
    auto cs = ComponentSpace::make(Lattice::of(3), 3);
    for (std::int64_t i = 0; i < cs->dim(); ++i) {
        auto sh = cs->sheet_of(i);
        REQUIRE(cs->index(sh.partition, sh.block_values) == i);
    }
}

TEST_CASE("embedding is isometric and matches the weighted norm")
{
    Xoshiro256ss rng(9);
    for (int n = 1; n <= 3; ++n) {
        auto sp = SectorSpace::make(Lattice::of(3), n);
        auto a = random_weighted(rng, sp);
        auto b = random_weighted(rng, sp);
        REQUIRE(std::abs(inner_product(embed(a), embed(b)) - inner_product(a, b)) < 1e-13);
    }
}

TEST_CASE("component dimension equals total weighted measure")
{
    for (int n = 1; n <= 3; ++n) {
        auto sp = SectorSpace::make(Lattice::of(3), n);
        std::vector<std::int64_t> all;
        for (std::int64_t c = 0; c < sp->dim(); ++c) all.push_back(c);
        auto cs = ComponentSpace::make(Lattice::of(3), n);
        REQUIRE(static_cast<std::uint64_t>(cs->dim()) == measure_total(all, *sp));
    }
}

TEST_CASE("permutation action on sheets")
{
    auto cs = ComponentSpace::make(Lattice::of(3), 3);
    Xoshiro256ss rng(4);
    auto a = random_component(rng, cs);
    SECTION("unitary")
    {
        for (const auto& sigma : all_pos_perms(3)) {
            auto b = apply_permutation(sigma, a);
            REQUIRE(std::abs(norm2(b) - norm2(a)) < 1e-14);
        }
    }
    SECTION("composes")
    {
        auto perms = all_pos_perms(3);
        const auto& s1 = perms[3];
        const auto& s2 = perms[4];
        PosPerm s12(3);
        for (int i = 0; i < 3; ++i) s12[static_cast<std::size_t>(i)] = s1[static_cast<std::size_t>(s2[static_cast<std::size_t>(i)])];
        auto lhs = apply_permutation(s1, apply_permutation(s2, a));
        auto rhs = apply_permutation(s12, a);
        REQUIRE((lhs.amplitudes - rhs.amplitudes).cwiseAbs().maxCoeff() < 1e-14);
    }
    SECTION("rejects a wrong-sized permutation")
    {
        REQUIRE_THROWS_AS(apply_permutation(PosPerm{0, 1}, a), NotABijection);
    }
    SECTION("commutes with the embedding of config relabeling")
    {
        auto sp = SectorSpace::make(Lattice::of(3), 3);
        auto aw = random_weighted(rng, sp);
        auto sigma = Permutation::of(sp->indices(), {2, 3, 1});
        PosPerm pos{1, 2, 0};  // same map on positions
        auto lhs = embed(permute(sigma, aw));
        auto rhs = apply_permutation(pos, embed(aw));
        REQUIRE((lhs.amplitudes - rhs.amplitudes).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("symmetrizer on components")
{
    auto cs = ComponentSpace::make(Lattice::of(2), 2);
    Xoshiro256ss rng(8);
    auto a = random_component(rng, cs);
    auto s = symmetrize(a);
    auto ss = symmetrize(s);
    REQUIRE((ss.amplitudes - s.amplitudes).cwiseAbs().maxCoeff() < 1e-15);
    for (const auto& sigma : all_pos_perms(2)) {
        auto b = apply_permutation(sigma, s);
        REQUIRE((b.amplitudes - s.amplitudes).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("symmetric orbit basis")
{
    SECTION("orthonormal columns spanning the fixed subspace")
    {
        auto cs = ComponentSpace::make(Lattice::of(2), 2);
        auto Q = symmetric_basis(*cs);
        REQUIRE(Q.cols() == 5);  // 3 symmetric pair states + 2 glued states
        MatrixC G = Q.adjoint() * Q;
        REQUIRE((G - MatrixC::Identity(Q.cols(), Q.cols())).cwiseAbs().maxCoeff() < 1e-14);
    }
    SECTION("projector from the basis equals the symmetrizer")
    {
        auto cs = ComponentSpace::make(Lattice::of(3), 3);
        auto Q = symmetric_basis(*cs);
        Xoshiro256ss rng(2);
        auto a = random_component(rng, cs);
        VectorC proj = Q * (Q.adjoint() * a.amplitudes);
        auto s = symmetrize(a);
        REQUIRE((proj - s.amplitudes).cwiseAbs().maxCoeff() < 1e-13);
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "coinfock/fieldops.hpp"
#include "coinfock/verify.hpp"

using namespace coinfock;

namespace {

ComponentVector one_particle(Lattice lat, const VectorC& f)
{
    ComponentVector v = ComponentVector::zero(ComponentSpace::make(lat, 1));
    v.amplitudes = f;
    return v;
}

}  // namespace

TEST_CASE("pointwise annihilation")
{
    Lattice lat = Lattice::of(3);
    SECTION("one particle evaluates the wave function")
    {
        VectorC f(3);
        f << Complex{1, 0}, Complex{0, 2}, Complex{-1, 1};
        auto v = one_particle(lat, f);
        for (SiteId x = 0; x < 3; ++x) {
            auto out = annihilate_k_at(x, 1, v);
            REQUIRE(out.space->particles() == 0);
            REQUIRE(std::abs(out.amplitudes[0] - f[x]) < 1e-15);
        }
    }
    SECTION("double annihilation reads the glued component scaled by sqrt 2")
    {
        Xoshiro256ss rng(1);
        auto sp = SectorSpace::make(lat, 2);
        auto aw = random_weighted(rng, sp);
        auto a = embed(aw);
        for (SiteId x = 0; x < 3; ++x) {
            auto out = annihilate_k_at(x, 2, a);
            Complex expected = std::sqrt(2.0) * aw.amplitudes[sp->config_id_of({x, x})];
            REQUIRE(std::abs(out.amplitudes[0] - expected) < 1e-14);
        }
    }
    SECTION("annihilating more particles than present gives zero")
    {
        Xoshiro256ss rng(2);
        auto a = random_component(rng, ComponentSpace::make(lat, 2));
        auto out = annihilate_k_at(0, 3, a);
        REQUIRE(out.amplitudes.norm() == 0.0);
    }
}

TEST_CASE("pointwise creation")
{
    Lattice lat = Lattice::of(3);
    SECTION("creation from the vacuum is a point mass")
    {
        ComponentVector vac = ComponentVector::zero(ComponentSpace::make(lat, 0));
        vac.amplitudes[0] = 1.0;
        for (SiteId x = 0; x < 3; ++x) {
            auto out = create_k_at(x, 1, vac, 4);
            for (SiteId y = 0; y < 3; ++y)
                REQUIRE(std::abs(out.amplitudes[y] - (y == x ? 1.0 : 0.0)) < 1e-15);
        }
    }
    SECTION("unsymmetrized creation from the vacuum agrees with the symmetrized one")
    {
        ComponentVector vac = ComponentVector::zero(ComponentSpace::make(lat, 0));
        vac.amplitudes[0] = 1.0;
        auto a = create_k_at(1, 1, vac, 4);
        auto b = create_k_unsym(1, 1, vac, 4);
        REQUIRE((a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() < 1e-15);
    }
    SECTION("symmetrizing the unsymmetrized pair creation gives the creator")
    {
        Xoshiro256ss rng(3);
        auto psi1 = random_component(rng, ComponentSpace::make(lat, 1));
        for (SiteId x = 0; x < 3; ++x) {
            auto lhs = symmetrize(create_k_unsym(x, 2, psi1, 4));
            auto rhs = create_k_at(x, 2, psi1, 4);
            REQUIRE((lhs.amplitudes - rhs.amplitudes).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
    SECTION("creation preserves symmetry")
    {
        Xoshiro256ss rng(10);
        for (int n : {1, 2})
            for (int k : {1, 2}) {
                auto a = random_symmetric(rng, ComponentSpace::make(lat, n));
                auto out = create_k_at(1, k, a, 4);
                auto sym = symmetrize(out);
                REQUIRE((sym.amplitudes - out.amplitudes).cwiseAbs().maxCoeff() < 1e-14);
            }
    }
    SECTION("truncation is enforced")
    {
        Xoshiro256ss rng(4);
        auto a = random_component(rng, ComponentSpace::make(lat, 2));
        REQUIRE_THROWS_AS(create_k_at(0, 2, a, 3), TruncationExceeded);
        REQUIRE_THROWS_AS(create_k_unsym(0, 1, a, 2), TruncationExceeded);
    }
}

TEST_CASE("adjointness of creation against annihilation")
{
    for (int L : {3, 4})
        for (const auto& c : checks_adjointness(L, 3, 2, 31)) {
            INFO("L=" << L << " " << c.name << " residual=" << c.residual);
            REQUIRE(c.pass);
        }
}

TEST_CASE("worked two-particle chain")
{
    Lattice lat = Lattice::of(3);
    Xoshiro256ss rng(5);
    auto psi1 = random_component(rng, ComponentSpace::make(lat, 1));
    ComponentVector psi2 = ComponentVector::zero(ComponentSpace::make(lat, 2));
    for (SiteId x = 0; x < 3; ++x)
        psi2.amplitudes += create_k_at(x, 2, annihilate_k_at(x, 1, psi1), 2).amplitudes;
    SECTION("squared norm doubles")
    {
        REQUIRE(norm2(psi2) == Catch::Approx(2.0 * norm2(psi1)).epsilon(1e-12));
    }
    SECTION("support sits on the glued plane with value sqrt2 psi1")
    {
        auto cs = psi2.space;
        // glued plane: single-block partition
        int glued = -1;
        for (int p = 0; p < cs->num_partitions(); ++p)
            if (cs->num_blocks(p) == 1) glued = p;
        REQUIRE(glued >= 0);
        for (std::int64_t i = 0; i < cs->dim(); ++i) {
            auto sh = cs->sheet_of(i);
            Complex expected = sh.partition == glued
                                   ? std::sqrt(2.0) * psi1.amplitudes[sh.block_values[0]]
                                   : Complex{0.0, 0.0};
            REQUIRE(std::abs(psi2.amplitudes[i] - expected) < 1e-14);
        }
    }
}

TEST_CASE("smeared operators")
{
    Lattice lat = Lattice::of(3);
    Xoshiro256ss rng(6);
    SECTION("one-particle overlap of smeared creators")
    {
        Smearing f = Smearing::of(lat, random_vector(rng, 3));
        Smearing g = Smearing::of(lat, random_vector(rng, 3));
        ComponentVector vac = ComponentVector::zero(ComponentSpace::make(lat, 0));
        vac.amplitudes[0] = 1.0;
        auto a = smear(FieldKind::create, 1, f, vac, 4);
        auto b = smear(FieldKind::create, 1, g, vac, 4);
        REQUIRE(std::abs(inner_product(a, b) - f.values.dot(g.values)) < 1e-13);
    }
    SECTION("norm bounds and the attained equality")
    {
        for (const auto& c : checks_norm_bounds(4, 3, 2, 2, 37)) {
            INFO(c.name << " residual=" << c.residual);
            REQUIRE(c.pass);
        }
    }
    SECTION("combined field operator is self-adjoint on the symmetric truncation")
    {
        FockBasis fb = FockBasis::make(lat, 3);
        Smearing f = Smearing::of(lat, random_vector(rng, 3));
        for (int k : {1, 2}) {
            MatrixC M = fock_field_matrix(fb, k, f);
            MatrixC Q = MatrixC::Zero(fb.dim, 0);
            std::int64_t symdim = 0;
            std::vector<MatrixC> qs;
            for (const auto& s : fb.sectors) {
                qs.push_back(symmetric_basis(*s));
                symdim += qs.back().cols();
            }
            Q = MatrixC::Zero(fb.dim, symdim);
            std::int64_t col = 0;
            for (std::size_t i = 0; i < qs.size(); ++i) {
                Q.block(fb.offsets[i], col, qs[i].rows(), qs[i].cols()) = qs[i];
                col += qs[i].cols();
            }
            MatrixC Ms = Q.adjoint() * M * Q;
            REQUIRE((Ms - Ms.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("commutation rules")
{
    for (const auto& c : checks_commutators(3, 4, 2, 2, 3, 41)) {
        INFO(c.name << " residual=" << c.residual);
        REQUIRE(c.pass);
    }
    SECTION("matched orders give the normalized constant")
    {
        Lattice lat = Lattice::of(3);
        VectorC fv = VectorC::Zero(3);
        fv[1] = 1.0;
        Smearing f = Smearing::of(lat, fv);
        auto rep = commutator_check(lat, 3, 1, 1, f, f);
        REQUIRE(std::abs(rep.expected_constant - Complex{1.0, 0.0}) < 1e-15);
        REQUIRE(rep.scalar_residual < 1e-12);
    }
    SECTION("mismatched orders commute")
    {
        Lattice lat = Lattice::of(3);
        Xoshiro256ss rng(7);
        Smearing f = Smearing::of(lat, random_vector(rng, 3));
        Smearing g = Smearing::of(lat, random_vector(rng, 3));
        auto rep = commutator_check(lat, 4, 1, 2, f, g);
        REQUIRE(rep.expected_constant == Complex{0.0, 0.0});
        REQUIRE(rep.scalar_residual < 1e-12);
    }
    SECTION("matched second order scales by two")
    {
        Lattice lat = Lattice::of(3);
        Xoshiro256ss rng(8);
        Smearing f = Smearing::of(lat, random_vector(rng, 3));
        Smearing g = Smearing::of(lat, random_vector(rng, 3));
        auto rep = commutator_check(lat, 4, 2, 2, f, g);
        REQUIRE(std::abs(rep.expected_constant - 2.0 * f.values.dot(g.values)) < 1e-14);
        REQUIRE(rep.scalar_residual < 1e-10);
    }
}

TEST_CASE("interaction operators")
{
    Lattice lat = Lattice::of(3);
    Xoshiro256ss rng(9);
    SECTION("identity on the one-particle sector")
    {
        auto psi1 = random_component(rng, ComponentSpace::make(lat, 1));
        auto out = interaction_direct(1, 1, psi1, 4);
        REQUIRE((out.amplitudes - psi1.amplitudes).cwiseAbs().maxCoeff() < 1e-14);
    }
    SECTION("number-like action on fully separated sheets")
    {
        const int n = 3;
        auto src = random_symmetric(rng, ComponentSpace::make(lat, n));
        auto out = interaction_direct(1, 1, src, 4);
        auto cs = src.space;
        for (std::int64_t i = 0; i < cs->dim(); ++i) {
            auto sh = cs->sheet_of(i);
            if (cs->num_blocks(sh.partition) != n) continue;
            bool distinct = true;
            for (std::size_t a = 0; a < sh.block_values.size(); ++a)
                for (std::size_t b = a + 1; b < sh.block_values.size(); ++b)
                    if (sh.block_values[a] == sh.block_values[b]) distinct = false;
            if (!distinct) continue;
            REQUIRE(std::abs(out.amplitudes[i] - static_cast<double>(n) * src.amplitudes[i]) < 1e-13);
        }
    }
    SECTION("pair emission from one particle lands on the glued plane")
    {
        auto psi1 = random_component(rng, ComponentSpace::make(lat, 1));
        auto out = interaction_direct(2, 1, psi1, 4);
        auto cs = out.space;
        for (std::int64_t i = 0; i < cs->dim(); ++i) {
            auto sh = cs->sheet_of(i);
            Complex expected = cs->num_blocks(sh.partition) == 1
                                   ? std::sqrt(2.0) * psi1.amplitudes[sh.block_values[0]]
                                   : Complex{0.0, 0.0};
            REQUIRE(std::abs(out.amplitudes[i] - expected) < 1e-14);
        }
    }
    SECTION("vanishes when the annihilation order exceeds the sector")
    {
        auto psi1 = random_component(rng, ComponentSpace::make(lat, 1));
        auto out = interaction_direct(1, 2, psi1, 4);
        REQUIRE(out.amplitudes.norm() == 0.0);
    }
    SECTION("both routes, pairing, self-adjointness, worked example, banding")
    {
        for (const auto& c : checks_interaction(3, 4, 2, 25, 43)) {
            INFO(c.name << " residual=" << c.residual);
            REQUIRE(c.pass);
        }
    }
}

TEST_CASE("vacuum cyclicity probe")
{
    auto probe = vacuum_cyclicity_probe(Lattice::of(2), 2, 2);
    REQUIRE(probe.symmetric_dim == 8);
    REQUIRE(probe.rank == probe.symmetric_dim);
}

TEST_CASE("operator matrix export")
{
    Lattice lat = Lattice::of(2);
    auto dom = ComponentSpace::make(lat, 0);
    auto cod = ComponentSpace::make(lat, 1);
    auto M = materialize(dom, cod, [&](const ComponentVector& v) { return create_k_at(1, 1, v, 4); });
    std::ostringstream os;
    write_matrix_csv(M, os);
    REQUIRE(os.str() == "row,col,re,im\n1,0,1,0\n");
}

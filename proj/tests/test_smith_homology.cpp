#include <catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "rackhom/rackhom.hpp"
#include "support.hpp"

using namespace rackhom;
using test_support::Group;
using test_support::group_of;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

void check_decomposition(const IntMatrix& m)
{
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.V * s.V_inverse == IntMatrix::identity(m.cols()));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    auto f = s.invariant_factors();
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j)
                CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        CHECK(f[i] > 0);
        CHECK(s.D(i, i) == f[i]);
        if (i + 1 < f.size())
            CHECK(f[i + 1] % f[i] == 0);
    }
}

}   // namespace

TEST_CASE("Smith normal form of small matrices")
{
    auto s = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(s.invariant_factors() == std::vector<Integer>{2, 6, 12});
    CHECK(smith_normal_form(from_rows({{4, 0}, {0, 6}})).invariant_factors() ==
          std::vector<Integer>{2, 12});
    CHECK(smith_normal_form(from_rows({{0, 0}, {0, 0}})).invariant_factors().empty());
    CHECK(determinant(from_rows({{2, 1}, {7, 4}})) == 1);
    check_decomposition(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    check_decomposition(IntMatrix(0, 3));
    check_decomposition(IntMatrix(2, 0));
}

TEST_CASE("Smith normal form on random matrices")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 60; ++trial)
    {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = (rng() % 3 == 0) ? 0 : entry(rng);
        check_decomposition(m);
        if (r == c)
        {
            Integer prod = 1;
            auto f = smith_normal_form(m).invariant_factors();
            for (const auto& d : f)
                prod *= d;
            CHECK((f.size() == r ? prod : Integer(0)) == abs(determinant(m)));
        }
    }
}

TEST_CASE("Smith normal form does not overflow")
{
    IntMatrix m(2, 2);
    m(0, 0) = Integer(1) << 80;
    m(0, 1) = 3;
    m(1, 0) = 5;
    m(1, 1) = Integer(1) << 70;
    check_decomposition(m);
}

TEST_CASE("homology of trivial racks")
{
    CHECK(group_of(trivial_rack(1), 0, SpaceKind::RackSpace) == Group{1, {}});
    for (std::size_t n = 0; n <= 4; ++n)
    {
        CHECK(group_of(trivial_rack(1), n, SpaceKind::RackSpace) == Group{1, {}});
        CHECK(group_of(trivial_rack(1), n, SpaceKind::ExtendedRackSpace) == Group{1, {}});
    }
    for (std::size_t n = 0; n <= 3; ++n)
    {
        CHECK(group_of(trivial_rack(2), n, SpaceKind::RackSpace) == Group{std::size_t(1) << n, {}});
        CHECK(group_of(trivial_rack(2), n, SpaceKind::ExtendedRackSpace) ==
              Group{std::size_t(2) << n, {}});
    }
    const std::size_t pow3[] = {1, 3, 9, 27, 81};
    for (std::size_t n = 0; n <= 3; ++n)
    {
        CHECK(group_of(trivial_rack(3), n, SpaceKind::RackSpace) == Group{pow3[n], {}});
        CHECK(group_of(trivial_rack(3), n, SpaceKind::ExtendedRackSpace) == Group{pow3[n + 1], {}});
    }
}

TEST_CASE("homology over the three-colour rack")
{
    Rack t = dihedral_rack(3);
    CHECK(group_of(t, 0, SpaceKind::RackSpace) == Group{1, {}});
    CHECK(group_of(t, 1, SpaceKind::RackSpace) == Group{1, {}});
    CHECK(group_of(t, 2, SpaceKind::RackSpace) == Group{1, {}});
    CHECK(group_of(t, 3, SpaceKind::RackSpace) == Group{1, {3}});
    CHECK(group_of(t, 4, SpaceKind::RackSpace) == Group{1, {3, 3}});
    CHECK(group_of(t, 0, SpaceKind::ExtendedRackSpace) == Group{1, {}});
    CHECK(group_of(t, 1, SpaceKind::ExtendedRackSpace) == Group{1, {}});
    CHECK(group_of(t, 2, SpaceKind::ExtendedRackSpace) == Group{1, {3}});
    CHECK(group_of(t, 3, SpaceKind::ExtendedRackSpace) == Group{1, {3, 3}});
    CHECK(homology(t, 3, SpaceKind::RackSpace)->to_string() == "Z^1 + Z_3");
}

TEST_CASE("homology over dihedral:4")
{
    Rack r = dihedral_rack(4);
    CHECK(group_of(r, 0, SpaceKind::RackSpace) == Group{1, {}});
    CHECK(group_of(r, 1, SpaceKind::RackSpace) == Group{2, {}});
    CHECK(group_of(r, 2, SpaceKind::RackSpace) == Group{4, {2, 2}});
    CHECK(group_of(r, 3, SpaceKind::RackSpace) == Group{8, {2, 2, 2, 2, 2, 2}});
    CHECK(group_of(r, 0, SpaceKind::ExtendedRackSpace) == Group{2, {}});
    CHECK(group_of(r, 1, SpaceKind::ExtendedRackSpace) == Group{4, {2, 2}});
    CHECK(group_of(r, 2, SpaceKind::ExtendedRackSpace) == Group{8, {2, 2, 2, 2, 2, 2}});
}

TEST_CASE("the extended space shifts homology by one")
{
    for (const Rack& r : {trivial_rack(1), trivial_rack(2), trivial_rack(3), dihedral_rack(3),
                          dihedral_rack(4), dihedral_rack(5)})
        for (std::size_t n = 0; n <= 2; ++n)
        {
            INFO(r.name() << " n=" << n);
            CHECK(group_of(r, n, SpaceKind::ExtendedRackSpace) ==
                  group_of(r, n + 1, SpaceKind::RackSpace));
        }
}

TEST_CASE("presentation ranks are consistent")
{
    Rack r = dihedral_rack(4);
    for (std::size_t n = 1; n <= 3; ++n)
    {
        auto p = homology(r, n, SpaceKind::RackSpace);
        CHECK(p->cycle_rank == p->free_rank + p->boundary_rank);
        CHECK(p->projection.rows() == p->free_rank + p->torsion_factors.size());
        CHECK(p->projection.cols() == cube_count(r, n, SpaceKind::RackSpace));
    }
}

TEST_CASE("homology guard")
{
    CHECK_THROWS_AS(homology(dihedral_rack(3), 4, SpaceKind::RackSpace, {100}), GuardError);
}

TEST_CASE("classes of cycles")
{
    Rack t = dihedral_rack(3);
    auto pres = homology(t, 3, SpaceKind::RackSpace);
    Chain c = twist_spun_trefoil_cycle().chain();
    HomologyClass cls = class_of_cycle(pres, c);
    CHECK(cls.generates_torsion_summand(0));
    CHECK_FALSE(cls.is_zero());
    CHECK(cls + cls + cls == HomologyClass::zero(pres));
    CHECK(class_negate(cls) == class_of_cycle(pres, -1 * c));
    CHECK(classes_equal(class_add(cls, cls), class_of_cycle(pres, 2 * c)));

    Chain not_cycle = chain_from_terms(t, SpaceKind::RackSpace, "+012");
    CHECK_THROWS_AS(class_of_cycle(pres, not_cycle), DomainError);
    CHECK_THROWS(class_of_cycle(pres, Chain(t, SpaceKind::RackSpace, 2)));
}

TEST_CASE("class_of_cycle is additive and vanishes on boundaries")
{
    std::mt19937 rng(23);
    Rack t = dihedral_rack(3);
    auto pres = homology(t, 3, SpaceKind::RackSpace);
    Chain c = twist_spun_trefoil_cycle().chain();
    auto random_boundary = [&] {
        Chain x(t, SpaceKind::RackSpace, 4);
        for (int k = 0; k < 5; ++k)
            x.add({Element(rng() % 3), Element(rng() % 3), Element(rng() % 3), Element(rng() % 3)},
                  static_cast<Coefficient>(rng() % 7) - 3);
        return boundary_of_chain(x);
    };
    for (int trial = 0; trial < 20; ++trial)
    {
        Chain b = random_boundary();
        CHECK(class_of_cycle(pres, b).is_zero());
        Coefficient m = static_cast<Coefficient>(rng() % 5) - 2;
        Chain z1 = m * c + b;
        Chain z2 = c + random_boundary();
        CHECK(class_of_cycle(pres, z1 + z2) ==
              class_of_cycle(pres, z1) + class_of_cycle(pres, z2));
        CHECK(class_of_cycle(pres, z1) == class_of_cycle(pres, m * c));
    }
}

TEST_CASE("torsion coordinates are normalised")
{
    auto pres = homology(dihedral_rack(3), 3, SpaceKind::RackSpace);
    HomologyClass a(pres, {0}, {5});
    HomologyClass b(pres, {0}, {-1});
    CHECK(a == b);
    CHECK(a.torsion_coords()[0] == 2);
    CHECK(a.to_string() == "(0 | 2)");
    CHECK_THROWS(HomologyClass(pres, {}, {1}));
}

TEST_CASE("presentation cache builds each key once under concurrency")
{
    PresentationCache cache;
    Rack r = dihedral_rack(4);
    std::vector<PresentationPtr> got(8);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < got.size(); ++i)
        threads.emplace_back([&, i] { got[i] = cache.get(r, 2, SpaceKind::RackSpace); });
    for (auto& th : threads)
        th.join();
    for (const auto& p : got)
        CHECK(p == got.front());
    CHECK(cache.size() == 1);
    CHECK(cache.get(dihedral_rack(4), 2, SpaceKind::RackSpace) == got.front());
}

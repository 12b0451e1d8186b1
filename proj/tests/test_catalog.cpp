#include "hwnorm/catalog.hpp"

#include <doctest.h>

using namespace hwn;

namespace {

void check_identities(const GroupSpec& g) {
    CAPTURE(g.name());
    CHECK(g.n == g.r + g.r * (g.r - 1) * g.d / 2 + g.b * g.r);
    CHECK(g.p == 2 + (g.r - 1) * g.d + g.b);
    CHECK(g.n_tube == g.r + g.r * (g.r - 1) * g.d / 2);
    CHECK(g.tube == (g.b == 0));
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("structure constants") {
    const GroupSpec sp = structure_constants(Family::Sp, {2});
    CHECK(sp.r == 2);
    CHECK(sp.n == 3);
    CHECK(sp.d == 1);
    CHECK(sp.b == 0);
    CHECK(sp.p == 3);
    CHECK(sp.tube);

    const GroupSpec so = structure_constants(Family::SOStar, {5});
    CHECK(so.r == 2);
    CHECK(so.n == 10);
    CHECK(so.d == 4);
    CHECK(so.b == 2);
    CHECK(so.p == 8);
    CHECK_FALSE(so.tube);

    const GroupSpec e7 = GroupSpec::e7();
    CHECK(e7.r == 3);
    CHECK(e7.n == 27);
    CHECK(e7.d == 8);
    CHECK(e7.b == 0);
    CHECK(e7.p == 18);
    CHECK(e7.tube);

    const GroupSpec e6 = GroupSpec::e6();
    CHECK(e6.r == 2);
    CHECK(e6.n == 16);
    CHECK(e6.d == 6);
    CHECK(e6.b == 4);
    CHECK(e6.p == 12);
}

TEST_CASE("structure constant identities") {
    for (int r = 1; r <= 4; ++r) check_identities(GroupSpec::sp(r));
    for (int q = 1; q <= 5; ++q)
        for (int s = 1; s <= 5; ++s)
            if (std::min(q, s) <= 4) check_identities(GroupSpec::su(q, s));
    for (int s = 2; s <= 9; ++s) check_identities(GroupSpec::sostar(s));
    for (int n = 4; n <= 12; ++n) check_identities(GroupSpec::spin(n));
    check_identities(GroupSpec::e6());
    check_identities(GroupSpec::e7());
}

TEST_CASE("SU(q,s) and SU(s,q) share the domain") {
    for (int q = 1; q <= 4; ++q) {
        for (int s = 1; s <= 4; ++s) {
            const GroupSpec a = GroupSpec::su(q, s), b = GroupSpec::su(s, q);
            CHECK(a.r == b.r);
            CHECK(a.n == b.n);
            CHECK(a.d == b.d);
            CHECK(a.b == b.b);
            CHECK(a.p == b.p);
            CHECK(a.tube == b.tube);
        }
    }
}

TEST_CASE("convergence thresholds") {
    for (int k = 0; k < 3; ++k) CHECK(convergence_threshold(GroupSpec::sp(3), FiberSpec::sp(k)) == Rat(3));
    CHECK(convergence_threshold(GroupSpec::su(2, 2), FiberSpec::su({1, 0})) == Rat(3));
    CHECK(convergence_threshold(GroupSpec::su(2, 2), FiberSpec::su({1, 1})) == Rat(2));
    CHECK(convergence_threshold(GroupSpec::spin(6), FiberSpec::spin(Half::from_doubled(1))) == Rat(5));
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(GroupSpec::sp(0), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::spin(3), std::invalid_argument);
    CHECK_THROWS_AS(structure_constants(Family::SU, {2}), std::invalid_argument);
    CHECK_THROWS_AS(validate(GroupSpec::spin(7), FiberSpec::spin(Half(1))), std::invalid_argument);
    CHECK_THROWS_AS(validate(GroupSpec::su(2, 3), FiberSpec::su({0, 1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(validate(GroupSpec::sp(2), FiberSpec::sp(3)), std::invalid_argument);
    CHECK_THROWS_AS(validate(GroupSpec::e7(), FiberSpec::e6(1)), std::invalid_argument);
}

TEST_CASE("fiber dimensions") {
    CHECK(fiber_dim(GroupSpec::sp(3), FiberSpec::sp(2)) == 3);
    CHECK(fiber_dim(GroupSpec::su(2, 3), normalize(GroupSpec::su(2, 3), FiberSpec::su({1, 1}))) == 3);
    CHECK(fiber_dim(GroupSpec::sostar(5), FiberSpec::sostar(FiberKind::SymDual, 2)) == 15);
    CHECK(fiber_dim(GroupSpec::spin(7), FiberSpec::spin(Half::from_doubled(1))) == 8);
    CHECK(fiber_dim(GroupSpec::spin(6), FiberSpec::spin(Half(1), -1)) == 10);
    CHECK(fiber_dim(GroupSpec::e6(), FiberSpec::e6(1)) == 10);
    CHECK(fiber_dim(GroupSpec::e7(), FiberSpec::scalar()) == 1);
}

TEST_CASE("names and ids") {
    CHECK(GroupSpec::sostar(5).name() == "SO*(10)");
    CHECK(GroupSpec::su(2, 3).id() == "su:q=2,s=3");
    CHECK(FiberSpec::su({2, 1, 0}).su_nonzero() == 2);
    CHECK(FiberSpec::su({2, 2, 1}).su_nonzero() == 2);
}

}  // TEST_SUITE

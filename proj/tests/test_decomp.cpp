#include "hwnorm/decomp.hpp"
#include "hwnorm/oracle.hpp"

#include <doctest.h>

#include <tuple>

using namespace hwn;

namespace {

struct Case {
    GroupSpec g;
    FiberSpec f;
};

std::vector<Case> wide_cases() {
    using K = FiberKind;
    std::vector<Case> out;
    for (int r = 1; r <= 3; ++r)
        for (int k = 0; k < r; ++k) out.push_back({GroupSpec::sp(r), FiberSpec::sp(k)});
    out.push_back({GroupSpec::su(1, 1), FiberSpec::su({0})});
    out.push_back({GroupSpec::su(1, 1), FiberSpec::su({3})});
    out.push_back({GroupSpec::su(2, 3), FiberSpec::su({1, 0, 0})});
    out.push_back({GroupSpec::su(3, 2), FiberSpec::su({2, 1})});
    out.push_back({GroupSpec::su(2, 2), FiberSpec::su({1, 1})});
    for (int s = 4; s <= 6; ++s)
        for (int k = 0; k <= 2; ++k)
            for (K kind : {K::SymDual, K::SymDet}) out.push_back({GroupSpec::sostar(s), FiberSpec::sostar(kind, k)});
    for (int n : {5, 6, 8}) {
        out.push_back({GroupSpec::spin(n), FiberSpec::spin(Half(0))});
        out.push_back({GroupSpec::spin(n), FiberSpec::spin(Half::from_doubled(1))});
    }
    out.push_back({GroupSpec::spin(8), FiberSpec::spin(Half(2), -1)});
    out.push_back({GroupSpec::spin(7), FiberSpec::spin(Half::from_doubled(1))});
    for (int k = 0; k <= 3; ++k) out.push_back({GroupSpec::e6(), FiberSpec::e6(k)});
    out.push_back({GroupSpec::e7(), FiberSpec::scalar()});
    return out;
}

auto order_key(const KType& t) { return std::tie(t.degree, t.m, t.kappa, t.l, t.n); }

}  // namespace

TEST_SUITE("decomp") {

TEST_CASE("rank one symplectic") {
    const auto ts = decompose(GroupSpec::sp(1), FiberSpec::sp(0), 3);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].weight == Signature{Half(6)});
    CHECK(ts[0].multiplicity == 1);
}

TEST_CASE("SU(1,1) Taylor coefficients") {
    for (int m = 0; m <= 6; ++m) {
        const auto ts = decompose(GroupSpec::su(1, 1), FiberSpec::su({0}), m);
        REQUIRE(ts.size() == 1);
        CHECK(ts[0].n == Partition{m});
        CHECK(ts[0].multiplicity == 1);
    }
}

TEST_CASE("Spin(2,8) degree one") {
    const auto ts = decompose(GroupSpec::spin(8), FiberSpec::spin(Half(1), 1), 1);
    REQUIRE(ts.size() == 2);
    for (const auto& t : ts) CHECK(t.m0 == Rat(-2));
    CHECK(ts[0].weight == to_signature({1, 1, 1, 0}));
    CHECK(ts[1].weight == to_signature({2, 1, 1, 1}));
}

TEST_CASE("degree zero is the fiber") {
    for (const auto& c : wide_cases()) {
        CAPTURE(c.g.name());
        const auto ts = decompose_upto(c.g, c.f, 0);
        REQUIRE(ts.size() == 1);
        CHECK(ts[0].multiplicity == 1);
        CHECK(ts[0].dim == fiber_dim(c.g, normalize(c.g, c.f)));
    }
}

TEST_CASE("Sp(2) with k=1 to degree one") {
    const auto ts = decompose_upto(GroupSpec::sp(2), FiberSpec::sp(1), 1);
    REQUIRE(ts.size() == 3);
    CHECK(ts[0].weight == to_signature({1, 0}));
    CHECK(ts[1].weight == to_signature({3, 0}));
    CHECK(ts[2].weight == to_signature({2, 1}));
}

TEST_CASE("E7 degree two") {
    const auto ts = decompose(GroupSpec::e7(), FiberSpec::scalar(), 2);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].m == Partition{2, 0, 0});
    CHECK(ts[1].m == Partition{1, 1, 0});
    CHECK(decompose(GroupSpec::e7(), FiberSpec::scalar(), 1).at(0).dim == 27);
}

TEST_CASE("SU scalar fiber gives the diagonal pairs") {
    for (auto [q, s] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 2}}) {
        const GroupSpec g = GroupSpec::su(q, s);
        for (int N = 0; N <= 5; ++N) {
            for (const auto& t : decompose(g, FiberSpec::su({0}), N)) {
                Partition n = t.n, m = t.m;
                n.resize(std::max(q, s), 0);
                m.resize(std::max(q, s), 0);
                CHECK(n == m);
                CHECK(t.multiplicity == 1);
            }
        }
    }
}

TEST_CASE("SU multiplicities can exceed one") {
    bool seen = false;
    for (const auto& t : decompose(GroupSpec::su(3, 3), FiberSpec::su({2, 1, 0}), 3)) seen = seen || t.multiplicity > 1;
    CHECK(seen);
}

TEST_CASE("graded dimension identity") {
    for (const auto& c : wide_cases()) {
        const CheckReport rep = graded_dim_check(c.g, c.f, 6);
        CAPTURE(rep.name);
        CAPTURE(rep.witnesses.size() ? rep.witnesses.front() : std::string());
        CHECK(rep.passed);
    }
}

TEST_CASE("deterministic ordering") {
    for (const auto& c : wide_cases()) {
        const auto a = decompose_upto(c.g, c.f, 5), b = decompose_upto(c.g, c.f, 5);
        CHECK(a == b);
        for (size_t i = 1; i < a.size(); ++i) REQUIRE(a[i - 1].degree <= a[i].degree);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size() && a[j].degree == a[i].degree; ++j) REQUIRE(order_key(a[i]) != order_key(a[j]));
    }
}

TEST_CASE("scalar tube dimensions agree with the classical families") {
    // Sp(r): P_m has gl(r) weight 2m. SU(r,r): P_m is V_m ⊗ V_m.
    for (int r = 1; r <= 3; ++r) {
        for (int N = 0; N <= 5; ++N) {
            for (const auto& m : iter_partitions(r, N)) {
                std::vector<int> twice(m);
                for (int& x : twice) x *= 2;
                CHECK(tube_scalar_dim(m, 1) == weyl_dim_gl(twice, r));
                CHECK(tube_scalar_dim(m, 2) == weyl_dim_gl(m, r) * weyl_dim_gl(m, r));
            }
        }
    }
}

}  // TEST_SUITE

#include "hwnorm/partitions.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace hwn;

namespace {

using PV = std::vector<Partition>;

Signature sig(std::initializer_list<int> doubled) {
    Signature s;
    for (int d : doubled) s.push_back(Half::from_doubled(d));
    return s;
}

// Dominant weights m with m_1 <= top in the requested class (integral or half-integral).
void so_weights(int s, int top2, bool half, bool type_d, Signature& cur, std::vector<Signature>& out) {
    const int i = static_cast<int>(cur.size());
    if (i == s) {
        out.push_back(cur);
        return;
    }
    const int hi = i == 0 ? top2 : static_cast<int>(cur.back().doubled());
    const int lo = (i == s - 1 && type_d) ? -hi : (half ? 1 : 0);
    for (int d = hi; d >= lo; --d) {
        if ((d % 2 != 0) != half) continue;
        cur.push_back(Half::from_doubled(d));
        so_weights(s, top2, half, type_d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("iter_partitions") {
    CHECK(iter_partitions(2, 2) == PV{{2, 0}, {1, 1}});
    CHECK(iter_partitions(1, 5) == PV{{5}});
    CHECK(iter_partitions(3, 3) == PV{{3, 0, 0}, {2, 1, 0}, {1, 1, 1}});
    CHECK(iter_partitions(3, 0) == PV{{0, 0, 0}});
    CHECK(iter_partitions(4, 8).size() == 15);
}

TEST_CASE("pieri_wedge") {
    CHECK(pieri_wedge({2, 0}, 1) == PV{{3, 0}, {2, 1}});
    CHECK(pieri_wedge({1, 1}, 1) == PV{{2, 1}});
    CHECK(pieri_wedge({3, 1, 0}, 0) == PV{{3, 1, 0}});
}

TEST_CASE("pieri_sym") {
    const auto t = pieri_sym({1, 0}, 2);
    REQUIRE(t.size() == 2);
    CHECK(t[0].sig == Partition{3, 0});
    CHECK(t[0].kappa == Composition{2, 0});
    CHECK(t[1].sig == Partition{2, 1});
    CHECK(t[1].kappa == Composition{1, 1});
    const auto z = pieri_sym({0, 0}, 3);
    REQUIRE(z.size() == 1);
    CHECK(z[0].sig == Partition{3, 0});
    CHECK(pieri_sym({2, 1}, 0).size() == 1);
}

TEST_CASE("lr_coefficient") {
    CHECK(lr_coefficient({2, 1}, {1, 0}, {1, 1}) == 1);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {0, 0}) == 1);
    CHECK(lr_coefficient({3, 1}, {1, 0}, {1, 1}) == 0);
    CHECK(lr_coefficient({2, 0, 0}, {1, 0, 0}, {1, 0, 0}) == 1);
    CHECK(lr_coefficient({1, 1, 0}, {1, 0, 0}, {1, 0, 0}) == 1);
    CHECK(lr_coefficient({3, 2, 1}, {2, 1, 0}, {2, 1, 0}) == 2);
}

TEST_CASE("gl_branch") {
    CHECK(gl_branch({2, 0}) == PV{{2}, {1}, {0}});
    CHECK(gl_branch({1, 1}) == PV{{1}});
    CHECK(gl_branch({3, 1, 0}) == PV{{3, 1}, {3, 0}, {2, 1}, {2, 0}, {1, 1}, {1, 0}});
}

TEST_CASE("so_tensor_minuscule") {
    CHECK(so_tensor_minuscule(2, Half(1), 1, 8) ==
          std::vector<Signature>{sig({2, 2, 2, -2}), sig({4, 2, 2, 0}), sig({6, 2, 2, 2})});
    auto odd = so_tensor_minuscule(2, Half::from_doubled(1), 1, 7);
    std::sort(odd.begin(), odd.end());
    CHECK(odd == std::vector<Signature>{sig({3, 1, 1}), sig({5, 1, 1})});
    CHECK(so_tensor_minuscule(3, Half(0), 1, 8) == std::vector<Signature>{sig({6, 0, 0, 0})});
}

TEST_CASE("so_branch_coeff") {
    CHECK(so_branch_coeff(sig({2, 0, 0, 0, 0}), sig({2, 0, 0, 0}), Half(0)) == 1);
    for (int k = 0; k <= 4; ++k) {
        for (int l1 = 0; l1 <= k; ++l1) {
            for (int n0 = -k - 1; n0 <= k + 1; ++n0) {
                const long long c = so_branch_coeff(to_signature({k, 0, 0, 0}), to_signature({l1, 0, 0}), Half(n0));
                const bool expect = std::abs(n0) <= k - l1 && (k - n0 - l1) % 2 == 0;
                REQUIRE(c == (expect ? 1 : 0));
            }
        }
    }
}

TEST_CASE("weyl dimensions") {
    CHECK(weyl_dim_gl(std::vector<int>{2, 0, 0, 0, 0}, 5) == 15);
    CHECK(weyl_dim_gl(std::vector<int>{0, 0, 0}, 3) == 1);
    CHECK(weyl_dim_gl(std::vector<int>{1, 1, 0}, 3) == 3);
    CHECK(weyl_dim_gl(Signature{Half(-1), Half(-2)}, 2) == 2);
    for (int k = 0; k <= 5; ++k)
        CHECK(weyl_dim_so(to_signature({k}), 10) == binomial(k + 9, 9) - binomial(k + 7, 9));
    CHECK(weyl_dim_so(to_signature({1}), 10) == 10);
    CHECK(weyl_dim_so(to_signature({1, 1, 1, 1}), 8) == 35);
    CHECK(weyl_dim_so(to_signature({1, 1, 1, -1}), 8) == 35);
    CHECK(weyl_dim_so(sig({1, 1, 1}), 7) == 8);
    CHECK(weyl_dim_so(to_signature({0, 0, 0}), 7) == 1);
    CHECK(weyl_dim_so(to_signature({1}), 7) == 7);
    CHECK(weyl_dim_so(to_signature({1, 1}), 6) == 15);
}

TEST_CASE("pieri dimension sums") {
    for (int r = 1; r <= 4; ++r) {
        for (int N = 0; N <= 5; ++N) {
            for (const auto& m : iter_partitions(r, N)) {
                const long long dm = weyl_dim_gl(m, r);
                for (int k = 0; k <= r; ++k) {
                    long long sum = 0;
                    for (const auto& p : pieri_wedge(m, k)) sum += weyl_dim_gl(p, r);
                    REQUIRE(sum == dm * binomial(r, k));
                }
                for (int k = 0; k <= 3; ++k) {
                    long long sum = 0;
                    for (const auto& t : pieri_sym(m, k)) sum += weyl_dim_gl(t.sig, r);
                    REQUIRE(sum == dm * binomial(r + k - 1, k));
                }
            }
        }
    }
}

TEST_CASE("gl branching dimension sum") {
    for (int s = 2; s <= 5; ++s) {
        for (int N = 0; N <= 5; ++N) {
            for (const auto& m : iter_partitions(s, N)) {
                long long sum = 0;
                for (const auto& n : gl_branch(m)) sum += weyl_dim_gl(n, s - 1);
                REQUIRE(sum == weyl_dim_gl(m, s));
            }
        }
    }
}

TEST_CASE("lr symmetry and dimension") {
    for (int total = 0; total <= 6; ++total) {
        for (const auto& outer : iter_partitions(4, total)) {
            for (int a = 0; a <= total; ++a) {
                for (const auto& mu : iter_partitions(4, a)) {
                    for (const auto& nu : iter_partitions(4, total - a))
                        REQUIRE(lr_coefficient(outer, mu, nu) == lr_coefficient(outer, nu, mu));
                }
            }
        }
    }
    // dim V_mu * dim V_nu = sum_lambda c * dim V_lambda in gl(3).
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            for (const auto& mu : iter_partitions(3, a)) {
                for (const auto& nu : iter_partitions(3, b)) {
                    long long sum = 0;
                    for (const auto& lam : iter_partitions(3, a + b)) sum += lr_coefficient(lam, mu, nu) * weyl_dim_gl(lam, 3);
                    REQUIRE(sum == weyl_dim_gl(mu, 3) * weyl_dim_gl(nu, 3));
                }
            }
        }
    }
}

TEST_CASE("so branching dimension sum") {
    for (int s = 2; s <= 4; ++s) {
        for (int N = 0; N <= 4; ++N) {
            for (const auto& up : iter_partitions(s + 1, N)) {
                const Signature upper = to_signature(up);
                std::vector<Signature> lowers;
                Signature cur;
                so_weights(s, 2 * up[0], false, true, cur, lowers);
                long long sum = 0;
                for (const auto& lower : lowers)
                    for (int n0 = -N; n0 <= N; ++n0)
                        sum += so_branch_coeff(upper, lower, Half(n0)) * weyl_dim_so(lower, 2 * s);
                REQUIRE(sum == weyl_dim_so(upper, 2 * s + 2));
            }
        }
    }
}

TEST_CASE("so minuscule tensor dimension sum") {
    for (int n : {7, 8, 10}) {
        const int s = n / 2;
        for (int m = 0; m <= 4; ++m) {
            for (int k2 = 0; k2 <= 3; ++k2) {
                if (n % 2 == 1 && k2 > 1) continue;
                const Half k = Half::from_doubled(k2);
                for (int sign : {1, -1}) {
                    if (n % 2 == 1 && sign < 0) continue;
                    Signature v(s, k);
                    if (n % 2 == 0 && sign < 0) v.back() = -k;
                    long long sum = 0;
                    for (const auto& w : so_tensor_minuscule(m, k, sign, n)) sum += weyl_dim_so(w, n);
                    Signature vm(s, Half(0));
                    vm[0] = Half(m);
                    REQUIRE(sum == weyl_dim_so(vm, n) * weyl_dim_so(v, n));
                }
            }
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, -1) == 0);
}

}  // TEST_SUITE

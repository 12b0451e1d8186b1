#include "hwnorm/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

namespace hwn {

Signature to_signature(const std::vector<int>& v) {
    return Signature(v.begin(), v.end());
}

std::string str(const Signature& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += s[i].str();
    }
    return out + ")";
}

std::string str(const std::vector<int>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

bool is_dominant(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

bool is_partition(const std::vector<int>& v) {
    return is_dominant(v) && (v.empty() || v.back() >= 0);
}

std::vector<Partition> iter_partitions(int r, int N) {
    if (r < 1 || N < 0) throw std::invalid_argument("iter_partitions: need r >= 1, N >= 0");
    std::vector<Partition> out;
    Partition cur(r, 0);
    std::function<void(int, int, int)> rec = [&](int i, int left, int cap) {
        if (i == r - 1) {
            if (left <= cap) {
                cur[i] = left;
                out.push_back(cur);
            }
            return;
        }
        for (int a = std::min(left, cap); a >= 0; --a) {
            if (a * (r - i) < left) break;
            cur[i] = a;
            rec(i + 1, left - a, a);
        }
    };
    rec(0, N, N);
    return out;
}

std::vector<Composition> compositions(int parts, int total) {
    std::vector<Composition> out;
    if (parts < 0 || total < 0) return out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    Composition cur(parts, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == parts - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int a = left; a >= 0; --a) {
            cur[i] = a;
            rec(i + 1, left - a);
        }
    };
    rec(0, total);
    return out;
}

std::vector<Partition> pieri_wedge(const Partition& m, int k) {
    const int r = static_cast<int>(m.size());
    if (k < 0 || k > r) throw std::invalid_argument("pieri_wedge: need 0 <= k <= r");
    std::vector<Partition> out;
    std::vector<int> kappa(r, 0);
    std::fill(kappa.begin(), kappa.begin() + k, 1);
    // Walk {0,1}-vectors of weight k in decreasing lexicographic order.
    do {
        Partition v(r);
        for (int j = 0; j < r; ++j) v[j] = m[j] + kappa[j];
        if (is_dominant(v)) out.push_back(v);
    } while (std::prev_permutation(kappa.begin(), kappa.end()));
    return out;
}

std::vector<PieriTerm> pieri_sym(const Partition& m, int k) {
    if (k < 0) throw std::invalid_argument("pieri_sym: negative k");
    const int r = static_cast<int>(m.size());
    std::vector<PieriTerm> out;
    for (const auto& kappa : compositions(r, k)) {
        bool ok = true;
        for (int j = 1; j < r && ok; ++j) ok = kappa[j] <= m[j - 1] - m[j];
        if (!ok) continue;
        Partition v(r);
        for (int j = 0; j < r; ++j) v[j] = m[j] + kappa[j];
        out.push_back({v, kappa});
    }
    return out;
}

long long lr_coefficient(const Partition& outer, const Partition& inner, const Partition& weight) {
    const int s = static_cast<int>(std::max({outer.size(), inner.size(), weight.size()}));
    auto pad = [s](const Partition& p) {
        Partition q(p);
        q.resize(s, 0);
        return q;
    };
    Partition lam = pad(outer), mu = pad(inner), nu = pad(weight);
    if (!is_partition(lam) || !is_partition(mu) || !is_partition(nu))
        throw std::invalid_argument("lr_coefficient: arguments must be partitions");
    long total = 0;
    for (int i = 0; i < s; ++i) total += lam[i] - mu[i] - nu[i];
    if (total != 0) return 0;
    for (int i = 0; i < s; ++i)
        if (mu[i] > lam[i]) return 0;

    // Cells in reading order: rows top to bottom, each row right to left.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < s; ++i)
        for (int c = lam[i] - 1; c >= mu[i]; --c) cells.emplace_back(i, c);

    std::map<std::pair<int, int>, int> filled;
    std::vector<int> count(s + 1, 0);
    long long result = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            ++result;
            return;
        }
        auto [i, c] = cells[idx];
        for (int v = 1; v <= s; ++v) {
            if (count[v] >= nu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            auto right = filled.find({i, c + 1});
            if (right != filled.end() && right->second < v) continue;
            auto above = filled.find({i - 1, c});
            if (above != filled.end() && above->second >= v) continue;
            // A cell above inside the inner shape imposes nothing.
            filled[{i, c}] = v;
            ++count[v];
            rec(idx + 1);
            --count[v];
            filled.erase({i, c});
        }
    };
    rec(0);
    return result;
}

std::vector<Partition> gl_branch(const Partition& m) {
    const int s = static_cast<int>(m.size());
    if (s < 2) throw std::invalid_argument("gl_branch: need s >= 2");
    if (!is_dominant(m)) throw std::invalid_argument("gl_branch: weight not dominant");
    std::vector<Partition> out;
    Partition cur(s - 1);
    std::function<void(int)> rec = [&](int j) {
        if (j == s - 1) {
            out.push_back(cur);
            return;
        }
        for (int v = m[j]; v >= m[j + 1]; --v) {
            cur[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Signature> so_tensor_minuscule(int m, Half k, int sign, int n) {
    if (n < 4) throw std::invalid_argument("so_tensor_minuscule: need n >= 4");
    if (m < 0 || k < Half(0)) throw std::invalid_argument("so_tensor_minuscule: negative weight");
    if (sign != 1 && sign != -1) throw std::invalid_argument("so_tensor_minuscule: sign must be +1 or -1");
    const bool odd = n % 2 == 1;
    if (odd && k != Half(0) && k != Half::from_doubled(1))
        throw std::invalid_argument("so_tensor_minuscule: odd n needs k in {0, 1/2}");
    const int s = n / 2;
    std::vector<Signature> out;
    Half lo = std::max(-k, k - Half(m));
    for (Half l = lo; l <= k; l += Half(1)) {
        Signature sig(s, k);
        sig[0] = Half(m) + l;
        sig[s - 1] = odd ? l.abs() : l * sign;
        out.push_back(sig);
    }
    return out;
}

namespace {

using Laurent = std::map<long long, long long>;  // doubled exponent -> coefficient

Laurent multiply(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    return out;
}

bool same_class(Half a, Half b) {
    return (a.doubled() - b.doubled()) % 2 == 0;
}

}  // namespace

long long so_branch_coeff(const Signature& upper, const Signature& lower, Half n0) {
    const int s = static_cast<int>(lower.size());
    if (static_cast<int>(upper.size()) != s + 1 || s < 1)
        throw std::invalid_argument("so_branch_coeff: need |upper| = |lower| + 1");
    const Signature& m = upper;  // m_0..m_s
    // lower is n_1..n_s
    auto n = [&](int i) { return lower[i - 1]; };
    for (int i = 0; i <= s; ++i)
        if (!same_class(m[i], m[0])) return 0;
    for (int i = 1; i <= s; ++i)
        if (!same_class(n(i), m[0])) return 0;
    for (int i = 1; i <= s - 1; ++i)
        if (!(m[i - 1] >= n(i) && n(i) >= m[i + 1].abs())) return 0;
    if (!(m[s - 1] >= n(s).abs())) return 0;

    auto sgn = [](Half h) { return h.doubled() > 0 ? 1 : (h.doubled() < 0 ? -1 : 0); };
    std::vector<long long> a(s + 1);
    a[0] = (m[0] - std::max(m[1], n(1))).to_int();
    for (int j = 1; j <= s - 1; ++j)
        a[j] = (std::min(m[j], n(j)) - std::max(m[j + 1].abs(), n(j + 1).abs())).to_int();
    long long as_doubled = sgn(m[s]) * sgn(n(s)) * std::min(m[s].abs(), n(s).abs()).doubled();

    Laurent poly{{as_doubled, 1}};
    for (int j = 0; j <= s - 1; ++j) {
        if (a[j] < 0) return 0;
        Laurent f;
        for (long long i = 0; i <= a[j]; ++i) f[2 * (a[j] - 2 * i)] += 1;
        poly = multiply(poly, f);
    }
    auto it = poly.find(n0.doubled());
    return it == poly.end() ? 0 : it->second;
}

long long weyl_dim_gl(const Signature& m, int s) {
    if (static_cast<int>(m.size()) > s) throw std::invalid_argument("weyl_dim_gl: weight longer than s");
    Signature w(m);
    w.resize(s, Half(0));
    mpq_class v = 1;
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            if (w[i] < w[j]) throw std::invalid_argument("weyl_dim_gl: weight not dominant");
            v *= mpq_class(static_cast<long>((w[i] - w[j]).doubled() + 2 * (j - i)), static_cast<long>(2 * (j - i)));
        }
    }
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("weyl_dim_gl: non-integral dimension");
    return v.get_num().get_si();
}

long long weyl_dim_gl(const std::vector<int>& m, int s) {
    return weyl_dim_gl(to_signature(m), s);
}

long long weyl_dim_so(const Signature& m, int n) {
    const int s = n / 2;
    if (n < 3) throw std::invalid_argument("weyl_dim_so: need n >= 3");
    if (static_cast<int>(m.size()) > s) throw std::invalid_argument("weyl_dim_so: weight too long");
    Signature w(m);
    w.resize(s, Half(0));
    const bool odd = n % 2 == 1;
    for (int i = 0; i + 1 < s; ++i)
        if (w[i] < (i + 2 == s && !odd ? w[i + 1].abs() : w[i + 1]))
            throw std::invalid_argument("weyl_dim_so: weight not dominant");
    if (odd && w[s - 1] < Half(0)) throw std::invalid_argument("weyl_dim_so: weight not dominant");
    // rho in doubled units: type D: s-1-i; type B: (2s-1-2i)/2.
    std::vector<mpq_class> lam(s), rho(s);
    for (int i = 0; i < s; ++i) {
        rho[i] = odd ? mpq_class(2 * s - 1 - 2 * i, 2) : mpq_class(s - 1 - i);
        lam[i] = mpq_class(static_cast<long>(w[i].doubled()), 2) + rho[i];
    }
    mpq_class v = 1;
    for (int i = 0; i < s; ++i) {
        if (odd) v *= lam[i] / rho[i];
        for (int j = i + 1; j < s; ++j)
            v *= ((lam[i] - lam[j]) * (lam[i] + lam[j])) / ((rho[i] - rho[j]) * (rho[i] + rho[j]));
    }
    v.canonicalize();
    if (v.get_den() != 1 || v <= 0) throw std::logic_error("weyl_dim_so: non-integral dimension");
    return v.get_num().get_si();
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r.get_si();
}

}  // namespace hwn

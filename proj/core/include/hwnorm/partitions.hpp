#pragma once

#include "hwnorm/rat.hpp"

#include <string>
#include <vector>

namespace hwn {

using Partition = std::vector<int>;    // weakly decreasing, non-negative
using Composition = std::vector<int>;  // non-negative entries
using Signature = std::vector<Half>;   // highest weight, possibly half-integral

Signature to_signature(const std::vector<int>& v);
std::string str(const Signature& s);
std::string str(const std::vector<int>& v);

bool is_dominant(const std::vector<int>& v);
bool is_partition(const std::vector<int>& v);

// All m in Z^r_{++} with |m| = N, in decreasing lexicographic order.
std::vector<Partition> iter_partitions(int r, int N);

// All compositions of `total` into `parts` entries, first entry decreasing.
std::vector<Composition> compositions(int parts, int total);

// m + κ over κ in {0,1}^r with |κ| = k and m + κ weakly decreasing.
std::vector<Partition> pieri_wedge(const Partition& m, int k);

struct PieriTerm {
    Partition sig;
    Composition kappa;
};

// m + κ over κ in Z^r_{≥0}, |κ| = k, κ_j <= m_{j-1} - m_j for j >= 2 (first row free).
std::vector<PieriTerm> pieri_sym(const Partition& m, int k);

// Littlewood-Richardson coefficient c^{outer}_{inner, weight}, by enumerating LR skew tableaux
// of shape outer/inner and content weight.
long long lr_coefficient(const Partition& outer, const Partition& inner, const Partition& weight);

// Interlacing patterns n in Z^{s-1}_+ with m_j >= n_j >= m_{j+1}; s = m.size().
std::vector<Partition> gl_branch(const Partition& m);

// V_{(m,0,...,0)} ⊗ V_{(k,...,k,±k)} for so(n). For odd n only k in {0, 1/2}.
std::vector<Signature> so_tensor_minuscule(int m, Half k, int sign, int n);

// Multiplicity of V_{(n0; lower)} of so(2) ⊕ so(2s) inside V_{upper} of so(2s+2).
long long so_branch_coeff(const Signature& upper, const Signature& lower, Half n0);

// Weyl dimension of the gl(s) module with highest weight m (padded with zeros to length s).
long long weyl_dim_gl(const Signature& m, int s);
long long weyl_dim_gl(const std::vector<int>& m, int s);

// Weyl dimension of the so(n) module with highest weight m (padded to floor(n/2) entries).
long long weyl_dim_so(const Signature& m, int n);

long long binomial(long long n, long long k);

}  // namespace hwn

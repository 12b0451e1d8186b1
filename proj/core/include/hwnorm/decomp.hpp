#pragma once

#include "hwnorm/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hwn {

// One irreducible K-constituent of P(p+) ⊗ V.
//
// `weight` is the printed K-weight: 2m+κ for Sp, n for SU (with `weight_q` = m padded to q),
// the gl(s) weight for SO*, and the so(n) / so(10) part for Spin / E6 (with central
// character `m0`). E7 uses m itself.
struct KType {
    Family family = Family::Sp;
    int degree = 0;
    Partition m;
    Composition kappa;        // Sp, SO*, E6
    std::optional<Half> l;    // Spin
    Partition n;              // SU
    Signature weight;
    Signature weight_q;       // SU only
    std::optional<Rat> m0;    // Spin, E6
    long long multiplicity = 1;
    long long dim = 0;        // dimension of one copy

    std::string label() const;

    friend bool operator==(const KType&, const KType&) = default;
};

// All K-types of polynomial degree exactly N, in a fixed order.
std::vector<KType> decompose(const GroupSpec& g, const FiberSpec& f, int N);
// Degrees 0..N concatenated.
std::vector<KType> decompose_upto(const GroupSpec& g, const FiberSpec& f, int N);

// Dimension of P_m(p+) for a tube-type domain with root multiplicity d.
long long tube_scalar_dim(const Partition& m, int d);

}  // namespace hwn

#pragma once

#include "hwnorm/partitions.hpp"
#include "hwnorm/rat.hpp"

#include <string>
#include <vector>

namespace hwn {

enum class Family { Sp, SU, SOStar, Spin, E6, E7 };

const char* to_string(Family f);

// Simple Hermitian Lie group of a supported family with the structure constants of its
// Jordan triple p+. SU keeps the caller's (q, s): the fiber lives on the s side.
struct GroupSpec {
    Family family = Family::Sp;
    int p1 = 0;  // r for Sp, q for SU, s for SO*(2s), n for Spin
    int p2 = 0;  // s for SU
    int r = 0;   // rank
    int n = 0;   // dim p+
    int n_tube = 0;
    int d = 0;
    int b = 0;
    int p = 0;   // genus
    bool tube = false;

    static GroupSpec sp(int r);
    static GroupSpec su(int q, int s);
    static GroupSpec sostar(int s);
    static GroupSpec spin(int n);
    static GroupSpec e6();
    static GroupSpec e7();

    // d/2, the step of the generalized Pochhammer symbol.
    Rat half_d() const { return Rat(d, 2); }
    // SO*(2s) with s odd, i.e. SO*(4r+2).
    bool sostar_odd() const { return family == Family::SOStar && p1 % 2 == 1; }
    std::string id() const;    // CLI syntax, e.g. "su:q=2,s=3"
    std::string name() const;  // e.g. "SU(2,3)"

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// structure_constants(SU, {q, s}) etc. Throws std::invalid_argument on bad input.
GroupSpec structure_constants(Family family, const std::vector<int>& params);

enum class FiberKind { SymDual, SymDet };

const char* to_string(FiberKind k);

// Minimal K-type V. Only the fields of the matching family are meaningful.
struct FiberSpec {
    int k = 0;                            // Sp, SO*, E6
    std::vector<int> kvec;                // SU: k in Z^s_{++}
    FiberKind kind = FiberKind::SymDual;  // SO*
    Half half_k{0};                       // Spin
    int sign = 1;                         // Spin, n even

    static FiberSpec scalar() { return {}; }
    static FiberSpec sp(int k);
    static FiberSpec su(std::vector<int> k);
    static FiberSpec sostar(FiberKind kind, int k);
    static FiberSpec spin(Half k, int sign = 1);
    static FiberSpec e6(int k);

    // SU: k_s and the number l of nonzero entries of k - k_s.
    int su_last() const { return kvec.empty() ? 0 : kvec.back(); }
    int su_nonzero() const;
    // True when V is one-dimensional-trivial (all parameters zero).
    bool is_scalar() const;

    std::string str(const GroupSpec& g) const;

    friend bool operator==(const FiberSpec&, const FiberSpec&) = default;
};

// Throws std::invalid_argument if the fiber is not admissible for the group.
void validate(const GroupSpec& g, const FiberSpec& f);
// Pads an SU weight to length s; a scalar fiber becomes k = 0.
FiberSpec normalize(const GroupSpec& g, FiberSpec f);

// λ > threshold guarantees convergence of the weighted Bergman norm.
Rat convergence_threshold(const GroupSpec& g, const FiberSpec& f);

// dim V.
long long fiber_dim(const GroupSpec& g, const FiberSpec& f);

}  // namespace hwn

#pragma once

#include "hwnorm/decomp.hpp"
#include "hwnorm/factored.hpp"

#include <stdexcept>
#include <vector>

namespace hwn {

// Raised when a request needs E6 numerators that are only known conjecturally.
class ConjecturalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// (λ)_m = ∏_j (λ - (j-1)d/2)_{m_j}.
FactoredFn gen_poch(const GroupSpec& g, const Partition& m);

struct RatioResult {
    FactoredFn ratio;
    FactoredFn formA;
    FactoredFn formB;
    bool conjectural = false;
    // E6 with k > 0 and no conjecture flag: `ratio` omits an unknown monic numerator of
    // this degree. Zero means the ratio is exact.
    int unknown_numerator_degree = 0;

    bool complete() const { return unknown_numerator_degree == 0; }
};

// ‖f‖²_λ / ‖f‖²_F on the K-type `t`. Both printed forms are built independently and must agree.
RatioResult norm_ratio(const GroupSpec& g, const FiberSpec& f, const KType& t, bool conjecture = false);

// Reciprocal of the ratio: the coefficient of the K-type in the reproducing kernel.
// Throws ConjecturalError when the ratio is incomplete.
FactoredFn kernel_coeff(const GroupSpec& g, const FiberSpec& f, const KType& t, bool conjecture = false);

// ∏Γ(λ+a_i) / ∏Γ(λ+b_i) reduced to Pochhammer products. Arguments that cannot be paired
// with an integer shift are returned unreduced.
struct GammaQuotient {
    FactoredFn rational;
    std::vector<Rat> residual_num;
    std::vector<Rat> residual_den;

    bool is_rational() const { return residual_num.empty() && residual_den.empty(); }
    std::string str() const;
};

GammaQuotient reduce_gamma_quotient(const std::vector<Rat>& num, const std::vector<Rat>& den);

// Γ_Ω(λ + kvec) / Γ_Ω(λ + kvec - n/r) for a weight kvec of length r.
GammaQuotient gamma_omega_quotient(const GroupSpec& g, const std::vector<Rat>& kvec);

// Normalizing constant c_λ of the weighted Bergman inner product.
GammaQuotient normalizing_const(const GroupSpec& g, const FiberSpec& f);

// log Γ_Ω(s) = (n_T - r)/2 · log 2π + Σ_j log Γ(s_j - (j-1)d/2). Throws std::domain_error
// outside the real domain.
double gamma_omega_log(const GroupSpec& g, const std::vector<double>& s);

}  // namespace hwn

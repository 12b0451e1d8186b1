#pragma once

#include "hwnorm/analysis.hpp"

#include <string>
#include <vector>

namespace hwn {

struct CheckReport {
    std::string name;
    bool passed = true;
    std::vector<std::string> witnesses;

    void fail(std::string why) {
        passed = false;
        witnesses.push_back(std::move(why));
    }
};

// Σ mult·dim over the K-types of each degree d <= N equals binom(d+n-1, d)·dim V.
// Dimensions are recomputed from the printed weights.
CheckReport graded_dim_check(const GroupSpec& g, const FiberSpec& f, int N);

// Both printed ratio forms agree on every K-type of degree <= N.
CheckReport two_form_check(const GroupSpec& g, const FiberSpec& f, int N, bool conjecture = false);

// E6: 1/c_λ against the so(8)-weighted double sum F(λ,k)/dim V, exactly.
CheckReport e6_recurrence_check(int k, const std::vector<Rat>& lambdas);

// SU(1,1): radial quadrature of the weighted Bergman norm of w^m against m!/(λ)_m.
CheckReport su11_integral_check(const Rat& lambda, int m_max, double tol);

// SO*(4r+2) with V = (k,0,...,0)^∨: the ratio equals (λ)_k times the scalar expression obtained
// by embedding into SO*(4r+4).
CheckReport embedding_check(int r, int k, int N);

// exp(log Γ_Ω(λ+m) - log Γ_Ω(λ)) against (λ)_m.
CheckReport gamma_poch_numeric_check(const GroupSpec& g, const Rat& lambda, const Partition& m, double tol);

}  // namespace hwn

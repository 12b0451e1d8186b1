#pragma once

#include "hwnorm/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace hwn {

// The linear polynomial λ + shift.
struct LinearFactor {
    Rat shift;
    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

// {λ+shift, λ+shift+1, ..., λ+shift+length-1}; length must be non-negative.
std::vector<LinearFactor> poch_expand(const Rat& shift, long length);

enum class Sign { Positive, Negative, Zero, Pole };

struct Evaluation {
    enum class Kind { Value, Zero, Pole };
    Kind kind = Kind::Value;
    Rat value;  // meaningful for Kind::Value only
};

const char* to_string(Sign s);

// Rational function of λ: constant · ∏(λ+a)^e / ∏(λ+b)^f.
// All arithmetic returns canonical values (no shift appears in both num and den).
class FactoredFn {
public:
    using Multiset = std::map<Rat, int>;  // shift -> multiplicity

    FactoredFn() = default;
    explicit FactoredFn(Rat constant);

    // Builds without cancelling common factors; call simplified() to canonicalize.
    static FactoredFn raw(Rat constant, const std::vector<LinearFactor>& num,
                          const std::vector<LinearFactor>& den);
    // (λ+shift)_length. A negative length gives 1/(λ+shift+length)_{-length}.
    static FactoredFn poch(const Rat& shift, long length);
    static FactoredFn linear(const Rat& shift);

    const Rat& constant() const { return c_; }
    const Multiset& num() const { return num_; }
    const Multiset& den() const { return den_; }

    bool canonical() const;
    FactoredFn simplified() const;
    FactoredFn inverse() const;

    int num_degree() const;
    int den_degree() const;
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return num_.empty() && den_.empty(); }

    Evaluation evaluate(const Rat& lambda0) const;
    // Multiplicity of the pole at lambda0; zeros report as negative orders.
    int pole_order(const Rat& lambda0) const;
    Sign sign_at(const Rat& lambda0) const;

    std::string str() const;

    FactoredFn& operator*=(const FactoredFn& o);
    FactoredFn& operator/=(const FactoredFn& o);
    friend FactoredFn operator*(FactoredFn a, const FactoredFn& b) { return a *= b; }
    friend FactoredFn operator/(FactoredFn a, const FactoredFn& b) { return a /= b; }

    // Equality of the rational functions (compares canonical forms).
    friend bool operator==(const FactoredFn& a, const FactoredFn& b);

private:
    void cancel();

    Rat c_{1};
    Multiset num_;
    Multiset den_;
};

FactoredFn simplify(const FactoredFn& f);

std::string factor_str(const Rat& shift);

}  // namespace hwn

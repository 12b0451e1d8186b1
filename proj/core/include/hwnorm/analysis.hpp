#pragma once

#include "hwnorm/norms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hwn {

// Parameters λ for which O(D,V) has a nonzero unitary submodule:
// the discrete points together with the open half-line (continuous_min, ∞).
struct UnitarySet {
    Rat continuous_min;
    std::vector<Rat> discrete;

    bool contains(const Rat& lambda) const;
    std::string str() const;
};

// Closed forms. Throw std::invalid_argument for E6, which the closed forms do not cover.
UnitarySet unitary_set(const GroupSpec& g, const FiberSpec& f);

// The bare "reducible iff ..." clause.
bool reducible_literal(const GroupSpec& g, const FiberSpec& f, const Rat& lambda);
// The clause together with a non-empty printed chain (a <= b).
bool reducible(const GroupSpec& g, const FiberSpec& f, const Rat& lambda);

struct ChainBounds {
    int a = 0;
    int b = 0;
    int step = 1;
};

// Printed chain bounds at λ, if the case tables define them.
std::optional<ChainBounds> chain_bounds(const GroupSpec& g, const FiberSpec& f, const Rat& lambda);

struct Level {
    int j = 0;
    std::string predicate;
    int gk_dim = 0;
    bool unitary = false;
    bool irreducible = false;  // known irreducible (the smallest submodule only)
};

struct Filtration {
    Rat lambda;
    int a = 0;
    int b = 0;
    int step = 1;
    std::vector<Level> levels;  // M_a ⊂ M_{a+step} ⊂ ... ⊂ M_b
    int quotient_gk_dim = 0;    // P(p+, V) / M_b
    bool quotient_unitary = false;
};

// Throws std::invalid_argument at irreducible points.
Filtration filtration(const GroupSpec& g, const FiberSpec& f, const Rat& lambda);

// Membership of a K-type in M_j(λ) by the printed inequality.
bool in_level(const GroupSpec& g, const FiberSpec& f, const KType& t, int j, const Rat& lambda);
// The printed inequality for M_j(λ), with the right-hand side evaluated.
std::string level_predicate(const GroupSpec& g, const FiberSpec& f, int j, const Rat& lambda);

// Dimension of the K_C-orbit O_l in p+ (the GK dimension of a subquotient with support O_l).
int gk_dim(const GroupSpec& g, int l);

struct SubquotientInfo {
    std::string name;  // e.g. "M_3/M_1" or "P/M_3"
    int orbit = 0;     // l with associated variety the closure of O_l
    int gk_dim = 0;
    bool unitary = false;
    bool irreducible = false;
};

std::vector<SubquotientInfo> subquotient_report(const GroupSpec& g, const FiberSpec& f, const Rat& lambda);

// K-types of degree <= N together with their norm ratios, shared by the scans.
struct ScanTable {
    std::vector<KType> types;
    std::vector<RatioResult> ratios;
    bool conjectural = false;
    bool complete = true;  // every ratio known exactly
};

ScanTable build_scan_table(const GroupSpec& g, const FiberSpec& f, int N, bool conjecture = false);

struct ScanWitness {
    KType ktype;
    FactoredFn value;  // the kernel coefficient or norm ratio inspected
};

struct UnitaryScan {
    bool compatible = true;
    std::optional<ScanWitness> witness;  // first K-type with a negative kernel coefficient
    bool conjectural = false;
};

// Sign of every kernel coefficient at λ; zeros count as compatible.
// Throws ConjecturalError if some ratio is incomplete.
UnitaryScan unitary_scan(const ScanTable& table, const Rat& lambda);
UnitaryScan unitary_scan(const GroupSpec& g, const FiberSpec& f, const Rat& lambda, int N,
                         bool conjecture = false);

struct ReducibleScan {
    bool reducible = false;
    std::optional<ScanWitness> witness;  // first K-type whose ratio has a pole
    bool conjectural = false;
};

ReducibleScan reducible_scan(const ScanTable& table, const Rat& lambda);
ReducibleScan reducible_scan(const GroupSpec& g, const FiberSpec& f, const Rat& lambda, int N,
                             bool conjecture = false);

// Smallest degree at which a K-type ratio has a pole at λ, if any up to the table's degree.
std::optional<int> first_pole_degree(const ScanTable& table, const Rat& lambda);
// Smallest degree at which a kernel coefficient is negative at λ, if any.
std::optional<int> first_negative_degree(const ScanTable& table, const Rat& lambda);

struct PoleCheck {
    bool passed = true;
    std::vector<std::string> witnesses;
};

// For every K-type of degree <= N: membership in the i-th chain level M_{a+i·step} by the printed
// inequality agrees with pole order <= i, and no pole order exceeds the chain length.
PoleCheck filtration_pole_check(const GroupSpec& g, const FiberSpec& f, const Rat& lambda, int N);
PoleCheck filtration_pole_check(const GroupSpec& g, const FiberSpec& f, const Rat& lambda,
                                const ScanTable& table);

}  // namespace hwn

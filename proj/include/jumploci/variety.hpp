#pragma once

#include <optional>
#include <variant>

#include "jumploci/polymatrix.hpp"
#include "jumploci/qlinalg.hpp"

namespace jumploci {

// Rationally defined linear subspace of C^n through the origin, stored by its
// canonical equation system (RREF, primitive integer rows, positive lead).
struct LinearSubspace {
    int nvars = 0;
    QMatrix eqs;

    static LinearSubspace from_equations(int n, QMatrix raw);
    static LinearSubspace full(int n) { return from_equations(n, {}); }
    static LinearSubspace origin(int n);

    int dim() const { return nvars - static_cast<int>(eqs.size()); }
    bool is_origin() const { return dim() == 0; }
    bool is_full() const { return eqs.empty(); }

    // this ⊆ other: every equation of `other` lies in the row span of ours.
    bool contained_in(const LinearSubspace& other) const;

    // n x d matrix whose columns span the subspace.
    QMatrix parametrization() const;

    LinearSubspace intersect(const LinearSubspace& other) const;

    bool operator==(const LinearSubspace& o) const = default;
};

enum class Ambient { torus, affine };

struct CompEmpty {
    bool operator==(const CompEmpty&) const = default;
};
struct CompFull {
    bool operator==(const CompFull&) const = default;
};
// The identity character 1 (torus) or the origin 0 (affine).
struct CompIdentity {
    bool operator==(const CompIdentity&) const = default;
};
struct CompHypersurface {
    Ideal ideal;
    bool operator==(const CompHypersurface& o) const;
};
struct CompLinear {
    LinearSubspace space;
    bool operator==(const CompLinear& o) const = default;
};
// Translated subtorus cut out by character equations t^a = c, c in {1, -1}.
struct CompSubtorus {
    std::vector<std::pair<std::vector<std::int64_t>, int>> eqs;
    bool operator==(const CompSubtorus& o) const = default;
};
// Finite root set of a one-variable polynomial, kept exactly as its
// squarefree factors with multiplicities.
struct CompRootSet {
    std::vector<std::pair<LaurentPoly, int>> factors;
    bool operator==(const CompRootSet& o) const;
};

using Component = std::variant<CompEmpty, CompFull, CompIdentity, CompHypersurface, CompLinear,
                               CompSubtorus, CompRootSet>;

// Finite union of tagged components inside (C*)^n or C^n.
struct VarietyDescription {
    Ambient ambient = Ambient::affine;
    int nvars = 0;
    std::vector<Component> components;
    bool identity_excluded = false;  // set-minus {1}; only affects membership

    static VarietyDescription empty(Ambient a, int n) { return {a, n, {}, false}; }
    static VarietyDescription full(Ambient a, int n) { return {a, n, {CompFull{}}, false}; }
    static VarietyDescription identity(Ambient a, int n) { return {a, n, {CompIdentity{}}, false}; }
    static VarietyDescription of_subspaces(int n, std::vector<LinearSubspace> spaces);
    static VarietyDescription hypersurface(Ambient a, int n, Ideal ideal);

    bool is_empty_description() const { return components.empty(); }
    bool is_full_description() const;

    void add(Component c) { components.push_back(std::move(c)); }

    // Drop redundant components (single-component containments only) and
    // order deterministically.
    void simplify();

    std::vector<LinearSubspace> linear_components() const;
    bool all_components_linear_like() const;  // linear/identity/full/empty only

    // Exact membership of the identity/origin point.
    bool contains_identity() const;

    // Largest component dimension we can certify, and an upper bound.
    int dim_upper_bound() const;
    std::optional<int> dim_exact() const;
};

// True iff L lies inside the variety (componentwise union semantics; exact
// symbolic substitution of a rational parametrization of L).
bool subspace_in_variety(const LinearSubspace& l, const VarietyDescription& v);

// Exact equality test for unions of linear-like components (mutual
// containment of every subspace). nullopt when either side has a component
// this test cannot decide.
std::optional<bool> equal_as_subspace_unions(const VarietyDescription& a, const VarietyDescription& b);

std::string component_kind_name(const Component& c);

}  // namespace jumploci

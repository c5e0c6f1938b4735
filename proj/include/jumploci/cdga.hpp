#pragma once

#include <map>

#include "jumploci/variety.hpp"

namespace jumploci {

// Finite commutative differential graded algebra over Q, given by explicit
// structure constants on a graded basis. Validated on construction:
// connectedness, graded commutativity, D∘D = 0, Leibniz, D(1) = 0.
class FiniteCDGA {
  public:
    struct BasisElement {
        std::string name;
        int degree;
    };

    using StructureMap = std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>;
    using DiffMap = std::map<int, std::vector<std::pair<int, Rational>>>;

    static FiniteCDGA create(std::vector<BasisElement> basis, StructureMap products, DiffMap differential);

    // Exterior algebra on degree-1 generators with a differential given on
    // generators (as indices of degree-2 basis monomials) and extended by
    // Leibniz. Basis monomials are indexed by increasing subsets.
    static FiniteCDGA exterior(const std::vector<std::string>& generators,
                               const std::map<std::string, std::string>& differential_on_generators);

    int top_degree() const { return top_; }
    int dim(int degree) const;
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::vector<int>& degree_indices(int degree) const;
    int basis_index(const std::string& name) const;

    // Structure constants of basis_i * basis_j.
    const std::vector<std::pair<int, Rational>>* product(int i, int j) const;

    QMatrix differential_matrix(int degree) const;  // A^degree -> A^degree+1

    // Matrix of left multiplication by a degree-1 class (coordinates in the
    // degree-1 basis): A^degree -> A^degree+1.
    QMatrix multiplication_matrix(const QRow& degree1_coords, int degree) const;

    struct Cohomology {
        int dim;
        std::vector<QRow> representatives;  // cocycle coordinates in A^i
    };
    Cohomology cohomology(int degree) const;

    int betti(int degree) const { return cohomology(degree).dim; }

    // Canonical basis of H^1 = degree-1 cocycles (A connected).
    std::vector<QRow> h1_basis() const;

  private:
    std::vector<BasisElement> basis_;
    StructureMap products_;
    DiffMap differential_;
    int top_ = 0;
    std::vector<std::vector<int>> by_degree_;

    void validate() const;
};

// The chain complex of free S-modules with differentials
// u ⊗ s  ↦  Σ_j e_j·u ⊗ x_j·s + D(u) ⊗ s, over S = Q[x_1..x_n], n = b_1.
struct UniversalComplex {
    int n = 0;
    std::vector<PolyMatrix> delta;  // delta[i]: A^i ⊗ S -> A^{i+1} ⊗ S
};

UniversalComplex universal_complex(const FiniteCDGA& a);

// Resonance variety R^i_k(A) ⊆ H^1(A) ≅ C^n: the vanishing locus of the
// minors of size c_i - k + 1 of the block matrix δ^i ⊕ δ^{i-1}.
VarietyDescription resonance(const FiniteCDGA& a, int degree, int depth);

}  // namespace jumploci

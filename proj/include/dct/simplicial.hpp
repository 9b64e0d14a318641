#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dct/matrix.hpp"

namespace dct {

// Oriented simplex: strictly ascending vertex list.  Orientation is the
// listed order.
using Simplex = std::vector<int>;

Simplex face_of(const Simplex& s, int omit);

// Finite ordered simplicial complex, closed under faces.  All incidence data
// is built eagerly at construction; instances are immutable afterwards.
class SimplicialComplex {
public:
    static std::shared_ptr<const SimplicialComplex> make(std::string name,
                                                         const std::vector<Simplex>& simplices);

    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }
    int vertex_count() const { return n_cells(0); }

    int n_cells(int k) const {
        if (k < 0 || k > dimension_) return 0;
        return static_cast<int>(cells_[k].size());
    }
    const std::vector<Simplex>& cells(int k) const;
    std::optional<int> cell_index(const Simplex& s) const;
    bool has_cell(const Simplex& s) const { return cell_index(s).has_value(); }

    // C_k -> C_{k-1}; for k = 0 the matrix is 0 x n_cells(0) (non-augmented).
    const IntMatrix& boundary_matrix(int k) const;
    // C^k -> C^{k+1}, the transpose of boundary_matrix(k+1).
    const IntMatrix& coboundary_matrix(int k) const;

private:
    SimplicialComplex() = default;

    std::string name_;
    int dimension_ = -1;
    std::vector<std::vector<Simplex>> cells_;
    std::map<Simplex, int> index_;
    std::vector<IntMatrix> boundary_;   // [0..dim]
    std::vector<IntMatrix> coboundary_; // [0..dim], coboundary_[dim] is n_{dim+1} x n_dim = 0 x n
    IntMatrix empty_;
};

// Finite integer combination of oriented k-simplices.
struct Chain {
    int degree = 0;
    std::map<Simplex, Int> coeffs;

    static Chain zero(int degree) { return Chain{degree, {}}; }
    static Chain of(const Simplex& s, Int coeff = Int(1));

    Int coeff(const Simplex& s) const;
    void add(const Simplex& s, const Int& c);
    bool is_zero() const { return coeffs.empty(); }

    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain operator-() const;
    Chain scaled(const Int& t) const;
    bool operator==(const Chain&) const = default;
};

// Alternating-sign face sum; satisfies boundary(boundary(z)) = 0.
Chain boundary(const Chain& z);

bool is_cycle(const Chain& z);

void validate_chain(const SimplicialComplex& K, const Chain& z);

IntVec chain_to_vector(const SimplicialComplex& K, const Chain& z);
Chain chain_from_vector(const SimplicialComplex& K, int degree, const IntVec& v);

} // namespace dct

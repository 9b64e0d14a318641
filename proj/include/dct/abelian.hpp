#pragma once

#include <memory>
#include <optional>

#include "dct/solve.hpp"

namespace dct {

// Presentation of span(Z)/span(B) inside Z^N, computed from the Smith normal
// form of the relation matrix written in generator coordinates.  Generators
// of the quotient are reported torsion-first (invariant factors > 1, in
// divisibility order) followed by the free generators.
class QuotientPresentation {
public:
    struct Coord {
        IntVec torsion; // residues in [0, d_i)
        IntVec free;

        bool is_zero() const {
            return vec_is_zero(torsion) && vec_is_zero(free);
        }
        bool operator==(const Coord&) const = default;
    };

    // generators: N x r (columns generate), relations: N x m.  Throws
    // input_error if a relation is not an integer combination of generators.
    QuotientPresentation(const IntMatrix& generators, const IntMatrix& relations);

    long free_rank() const { return free_rank_; }
    const IntVec& torsion() const { return torsion_; }
    long num_generators() const { return static_cast<long>(torsion_.size()) + free_rank_; }
    int ambient_dim() const { return ambient_.rows(); }

    // Ambient representative of quotient generator i (torsion-first order).
    IntVec generator(int i) const;
    Int generator_order(int i) const; // 0 for free generators

    Coord coordinate(const IntVec& v) const;

    // Unreduced coordinates over all SNF positions, for homomorphism lifting;
    // position_orders()[p] is d_p (1 = killed, 0 = free).
    IntVec position_coordinate(const IntVec& v) const;
    const IntVec& position_orders() const { return position_orders_; }
    const std::vector<int>& kept_positions() const { return kept_positions_; }

    bool is_trivial() const { return num_generators() == 0; }

private:
    IntVec solve_in_generators(const IntVec& v) const;

    IntMatrix ambient_;             // generator matrix Z (N x r)
    SmithDecomposition gen_snf_;    // SNF of Z, for coordinate solving
    SmithDecomposition rel_snf_;    // SNF of relation matrix in Z-coordinates
    IntVec position_orders_;        // length r
    std::vector<int> kept_positions_; // torsion positions then free positions
    IntVec torsion_;
    long free_rank_ = 0;
};

// Spec-level operation: present span(Z)/span(B).  Dependent generating sets
// are allowed; the kernel of Z is folded into the relations.
QuotientPresentation quotient_presentation(const IntMatrix& Z, const IntMatrix& B);

} // namespace dct

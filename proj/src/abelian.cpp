#include "dct/abelian.hpp"

namespace dct {

QuotientPresentation::QuotientPresentation(const IntMatrix& generators, const IntMatrix& relations) {
    if (generators.rows() != relations.rows())
        throw input_error("quotient presentation: ambient dimension mismatch");
    ambient_ = generators;
    gen_snf_ = smith_normal_form(ambient_);

    const int r = ambient_.cols();
    // Relations in generator coordinates, plus the kernel of the generator
    // matrix when the generating set is dependent.
    IntMatrix kernel = integer_kernel(gen_snf_);
    IntMatrix R(r, relations.cols() + kernel.cols());
    for (int j = 0; j < relations.cols(); ++j) {
        IntSolve s = solve_integer(gen_snf_, relations.column(j));
        if (!s.ok()) throw input_error("quotient presentation: relation not in span of generators");
        R.set_column(j, *s.solution);
    }
    for (int j = 0; j < kernel.cols(); ++j) R.set_column(relations.cols() + j, kernel.column(j));

    rel_snf_ = smith_normal_form(R);
    position_orders_.resize(r);
    for (int p = 0; p < r; ++p) position_orders_[p] = rel_snf_.diag(p);

    for (int p = 0; p < r; ++p)
        if (position_orders_[p] > 1) {
            kept_positions_.push_back(p);
            torsion_.push_back(position_orders_[p]);
        }
    for (int p = 0; p < r; ++p)
        if (position_orders_[p] == 0) {
            kept_positions_.push_back(p);
            ++free_rank_;
            // Normalize the free generator so its first nonzero ambient entry
            // is positive.  Row p of D is zero, so flipping column p of U and
            // row p of Uinv keeps R = U * D * W intact.
            IntVec g = ambient_.apply(rel_snf_.U.column(p));
            for (const auto& x : g) {
                if (x == 0) continue;
                if (x < 0) {
                    for (int i = 0; i < rel_snf_.U.rows(); ++i) rel_snf_.U.set(i, p, -rel_snf_.U.get(i, p));
                    for (int i = 0; i < rel_snf_.Uinv.cols(); ++i)
                        rel_snf_.Uinv.set(p, i, -rel_snf_.Uinv.get(p, i));
                }
                break;
            }
        }
}

IntVec QuotientPresentation::generator(int i) const {
    if (i < 0 || i >= num_generators()) throw input_error("generator index out of range");
    return ambient_.apply(rel_snf_.U.column(kept_positions_[i]));
}

Int QuotientPresentation::generator_order(int i) const {
    if (i < 0 || i >= num_generators()) throw input_error("generator index out of range");
    return position_orders_[kept_positions_[i]];
}

IntVec QuotientPresentation::solve_in_generators(const IntVec& v) const {
    IntSolve s = solve_integer(gen_snf_, v);
    if (!s.ok()) throw input_error("element not in the span of the generators");
    return *s.solution;
}

IntVec QuotientPresentation::position_coordinate(const IntVec& v) const {
    return rel_snf_.Uinv.apply(solve_in_generators(v));
}

QuotientPresentation::Coord QuotientPresentation::coordinate(const IntVec& v) const {
    IntVec y = position_coordinate(v);
    Coord c;
    for (int p : kept_positions_) {
        const Int& d = position_orders_[p];
        if (d > 1)
            c.torsion.push_back(mod_floor(y[p], d));
        else
            c.free.push_back(y[p]);
    }
    return c;
}

QuotientPresentation quotient_presentation(const IntMatrix& Z, const IntMatrix& B) {
    return QuotientPresentation(Z, B);
}

} // namespace dct

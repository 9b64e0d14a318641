#pragma once

#include "dct/rational.hpp"

namespace dct {

// The coefficient lattice L = alpha*Z inside V = Q.  alpha = 0 encodes the
// zero lattice.
struct Lattice {
    Rat alpha = Rat(0);

    static Lattice zero() { return Lattice{Rat(0)}; }
    static Lattice integers() { return Lattice{Rat(1)}; }
    static Lattice scaled(const Rat& a) {
        if (a < 0) throw input_error("lattice scale must be nonnegative");
        return Lattice{a};
    }

    bool is_zero() const { return alpha == 0; }

    bool contains(const Rat& v) const {
        if (is_zero()) return v == 0;
        return is_integer(v / alpha);
    }

    // Canonical representative of v mod L in [0, alpha); identity for L = 0.
    Rat reduce(const Rat& v) const {
        if (is_zero()) return v;
        return v - rat_floor(v / alpha) * alpha;
    }

    // True when L1 = this is contained in L2.
    bool contained_in(const Lattice& L2) const {
        if (is_zero()) return true;
        if (L2.is_zero()) return false;
        return is_integer(alpha / L2.alpha);
    }

    bool operator==(const Lattice&) const = default;
};

} // namespace dct

#pragma once

#include "dct/lattice.hpp"
#include "dct/simplicial.hpp"

namespace dct {

// Coefficient tag of a cochain: the vector space V = Q, the lattice L, or the
// quotient V/L with representatives canonicalized to [0, alpha).
enum class Coeff { V, L, VmodL };

struct Cochain {
    int degree = 0;
    Coeff kind = Coeff::V;
    Lattice lattice; // used by L and VmodL
    std::map<Simplex, Rat> values; // no stored zeros

    static Cochain zero(int degree, Coeff kind = Coeff::V, Lattice lattice = {}) {
        return Cochain{degree, kind, lattice, {}};
    }
    // Degree-0 cochain with value 1 on every vertex of K (unit for the cup
    // product).
    static Cochain unit(const SimplicialComplex& K, Coeff kind = Coeff::V, Lattice lattice = {});

    Rat value(const Simplex& s) const;
    void set(const Simplex& s, const Rat& v);
    void add(const Simplex& s, const Rat& v) { set(s, value(s) + v); }
    bool is_zero() const { return values.empty(); }

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;
    Cochain scaled(const Rat& t) const;
    bool operator==(const Cochain&) const = default;
};

// <c, z>; evaluates representatives for V/L cochains.
Rat pairing(const Cochain& c, const Chain& z);

// <delta c, w> = <c, boundary w>, no extra sign.
Cochain coboundary(const SimplicialComplex& K, const Cochain& c);

// Retag as a V-valued cochain (forgets L / lifts V/L representatives).
Cochain as_v(const Cochain& c);
// Reduce a V-valued cochain mod L.
Cochain reduce_mod(const Cochain& c, const Lattice& L);
// Retag a V-valued cochain whose values all lie in L.
Cochain as_lattice(const Cochain& c, const Lattice& L);

void validate_cochain(const SimplicialComplex& K, const Cochain& c);

RatVec cochain_to_vector(const SimplicialComplex& K, const Cochain& c);
Cochain cochain_from_vector(const SimplicialComplex& K, int degree, const RatVec& v,
                            Coeff kind = Coeff::V, Lattice lattice = {});
IntVec lattice_cochain_to_integer_vector(const SimplicialComplex& K, const Cochain& c);

} // namespace dct

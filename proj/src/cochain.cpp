#include "dct/cochain.hpp"

namespace dct {

Cochain Cochain::unit(const SimplicialComplex& K, Coeff kind, Lattice lattice) {
    Cochain c = Cochain::zero(0, kind, lattice);
    for (const auto& v : K.cells(0)) c.set(v, Rat(1));
    return c;
}

Rat Cochain::value(const Simplex& s) const {
    auto it = values.find(s);
    return it == values.end() ? Rat(0) : it->second;
}

void Cochain::set(const Simplex& s, const Rat& v) {
    if (static_cast<int>(s.size()) - 1 != degree) throw input_error("cochain degree mismatch");
    Rat w = (kind == Coeff::VmodL) ? lattice.reduce(v) : v;
    if (w == 0)
        values.erase(s);
    else
        values[s] = w;
}

namespace {

void check_compatible(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree) throw input_error("cochain degree mismatch");
    if (a.kind != b.kind) throw input_error("cochain coefficient mismatch");
    if (a.kind != Coeff::V && !(a.lattice == b.lattice)) throw input_error("cochain lattice mismatch");
}

} // namespace

Cochain& Cochain::operator+=(const Cochain& o) {
    check_compatible(*this, o);
    for (const auto& [s, v] : o.values) add(s, v);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    check_compatible(*this, o);
    for (const auto& [s, v] : o.values) add(s, -v);
    return *this;
}

Cochain Cochain::operator+(const Cochain& o) const {
    Cochain c = *this;
    c += o;
    return c;
}

Cochain Cochain::operator-(const Cochain& o) const {
    Cochain c = *this;
    c -= o;
    return c;
}

Cochain Cochain::operator-() const {
    Cochain c = Cochain::zero(degree, kind, lattice);
    for (const auto& [s, v] : values) c.set(s, -v);
    return c;
}

Cochain Cochain::scaled(const Rat& t) const {
    Cochain c = Cochain::zero(degree, kind, lattice);
    if (t == 0) return c;
    for (const auto& [s, v] : values) c.set(s, v * t);
    return c;
}

Rat pairing(const Cochain& c, const Chain& z) {
    if (c.degree != z.degree) throw input_error("pairing degree mismatch");
    Rat s(0);
    for (const auto& [simp, coeff] : z.coeffs) s += c.value(simp) * Rat(coeff);
    return s;
}

Cochain coboundary(const SimplicialComplex& K, const Cochain& c) {
    Cochain d = Cochain::zero(c.degree + 1, c.kind, c.lattice);
    if (c.degree + 1 > K.dimension() || c.is_zero()) return d;
    for (const auto& tau : K.cells(c.degree + 1)) {
        Rat v(0);
        Rat sign(1);
        for (std::size_t i = 0; i < tau.size(); ++i) {
            v += sign * c.value(face_of(tau, static_cast<int>(i)));
            sign = -sign;
        }
        d.set(tau, v);
    }
    return d;
}

Cochain as_v(const Cochain& c) {
    Cochain out = Cochain::zero(c.degree, Coeff::V);
    for (const auto& [s, v] : c.values) out.set(s, v);
    return out;
}

Cochain reduce_mod(const Cochain& c, const Lattice& L) {
    if (c.kind == Coeff::L) throw input_error("reduce_mod expects a V-valued cochain");
    Cochain out = Cochain::zero(c.degree, Coeff::VmodL, L);
    for (const auto& [s, v] : c.values) out.set(s, v);
    return out;
}

Cochain as_lattice(const Cochain& c, const Lattice& L) {
    Cochain out = Cochain::zero(c.degree, Coeff::L, L);
    for (const auto& [s, v] : c.values) {
        if (!L.contains(v)) throw input_error("cochain value not in the lattice");
        out.set(s, v);
    }
    return out;
}

void validate_cochain(const SimplicialComplex& K, const Cochain& c) {
    if (c.degree < -1) throw input_error("cochain degree out of range");
    for (const auto& [s, v] : c.values) {
        if (static_cast<int>(s.size()) - 1 != c.degree) throw input_error("cochain degree mismatch");
        if (!K.has_cell(s)) throw input_error("cochain uses a simplex not in the complex");
        if (c.kind == Coeff::L && !c.lattice.contains(v))
            throw input_error("lattice cochain has a value outside the lattice");
        if (c.kind == Coeff::VmodL && !(c.lattice.reduce(v) == v))
            throw input_error("quotient cochain value is not a canonical representative");
        if (v == 0) throw input_error("cochain stores an explicit zero");
    }
}

RatVec cochain_to_vector(const SimplicialComplex& K, const Cochain& c) {
    RatVec v(K.n_cells(c.degree), Rat(0));
    for (const auto& [s, val] : c.values) {
        auto idx = K.cell_index(s);
        if (!idx) throw input_error("cochain uses a simplex not in the complex");
        v[*idx] = val;
    }
    return v;
}

Cochain cochain_from_vector(const SimplicialComplex& K, int degree, const RatVec& v, Coeff kind,
                            Lattice lattice) {
    if (static_cast<int>(v.size()) != K.n_cells(degree)) throw input_error("cochain vector size mismatch");
    Cochain c = Cochain::zero(degree, kind, lattice);
    const auto& cs = K.cells(degree);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) c.set(cs[i], v[i]);
    return c;
}

IntVec lattice_cochain_to_integer_vector(const SimplicialComplex& K, const Cochain& c) {
    if (c.kind != Coeff::L) throw input_error("expected a lattice cochain");
    if (c.lattice.is_zero()) {
        if (!c.is_zero()) throw input_error("nonzero cochain over the zero lattice");
        return IntVec(K.n_cells(c.degree), Int(0));
    }
    IntVec v(K.n_cells(c.degree), Int(0));
    for (const auto& [s, val] : c.values) {
        auto idx = K.cell_index(s);
        if (!idx) throw input_error("cochain uses a simplex not in the complex");
        v[*idx] = to_int(val / c.lattice.alpha);
    }
    return v;
}

} // namespace dct

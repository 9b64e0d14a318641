#include "dct/simplicial.hpp"

#include <algorithm>
#include <set>

#include "dct/error.hpp"

namespace dct {

Simplex face_of(const Simplex& s, int omit) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (static_cast<int>(i) != omit) f.push_back(s[i]);
    return f;
}

namespace {

void check_simplex(const Simplex& s) {
    if (s.empty()) throw input_error("empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) throw input_error("negative vertex id");
        if (i > 0 && s[i] <= s[i - 1])
            throw input_error("simplex vertices must be strictly ascending");
    }
}

} // namespace

std::shared_ptr<const SimplicialComplex> SimplicialComplex::make(std::string name,
                                                                 const std::vector<Simplex>& simplices) {
    auto K = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
    K->name_ = std::move(name);

    // Close under faces.
    std::set<Simplex> all;
    std::vector<Simplex> queue = simplices;
    for (auto& s : queue) check_simplex(s);
    while (!queue.empty()) {
        Simplex s = queue.back();
        queue.pop_back();
        if (!all.insert(s).second) continue;
        if (s.size() > 1)
            for (std::size_t i = 0; i < s.size(); ++i) queue.push_back(face_of(s, static_cast<int>(i)));
    }
    if (all.empty()) throw input_error("complex has no simplices");

    for (const auto& s : all) K->dimension_ = std::max<int>(K->dimension_, static_cast<int>(s.size()) - 1);
    K->cells_.resize(K->dimension_ + 1);
    for (const auto& s : all) K->cells_[s.size() - 1].push_back(s);
    for (auto& level : K->cells_) std::sort(level.begin(), level.end());
    for (int k = 0; k <= K->dimension_; ++k)
        for (std::size_t i = 0; i < K->cells_[k].size(); ++i) K->index_[K->cells_[k][i]] = static_cast<int>(i);

    K->boundary_.resize(K->dimension_ + 1);
    K->coboundary_.resize(K->dimension_ + 1);
    for (int k = 0; k <= K->dimension_; ++k) {
        const int nk = K->n_cells(k);
        const int nk1 = K->n_cells(k - 1);
        IntMatrix d(nk1, nk);
        if (k > 0) {
            for (int j = 0; j < nk; ++j) {
                const Simplex& s = K->cells_[k][j];
                Int sign(1);
                for (std::size_t i = 0; i < s.size(); ++i) {
                    d.add_to(K->index_.at(face_of(s, static_cast<int>(i))), j, sign);
                    sign = -sign;
                }
            }
        }
        K->boundary_[k] = std::move(d);
    }
    for (int k = 0; k <= K->dimension_; ++k) {
        K->coboundary_[k] = (k + 1 <= K->dimension_) ? K->boundary_[k + 1].transpose()
                                                     : IntMatrix(0, K->n_cells(k));
    }
    return K;
}

const std::vector<Simplex>& SimplicialComplex::cells(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > dimension_) return none;
    return cells_[k];
}

std::optional<int> SimplicialComplex::cell_index(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const IntMatrix& SimplicialComplex::boundary_matrix(int k) const {
    if (k < 0 || k > dimension_) throw input_error("boundary_matrix: degree out of range");
    return boundary_[k];
}

const IntMatrix& SimplicialComplex::coboundary_matrix(int k) const {
    if (k < 0 || k > dimension_) throw input_error("coboundary_matrix: degree out of range");
    return coboundary_[k];
}

Chain Chain::of(const Simplex& s, Int coeff) {
    Chain z{static_cast<int>(s.size()) - 1, {}};
    z.add(s, coeff);
    return z;
}

Int Chain::coeff(const Simplex& s) const {
    auto it = coeffs.find(s);
    return it == coeffs.end() ? Int(0) : it->second;
}

void Chain::add(const Simplex& s, const Int& c) {
    if (c == 0) return;
    if (static_cast<int>(s.size()) - 1 != degree) throw input_error("chain degree mismatch");
    auto [it, fresh] = coeffs.try_emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& o) {
    if (degree != o.degree) throw input_error("chain degree mismatch");
    for (const auto& [s, c] : o.coeffs) add(s, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& o) {
    if (degree != o.degree) throw input_error("chain degree mismatch");
    for (const auto& [s, c] : o.coeffs) add(s, -c);
    return *this;
}

Chain Chain::operator-() const {
    Chain z{degree, coeffs};
    for (auto& [s, c] : z.coeffs) c = -c;
    return z;
}

Chain Chain::scaled(const Int& t) const {
    Chain z = Chain::zero(degree);
    if (t == 0) return z;
    for (const auto& [s, c] : coeffs) z.add(s, c * t);
    return z;
}

Chain boundary(const Chain& z) {
    Chain b = Chain::zero(z.degree - 1);
    if (z.degree == 0) return b; // non-augmented: boundary of points is zero
    for (const auto& [s, c] : z.coeffs) {
        Int sign(1);
        for (std::size_t i = 0; i < s.size(); ++i) {
            b.add(face_of(s, static_cast<int>(i)), c * sign);
            sign = -sign;
        }
    }
    return b;
}

bool is_cycle(const Chain& z) { return boundary(z).is_zero(); }

void validate_chain(const SimplicialComplex& K, const Chain& z) {
    for (const auto& [s, c] : z.coeffs) {
        if (static_cast<int>(s.size()) - 1 != z.degree) throw input_error("chain degree mismatch");
        if (!K.has_cell(s)) throw input_error("chain uses a simplex not in the complex");
    }
}

IntVec chain_to_vector(const SimplicialComplex& K, const Chain& z) {
    IntVec v(K.n_cells(z.degree), Int(0));
    for (const auto& [s, c] : z.coeffs) {
        auto idx = K.cell_index(s);
        if (!idx) throw input_error("chain uses a simplex not in the complex");
        v[*idx] = c;
    }
    return v;
}

Chain chain_from_vector(const SimplicialComplex& K, int degree, const IntVec& v) {
    if (static_cast<int>(v.size()) != K.n_cells(degree)) throw input_error("chain vector size mismatch");
    Chain z = Chain::zero(degree);
    const auto& cs = K.cells(degree);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) z.add(cs[i], v[i]);
    return z;
}

} // namespace dct

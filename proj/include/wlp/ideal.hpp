/*
   Copyright 2026 wlpkit contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wlp/errors.hpp"
#include "wlp/hilbert.hpp"
#include "wlp/linalg.hpp"
#include "wlp/ring.hpp"

namespace wlp {

/// The degree-d piece of a homogeneous ideal, stored as a reduced
/// row-echelon basis over the descending-lex monomial basis of R_d.
/// Monomial pieces set unit_rows and keep only the pivot set.
template <class F>
struct DegreePiece {
    using value_type = typename F::value_type;

    long dim_ambient = 0;
    std::vector<size_t> pivots;     // ascending column indices of leading monomials
    std::vector<size_t> standards;  // ascending complement: the quotient basis
    bool unit_rows = true;          // true: rows are unit vectors on the pivots
    std::vector<std::vector<value_type>> rows; // RREF rows when !unit_rows

    long rank() const { return static_cast<long>(pivots.size()); }
    long quotient_dim() const { return static_cast<long>(standards.size()); }

    /// Reduce a dense degree-d coefficient vector modulo this piece.
    void reduce(const F& K, std::vector<value_type>& v) const {
        if (unit_rows) {
            for (size_t p : pivots) v[p] = K.zero();
            return;
        }
        for (size_t k = 0; k < pivots.size(); ++k) {
            const size_t p = pivots[k];
            if (K.is_zero(v[p])) continue;
            value_type factor = v[p];
            const auto& row = rows[k];
            for (size_t j = p; j < row.size(); ++j)
                if (!K.is_zero(row[j])) K.submul_assign(v[j], factor, row[j]);
        }
    }

    bool contains(const F& K, std::vector<value_type> v) const {
        reduce(K, v);
        for (const auto& c : v)
            if (!K.is_zero(c)) return false;
        return true;
    }
};

namespace detail {

template <class F>
void fill_standards(DegreePiece<F>& piece) {
    piece.standards.clear();
    size_t next = 0;
    for (size_t c = 0; c < static_cast<size_t>(piece.dim_ambient); ++c) {
        if (next < piece.pivots.size() && piece.pivots[next] == c) {
            ++next;
            continue;
        }
        piece.standards.push_back(c);
    }
}

template <class F>
DegreePiece<F> empty_piece(long dim) {
    DegreePiece<F> piece;
    piece.dim_ambient = dim;
    piece.unit_rows = true;
    fill_standards(piece);
    return piece;
}

template <class F>
DegreePiece<F> full_piece(long dim) {
    DegreePiece<F> piece;
    piece.dim_ambient = dim;
    piece.unit_rows = true;
    piece.pivots.resize(static_cast<size_t>(dim));
    for (size_t c = 0; c < static_cast<size_t>(dim); ++c) piece.pivots[c] = c;
    return piece;
}

template <class F>
DegreePiece<F> piece_from_pivot_set(long dim, std::vector<size_t> pivots) {
    DegreePiece<F> piece;
    piece.dim_ambient = dim;
    piece.unit_rows = true;
    piece.pivots = std::move(pivots);
    fill_standards(piece);
    return piece;
}

/// Row-reduce a stack of dense coefficient rows into a DegreePiece,
/// demoting to the implicit unit-row form when every row is a unit vector.
template <class F>
DegreePiece<F> piece_from_rows(const F& K, long dim,
                               std::vector<std::vector<typename F::value_type>> rows) {
    Matrix<F> M(K, std::move(rows));
    M.ncols = static_cast<size_t>(dim);
    for (auto& row : M.rows) row.resize(static_cast<size_t>(dim), K.zero());
    M.nrows = M.rows.size();
    DegreePiece<F> piece;
    piece.dim_ambient = dim;
    std::vector<size_t> pivots = rref_in_place(M);
    piece.pivots = std::move(pivots);
    fill_standards(piece);
    bool all_unit = true;
    for (size_t k = 0; k < piece.pivots.size() && all_unit; ++k) {
        const auto& row = M.rows[k];
        for (size_t j = 0; j < row.size(); ++j) {
            if (j == piece.pivots[k]) continue;
            if (!K.is_zero(row[j])) {
                all_unit = false;
                break;
            }
        }
    }
    piece.unit_rows = all_unit;
    if (!all_unit) piece.rows = std::move(M.rows);
    return piece;
}

/// Scatter a degree-(d-1) coefficient row through multiplication by x_i.
template <class F>
std::vector<typename F::value_type> shift_row(const F& K, const Ring& ring, int d_from, int var,
                                              const std::vector<typename F::value_type>& row) {
    std::vector<typename F::value_type> out(static_cast<size_t>(ring.dimension(d_from + 1)),
                                            K.zero());
    const std::vector<int>& table = ring.shift_table(d_from, var);
    for (size_t k = 0; k < row.size(); ++k)
        if (!K.is_zero(row[k])) K.add_assign(out[static_cast<size_t>(table[k])], row[k]);
    return out;
}

/// All x_i-multiples of a piece's rows, as dense degree-(d_from+1) rows.
template <class F>
std::vector<std::vector<typename F::value_type>> shifted_rows(const F& K, const Ring& ring,
                                                              int d_from,
                                                              const DegreePiece<F>& piece) {
    std::vector<std::vector<typename F::value_type>> out;
    const long dim_to = ring.dimension(d_from + 1);
    for (int i = 1; i <= ring.nvars(); ++i) {
        const std::vector<int>& table = ring.shift_table(d_from, i);
        if (piece.unit_rows) {
            for (size_t p : piece.pivots) {
                std::vector<typename F::value_type> row(static_cast<size_t>(dim_to), K.zero());
                row[static_cast<size_t>(table[p])] = K.one();
                out.push_back(std::move(row));
            }
        } else {
            for (const auto& r : piece.rows) out.push_back(shift_row(K, ring, d_from, i, r));
        }
    }
    return out;
}

/// Dense coefficient row of a polynomial over F, via the rational coefficients.
template <class F>
std::vector<typename F::value_type> polynomial_row(const F& K, const Ring& ring,
                                                   const Polynomial& p, int degree) {
    std::vector<typename F::value_type> row(static_cast<size_t>(ring.dimension(degree)),
                                            K.zero());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != degree)
            throw NonHomogeneousGenerator(p.to_string());
        row[static_cast<size_t>(ring.index_of(m))] = K.from_rational(c);
    }
    return row;
}

template <class F>
class IdealCore {
public:
    IdealCore(Ring ring, F field) : ring_(std::move(ring)), field_(std::move(field)) {}
    virtual ~IdealCore() = default;

    const Ring& ring() const { return ring_; }
    const F& field() const { return field_; }

    const DegreePiece<F>& piece(int d) {
        if (d < 0) throw std::invalid_argument("ideal piece of negative degree");
        while (static_cast<int>(pieces_.size()) <= d)
            pieces_.push_back(compute(static_cast<int>(pieces_.size())));
        return pieces_[static_cast<size_t>(d)];
    }

    virtual bool monomial() const = 0;

protected:
    virtual DegreePiece<F> compute(int d) = 0;

    Ring ring_;
    F field_;
    std::vector<DegreePiece<F>> pieces_;
};

} // namespace detail

/// A homogeneous ideal exposed degree by degree.  Copies share the piece
/// cache; pieces are materialized on first access in increasing degree.
template <class F>
class GradedIdeal {
public:
    explicit GradedIdeal(std::shared_ptr<detail::IdealCore<F>> core) : core_(std::move(core)) {}

    const Ring& ring() const { return core_->ring(); }
    const F& field() const { return core_->field(); }
    int nvars() const { return ring().nvars(); }
    bool is_monomial() const { return core_->monomial(); }

    const DegreePiece<F>& piece(int d) const { return core_->piece(d); }
    long rank_at(int d) const { return piece(d).rank(); }
    long quotient_dim(int d) const { return piece(d).quotient_dim(); }

    bool contains(const Polynomial& p) const {
        if (p.is_zero()) return true;
        if (!p.is_homogeneous()) throw NonHomogeneousGenerator(p.to_string());
        int d = p.degree();
        return piece(d).contains(field(), detail::polynomial_row(field(), ring(), p, d));
    }

private:
    std::shared_ptr<detail::IdealCore<F>> core_;
};

namespace detail {

template <class F>
class SpannedCore final : public IdealCore<F> {
public:
    SpannedCore(Ring ring, F field, std::vector<Polynomial> gens)
        : IdealCore<F>(std::move(ring), std::move(field)), gens_(std::move(gens)) {
        monomial_ = true;
        for (const Polynomial& g : gens_) {
            if (g.is_zero()) throw std::invalid_argument("zero generator");
            if (!g.is_homogeneous()) throw NonHomogeneousGenerator(g.to_string());
            if (!g.is_monomial()) monomial_ = false;
        }
    }

    bool monomial() const override { return monomial_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

protected:
    DegreePiece<F> compute(int d) override {
        const Ring& R = this->ring_;
        const F& K = this->field_;
        const long dim = R.dimension(d);
        if (monomial_) {
            std::set<size_t> idx;
            if (d > 0) {
                const DegreePiece<F>& prev = this->pieces_[static_cast<size_t>(d - 1)];
                for (int i = 1; i <= R.nvars(); ++i) {
                    const std::vector<int>& table = R.shift_table(d - 1, i);
                    for (size_t p : prev.pivots) idx.insert(static_cast<size_t>(table[p]));
                }
            }
            for (const Polynomial& g : gens_)
                if (g.degree() == d)
                    idx.insert(static_cast<size_t>(R.index_of(g.terms().begin()->first)));
            return piece_from_pivot_set<F>(dim, std::vector<size_t>(idx.begin(), idx.end()));
        }
        std::vector<std::vector<typename F::value_type>> rows;
        if (d > 0)
            rows = shifted_rows(K, R, d - 1, this->pieces_[static_cast<size_t>(d - 1)]);
        for (const Polynomial& g : gens_)
            if (g.degree() == d) rows.push_back(polynomial_row(K, R, g, d));
        return piece_from_rows(K, dim, std::move(rows));
    }

private:
    std::vector<Polynomial> gens_;
    bool monomial_ = false;
};

template <class F>
class LexCore final : public IdealCore<F> {
public:
    LexCore(Ring ring, F field, HilbertFunction H)
        : IdealCore<F>(std::move(ring), std::move(field)), H_(std::move(H)) {
        require_o_sequence(H_);
        if (H_[1] > this->ring_.nvars())
            throw CodimensionExceedsRing(H_.to_string() + " needs more than " +
                                         std::to_string(this->ring_.nvars()) + " variables");
    }

    bool monomial() const override { return true; }

protected:
    DegreePiece<F> compute(int d) override {
        const long dim = this->ring_.dimension(d);
        long h = H_[d].get_si();
        long k = dim - h;
        if (k < 0) throw std::logic_error("lex piece larger than the ambient space");
        std::vector<size_t> pivots(static_cast<size_t>(k));
        for (long c = 0; c < k; ++c) pivots[static_cast<size_t>(c)] = static_cast<size_t>(c);
        return piece_from_pivot_set<F>(dim, std::move(pivots));
    }

private:
    HilbertFunction H_;
};

template <class F>
class PointsCore final : public IdealCore<F> {
public:
    PointsCore(Ring ring, F field, std::vector<std::vector<mpq_class>> points)
        : IdealCore<F>(std::move(ring), std::move(field)), points_(std::move(points)) {
        const size_t r = static_cast<size_t>(this->ring_.nvars());
        for (auto& pt : points_) {
            if (pt.size() != r)
                throw std::invalid_argument("point with " + std::to_string(pt.size()) +
                                            " coordinates in a ring with " + std::to_string(r) +
                                            " variables");
            size_t lead = 0;
            while (lead < r && sgn(pt[lead]) == 0) ++lead;
            if (lead == r) throw std::invalid_argument("zero point is not projective");
            mpq_class scale = pt[lead];
            for (auto& c : pt) c /= scale;
        }
        for (size_t a = 0; a < points_.size(); ++a)
            for (size_t b = a + 1; b < points_.size(); ++b)
                if (points_[a] == points_[b])
                    throw DuplicatePoint("points " + std::to_string(a + 1) + " and " +
                                         std::to_string(b + 1) + " coincide");
    }

    bool monomial() const override { return false; }
    const std::vector<std::vector<mpq_class>>& points() const { return points_; }

protected:
    DegreePiece<F> compute(int d) override {
        const Ring& R = this->ring_;
        const F& K = this->field_;
        const long dim = R.dimension(d);
        const auto& basis = R.basis(d);
        Matrix<F> eval(K, points_.size(), static_cast<size_t>(dim));
        for (size_t i = 0; i < points_.size(); ++i)
            for (size_t j = 0; j < static_cast<size_t>(dim); ++j) {
                mpq_class value = 1;
                for (size_t v = 0; v < basis[j].exps.size(); ++v)
                    for (int e = 0; e < basis[j].exps[v]; ++e) value *= points_[i][v];
                eval.at(i, j) = K.from_rational(value);
            }
        return piece_from_rows(K, dim, kernel_basis(std::move(eval)));
    }

private:
    std::vector<std::vector<mpq_class>> points_;
};

template <class F>
class TruncatedCore final : public IdealCore<F> {
public:
    TruncatedCore(GradedIdeal<F> parent, int s)
        : IdealCore<F>(parent.ring(), parent.field()), parent_(std::move(parent)), s_(s) {
        if (s < 1) throw std::invalid_argument("add_maximal_power: s must be >= 1");
    }

    bool monomial() const override { return parent_.is_monomial(); }

protected:
    DegreePiece<F> compute(int d) override {
        if (d < s_) return parent_.piece(d);
        return full_piece<F>(this->ring_.dimension(d));
    }

private:
    GradedIdeal<F> parent_;
    int s_;
};

/// I + (L) for a linear form L.
template <class F>
class AugmentedCore final : public IdealCore<F> {
public:
    AugmentedCore(GradedIdeal<F> parent, Polynomial L)
        : IdealCore<F>(parent.ring(), parent.field()), parent_(std::move(parent)),
          L_(std::move(L)) {
        if (L_.is_zero() || L_.degree() != 1)
            throw std::invalid_argument("augmenting form must be linear and nonzero");
    }

    bool monomial() const override { return parent_.is_monomial() && L_.is_monomial(); }

protected:
    DegreePiece<F> compute(int d) override {
        const Ring& R = this->ring_;
        const F& K = this->field_;
        const long dim = R.dimension(d);
        const DegreePiece<F>& base = parent_.piece(d);
        std::vector<std::vector<typename F::value_type>> rows;
        if (base.unit_rows) {
            for (size_t p : base.pivots) {
                std::vector<typename F::value_type> row(static_cast<size_t>(dim), K.zero());
                row[p] = K.one();
                rows.push_back(std::move(row));
            }
        } else {
            rows = base.rows;
        }
        if (d >= 1) {
            for (const Monomial& m : R.basis(d - 1)) {
                Polynomial lm = L_.times_monomial(m);
                rows.push_back(polynomial_row(K, R, lm, d));
            }
        }
        return piece_from_rows(K, dim, std::move(rows));
    }

private:
    GradedIdeal<F> parent_;
    Polynomial L_;
};

/// (I : L) for a linear form L.
template <class F>
class ColonCore final : public IdealCore<F> {
public:
    ColonCore(GradedIdeal<F> parent, Polynomial L)
        : IdealCore<F>(parent.ring(), parent.field()), parent_(std::move(parent)),
          L_(std::move(L)) {
        if (L_.is_zero() || L_.degree() != 1)
            throw std::invalid_argument("colon form must be linear and nonzero");
    }

    bool monomial() const override { return parent_.is_monomial() && L_.is_monomial(); }

protected:
    DegreePiece<F> compute(int d) override {
        const Ring& R = this->ring_;
        const F& K = this->field_;
        const long dim = R.dimension(d);
        const DegreePiece<F>& target = parent_.piece(d + 1);
        const size_t h_next = target.standards.size();
        if (h_next == 0) return full_piece<F>(dim);

        // column j = reduction of L * m_j expressed on the degree-(d+1) standards
        Matrix<F> M(K, h_next, static_cast<size_t>(dim));
        std::vector<typename F::value_type> lcoeffs(static_cast<size_t>(R.nvars()), K.zero());
        for (const auto& [m, c] : L_.terms())
            lcoeffs[static_cast<size_t>(m.max_index() - 1)] = K.from_rational(c);
        for (size_t j = 0; j < static_cast<size_t>(dim); ++j) {
            std::vector<typename F::value_type> w(
                static_cast<size_t>(R.dimension(d + 1)), K.zero());
            for (int i = 1; i <= R.nvars(); ++i) {
                if (K.is_zero(lcoeffs[static_cast<size_t>(i - 1)])) continue;
                const std::vector<int>& table = R.shift_table(d, i);
                K.add_assign(w[static_cast<size_t>(table[j])],
                             lcoeffs[static_cast<size_t>(i - 1)]);
            }
            target.reduce(K, w);
            for (size_t s = 0; s < h_next; ++s) M.at(s, j) = w[target.standards[s]];
        }
        return piece_from_rows(K, dim, kernel_basis(std::move(M)));
    }

private:
    GradedIdeal<F> parent_;
    Polynomial L_;
};

/// Monomial ideal given by explicit standard-monomial sets through degree e,
/// full beyond (the enumerator's output form).
template <class F>
class ExplicitMonomialCore final : public IdealCore<F> {
public:
    ExplicitMonomialCore(Ring ring, F field, std::vector<std::vector<size_t>> standards_by_degree)
        : IdealCore<F>(std::move(ring), std::move(field)),
          standards_(std::move(standards_by_degree)) {}

    bool monomial() const override { return true; }

protected:
    DegreePiece<F> compute(int d) override {
        const long dim = this->ring_.dimension(d);
        if (static_cast<size_t>(d) >= standards_.size()) return full_piece<F>(dim);
        DegreePiece<F> piece;
        piece.dim_ambient = dim;
        piece.unit_rows = true;
        piece.standards = standards_[static_cast<size_t>(d)];
        size_t next = 0;
        for (size_t c = 0; c < static_cast<size_t>(dim); ++c) {
            if (next < piece.standards.size() && piece.standards[next] == c) {
                ++next;
                continue;
            }
            piece.pivots.push_back(c);
        }
        return piece;
    }

private:
    std::vector<std::vector<size_t>> standards_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// Construction operations
// ---------------------------------------------------------------------------

template <class F>
GradedIdeal<F> ideal_from_generators(Ring ring, F field, std::vector<Polynomial> gens) {
    return GradedIdeal<F>(std::make_shared<detail::SpannedCore<F>>(
        std::move(ring), std::move(field), std::move(gens)));
}

template <class F>
GradedIdeal<F> lex_ideal(Ring ring, F field, const HilbertFunction& H) {
    return GradedIdeal<F>(
        std::make_shared<detail::LexCore<F>>(std::move(ring), std::move(field), H));
}

template <class F>
GradedIdeal<F> ideal_from_points(Ring ring, F field, std::vector<std::vector<mpq_class>> points,
                                 int d_max = 0) {
    GradedIdeal<F> I(std::make_shared<detail::PointsCore<F>>(std::move(ring), std::move(field),
                                                             std::move(points)));
    if (d_max > 0) I.piece(d_max); // pre-warm through the requested degree
    return I;
}

template <class F>
GradedIdeal<F> add_maximal_power(const GradedIdeal<F>& I, int s) {
    return GradedIdeal<F>(std::make_shared<detail::TruncatedCore<F>>(I, s));
}

template <class F>
GradedIdeal<F> augment_by_linear_form(const GradedIdeal<F>& I, const Polynomial& L) {
    return GradedIdeal<F>(std::make_shared<detail::AugmentedCore<F>>(I, L));
}

template <class F>
GradedIdeal<F> colon_by_linear_form(const GradedIdeal<F>& I, const Polynomial& L, int d_cap = 0) {
    GradedIdeal<F> C(std::make_shared<detail::ColonCore<F>>(I, L));
    if (d_cap > 0) C.piece(d_cap);
    return C;
}

// ---------------------------------------------------------------------------
// Minimal generators
// ---------------------------------------------------------------------------

/// Minimal monomial generators of a monomial ideal, through degree up_to,
/// sorted ascending in graded-lex order.
template <class F>
std::vector<Monomial> minimal_monomial_generators(const GradedIdeal<F>& I, int up_to) {
    if (!I.is_monomial())
        throw std::invalid_argument("minimal_monomial_generators: ideal is not monomial");
    const Ring& R = I.ring();
    std::vector<Monomial> gens;
    if (I.piece(0).rank() > 0) {
        gens.push_back(Monomial::one(R.nvars()));
        return gens;
    }
    for (int d = 1; d <= up_to; ++d) {
        const DegreePiece<F>& cur = I.piece(d);
        const DegreePiece<F>& prev = I.piece(d - 1);
        std::set<size_t> reachable;
        for (int i = 1; i <= R.nvars(); ++i) {
            const std::vector<int>& table = R.shift_table(d - 1, i);
            for (size_t p : prev.pivots) reachable.insert(static_cast<size_t>(table[p]));
        }
        for (size_t p : cur.pivots)
            if (reachable.find(p) == reachable.end()) gens.push_back(R.basis(d)[p]);
    }
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return grlex_greater(b, a); });
    return gens;
}

namespace detail {

template <class F>
mpq_class to_rational(const F&, const typename F::value_type& v);

inline mpq_class to_rational(const RationalField&, const mpq_class& v) { return v; }
inline mpq_class to_rational(const PrimeField&, const long& v) { return mpq_class(v); }

} // namespace detail

/// Minimal generators of any graded ideal through degree up_to: in each
/// degree, the echelon rows surviving reduction modulo R_1 * I_{d-1}.
template <class F>
std::vector<Polynomial> minimal_generators(const GradedIdeal<F>& I, int up_to) {
    const Ring& R = I.ring();
    const F& K = I.field();
    std::vector<Polynomial> gens;

    auto row_to_poly = [&](const std::vector<typename F::value_type>& row, int d) {
        Polynomial p;
        const auto& basis = R.basis(d);
        for (size_t j = 0; j < row.size(); ++j)
            if (!K.is_zero(row[j])) p.add_term(basis[j], detail::to_rational(K, row[j]));
        return p;
    };

    if (I.piece(0).rank() > 0) {
        gens.push_back(Polynomial::from_monomial(Monomial::one(R.nvars())));
        return gens;
    }
    for (int d = 1; d <= up_to; ++d) {
        const DegreePiece<F>& cur = I.piece(d);
        const long dim = R.dimension(d);
        Matrix<F> span(K, detail::shifted_rows(K, R, d - 1, I.piece(d - 1)));
        span.ncols = static_cast<size_t>(dim);
        for (auto& row : span.rows) row.resize(static_cast<size_t>(dim), K.zero());
        span.nrows = span.rows.size();
        rref_in_place(span);

        auto reduce_mod_span = [&](std::vector<typename F::value_type> v) {
            std::vector<size_t> span_pivots;
            for (const auto& row : span.rows) {
                size_t p = 0;
                while (p < row.size() && K.is_zero(row[p])) ++p;
                span_pivots.push_back(p);
            }
            for (size_t s = 0; s < span.rows.size(); ++s) {
                size_t p = span_pivots[s];
                if (p >= v.size() || K.is_zero(v[p])) continue;
                typename F::value_type factor = v[p];
                for (size_t j = p; j < v.size(); ++j)
                    if (!K.is_zero(span.rows[s][j]))
                        K.submul_assign(v[j], factor, span.rows[s][j]);
            }
            return v;
        };

        std::vector<std::vector<typename F::value_type>> cur_rows;
        if (cur.unit_rows) {
            for (size_t p : cur.pivots) {
                std::vector<typename F::value_type> row(static_cast<size_t>(dim), K.zero());
                row[p] = K.one();
                cur_rows.push_back(std::move(row));
            }
        } else {
            cur_rows = cur.rows;
        }
        for (auto& row : cur_rows) {
            std::vector<typename F::value_type> reduced = reduce_mod_span(row);
            bool zero = true;
            for (const auto& c : reduced)
                if (!K.is_zero(c)) {
                    zero = false;
                    break;
                }
            if (zero) continue;
            // normalize leading coefficient to 1
            size_t lead = 0;
            while (lead < reduced.size() && K.is_zero(reduced[lead])) ++lead;
            typename F::value_type inv = K.div(K.one(), reduced[lead]);
            for (auto& c : reduced)
                if (!K.is_zero(c)) c = K.mul(c, inv);
            gens.push_back(row_to_poly(reduced, d));
            // absorb into the span so later rows reduce against it
            span.rows.push_back(std::move(reduced));
            span.nrows = span.rows.size();
            Matrix<F> refreshed(K, std::move(span.rows));
            refreshed.ncols = static_cast<size_t>(dim);
            rref_in_place(refreshed);
            span = std::move(refreshed);
        }
    }
    return gens;
}

} // namespace wlp

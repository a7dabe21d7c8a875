#pragma once

// Finite-dimensional unital algebras over the rationals given by structure
// constants, their morphisms, the Jacobson radical and recovery of the quiver
// of a basic split algebra with square-zero radical.

#include "ncdup/linalg.hpp"
#include "ncdup/quiver.hpp"

#include <array>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncdup {

/// Raised when an algebra falls outside the family an operation supports.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Term {
    std::uint32_t index;
    Rational coeff;
};

using SparseVec = std::vector<Term>;

inline SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.push_back({static_cast<std::uint32_t>(i), v[i]});
    return s;
}

class Algebra {
public:
    Algebra() = default;

    /// All products start at zero; fill them with set_product.
    Algebra(std::vector<std::string> basis, Vec unit)
        : basis_(std::move(basis)), unit_(std::move(unit)), products_(basis_.size() * basis_.size()) {
        if (unit_.size() != basis_.size()) throw std::invalid_argument("unit length differs from dimension");
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const Vec& unit() const { return unit_; }

    /// Structure constants of b_i * b_j.
    const SparseVec& product(std::size_t i, std::size_t j) const { return products_.at(i * dim() + j); }

    Vec product_vec(std::size_t i, std::size_t j) const {
        Vec v(dim());
        for (const auto& t : product(i, j)) v[t.index] = t.coeff;
        return v;
    }

    void set_product(std::size_t i, std::size_t j, const Vec& v) {
        if (v.size() != dim()) throw std::invalid_argument("structure constant vector has wrong length");
        products_.at(i * dim() + j) = to_sparse(v);
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        if (a.dim() != b.dim() || a.unit_ != b.unit_) return false;
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (a.product_vec(i, j) != b.product_vec(i, j)) return false;
        return true;
    }

private:
    std::vector<std::string> basis_;
    Vec unit_;
    std::vector<SparseVec> products_;
};

/// Bilinear extension of the structure constants.
inline Vec multiply(const Algebra& A, const Vec& x, const Vec& y) {
    if (x.size() != A.dim() || y.size() != A.dim()) throw std::invalid_argument("multiply: vector length mismatch");
    Vec out(A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < A.dim(); ++j) {
            if (y[j].is_zero()) continue;
            Rational c = x[i] * y[j];
            for (const auto& t : A.product(i, j)) out[t.index] += c * t.coeff;
        }
    }
    return out;
}

/// k^n with its idempotent basis e0..e{n-1}.
inline Algebra set_algebra(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    Algebra A(labels, Vec(n, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) A.set_product(i, i, unit_vec(n, i));
    return A;
}

struct AlgebraReport {
    std::vector<std::array<std::size_t, 3>> associativity_failures;
    std::vector<std::size_t> unit_failures;

    bool ok() const { return associativity_failures.empty() && unit_failures.empty(); }
};

inline AlgebraReport check_algebra(const Algebra& A) {
    AlgebraReport report;
    const std::size_t d = A.dim();
    std::vector<Vec> basis(d);
    for (std::size_t i = 0; i < d; ++i) basis[i] = unit_vec(d, i);
    for (std::size_t i = 0; i < d; ++i)
        if (multiply(A, A.unit(), basis[i]) != basis[i] || multiply(A, basis[i], A.unit()) != basis[i])
            report.unit_failures.push_back(i);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec ij = A.product_vec(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                Vec left = multiply(A, ij, basis[k]);
                Vec right = multiply(A, basis[i], A.product_vec(j, k));
                if (left != right) report.associativity_failures.push_back({i, j, k});
            }
        }
    return report;
}

/// Left multiplication operator: column k holds x * b_k.
inline Matrix left_multiplication(const Algebra& A, const Vec& x) {
    Matrix L(A.dim(), A.dim());
    for (std::size_t k = 0; k < A.dim(); ++k) L.set_column(k, multiply(A, x, unit_vec(A.dim(), k)));
    return L;
}

struct AlgebraMap {
    Algebra source;
    Algebra target;
    Matrix matrix; // target.dim() x source.dim()

    AlgebraMap() = default;
    AlgebraMap(Algebra src, Algebra tgt, Matrix m) : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
            throw std::invalid_argument("algebra map matrix shape does not match source/target dimensions");
    }

    Vec operator()(const Vec& x) const { return matrix.apply(x); }
};

/// F(xy) = F(x)F(y) on basis pairs and F(1) = 1.
inline bool check_morphism(const AlgebraMap& F) {
    const std::size_t d = F.source.dim();
    std::vector<Vec> images(d);
    for (std::size_t i = 0; i < d; ++i) images[i] = F.matrix.column(i);
    if (F(F.source.unit()) != F.target.unit()) return false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (F(F.source.product_vec(i, j)) != multiply(F.target, images[i], images[j])) return false;
    return true;
}

inline bool is_isomorphism(const AlgebraMap& F) {
    return F.source.dim() == F.target.dim() && rank(F.matrix) == F.source.dim();
}

inline AlgebraMap compose(const AlgebraMap& G, const AlgebraMap& F) {
    if (F.target.dim() != G.source.dim()) throw std::invalid_argument("compose: dimension mismatch");
    return AlgebraMap(F.source, G.target, G.matrix * F.matrix);
}

inline AlgebraMap inverse(const AlgebraMap& F) {
    return AlgebraMap(F.target, F.source, inverse(F.matrix));
}

/// Block-diagonal product with unit (1_A, 1_B).
inline Algebra direct_product(const Algebra& A, const Algebra& B) {
    const std::size_t da = A.dim(), db = B.dim(), d = da + db;
    std::vector<std::string> labels = A.basis();
    labels.insert(labels.end(), B.basis().begin(), B.basis().end());
    Vec unit(d);
    for (std::size_t i = 0; i < da; ++i) unit[i] = A.unit()[i];
    for (std::size_t i = 0; i < db; ++i) unit[da + i] = B.unit()[i];
    Algebra P(labels, unit);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            Vec v(d);
            for (const auto& t : A.product(i, j)) v[t.index] = t.coeff;
            P.set_product(i, j, v);
        }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            Vec v(d);
            for (const auto& t : B.product(i, j)) v[da + t.index] = t.coeff;
            P.set_product(da + i, da + j, v);
        }
    return P;
}

/// The same algebra in the basis given by the columns of P.
inline Algebra change_basis(const Algebra& A, const Matrix& P) {
    const std::size_t d = A.dim();
    if (P.rows() != d || P.cols() != d) throw std::invalid_argument("change_basis: shape mismatch");
    const Matrix Pinv = inverse(P);
    std::vector<Vec> cols(d);
    for (std::size_t j = 0; j < d; ++j) cols[j] = P.column(j);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < d; ++j) labels.push_back("c" + std::to_string(j));
    Algebra B(labels, Pinv.apply(A.unit()));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) B.set_product(i, j, Pinv.apply(multiply(A, cols[i], cols[j])));
    return B;
}

// ---------------------------------------------------------------------------
// Radical and Peirce data.

/// Kernel of the trace form (x, y) -> tr(L_x L_y); equals the Jacobson radical in characteristic zero.
inline std::vector<Vec> radical_basis(const Algebra& A) {
    const std::size_t d = A.dim();
    std::vector<Matrix> L(d);
    for (std::size_t i = 0; i < d; ++i) L[i] = left_multiplication(A, unit_vec(d, i));
    Matrix form(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Rational tr;
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    if (!L[i](k, l).is_zero() && !L[j](l, k).is_zero()) tr += L[i](k, l) * L[j](l, k);
            form(i, j) = tr;
            form(j, i) = tr;
        }
    return nullspace(form);
}

/// Radical basis; throws AlgebraError when J^2 != 0.
inline std::vector<Vec> jacobson_radical(const Algebra& A) {
    auto J = radical_basis(A);
    for (const auto& x : J)
        for (const auto& y : J)
            if (!is_zero(multiply(A, x, y))) throw AlgebraError("radical does not square to zero");
    return J;
}

struct PeirceData {
    std::vector<Vec> idempotents;                 // complete set of primitive orthogonal idempotents
    std::vector<Vec> radical;                     // basis of J
    std::vector<std::vector<std::size_t>> arrows; // arrows[t][s] = dim e_t J e_s
    Quiver quiver;
};

namespace detail {

using Poly = std::vector<Rational>; // coefficients, lowest degree first

inline Rational eval(const Poly& p, const Rational& x) {
    Rational r;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline Vec eval_in_algebra(const Algebra& A, const Poly& p, const Vec& z) {
    Vec r(A.dim());
    for (std::size_t i = p.size(); i-- > 0;) r = multiply(A, r, z) + p[i] * A.unit();
    return r;
}

inline std::vector<long long> divisors_of(long long n) {
    n = n < 0 ? -n : n;
    std::vector<long long> d;
    for (long long k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            d.push_back(k);
            if (k != n / k) d.push_back(n / k);
        }
    return d;
}

// All rational roots of p when every root is rational and simple; otherwise nullopt.
inline std::optional<std::vector<Rational>> rational_roots(Poly p) {
    const std::size_t full_degree = p.size() - 1;
    std::vector<Rational> roots;
    while (!p.empty() && p.front().is_zero() && p.size() > 1) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    const std::size_t degree = p.size() - 1;
    if (degree == 0) return roots;
    mpz_class l = 1;
    for (const auto& c : p)
        if (!c.is_zero()) {
            mpz_class den = c.to_mpq().get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
    const mpz_class lead = mpq_class(p.back().to_mpq() * l).get_num();
    const mpz_class tail = mpq_class(p.front().to_mpq() * l).get_num();
    const mpz_class bound("1000000000000");
    if (abs(lead) > bound || abs(tail) > bound) return std::nullopt;
    std::vector<Rational> candidates;
    for (long long q : divisors_of(lead.get_si()))
        for (long long r : divisors_of(tail.get_si())) {
            candidates.emplace_back(r, q);
            candidates.emplace_back(-r, q);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates)
        if (eval(p, c).is_zero()) roots.push_back(c);
    std::sort(roots.begin(), roots.end());
    if (roots.size() != full_degree) return std::nullopt;
    return roots;
}

} // namespace detail

/// Primitive orthogonal idempotents, radical and arrow multiplicities of a basic
/// split algebra with J^2 = 0. Vertices are the lifted idempotents; the arrow
/// multiplicity x -> y is dim(e_y J e_x).
inline PeirceData peirce_decomposition(const Algebra& A) {
    const std::size_t d = A.dim();
    PeirceData out;
    out.radical = jacobson_radical(A);
    const std::size_t r = out.radical.size();
    const std::size_t m = d - r;

    // Complement of J spanned by standard basis vectors.
    std::vector<std::size_t> complement;
    std::vector<Vec> spanning = out.radical;
    for (std::size_t i = 0; i < d && complement.size() < m; ++i) {
        spanning.push_back(unit_vec(d, i));
        if (span_rank(spanning, d) == spanning.size())
            complement.push_back(i);
        else
            spanning.pop_back();
    }
    std::vector<Vec> frame;
    for (auto i : complement) frame.push_back(unit_vec(d, i));
    frame.insert(frame.end(), out.radical.begin(), out.radical.end());
    const Matrix to_frame = inverse(Matrix::from_columns(frame, d));
    auto quotient = [&](const Vec& v) {
        Vec c = to_frame.apply(v);
        c.resize(m);
        return c;
    };
    auto lift = [&](const Vec& q) {
        Vec v(d);
        for (std::size_t i = 0; i < m; ++i) v[complement[i]] = q[i];
        return v;
    };

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (quotient(A.product_vec(complement[i], complement[j])) !=
                quotient(A.product_vec(complement[j], complement[i])))
                throw AlgebraError("A/J is not commutative, so the algebra is not basic split");

    // A generic z in A/J has m distinct rational eigenvalues when A/J = k^m.
    const Vec unit_q = quotient(A.unit());
    std::optional<std::vector<Rational>> roots;
    Vec z_lift;
    std::uint64_t lcg = 12345;
    for (int attempt = 0; attempt < 24 && !roots; ++attempt) {
        Vec zq(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (attempt == 0)
                zq[i] = Rational(static_cast<long long>(i + 1));
            else if (attempt == 1)
                zq[i] = Rational(static_cast<long long>((i + 1) * (i + 1)));
            else {
                lcg = lcg * 6364136223846793005ULL + 1442695040888963407ULL;
                zq[i] = Rational(static_cast<long long>((lcg >> 33) % 97) - 48);
            }
        }
        z_lift = lift(zq);
        // Krylov sequence of the unit under multiplication by z in A/J.
        std::vector<Vec> krylov{unit_q};
        detail::Poly minpoly;
        while (true) {
            Vec next = quotient(multiply(A, z_lift, lift(krylov.back())));
            Vec coeffs;
            if (solve(Matrix::from_columns(krylov, m), next, coeffs)) {
                minpoly.assign(krylov.size() + 1, Rational());
                for (std::size_t i = 0; i < krylov.size(); ++i) minpoly[i] = -coeffs[i];
                minpoly.back() = 1;
                break;
            }
            krylov.push_back(std::move(next));
        }
        if (minpoly.size() - 1 != m) continue;
        auto found = detail::rational_roots(minpoly);
        if (found && found->size() == m) roots = found;
    }
    if (!roots) throw AlgebraError("A/J is not a product of copies of the ground field");

    // Lagrange idempotents in k[z], then one lifting step e -> 3e^2 - 2e^3.
    for (std::size_t i = 0; i < m; ++i) {
        detail::Poly p{Rational(1)};
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            Rational denom = ((*roots)[i] - (*roots)[j]).inverse();
            detail::Poly factor{-(*roots)[j] * denom, denom};
            detail::Poly prod(p.size() + 1);
            for (std::size_t a = 0; a < p.size(); ++a)
                for (std::size_t b = 0; b < 2; ++b) prod[a + b] += p[a] * factor[b];
            p = std::move(prod);
        }
        Vec e = detail::eval_in_algebra(A, p, z_lift);
        Vec e2 = multiply(A, e, e);
        Vec e3 = multiply(A, e2, e);
        out.idempotents.push_back(Rational(3) * e2 - Rational(2) * e3);
    }
    Vec sum(d);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& e = out.idempotents[i];
        if (multiply(A, e, e) != e) throw std::logic_error("lifted element is not idempotent");
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && !is_zero(multiply(A, e, out.idempotents[j])))
                throw std::logic_error("lifted idempotents are not orthogonal");
        sum = sum + e;
    }
    if (sum != A.unit()) throw std::logic_error("lifted idempotents do not sum to the unit");

    out.arrows.assign(m, std::vector<std::size_t>(m, 0));
    for (std::size_t s = 0; s < m; ++s) out.quiver.vertices.push_back("v" + std::to_string(s));
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t s = 0; s < m; ++s) {
            std::vector<Vec> piece;
            for (const auto& j : out.radical)
                piece.push_back(multiply(A, multiply(A, out.idempotents[t], j), out.idempotents[s]));
            out.arrows[t][s] = span_rank(piece, d);
            for (std::size_t k = 0; k < out.arrows[t][s]; ++k)
                out.quiver.arrows.push_back({s, t, "v" + std::to_string(s) + "->v" + std::to_string(t) + "#" + std::to_string(k)});
        }
    std::size_t total = 0;
    for (const auto& row : out.arrows)
        for (auto c : row) total += c;
    if (total != r) throw AlgebraError("Peirce pieces of the radical do not add up; algebra is not basic split");
    return out;
}

/// The quiver Q with (kQ)_2 isomorphic to A.
inline Quiver quiver_of_2nilpotent(const Algebra& A) { return peirce_decomposition(A).quiver; }

} // namespace ncdup

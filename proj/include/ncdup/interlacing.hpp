#pragma once

// 2-interlacings of a set algebra k^E: pairs (f, delta) with f the
// endomorphism induced by a set map and delta an idempotent derivation into
// the bimodule ^fA, subject to f = f^2 + delta f + f delta. Also hosts the
// generic interlacing (factorization) checker and twisted tensor products.

#include "ncdup/algebra.hpp"
#include "ncdup/linalg.hpp"
#include "ncdup/quiver.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncdup {

/// A mathematical precondition of an operation does not hold (CLI exit code 3).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what, std::vector<std::string> violations = {})
        : std::domain_error(what), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

struct Endomorphism {
    SetMap setmap;
    Matrix matrix; // column e is the indicator of phi^{-1}(e)
};

/// Coefficients a_x of the element a of k^E with delta(e) = (f(e) - e) a.
struct DeterminingElement {
    Vec values;

    friend bool operator==(const DeterminingElement&, const DeterminingElement&) = default;
};

struct Derivation {
    Endomorphism endo;
    DeterminingElement det;
    Matrix matrix; // column e is delta(e)
};

/// tau : B (x) A -> A (x) B. Column (b, a) has index b * a_dim + a; row (a, b) has index a * b_dim + b.
struct InterlacingMap {
    std::size_t a_dim = 0;
    std::size_t b_dim = 0;
    Matrix matrix;
};

/// The algebra k[X]/(X^2 - X) on the basis {1, X}.
inline Algebra idempotent_line_algebra() {
    Algebra B({"1", "X"}, Vec{Rational(1), Rational(0)});
    B.set_product(0, 0, {1, 0});
    B.set_product(0, 1, {0, 1});
    B.set_product(1, 0, {0, 1});
    B.set_product(1, 1, {0, 1});
    return B;
}

inline Matrix setmap_matrix(const SetMap& m) {
    const std::size_t n = m.size();
    Matrix f(n, n);
    for (std::size_t x = 0; x < n; ++x) f(x, m(x)) = 1;
    return f;
}

/// f(e) = sum of x with phi(x) = e; verified to be a unital endomorphism of k^E.
inline Endomorphism endomorphism_from_setmap(const SetMap& m) {
    Endomorphism f{m, setmap_matrix(m)};
    const Algebra A = set_algebra(m.size());
    if (!check_morphism(AlgebraMap(A, A, f.matrix))) throw std::logic_error("set map does not induce an algebra endomorphism");
    return f;
}

inline bool is_normalized(const SetMap& m, const DeterminingElement& a) {
    if (a.values.size() != m.size()) throw std::invalid_argument("determining element has wrong length");
    for (std::size_t x = 0; x < m.size(); ++x)
        if (m.is_fixed(x) && !a.values[x].is_zero()) return false;
    return true;
}

/// Zeroes the loop-vertex coefficients; the flag reports whether anything changed.
inline std::pair<DeterminingElement, bool> normalize(const SetMap& m, DeterminingElement a) {
    if (a.values.size() != m.size()) throw std::invalid_argument("determining element has wrong length");
    bool changed = false;
    for (std::size_t x = 0; x < m.size(); ++x)
        if (m.is_fixed(x) && !a.values[x].is_zero()) {
            a.values[x] = 0;
            changed = true;
        }
    return {std::move(a), changed};
}

/// delta(e) = sum_{phi(x)=e} a_x x - a_e e, without any normalisation check.
inline Matrix derivation_matrix(const SetMap& m, const DeterminingElement& a) {
    const std::size_t n = m.size();
    if (a.values.size() != n) throw std::invalid_argument("determining element has wrong length");
    Matrix d(n, n);
    for (std::size_t x = 0; x < n; ++x) d(x, m(x)) += a.values[x];
    for (std::size_t e = 0; e < n; ++e) d(e, e) -= a.values[e];
    return d;
}

/// Leibniz rule delta(xy) = f(x) delta(y) + delta(x) y on basis pairs of k^E.
inline bool satisfies_leibniz(const Matrix& f, const Matrix& delta) {
    const std::size_t n = f.rows();
    const Algebra A = set_algebra(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vec lhs = delta.apply(A.product_vec(x, y));
            Vec rhs = multiply(A, f.column(x), delta.column(y)) + multiply(A, delta.column(x), unit_vec(n, y));
            if (lhs != rhs) return false;
        }
    return true;
}

inline Derivation derivation_from_element(const Endomorphism& f, const DeterminingElement& a) {
    if (!is_normalized(f.setmap, a))
        throw PreconditionError("determining element is not normalized at loop vertices");
    Derivation d{f, a, derivation_matrix(f.setmap, a)};
    if (!satisfies_leibniz(f.matrix, d.matrix)) throw std::logic_error("constructed map violates the Leibniz rule");
    return d;
}

/// Columnwise closed form of delta^2:
///   delta^2(e) = sum_{phi^2(y)=e} a_y a_{phi(y)} y - sum_{phi(x)=e} a_x (a_x + a_e) x + a_e^2 e.
inline Matrix delta_squared_closed_form(const SetMap& m, const DeterminingElement& a) {
    const std::size_t n = m.size();
    const Vec& c = a.values;
    Matrix out(n, n);
    for (std::size_t y = 0; y < n; ++y) out(y, m(m(y))) += c[y] * c[m(y)];
    for (std::size_t x = 0; x < n; ++x) out(x, m(x)) -= c[x] * (c[x] + c[m(x)]);
    for (std::size_t e = 0; e < n; ++e) out(e, e) += c[e] * c[e];
    return out;
}

/// delta o delta, cross-checked against the closed form. A mismatch is an internal error.
inline Matrix delta_squared(const Derivation& d) {
    Matrix composed = d.matrix * d.matrix;
    if (composed != delta_squared_closed_form(d.endo.setmap, d.det))
        throw std::logic_error("delta^2 by composition disagrees with the closed formula");
    return composed;
}

// ---------------------------------------------------------------------------
// Components of the set-map quiver, as needed by the colour rules.

struct SetMapComponent {
    std::vector<std::size_t> vertices; // sorted
    std::vector<std::size_t> cycle;    // proper cycle, in orbit order starting at its least vertex
    bool round_trip = false;           // component is exactly u <-> v

    bool has_loop() const { return cycle.size() == 1; }
};

inline std::vector<SetMapComponent> setmap_components(const SetMap& m) {
    const Quiver q = quiver_of_setmap(m);
    std::vector<SetMapComponent> out;
    for (const auto& vs : component_vertex_sets(q)) {
        SetMapComponent c;
        c.vertices = vs;
        // Iterate phi from the least vertex until a repeat; the repeat lies on the cycle.
        std::vector<bool> seen(m.size(), false);
        std::size_t v = vs.front();
        while (!seen[v]) {
            seen[v] = true;
            v = m(v);
        }
        std::size_t start = v;
        std::vector<std::size_t> cyc{start};
        for (std::size_t w = m(start); w != start; w = m(w)) cyc.push_back(w);
        std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
        c.cycle = cyc;
        c.round_trip = vs.size() == 2 && cyc.size() == 2;
        out.push_back(std::move(c));
    }
    return out;
}

namespace detail {

inline bool in_01(const Rational& x) { return x.is_zero() || x == Rational(-1); }

inline std::string vname(std::size_t x) { return std::to_string(x); }

} // namespace detail

/// Clauses of the pre-coloration rules violated by a (after loop normalisation).
inline std::vector<std::string> precoloration_violations(const SetMap& m, const DeterminingElement& raw) {
    const auto a = normalize(m, raw).first.values;
    std::vector<std::string> v;
    for (const auto& c : setmap_components(m)) {
        if (c.round_trip) {
            const std::size_t x = c.vertices[0], y = c.vertices[1];
            if (!(a[x] + a[y] + 1).is_zero() && !(a[x].is_zero() && a[y].is_zero()))
                v.push_back("round trip {" + detail::vname(x) + "," + detail::vname(y) +
                            "}: neither a_u + a_v + 1 = 0 nor a_u = a_v = 0");
            continue;
        }
        for (auto x : c.vertices) {
            if (m.is_fixed(x)) continue;
            if (!detail::in_01(a[x])) v.push_back("vertex " + detail::vname(x) + ": value " + a[x].to_string() + " not in {0,-1}");
            if (!(a[x] * a[m(x)]).is_zero())
                v.push_back("arrow " + detail::vname(x) + "->" + detail::vname(m(x)) + ": product of colours is not 0");
        }
    }
    return v;
}

inline bool is_precoloration(const SetMap& m, const DeterminingElement& a) { return precoloration_violations(m, a).empty(); }

/// Clauses of the coloration rules violated by a (after loop normalisation).
inline std::vector<std::string> coloration_violations(const SetMap& m, const DeterminingElement& raw) {
    const auto a = normalize(m, raw).first.values;
    std::vector<std::string> v;
    for (const auto& c : setmap_components(m)) {
        if (c.round_trip) {
            const std::size_t x = c.vertices[0], y = c.vertices[1];
            if (!(a[x] + a[y] + 1).is_zero())
                v.push_back("round trip {" + detail::vname(x) + "," + detail::vname(y) + "}: a_u + a_v + 1 != 0");
            continue;
        }
        for (auto x : c.vertices) {
            if (m.is_fixed(x)) continue;
            if (!detail::in_01(a[x])) v.push_back("vertex " + detail::vname(x) + ": value " + a[x].to_string() + " not in {0,-1}");
            if (!m.is_fixed(m(x)) && !(a[x] + a[m(x)] + 1).is_zero())
                v.push_back("arrow " + detail::vname(x) + "->" + detail::vname(m(x)) +
                            ": extremities are not one 0 and one -1");
        }
    }
    return v;
}

inline bool is_coloration(const SetMap& m, const DeterminingElement& a) { return coloration_violations(m, a).empty(); }

struct ColorationSet {
    std::vector<DeterminingElement> discrete;
    /// Round-trip components {u, v}; each admits the family a_u = t, a_v = -1 - t.
    std::vector<std::array<std::size_t, 2>> parametric;
};

/// All colorations with values in {0,-1}; round-trip components contribute
/// the representatives (0,-1) and (-1,0) and are flagged as parametric.
inline ColorationSet enumerate_colorations(const SetMap& m) {
    const std::size_t n = m.size();
    ColorationSet out;
    // Per component: list of partial assignments (only its vertices are meaningful).
    std::vector<std::vector<Vec>> options;
    for (const auto& c : setmap_components(m)) {
        std::vector<Vec> opts;
        if (c.round_trip) {
            const std::size_t u = c.vertices[0], w = c.vertices[1];
            out.parametric.push_back({u, w});
            for (int first : {0, -1}) {
                Vec a(n);
                a[u] = first;
                a[w] = -1 - first;
                opts.push_back(a);
            }
        } else if (c.has_loop()) {
            const std::size_t loop = c.cycle.front();
            std::vector<std::size_t> roots;
            for (auto x : c.vertices)
                if (x != loop && m(x) == loop) roots.push_back(x);
            for (std::size_t mask = 0; mask < (std::size_t{1} << roots.size()); ++mask) {
                Vec a(n);
                std::vector<std::size_t> frontier;
                for (std::size_t i = 0; i < roots.size(); ++i) {
                    a[roots[i]] = (mask >> i) & 1 ? -1 : 0;
                    frontier.push_back(roots[i]);
                }
                while (!frontier.empty()) {
                    std::size_t t = frontier.back();
                    frontier.pop_back();
                    for (auto y : c.vertices)
                        if (m(y) == t && y != t) {
                            a[y] = Rational(-1) - a[t];
                            frontier.push_back(y);
                        }
                }
                opts.push_back(a);
            }
        } else if (c.cycle.size() % 2 == 0) {
            for (int first : {0, -1}) {
                Vec a(n);
                std::vector<bool> done(n, false);
                const std::size_t start = c.cycle.front();
                a[start] = first;
                done[start] = true;
                std::vector<std::size_t> frontier{start};
                while (!frontier.empty()) {
                    std::size_t t = frontier.back();
                    frontier.pop_back();
                    for (auto y : c.vertices)
                        if (m(y) == t && !done[y]) {
                            a[y] = Rational(-1) - a[t];
                            done[y] = true;
                            frontier.push_back(y);
                        }
                }
                opts.push_back(a);
            }
        } else {
            out.parametric.clear();
            return out; // odd non-loop cycle: no coloration at all
        }
        options.push_back(std::move(opts));
    }
    // Cartesian product, first component varying slowest.
    std::vector<std::size_t> idx(options.size(), 0);
    while (true) {
        Vec a(n);
        for (std::size_t c = 0; c < options.size(); ++c) a = a + options[c][idx[c]];
        DeterminingElement det{a};
        if (!is_coloration(m, det)) throw std::logic_error("enumerated assignment is not a coloration");
        out.discrete.push_back(std::move(det));
        std::size_t c = options.size();
        while (c > 0) {
            --c;
            if (++idx[c] < options[c].size()) break;
            idx[c] = 0;
            if (c == 0) return out;
        }
        if (options.empty()) return out;
    }
}

/// delta^2 = delta and f = f^2 + delta f + f delta, as exact matrix identities.
inline bool check_pair(const Matrix& f, const Matrix& delta) {
    if (delta * delta != delta) return false;
    return f == f * f + delta * f + f * delta;
}

inline bool check_pair(const Endomorphism& f, const Derivation& d) { return check_pair(f.matrix, d.matrix); }

/// tau(1 (x) a) = a (x) 1, tau(X (x) a) = delta(a) (x) 1 + f(a) (x) X.
inline InterlacingMap tau_from_pair(const Matrix& f, const Matrix& delta) {
    const std::size_t n = f.rows();
    InterlacingMap t{n, 2, Matrix(2 * n, 2 * n)};
    for (std::size_t a = 0; a < n; ++a) {
        t.matrix(a * 2 + 0, 0 * n + a) = 1;
        for (std::size_t x = 0; x < n; ++x) {
            t.matrix(x * 2 + 0, 1 * n + a) = delta(x, a);
            t.matrix(x * 2 + 1, 1 * n + a) = f(x, a);
        }
    }
    return t;
}

inline InterlacingMap tau_from_pair(const Endomorphism& f, const Derivation& d) { return tau_from_pair(f.matrix, d.matrix); }

/// The trivial interlacing b (x) a -> a (x) b.
inline InterlacingMap flip_map(std::size_t a_dim, std::size_t b_dim) {
    InterlacingMap t{a_dim, b_dim, Matrix(a_dim * b_dim, b_dim * a_dim)};
    for (std::size_t a = 0; a < a_dim; ++a)
        for (std::size_t b = 0; b < b_dim; ++b) t.matrix(a * b_dim + b, b * a_dim + a) = 1;
    return t;
}

namespace detail {

// tau applied to the pure tensor b (x) a, as a dense A (x) B vector.
inline Vec tau_apply(const InterlacingMap& t, const Vec& b, const Vec& a) {
    Vec in(t.b_dim * t.a_dim);
    for (std::size_t i = 0; i < t.b_dim; ++i) {
        if (b[i].is_zero()) continue;
        for (std::size_t j = 0; j < t.a_dim; ++j)
            if (!a[j].is_zero()) in[i * t.a_dim + j] = b[i] * a[j];
    }
    return t.matrix.apply(in);
}

} // namespace detail

/// Unit conditions and both braiding diagrams, for arbitrary A and B.
inline bool check_braiding(const InterlacingMap& t, const Algebra& A, const Algebra& B) {
    const std::size_t na = A.dim(), nb = B.dim();
    if (t.a_dim != na || t.b_dim != nb || t.matrix.rows() != na * nb || t.matrix.cols() != nb * na)
        throw std::invalid_argument("check_braiding: interlacing dimensions do not match the algebras");
    auto tensor = [&](const Vec& a, const Vec& b) {
        Vec v(na * nb);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                if (!a[i].is_zero() && !b[j].is_zero()) v[i * nb + j] = a[i] * b[j];
        return v;
    };
    for (std::size_t b = 0; b < nb; ++b)
        if (detail::tau_apply(t, unit_vec(nb, b), A.unit()) != tensor(A.unit(), unit_vec(nb, b))) return false;
    for (std::size_t a = 0; a < na; ++a)
        if (detail::tau_apply(t, B.unit(), unit_vec(na, a)) != tensor(unit_vec(na, a), B.unit())) return false;

    // Column of tau for basis (b, a), as (a', b', coeff) terms.
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> col(nb * na);
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t r = 0; r < na * nb; ++r) {
                const Rational& c = t.matrix(r, b * na + a);
                if (!c.is_zero()) col[b * na + a].emplace_back(r / nb, r % nb, c);
            }

    // (b, b', a): (1_A m_B)(tau 1_B)(1_B tau) = tau (m_B 1_A)
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t b2 = 0; b2 < nb; ++b2)
            for (std::size_t a = 0; a < na; ++a) {
                Vec lhs(na * nb);
                for (const auto& [a1, b1, c1] : col[b2 * na + a])
                    for (const auto& [a3, b3, c3] : col[b * na + a1])
                        for (const auto& term : B.product(b3, b1)) lhs[a3 * nb + term.index] += c1 * c3 * term.coeff;
                Vec rhs = detail::tau_apply(t, B.product_vec(b, b2), unit_vec(na, a));
                if (lhs != rhs) return false;
            }
    // (b, a, a'): (m_A 1_B)(1_A tau)(tau 1_A) = tau (1_B m_A)
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t a2 = 0; a2 < na; ++a2) {
                Vec lhs(na * nb);
                for (const auto& [a1, b1, c1] : col[b * na + a])
                    for (const auto& [a3, b3, c3] : col[b1 * na + a2])
                        for (const auto& term : A.product(a1, a3)) lhs[term.index * nb + b3] += c1 * c3 * term.coeff;
                Vec rhs = detail::tau_apply(t, unit_vec(nb, b), A.product_vec(a, a2));
                if (lhs != rhs) return false;
            }
    return true;
}

/// Recovers (f, delta) from tau(X (x) a) = delta(a) (x) 1 + f(a) (x) X. The
/// unit conditions are checked against the unit of A (default: k^E).
inline std::pair<Matrix, Matrix> pair_from_tau(const InterlacingMap& t, const Vec* a_unit = nullptr) {
    if (t.b_dim != 2) throw std::invalid_argument("pair_from_tau: B must be k[X]/(X^2 - X)");
    const std::size_t n = t.a_dim;
    const Vec one = a_unit ? *a_unit : Vec(n, Rational(1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < 2 * n; ++r) {
            Rational expect = (r == a * 2) ? Rational(1) : Rational(0);
            if (t.matrix(r, a) != expect) throw PreconditionError("tau(1 (x) a) != a (x) 1");
        }
    Vec x_one = detail::tau_apply(t, unit_vec(2, 1), one);
    for (std::size_t a = 0; a < n; ++a)
        if (!x_one[a * 2].is_zero() || x_one[a * 2 + 1] != one[a]) throw PreconditionError("tau(X (x) 1) != 1 (x) X");
    Matrix f(n, n), delta(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x) {
            delta(x, a) = t.matrix(x * 2 + 0, n + a);
            f(x, a) = t.matrix(x * 2 + 1, n + a);
        }
    return {f, delta};
}

/// Algebra structure on A (x) B defined by tau; basis (a, b) at index a * B.dim() + b.
inline Algebra twisted_tensor_product(const Algebra& A, const Algebra& B, const InterlacingMap& t) {
    const std::size_t na = A.dim(), nb = B.dim(), d = na * nb;
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b) labels.push_back(A.basis()[a] + "*" + B.basis()[b]);
    Vec unit(d);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b) unit[a * nb + b] = A.unit()[a] * B.unit()[b];
    Algebra T(labels, unit);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t a2 = 0; a2 < na; ++a2)
                for (std::size_t b2 = 0; b2 < nb; ++b2) {
                    Vec v(d);
                    // (a (x) b)(a2 (x) b2) = (a (x) 1) tau(b (x) a2) (1 (x) b2)
                    for (std::size_t r = 0; r < d; ++r) {
                        const Rational& c = t.matrix(r, b * na + a2);
                        if (c.is_zero()) continue;
                        const std::size_t a3 = r / nb, b3 = r % nb;
                        for (const auto& ta : A.product(a, a3))
                            for (const auto& tb : B.product(b3, b2)) v[ta.index * nb + tb.index] += c * ta.coeff * tb.coeff;
                    }
                    T.set_product(a * nb + b, a2 * nb + b2, v);
                }
    return T;
}

} // namespace ncdup

#pragma once

// Brute-force (co)homology dimensions straight from structure constants:
//  - Hochschild cohomology from the normalized cochains Hom(Abar^{(x)n}, A),
//  - Hochschild homology from the normalized chains A (x) Abar^{(x)n},
//  - cyclic homology (char 0) from the Connes quotient A^{(x)n+1} / (1 - t).
// Abar = A / k.1 is realised as the span of all basis vectors except one
// pivot p with unit_p != 0; projection onto it is v -> v - (v_p / unit_p) 1.

#include "ncdup/algebra.hpp"
#include "ncdup/homology_formulas.hpp"
#include "ncdup/linalg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncdup {

/// A differential would exceed the configured number of nonzero entries.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    std::size_t resource_bound = 2'000'000; // max nonzeros of any single differential
    bool check_square_zero = true;
};

struct ChainComplexDims {
    std::vector<std::uint64_t> term_dims;
    std::vector<std::optional<std::uint64_t>> differential_ranks;
};

namespace detail {

using Triplets = std::vector<std::vector<std::pair<std::uint32_t, Rational>>>;

class GuardedBuilder {
public:
    GuardedBuilder(std::size_t rows, std::size_t cols, std::size_t bound) : rows_(rows), cols_(cols), bound_(bound), data_(cols) {
        if (rows > UINT32_MAX) throw ResourceLimitError("differential has too many rows");
    }
    void add(std::size_t row, std::size_t col, const Rational& v) {
        if (v.is_zero()) return;
        if (++count_ > bound_)
            throw ResourceLimitError("differential exceeds " + std::to_string(bound_) + " nonzero entries");
        data_[col].emplace_back(static_cast<std::uint32_t>(row), v);
    }
    SparseMatrix finish() {
        SparseMatrix m(rows_, cols_);
        for (std::size_t j = 0; j < cols_; ++j) m.set_column(j, std::move(data_[j]));
        return m;
    }

private:
    std::size_t rows_, cols_, bound_, count_ = 0;
    Triplets data_;
};

inline std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (b != 0 && r > SIZE_MAX / b) throw ResourceLimitError("complex dimension overflows");
        r *= b;
    }
    return r;
}

// Digits of idx in base `base`, most significant first.
inline void decode(std::size_t idx, std::size_t base, std::vector<std::size_t>& digits) {
    for (std::size_t k = digits.size(); k-- > 0;) {
        digits[k] = idx % base;
        idx /= base;
    }
}

inline std::size_t encode(const std::vector<std::size_t>& digits, std::size_t base) {
    std::size_t idx = 0;
    for (auto d : digits) idx = idx * base + d;
    return idx;
}

/// Abar as the span of basis vectors other than the pivot, with projected products.
struct ReducedFrame {
    std::size_t d = 0, m = 0, pivot = 0;
    std::vector<std::size_t> to_a;                          // W index -> A index
    std::vector<std::vector<std::pair<std::size_t, Rational>>> proj; // (wi, wj) -> pi(b_wi b_wj) in W coords

    explicit ReducedFrame(const Algebra& A) : d(A.dim()) {
        if (d == 0) throw std::invalid_argument("zero algebra");
        while (pivot < d && A.unit()[pivot].is_zero()) ++pivot;
        if (pivot == d) throw std::invalid_argument("algebra unit is zero");
        m = d - 1;
        std::vector<std::size_t> to_w(d, d);
        for (std::size_t i = 0; i < d; ++i)
            if (i != pivot) {
                to_w[i] = to_a.size();
                to_a.push_back(i);
            }
        const Rational up = A.unit()[pivot];
        proj.resize(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Vec v = A.product_vec(to_a[i], to_a[j]);
                const Rational s = v[pivot] / up;
                auto& out = proj[i * m + j];
                for (std::size_t k = 0; k < d; ++k) {
                    if (k == pivot) continue;
                    Rational c = v[k] - s * A.unit()[k];
                    if (!c.is_zero()) out.emplace_back(to_w[k], c);
                }
            }
    }
};

inline Rational alternating(std::size_t i) { return i % 2 == 0 ? Rational(1) : Rational(-1); }

/// d^n : Hom(W^n, A) -> Hom(W^{n+1}, A); cochain basis (tuple, k) at tuple * d + k.
inline SparseMatrix cochain_differential(const Algebra& A, const ReducedFrame& F, std::size_t n, std::size_t bound) {
    const std::size_t d = F.d, m = F.m;
    const std::size_t rows = ipow(m, n + 1) * d, cols = ipow(m, n) * d;
    GuardedBuilder B(rows, cols, bound);
    std::vector<std::size_t> t(n + 1), sub(n);
    const std::size_t count = ipow(m, n + 1);
    for (std::size_t ti = 0; ti < count; ++ti) {
        decode(ti, m, t);
        // a1 * phi(a2, ..., a_{n+1})
        for (std::size_t k = 0; k < n; ++k) sub[k] = t[k + 1];
        std::size_t tail = encode(sub, m);
        for (std::size_t k = 0; k < d; ++k)
            for (const auto& term : A.product(F.to_a[t[0]], k)) B.add(ti * d + term.index, tail * d + k, term.coeff);
        // sum_i (-1)^i phi(..., a_i a_{i+1}, ...)
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [w, c] : F.proj[t[i] * m + t[i + 1]]) {
                for (std::size_t k = 0, s = 0; k <= n; ++k) {
                    if (k == i) sub[s++] = w;
                    else if (k != i + 1) sub[s++] = t[k];
                }
                const std::size_t col = encode(sub, m);
                const Rational v = alternating(i + 1) * c;
                for (std::size_t k = 0; k < d; ++k) B.add(ti * d + k, col * d + k, v);
            }
        }
        // (-1)^{n+1} phi(a1, ..., an) * a_{n+1}
        for (std::size_t k = 0; k < n; ++k) sub[k] = t[k];
        std::size_t head = encode(sub, m);
        const Rational sign = alternating(n + 1);
        for (std::size_t k = 0; k < d; ++k)
            for (const auto& term : A.product(k, F.to_a[t[n]])) B.add(ti * d + term.index, head * d + k, sign * term.coeff);
    }
    return B.finish();
}

/// b_n : A (x) W^n -> A (x) W^{n-1} (n >= 1); chain basis (a0, tuple) at a0 * m^n + tuple.
inline SparseMatrix chain_differential(const Algebra& A, const ReducedFrame& F, std::size_t n, std::size_t bound) {
    const std::size_t d = F.d, m = F.m;
    const std::size_t in_tuples = ipow(m, n), out_tuples = ipow(m, n - 1);
    GuardedBuilder B(d * out_tuples, d * in_tuples, bound);
    std::vector<std::size_t> t(n), sub(n - 1);
    for (std::size_t a0 = 0; a0 < d; ++a0)
        for (std::size_t ti = 0; ti < in_tuples; ++ti) {
            decode(ti, m, t);
            const std::size_t col = a0 * in_tuples + ti;
            // a0 a1 (x) a2 ... an
            for (std::size_t k = 0; k + 1 < n; ++k) sub[k] = t[k + 1];
            std::size_t rest = encode(sub, m);
            for (const auto& term : A.product(a0, F.to_a[t[0]])) B.add(term.index * out_tuples + rest, col, term.coeff);
            // (-1)^i a0 (x) ... (x) a_i a_{i+1} (x) ...
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (const auto& [w, c] : F.proj[t[i] * m + t[i + 1]]) {
                    for (std::size_t k = 0, s = 0; k < n; ++k) {
                        if (k == i) sub[s++] = w;
                        else if (k != i + 1) sub[s++] = t[k];
                    }
                    B.add(a0 * out_tuples + encode(sub, m), col, alternating(i + 1) * c);
                }
            // (-1)^n an a0 (x) a1 ... a_{n-1}
            for (std::size_t k = 0; k + 1 < n; ++k) sub[k] = t[k];
            std::size_t head = encode(sub, m);
            const Rational sign = alternating(n);
            for (const auto& term : A.product(F.to_a[t[n - 1]], a0)) B.add(term.index * out_tuples + head, col, sign * term.coeff);
        }
    return B.finish();
}

/// Classes of A^{(x)L} modulo [rot x] = (-1)^{L-1} [x], rot moving the last factor to the front.
struct CyclicClasses {
    std::size_t length = 0;
    std::vector<std::size_t> reps;               // tuple index of each class representative
    std::vector<std::int64_t> cls;               // tuple -> class id, -1 for a vanishing orbit
    std::vector<std::int8_t> sign;               // [tuple] = sign * [rep]
};

inline CyclicClasses cyclic_classes(std::size_t d, std::size_t L) {
    CyclicClasses out;
    out.length = L;
    const std::size_t total = ipow(d, L);
    out.cls.assign(total, -2);
    out.sign.assign(total, 0);
    const bool odd_degree = (L - 1) % 2 == 1;
    std::vector<std::size_t> t(L), r(L);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (out.cls[idx] != -2) continue;
        decode(idx, d, t);
        // idx is the lexicographically least tuple of its orbit.
        std::vector<std::pair<std::size_t, int>> members;
        bool vanishes = false;
        r = t;
        for (std::size_t j = 0; j < L; ++j) {
            const std::size_t ri = encode(r, d);
            const int s = (odd_degree && j % 2 == 1) ? -1 : 1;
            if (j > 0 && ri == idx && s == -1) vanishes = true;
            members.emplace_back(ri, s);
            std::rotate(r.begin(), r.end() - 1, r.end());
        }
        const std::int64_t id = vanishes ? -1 : static_cast<std::int64_t>(out.reps.size());
        if (!vanishes) out.reps.push_back(idx);
        for (auto [ri, s] : members)
            if (out.cls[ri] == -2) {
                out.cls[ri] = id;
                out.sign[ri] = static_cast<std::int8_t>(s);
            }
    }
    return out;
}

/// Induced b on the Connes quotients: C^lambda_n -> C^lambda_{n-1}, n >= 1.
inline SparseMatrix connes_differential(const Algebra& A, const CyclicClasses& src, const CyclicClasses& dst, std::size_t bound) {
    const std::size_t d = A.dim(), L = src.length, n = L - 1;
    GuardedBuilder B(dst.reps.size(), src.reps.size(), bound);
    std::vector<std::size_t> t(L), sub(n);
    auto emit = [&](std::size_t col, const std::vector<std::size_t>& tuple, const Rational& c) {
        const std::size_t ti = encode(tuple, d);
        const std::int64_t id = dst.cls[ti];
        if (id < 0) return;
        B.add(static_cast<std::size_t>(id), col, dst.sign[ti] < 0 ? -c : c);
    };
    for (std::size_t col = 0; col < src.reps.size(); ++col) {
        decode(src.reps[col], d, t);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& term : A.product(t[i], t[i + 1])) {
                for (std::size_t k = 0, s = 0; k < L; ++k) {
                    if (k == i) sub[s++] = term.index;
                    else if (k != i + 1) sub[s++] = t[k];
                }
                emit(col, sub, alternating(i) * term.coeff);
            }
        for (const auto& term : A.product(t[n], t[0])) {
            sub[0] = term.index;
            for (std::size_t k = 1; k < n; ++k) sub[k] = t[k];
            emit(col, sub, alternating(n) * term.coeff);
        }
    }
    return B.finish();
}

inline void assert_square_zero(const SparseMatrix& later, const SparseMatrix& earlier, const char* what) {
    if (later.multiply(earlier).nonzeros() != 0) throw std::logic_error(std::string("d o d != 0 in ") + what);
}

template <class Rank>
std::optional<std::uint64_t> guarded(Rank&& f) {
    try {
        return f();
    } catch (const ResourceLimitError&) {
        return std::nullopt;
    }
}

inline DimTable table_from(const ChainComplexDims& c, std::size_t max_n, bool cohomological) {
    // Cohomological: H^n = dim C^n - rank d^n - rank d^{n-1}, ranks[n] = rank d^n : C^n -> C^{n+1}.
    // Homological:   H_n = dim C_n - rank b_n - rank b_{n+1}, ranks[n] = rank b_n : C_n -> C_{n-1}.
    DimTable t;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::optional<std::uint64_t> r1, r2;
        if (cohomological) {
            r1 = c.differential_ranks[n];
            r2 = n == 0 ? std::optional<std::uint64_t>(0) : c.differential_ranks[n - 1];
        } else {
            r1 = c.differential_ranks[n];
            r2 = c.differential_ranks[n + 1];
        }
        if (!r1 || !r2) {
            t.entries.push_back(DimCell::skipped());
            continue;
        }
        const std::uint64_t used = *r1 + *r2;
        if (used > c.term_dims[n]) throw std::logic_error("ranks exceed the term dimension");
        t.entries.push_back(DimCell::of(c.term_dims[n] - used));
    }
    return t;
}

} // namespace detail

/// Term dimensions and ranks of the normalized cochain complex up to d^{max_n}.
inline ChainComplexDims hochschild_cochain_dims(const Algebra& A, std::size_t max_n, const OracleOptions& opt = {}) {
    const detail::ReducedFrame F(A);
    ChainComplexDims c;
    std::optional<SparseMatrix> prev;
    for (std::size_t n = 0; n <= max_n; ++n) {
        c.term_dims.push_back(detail::ipow(F.m, n) * F.d);
        std::optional<SparseMatrix> cur;
        c.differential_ranks.push_back(detail::guarded([&]() -> std::uint64_t {
            cur = detail::cochain_differential(A, F, n, opt.resource_bound);
            return rank(*cur);
        }));
        if (opt.check_square_zero && prev && cur) detail::assert_square_zero(*cur, *prev, "Hochschild cochains");
        prev = std::move(cur);
    }
    return c;
}

inline DimTable hochschild_cohomology_oracle(const Algebra& A, std::size_t max_n, const OracleOptions& opt = {}) {
    return detail::table_from(hochschild_cochain_dims(A, max_n, opt), max_n, true);
}

/// Term dimensions and ranks of the normalized chain complex, b_0 = 0 up to b_{max_n + 1}.
inline ChainComplexDims hochschild_chain_dims(const Algebra& A, std::size_t max_n, const OracleOptions& opt = {}) {
    const detail::ReducedFrame F(A);
    ChainComplexDims c;
    c.differential_ranks.push_back(0);
    std::optional<SparseMatrix> prev;
    for (std::size_t n = 0; n <= max_n + 1; ++n) c.term_dims.push_back(F.d * detail::ipow(F.m, n));
    for (std::size_t n = 1; n <= max_n + 1; ++n) {
        std::optional<SparseMatrix> cur;
        c.differential_ranks.push_back(detail::guarded([&]() -> std::uint64_t {
            cur = detail::chain_differential(A, F, n, opt.resource_bound);
            return rank(*cur);
        }));
        if (opt.check_square_zero && prev && cur) detail::assert_square_zero(*prev, *cur, "Hochschild chains");
        prev = std::move(cur);
    }
    return c;
}

inline DimTable hochschild_homology_oracle(const Algebra& A, std::size_t max_n, const OracleOptions& opt = {}) {
    return detail::table_from(hochschild_chain_dims(A, max_n, opt), max_n, false);
}

/// Term dimensions and ranks of the Connes complex, b_0 = 0 up to b_{max_n + 1}.
inline ChainComplexDims connes_complex_dims(const Algebra& A, std::size_t max_n, const OracleOptions& opt = {}) {
    ChainComplexDims c;
    c.differential_ranks.push_back(0);
    std::vector<std::optional<detail::CyclicClasses>> classes;
    for (std::size_t n = 0; n <= max_n + 1; ++n) {
        try {
            if (detail::ipow(A.dim(), n + 1) > opt.resource_bound) throw ResourceLimitError("too many tensors");
            classes.push_back(detail::cyclic_classes(A.dim(), n + 1));
            c.term_dims.push_back(classes.back()->reps.size());
        } catch (const ResourceLimitError&) {
            classes.push_back(std::nullopt);
            c.term_dims.push_back(0);
        }
    }
    std::optional<SparseMatrix> prev;
    for (std::size_t n = 1; n <= max_n + 1; ++n) {
        std::optional<SparseMatrix> cur;
        c.differential_ranks.push_back(detail::guarded([&]() -> std::uint64_t {
            if (!classes[n] || !classes[n - 1]) throw ResourceLimitError("quotient not built");
            cur = detail::connes_differential(A, *classes[n], *classes[n - 1], opt.resource_bound);
            return rank(*cur);
        }));
        if (opt.check_square_zero && prev && cur) detail::assert_square_zero(*prev, *cur, "Connes complex");
        prev = std::move(cur);
    }
    return c;
}

inline DimTable cyclic_homology_oracle(const Algebra& A, std::size_t max_n, const OracleOptions& opt = {}) {
    return detail::table_from(connes_complex_dims(A, max_n, opt), max_n, false);
}

/// dim { z : z b_i = b_i z for all i }.
inline std::size_t center_dim(const Algebra& A) {
    const std::size_t d = A.dim();
    SparseMatrix M(d * d, d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::pair<std::uint32_t, Rational>> col;
        for (std::size_t i = 0; i < d; ++i) {
            for (const auto& t : A.product(j, i)) col.emplace_back(static_cast<std::uint32_t>(i * d + t.index), t.coeff);
            for (const auto& t : A.product(i, j)) col.emplace_back(static_cast<std::uint32_t>(i * d + t.index), -t.coeff);
        }
        M.set_column(j, std::move(col));
    }
    return d - rank(M);
}

/// dim Der(A, A) - dim Inn(A, A), from the Leibniz system in the d^2 unknowns D(b_j)_k.
inline std::size_t outer_derivation_dim(const Algebra& A) {
    const std::size_t d = A.dim();
    detail::GuardedBuilder B(d * d * d, d * d, SIZE_MAX);
    auto var = [d](std::size_t j, std::size_t k) { return j * d + k; };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t row = (i * d + j) * d;
            for (const auto& t : A.product(i, j))
                for (std::size_t k = 0; k < d; ++k) B.add(row + k, var(t.index, k), t.coeff);
            for (std::size_t k = 0; k < d; ++k) {
                for (const auto& t : A.product(i, k)) B.add(row + t.index, var(j, k), -t.coeff);
                for (const auto& t : A.product(k, j)) B.add(row + t.index, var(i, k), -t.coeff);
            }
        }
    const std::size_t derivations = d * d - rank(B.finish());
    const std::size_t inner = d - center_dim(A);
    if (inner > derivations) throw std::logic_error("inner derivations exceed all derivations");
    return derivations - inner;
}

} // namespace ncdup

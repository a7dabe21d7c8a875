#pragma once

// Non-commutative duplicates k^E (x)_(f,delta) k[X]/(X^2 - X): the algebra,
// its related quiver, the explicit isomorphism with the radical square zero
// path algebra, and classification up to isomorphism for small E.

#include "ncdup/algebra.hpp"
#include "ncdup/interlacing.hpp"
#include "ncdup/quiver.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace ncdup {

struct DuplicatePair {
    SetMap setmap;
    DeterminingElement coloration;
};

/// Validates and normalises; throws PreconditionError listing the violated clauses.
inline DuplicatePair make_duplicate_pair(const SetMap& m, const DeterminingElement& a) {
    if (a.values.size() != m.size()) throw std::invalid_argument("coloration length differs from the set size");
    auto violations = coloration_violations(m, a);
    if (!violations.empty()) throw PreconditionError("not a coloration", violations);
    return {m, normalize(m, a).first};
}

inline std::size_t loop_count(const SetMap& m) { return m.fixed_point_count(); }

/// Basis e_i at index 2i and e_i X at index 2i + 1.
inline Algebra twisted_product(const DuplicatePair& p) {
    const std::size_t n = p.setmap.size();
    const Endomorphism f = endomorphism_from_setmap(p.setmap);
    const Derivation d = derivation_from_element(f, p.coloration);
    if (!check_pair(f, d)) throw PreconditionError("(f, delta) is not a 2-interlacing");
    const Algebra raw = twisted_tensor_product(set_algebra(n), idempotent_line_algebra(), tau_from_pair(f, d));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("e" + std::to_string(i));
        labels.push_back("e" + std::to_string(i) + "X");
    }
    Algebra A(labels, raw.unit());
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) A.set_product(i, j, raw.product_vec(i, j));
    if (!check_algebra(A).ok()) throw std::logic_error("twisted product is not a unital associative algebra");
    return A;
}

/// kQ modulo paths of length >= 2. Basis: vertices, then arrows; e_t a e_s = a for a : s -> t.
inline Algebra rad_square_zero_algebra(const Quiver& q) {
    q.validate();
    const std::size_t nv = q.vertex_count(), d = nv + q.arrow_count();
    std::vector<std::string> labels = q.vertices;
    for (const auto& a : q.arrows) labels.push_back(a.label);
    Vec unit(d);
    for (std::size_t v = 0; v < nv; ++v) unit[v] = 1;
    Algebra A(labels, unit);
    for (std::size_t v = 0; v < nv; ++v) A.set_product(v, v, unit_vec(d, v));
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const auto& a = q.arrows[k];
        A.set_product(a.dst, nv + k, unit_vec(d, nv + k));
        A.set_product(nv + k, a.src, unit_vec(d, nv + k));
    }
    return A;
}

// ---------------------------------------------------------------------------

struct VertexOrigin {
    std::size_t element = 0;
    std::optional<int> split; // epsilon in {0, -1} for the two halves of a loop vertex

    friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

struct RelatedQuiver {
    Quiver quiver;
    std::vector<VertexOrigin> provenance;    // per vertex
    std::vector<std::size_t> arrow_element;  // arrow k comes from the element x with phi(x) != x
};

/// Orientation of the arrows attached to a split loop vertex.
enum class LoopArrowReading {
    from_split,   // l_eps -> x, the orientation realised by the algebra
    toward_split, // x -> l_eps, the literal prose reading; kept for comparison
};

inline int coloration_sign(const Rational& a) {
    if (a.is_zero()) return 0;
    if (a == Rational(-1)) return -1;
    throw std::logic_error("loop-adjacent colour is not in {0,-1}");
}

/// Reverse every arrow of Q_f; each loop l is removed and l is split into l_0
/// and l_-1, the arrow of x with phi(x) = l being attached to l_{a_x}.
inline RelatedQuiver related_quiver(const DuplicatePair& p, LoopArrowReading reading = LoopArrowReading::from_split) {
    const SetMap& m = p.setmap;
    const std::size_t n = m.size();
    if (!is_coloration(m, p.coloration)) throw PreconditionError("not a coloration", coloration_violations(m, p.coloration));
    RelatedQuiver r;
    std::vector<std::size_t> plain(n), half0(n), half1(n);
    for (std::size_t e = 0; e < n; ++e) {
        const std::string name = std::to_string(e);
        if (!m.is_fixed(e)) {
            plain[e] = r.quiver.vertices.size();
            r.quiver.vertices.push_back(name);
            r.provenance.push_back({e, std::nullopt});
        } else {
            half0[e] = r.quiver.vertices.size();
            r.quiver.vertices.push_back(name + "_0");
            r.provenance.push_back({e, 0});
            half1[e] = r.quiver.vertices.size();
            r.quiver.vertices.push_back(name + "_-1");
            r.provenance.push_back({e, -1});
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (m.is_fixed(x)) continue;
        const std::size_t e = m(x);
        std::size_t src, dst = plain[x];
        if (!m.is_fixed(e)) {
            src = plain[e];
        } else {
            src = coloration_sign(p.coloration.values[x]) == 0 ? half0[e] : half1[e];
            if (reading == LoopArrowReading::toward_split) std::swap(src, dst);
        }
        r.quiver.arrows.push_back({src, dst, "x" + std::to_string(x)});
        r.arrow_element.push_back(x);
    }
    const std::size_t loops = loop_count(m);
    if (r.quiver.vertex_count() != n + loops || r.quiver.arrow_count() != n - loops)
        throw std::logic_error("related quiver has the wrong vertex or arrow count");
    return r;
}

/// Generator-defined map (kQ)_2 -> twisted product: e -> e, l_0 -> lX, l_-1 -> l - lX,
/// and an arrow s -> t goes to img(t) X img(s). Throws if it is not an isomorphism.
inline AlgebraMap explicit_iso(const DuplicatePair& p) {
    const std::size_t n = p.setmap.size();
    const Algebra T = twisted_product(p);
    const RelatedQuiver r = related_quiver(p);
    const Algebra S = rad_square_zero_algebra(r.quiver);
    const std::size_t nv = r.quiver.vertex_count();
    std::vector<Vec> images;
    for (const auto& o : r.provenance) {
        Vec v(2 * n);
        if (!o.split) {
            v[2 * o.element] = 1;
        } else if (*o.split == 0) {
            v[2 * o.element + 1] = 1;
        } else {
            v[2 * o.element] = 1;
            v[2 * o.element + 1] = -1;
        }
        images.push_back(v);
    }
    Vec X(2 * n);
    for (std::size_t e = 0; e < n; ++e) X[2 * e + 1] = 1;
    for (const auto& a : r.quiver.arrows) images.push_back(multiply(T, multiply(T, images[a.dst], X), images[a.src]));
    AlgebraMap F(S, T, Matrix::from_columns(images, 2 * n));
    if (images.size() != nv + r.quiver.arrow_count()) throw std::logic_error("explicit_iso: image count");
    if (!check_morphism(F) || !is_isomorphism(F))
        throw std::logic_error("explicit map from the radical square zero algebra is not an isomorphism");
    return F;
}

// ---------------------------------------------------------------------------
// Classification.

struct CatalogComponent {
    std::string type; // "even-cycle" or "one-sink-one-valued"
    std::size_t size = 0;

    friend bool operator==(const CatalogComponent&, const CatalogComponent&) = default;
};

struct CatalogEntry {
    CanonicalCode code;
    Quiver canonical_quiver;
    std::uint64_t multiplicity = 0;
    std::vector<CatalogComponent> components;
    SetMap sample_phi;
    DeterminingElement sample_a;
    bool parametric = false; // some contributing set map has a round-trip component
};

/// Type of a related-quiver component: its opposite is either one-valued with an
/// even proper cycle or one-sink-one-valued. Anything else is a theorem violation.
inline std::string component_type(const Quiver& component) {
    const Quiver op = opposite(component);
    if (is_one_sink_one_valued(op)) return "one-sink-one-valued";
    if (is_one_valued(op) && is_connected(op) && proper_cycle_of_component(op).length % 2 == 0) return "even-cycle";
    throw std::logic_error("related quiver component is neither even-cycle nor one-sink-one-valued");
}

inline std::vector<CatalogComponent> component_breakdown(const Quiver& q) {
    std::vector<CatalogComponent> out;
    for (const auto& c : connected_components(q)) out.push_back({component_type(c), c.vertex_count()});
    return out;
}

namespace detail {

struct ClassAccumulator {
    std::uint64_t multiplicity = 0;
    std::uint64_t sample_map = 0;
    std::size_t sample_coloration = 0;
    bool parametric = false;
};

inline void merge_class(ClassAccumulator& into, const ClassAccumulator& from) {
    if (into.multiplicity == 0 ||
        std::pair(from.sample_map, from.sample_coloration) < std::pair(into.sample_map, into.sample_coloration)) {
        into.sample_map = from.sample_map;
        into.sample_coloration = from.sample_coloration;
    }
    into.multiplicity += from.multiplicity;
    into.parametric = into.parametric || from.parametric;
}

} // namespace detail

/// All duplicates of an n-element set up to isomorphism, grouped by the
/// canonical form of the related quiver. Output is sorted by canonical code and
/// does not depend on the number of workers.
inline std::vector<CatalogEntry> classify(std::size_t n, unsigned jobs = 1) {
    if (n == 0) throw std::invalid_argument("classify: n must be at least 1");
    const std::uint64_t total = SetMap::count(n);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));

    using Table = std::map<CanonicalCode, detail::ClassAccumulator>;
    std::vector<Table> partial(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    auto work = [&](unsigned w) {
        try {
            for (std::uint64_t code = w; code < total; code += jobs) {
                const SetMap m = SetMap::from_index(n, code);
                const ColorationSet cs = enumerate_colorations(m);
                for (std::size_t i = 0; i < cs.discrete.size(); ++i) {
                    const RelatedQuiver r = related_quiver({m, cs.discrete[i]});
                    detail::ClassAccumulator one{1, code, i, !cs.parametric.empty()};
                    detail::merge_class(partial[w][canonical_form(r.quiver)], one);
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Table merged;
    for (const auto& t : partial)
        for (const auto& [code, acc] : t) detail::merge_class(merged[code], acc);

    std::vector<CatalogEntry> out;
    for (const auto& [code, acc] : merged) {
        CatalogEntry e;
        e.code = code;
        e.canonical_quiver = quiver_from_canonical(code);
        e.multiplicity = acc.multiplicity;
        e.components = component_breakdown(e.canonical_quiver);
        e.sample_phi = SetMap::from_index(n, acc.sample_map);
        e.sample_a = enumerate_colorations(e.sample_phi).discrete.at(acc.sample_coloration);
        e.parametric = acc.parametric;
        if (e.canonical_quiver.vertex_count() != n + loop_count(e.sample_phi))
            throw std::logic_error("class vertex count differs from |E| + loops");
        out.push_back(std::move(e));
    }
    return out;
}

/// Number of pairs (phi, a) with phi loop-free on n elements whose related quiver
/// equals q as a labelled quiver (same vertex labels and arrows).
inline std::uint64_t fiber_size(const Quiver& q, std::size_t n) {
    auto key = [](const Quiver& x) {
        std::vector<std::tuple<std::size_t, std::size_t, std::string>> arrows;
        for (const auto& a : x.arrows) arrows.emplace_back(a.src, a.dst, a.label);
        std::sort(arrows.begin(), arrows.end());
        return std::pair(x.vertices, arrows);
    };
    const auto target = key(q);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < SetMap::count(n); ++code) {
        const SetMap m = SetMap::from_index(n, code);
        if (m.fixed_point_count() != 0) continue;
        for (const auto& a : enumerate_colorations(m).discrete)
            if (key(related_quiver({m, a}).quiver) == target) ++count;
    }
    return count;
}

} // namespace ncdup

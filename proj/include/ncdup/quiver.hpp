#pragma once

// Finite set maps, quivers and the path/cycle combinatorics used by the
// homology formulas.
//
// Composition convention: a path p followed by q is written q*p, i.e. the
// product q*p exists when source(q) == target(p).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncdup {

/// A total map phi : {0..n-1} -> {0..n-1}.
class SetMap {
public:
    SetMap() = default;
    explicit SetMap(std::vector<std::size_t> phi) : phi_(std::move(phi)) {
        for (std::size_t x = 0; x < phi_.size(); ++x)
            if (phi_[x] >= phi_.size())
                throw std::invalid_argument("set map value " + std::to_string(phi_[x]) + " out of range at " +
                                            std::to_string(x));
    }

    static SetMap identity(std::size_t n) {
        std::vector<std::size_t> phi(n);
        std::iota(phi.begin(), phi.end(), 0);
        return SetMap(std::move(phi));
    }

    /// The map whose base-n digits (least significant first) are given by code.
    static SetMap from_index(std::size_t n, std::uint64_t code) {
        std::vector<std::size_t> phi(n);
        for (std::size_t x = 0; x < n; ++x) {
            phi[x] = static_cast<std::size_t>(code % n);
            code /= n;
        }
        return SetMap(std::move(phi));
    }

    static std::uint64_t count(std::size_t n) {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < n; ++i) c *= n;
        return c;
    }

    std::size_t size() const { return phi_.size(); }
    std::size_t operator()(std::size_t x) const { return phi_.at(x); }
    const std::vector<std::size_t>& values() const { return phi_; }
    bool is_fixed(std::size_t x) const { return phi_.at(x) == x; }

    std::size_t fixed_point_count() const {
        std::size_t c = 0;
        for (std::size_t x = 0; x < phi_.size(); ++x) c += phi_[x] == x;
        return c;
    }

    friend bool operator==(const SetMap&, const SetMap&) = default;

private:
    std::vector<std::size_t> phi_;
};

struct Arrow {
    std::size_t src = 0;
    std::size_t dst = 0;
    std::string label;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t arrow_count() const { return arrows.size(); }

    /// Builds a quiver with vertices "0".."n-1" and arrows labelled "a0", "a1", ...
    static Quiver from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        Quiver q;
        for (std::size_t i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i));
        for (std::size_t k = 0; k < edges.size(); ++k) q.arrows.push_back({edges[k].first, edges[k].second, "a" + std::to_string(k)});
        q.validate();
        return q;
    }

    void validate() const {
        for (const auto& a : arrows)
            if (a.src >= vertices.size() || a.dst >= vertices.size())
                throw std::invalid_argument("arrow '" + a.label + "' has an endpoint out of range");
        std::vector<std::string> labels;
        for (const auto& a : arrows) labels.push_back(a.label);
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            throw std::invalid_argument("arrow labels are not unique");
    }

    std::vector<std::size_t> out_degrees() const {
        std::vector<std::size_t> d(vertices.size());
        for (const auto& a : arrows) ++d[a.src];
        return d;
    }

    std::vector<std::size_t> in_degrees() const {
        std::vector<std::size_t> d(vertices.size());
        for (const auto& a : arrows) ++d[a.dst];
        return d;
    }
};

/// Oriented cycle up to rotation, stored as a word of arrow indices in path order.
struct Circuit {
    std::vector<std::size_t> arrows;
    std::size_t length = 0;
    bool proper = true;
};

// ---------------------------------------------------------------------------

/// Vertex x gets an arrow x -> phi(x) labelled x.
inline Quiver quiver_of_setmap(const SetMap& m) {
    Quiver q;
    for (std::size_t x = 0; x < m.size(); ++x) q.vertices.push_back(std::to_string(x));
    for (std::size_t x = 0; x < m.size(); ++x) q.arrows.push_back({x, m(x), std::to_string(x)});
    return q;
}

inline bool is_one_valued(const Quiver& q) {
    auto out = q.out_degrees();
    return std::all_of(out.begin(), out.end(), [](std::size_t d) { return d == 1; });
}

/// Weak-connectivity class of each vertex, numbered by least vertex index.
inline std::vector<std::size_t> component_labels(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : q.arrows) {
        std::size_t r1 = find(a.src), r2 = find(a.dst);
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
    std::vector<std::size_t> label(n), remap(n, n);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t r = find(v);
        if (remap[r] == n) remap[r] = next++;
        label[v] = remap[r];
    }
    return label;
}

/// Induced subquiver on a vertex subset (in the given order).
inline Quiver induced_subquiver(const Quiver& q, const std::vector<std::size_t>& verts) {
    std::vector<std::size_t> pos(q.vertex_count(), q.vertex_count());
    Quiver sub;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        pos[verts[i]] = i;
        sub.vertices.push_back(q.vertices[verts[i]]);
    }
    for (const auto& a : q.arrows)
        if (pos[a.src] != q.vertex_count() && pos[a.dst] != q.vertex_count())
            sub.arrows.push_back({pos[a.src], pos[a.dst], a.label});
    return sub;
}

/// Vertex sets of the weakly connected components, ordered by least vertex.
inline std::vector<std::vector<std::size_t>> component_vertex_sets(const Quiver& q) {
    auto label = component_labels(q);
    std::size_t k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<std::size_t>> sets(k);
    for (std::size_t v = 0; v < label.size(); ++v) sets[label[v]].push_back(v);
    return sets;
}

inline std::vector<Quiver> connected_components(const Quiver& q) {
    std::vector<Quiver> out;
    for (const auto& vs : component_vertex_sets(q)) out.push_back(induced_subquiver(q, vs));
    return out;
}

inline bool is_connected(const Quiver& q) { return component_vertex_sets(q).size() == 1; }

/// The unique proper oriented cycle of a connected one-valued quiver.
inline Circuit proper_cycle_of_component(const Quiver& q) {
    if (q.vertex_count() == 0 || !is_one_valued(q) || !is_connected(q))
        throw std::invalid_argument("proper_cycle_of_component: quiver is not connected and one-valued");
    std::vector<std::size_t> out_arrow(q.vertex_count());
    for (std::size_t k = 0; k < q.arrows.size(); ++k) out_arrow[q.arrows[k].src] = k;
    std::vector<std::size_t> seen_at(q.vertex_count(), q.vertex_count());
    std::vector<std::size_t> walk;
    std::size_t v = 0;
    while (seen_at[v] == q.vertex_count()) {
        seen_at[v] = walk.size();
        walk.push_back(v);
        v = q.arrows[out_arrow[v]].dst;
    }
    Circuit c;
    for (std::size_t i = seen_at[v]; i < walk.size(); ++i) c.arrows.push_back(out_arrow[walk[i]]);
    c.length = c.arrows.size();
    c.proper = true;
    return c;
}

inline bool is_round_trip(const Quiver& q) {
    if (q.vertex_count() != 2 || q.arrow_count() != 2) return false;
    const auto& a = q.arrows[0];
    const auto& b = q.arrows[1];
    return a.src != a.dst && a.src == b.dst && a.dst == b.src;
}

/// A c-crown is exactly one directed c-cycle (c >= 1) and nothing else.
inline std::optional<std::size_t> crown_size(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    if (n == 0 || q.arrow_count() != n || !is_connected(q)) return std::nullopt;
    auto out = q.out_degrees(), in = q.in_degrees();
    for (std::size_t v = 0; v < n; ++v)
        if (out[v] != 1 || in[v] != 1) return std::nullopt;
    return n;
}

inline bool is_crown(const Quiver& q) { return crown_size(q).has_value(); }

/// Connected, exactly one sink, every other vertex the source of exactly one arrow.
inline bool is_one_sink_one_valued(const Quiver& q) {
    if (q.vertex_count() == 0 || !is_connected(q)) return false;
    auto out = q.out_degrees();
    std::size_t sinks = 0;
    for (auto d : out) {
        if (d == 0)
            ++sinks;
        else if (d != 1)
            return false;
    }
    return sinks == 1;
}

inline Quiver opposite(const Quiver& q) {
    Quiver r = q;
    for (auto& a : r.arrows) std::swap(a.src, a.dst);
    return r;
}

/// True iff the quiver has an oriented cycle (loops included).
inline bool has_oriented_cycle(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    auto in = q.in_degrees();
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& a : q.arrows) succ[a.src].push_back(a.dst);
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < n; ++v)
        if (in[v] == 0) stack.push_back(v);
    std::size_t removed = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++removed;
        for (auto w : succ[v])
            if (--in[w] == 0) stack.push_back(w);
    }
    return removed != n;
}

// ---------------------------------------------------------------------------
// Path counting. Entry [t][s] of the walk matrix W_n counts paths of length n
// from s to t.

using CountMatrix = std::vector<std::vector<std::uint64_t>>;

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("path count overflow");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("path count overflow");
    return r;
}

inline CountMatrix count_product(const CountMatrix& a, const CountMatrix& b) {
    const std::size_t n = a.size();
    CountMatrix c(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
        }
    return c;
}

} // namespace detail

inline CountMatrix adjacency_counts(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    CountMatrix adj(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& a : q.arrows) ++adj[a.dst][a.src];
    return adj;
}

/// walk_counts(q, n)[t][s] = number of paths of length n from s to t.
inline CountMatrix walk_counts(const Quiver& q, std::size_t length) {
    const std::size_t n = q.vertex_count();
    CountMatrix w(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t v = 0; v < n; ++v) w[v][v] = 1;
    const CountMatrix adj = adjacency_counts(q);
    for (std::size_t i = 0; i < length; ++i) w = detail::count_product(adj, w);
    return w;
}

/// |Q_n // Q_m|: pairs (alpha, beta) of paths of lengths n and m sharing source and target.
inline std::uint64_t paths_parallel_count(const Quiver& q, std::size_t n, std::size_t m) {
    const CountMatrix wn = walk_counts(q, n);
    const CountMatrix wm = n == m ? wn : walk_counts(q, m);
    std::uint64_t total = 0;
    for (std::size_t t = 0; t < q.vertex_count(); ++t)
        for (std::size_t s = 0; s < q.vertex_count(); ++s)
            total = detail::checked_add(total, detail::checked_mul(wn[t][s], wm[t][s]));
    return total;
}

/// Number of closed walks of length j counted as arrow sequences (trace of A^j).
inline std::uint64_t closed_walk_count(const Quiver& q, std::size_t j) {
    const CountMatrix w = walk_counts(q, j);
    std::uint64_t tr = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) tr = detail::checked_add(tr, w[v][v]);
    return tr;
}

namespace detail {

inline std::vector<std::size_t> divisors(std::size_t n) {
    std::vector<std::size_t> d;
    for (std::size_t k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

inline int moebius(std::size_t n) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace detail

/// |Omega_a|: rotation orbits of aperiodic closed walks of length a (Moebius inversion of traces).
inline std::uint64_t proper_circuits_count(const Quiver& q, std::size_t a) {
    if (a == 0) throw std::invalid_argument("circuit length must be positive");
    __int128 sum = 0;
    for (auto d : detail::divisors(a)) {
        int mu = detail::moebius(a / d);
        if (mu != 0) sum += static_cast<__int128>(mu) * closed_walk_count(q, d);
    }
    if (sum < 0 || sum % a != 0) throw std::logic_error("proper circuit count is not a non-negative integer");
    return static_cast<std::uint64_t>(sum / static_cast<__int128>(a));
}

/// |Theta_j|: rotation orbits of all closed walks of length j. Each orbit is
/// a power of exactly one proper circuit whose length divides j.
inline std::uint64_t circuits_count(const Quiver& q, std::size_t j) {
    if (j == 0) throw std::invalid_argument("circuit length must be positive");
    std::uint64_t total = 0;
    for (auto a : detail::divisors(j)) total = detail::checked_add(total, proper_circuits_count(q, a));
    return total;
}

// ---------------------------------------------------------------------------
// Isomorphism via canonical forms: colour refinement, then an exhaustive
// search over orderings compatible with the refined cells, per connected
// component. Component codes are sorted, so the form is a complete invariant.

using CanonicalCode = std::vector<std::uint32_t>;

namespace detail {

inline std::vector<std::uint32_t> refine_colours(const CountMatrix& adj) {
    const std::size_t n = adj.size();
    std::vector<std::vector<std::uint64_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t out = 0, in = 0;
        for (std::size_t w = 0; w < n; ++w) {
            out += adj[w][v];
            in += adj[v][w];
        }
        sig[v] = {out, in, adj[v][v]};
    }
    auto compress = [](const std::vector<std::vector<std::uint64_t>>& s) {
        std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
        for (const auto& x : s) ids.emplace(x, 0);
        std::uint32_t next = 0;
        for (auto& [key, id] : ids) id = next++;
        std::vector<std::uint32_t> colour(s.size());
        for (std::size_t v = 0; v < s.size(); ++v) colour[v] = ids.at(s[v]);
        return std::pair{colour, next};
    };
    auto [colour, classes] = compress(sig);
    while (true) {
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::uint64_t> s{colour[v]};
            std::vector<std::pair<std::uint32_t, std::uint64_t>> out, in;
            for (std::size_t w = 0; w < n; ++w) {
                if (adj[w][v]) out.emplace_back(colour[w], adj[w][v]);
                if (adj[v][w]) in.emplace_back(colour[w], adj[v][w]);
            }
            std::sort(out.begin(), out.end());
            std::sort(in.begin(), in.end());
            s.push_back(out.size());
            for (auto& [c, m] : out) s.insert(s.end(), {c, m});
            s.push_back(in.size());
            for (auto& [c, m] : in) s.insert(s.end(), {c, m});
            sig[v] = std::move(s);
        }
        auto [next_colour, next_classes] = compress(sig);
        colour = next_colour;
        if (next_classes == classes) break;
        classes = next_classes;
    }
    return colour;
}

inline CanonicalCode component_code(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    const CountMatrix adj = adjacency_counts(q);
    const auto colour = refine_colours(adj);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
    // Cell boundaries in the colour-sorted order.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    double search = 1;
    for (auto [b, e] : cells)
        for (std::size_t k = 2; k <= e - b; ++k) search *= static_cast<double>(k);
    if (search > 5e7) throw std::runtime_error("canonical form search space too large");

    CanonicalCode best;
    CanonicalCode code(1 + n * n);
    code[0] = static_cast<std::uint32_t>(n);
    auto evaluate = [&]() {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) code[1 + i * n + j] = static_cast<std::uint32_t>(adj[order[j]][order[i]]);
        if (best.empty() || code < best) best = code;
    };
    // Odometer over the permutations of each cell.
    for (auto& [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);
    while (true) {
        evaluate();
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
            auto [b, e] = cells[c];
            if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
        }
        if (c == cells.size()) break;
    }
    return best;
}

} // namespace detail

/// Complete isomorphism invariant of a quiver. Encodes, per component and in
/// sorted order, the vertex count followed by the arrow-count matrix
/// (row = source, column = target) under the lexicographically least ordering.
inline CanonicalCode canonical_form(const Quiver& q) {
    std::vector<CanonicalCode> codes;
    for (const auto& c : connected_components(q)) codes.push_back(detail::component_code(c));
    std::sort(codes.begin(), codes.end());
    CanonicalCode out{static_cast<std::uint32_t>(codes.size())};
    for (const auto& c : codes) out.insert(out.end(), c.begin(), c.end());
    return out;
}

inline bool quiver_iso(const Quiver& a, const Quiver& b) {
    if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

/// Rebuilds the representative quiver described by a canonical code.
inline Quiver quiver_from_canonical(const CanonicalCode& code) {
    Quiver q;
    std::size_t pos = 1, offset = 0, label = 0;
    const std::size_t comps = code.at(0);
    for (std::size_t c = 0; c < comps; ++c) {
        const std::size_t n = code.at(pos++);
        for (std::size_t v = 0; v < n; ++v) q.vertices.push_back(std::to_string(offset + v));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::uint32_t k = 0; k < code.at(pos + i * n + j); ++k)
                    q.arrows.push_back({offset + i, offset + j, "a" + std::to_string(label++)});
        pos += n * n;
        offset += n;
    }
    return q;
}

} // namespace ncdup

#pragma once

// Closed-form dimensions of Hochschild cohomology, cyclic homology and
// Hochschild homology for radical square zero path algebras and for
// non-commutative duplicates, in terms of path and circuit counts.

#include "ncdup/duplicate.hpp"
#include "ncdup/quiver.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace ncdup {

enum class CellKind { value, inapplicable_crown, skipped };
enum class TotalKind { finite, infinite, unknown };

struct DimCell {
    CellKind kind = CellKind::value;
    std::uint64_t value = 0;

    static DimCell of(std::uint64_t v) { return {CellKind::value, v}; }
    static DimCell crown() { return {CellKind::inapplicable_crown, 0}; }
    static DimCell skipped() { return {CellKind::skipped, 0}; }

    bool has_value() const { return kind == CellKind::value; }
    friend bool operator==(const DimCell&, const DimCell&) = default;
};

/// One cell per degree 0..max_degree, plus a flag for the total dimension.
struct DimTable {
    std::vector<DimCell> entries;
    TotalKind total = TotalKind::unknown;

    std::size_t max_degree() const { return entries.empty() ? 0 : entries.size() - 1; }
    const DimCell& at(std::size_t n) const { return entries.at(n); }
};

inline std::string to_string(const DimCell& c) {
    switch (c.kind) {
        case CellKind::value: return std::to_string(c.value);
        case CellKind::inapplicable_crown: return "inapplicable-crown";
        case CellKind::skipped: return "skipped";
    }
    return "?";
}

inline std::string to_string(TotalKind t) {
    switch (t) {
        case TotalKind::finite: return "finite";
        case TotalKind::infinite: return "infinite-total";
        case TotalKind::unknown: return "unknown";
    }
    return "?";
}

/// True iff the quiver has no oriented cycles, loops included.
inline bool hh_finite(const Quiver& q) { return !has_oriented_cycle(q); }

namespace detail {

inline std::uint64_t non_negative(std::int64_t v, const char* what) {
    if (v < 0) throw std::logic_error(std::string("negative dimension from formula: ") + what);
    return static_cast<std::uint64_t>(v);
}

/// HH^n of (kQ)_2 for a connected non-crown quiver.
inline std::uint64_t hh_cohomology_connected(const Quiver& q, std::size_t n) {
    auto par = [&](std::size_t a, std::size_t b) { return static_cast<std::int64_t>(paths_parallel_count(q, a, b)); };
    if (n == 0) return non_negative(par(1, 0) + 1, "HH^0");
    if (n == 1) return non_negative(par(1, 1) - static_cast<std::int64_t>(q.vertex_count()) + 1, "HH^1");
    return non_negative(par(n, 1) - par(n - 1, 0), "HH^n");
}

} // namespace detail

/// Sums the per-component formulas. A degree is flagged inapplicable-crown as soon
/// as some component is a crown; the total flag follows hh_finite.
inline DimTable hh_cohomology_dims(const Quiver& q, std::size_t max_n) {
    DimTable t;
    t.total = hh_finite(q) ? TotalKind::finite : TotalKind::infinite;
    const auto comps = connected_components(q);
    const bool crown = std::any_of(comps.begin(), comps.end(), [](const Quiver& c) { return is_crown(c); });
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (crown) {
            t.entries.push_back(DimCell::crown());
            continue;
        }
        std::uint64_t sum = 0;
        for (const auto& c : comps) sum += detail::hh_cohomology_connected(c, n);
        t.entries.push_back(DimCell::of(sum));
    }
    return t;
}

/// Even n: |Theta_{n+1}| + |Q_0|. Odd n: sum of |Omega_a| over even a dividing n + 1.
inline DimTable hc_dims_quiver(const Quiver& q, std::size_t max_n) {
    DimTable t;
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (n % 2 == 0) {
            t.entries.push_back(DimCell::of(circuits_count(q, n + 1) + q.vertex_count()));
        } else {
            std::uint64_t s = 0;
            for (auto a : detail::divisors(n + 1))
                if (a % 2 == 0) s += proper_circuits_count(q, a);
            t.entries.push_back(DimCell::of(s));
        }
    }
    // Cyclic homology of a finite dimensional algebra never vanishes in even degrees.
    t.total = TotalKind::infinite;
    return t;
}

/// h(a): number of components of the related quiver whose proper cycle has length a.
struct HCounts {
    std::map<std::size_t, std::uint64_t> h;

    std::uint64_t at(std::size_t a) const {
        auto it = h.find(a);
        return it == h.end() ? 0 : it->second;
    }
    std::uint64_t divisor_sum(std::size_t m) const {
        std::uint64_t s = 0;
        for (auto a : detail::divisors(m)) s += at(a);
        return s;
    }
};

inline HCounts h_counts(const DuplicatePair& p) {
    HCounts out;
    for (const auto& c : connected_components(related_quiver(p).quiver)) {
        if (!has_oriented_cycle(c)) continue;
        ++out.h[proper_cycle_of_component(opposite(c)).length];
    }
    for (const auto& [a, count] : out.h)
        if (a % 2 == 1 && count != 0) throw std::logic_error("odd proper cycle in a related quiver");
    return out;
}

/// Q_f has an oriented cycle other than a loop.
inline bool has_non_loop_cycle(const SetMap& m) {
    for (const auto& c : setmap_components(m))
        if (c.cycle.size() > 1) return true;
    return false;
}

/// Hochschild cohomology of a duplicate: vanishes above degree 1 when Q_f has
/// only loop cycles, otherwise the total is infinite and degrees follow the
/// quiver formula on the related quiver.
inline DimTable duplicate_hh_summary(const DuplicatePair& p, std::size_t max_n) {
    const Quiver q = related_quiver(p).quiver;
    if (has_non_loop_cycle(p.setmap)) {
        DimTable t = hh_cohomology_dims(q, max_n);
        t.total = TotalKind::infinite;
        return t;
    }
    DimTable t;
    t.total = TotalKind::finite;
    const auto comps = connected_components(q);
    std::int64_t h1 = 0;
    for (const auto& c : comps)
        h1 += static_cast<std::int64_t>(c.arrow_count()) - static_cast<std::int64_t>(c.vertex_count()) + 1;
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (n == 0)
            t.entries.push_back(DimCell::of(comps.size()));
        else if (n == 1)
            t.entries.push_back(DimCell::of(detail::non_negative(h1, "HH^1 of a duplicate")));
        else
            t.entries.push_back(DimCell::of(0));
    }
    return t;
}

/// Even degrees: |E| + loops. Odd n: sum of h(a) over a dividing n + 1.
inline DimTable hc_dims_duplicate(const DuplicatePair& p, std::size_t max_n) {
    const HCounts h = h_counts(p);
    const std::uint64_t even = p.setmap.size() + loop_count(p.setmap);
    DimTable t;
    t.total = TotalKind::infinite;
    for (std::size_t n = 0; n <= max_n; ++n)
        t.entries.push_back(DimCell::of(n % 2 == 0 ? even : h.divisor_sum(n + 1)));
    return t;
}

/// HH_0 = |E| + loops; odd n: sum of h(a), a | n + 1; even n > 0: sum of h(a), a | n.
inline DimTable hh_homology_dims_duplicate(const DuplicatePair& p, std::size_t max_n) {
    const HCounts h = h_counts(p);
    DimTable t;
    t.total = h.h.empty() ? TotalKind::finite : TotalKind::infinite;
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (n == 0)
            t.entries.push_back(DimCell::of(p.setmap.size() + loop_count(p.setmap)));
        else
            t.entries.push_back(DimCell::of(h.divisor_sum(n % 2 == 1 ? n + 1 : n)));
    }
    return t;
}

} // namespace ncdup

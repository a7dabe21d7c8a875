#pragma once

// The acceptance criteria as runnable checks. Each criterion recomputes its
// claim along two independent routes where one exists (closed formula vs.
// brute force, quiver construction vs. recovery from the algebra) and
// records every disagreement.

#include "ncdup/algebra.hpp"
#include "ncdup/duplicate.hpp"
#include "ncdup/homology_formulas.hpp"
#include "ncdup/homology_oracle.hpp"
#include "ncdup/interlacing.hpp"
#include "ncdup/quiver.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace ncdup {

struct AcceptanceConfig {
    std::size_t max_set = 4;          // |E| for the exhaustive pair checks
    std::size_t oracle_set = 3;       // |E| for the oracle comparisons on duplicates
    std::size_t census_vertices = 6;  // connected one-valued quivers in the coloration census
    std::size_t quiver_vertices = 4;  // quivers compared against the cohomology oracle
    std::size_t quiver_arrows = 5;
    std::size_t max_degree = 3;
    bool inject_fault = false;        // corrupt one structure constant of every built duplicate
    OracleOptions oracle;

    /// Scaled-down configuration for `verify --size n`.
    static AcceptanceConfig for_size(std::size_t n) {
        AcceptanceConfig c;
        c.max_set = n;
        c.oracle_set = std::min<std::size_t>(n, 3);
        c.census_vertices = std::min<std::size_t>(6, n + 2);
        c.quiver_vertices = std::min<std::size_t>(4, n);
        c.quiver_arrows = std::min<std::size_t>(5, n + 1);
        return c;
    }
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::uint64_t checks = 0;
    std::vector<std::string> failures; // first few only
    std::uint64_t failure_count = 0;
    double seconds = 0;
};

namespace detail {

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : r_(r) {}
    void check(bool ok, const std::function<std::string()>& describe) {
        ++r_.checks;
        if (ok) return;
        ++r_.failure_count;
        if (r_.failures.size() < 8) r_.failures.push_back(describe());
    }

private:
    CriterionResult& r_;
};

inline std::string show(const SetMap& m) {
    std::ostringstream s;
    s << "phi=[";
    for (std::size_t x = 0; x < m.size(); ++x) s << (x ? "," : "") << m(x);
    s << "]";
    return s.str();
}

inline std::string show(const DeterminingElement& a) {
    std::ostringstream s;
    s << "a=(";
    for (std::size_t x = 0; x < a.values.size(); ++x) s << (x ? "," : "") << a.values[x];
    s << ")";
    return s.str();
}

inline std::string show(const DimTable& t) {
    std::string s;
    for (const auto& c : t.entries) s += (s.empty() ? "" : " ") + to_string(c);
    return s;
}

/// Every normalised a in {0,-1}^E for the set map m.
inline std::vector<DeterminingElement> discrete_candidates(const SetMap& m) {
    std::vector<std::size_t> free;
    for (std::size_t x = 0; x < m.size(); ++x)
        if (!m.is_fixed(x)) free.push_back(x);
    std::vector<DeterminingElement> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
        DeterminingElement a{Vec(m.size())};
        for (std::size_t i = 0; i < free.size(); ++i)
            if ((mask >> i) & 1) a.values[free[i]] = -1;
        out.push_back(std::move(a));
    }
    return out;
}

inline void for_each_pair(std::size_t max_set, const std::function<void(const DuplicatePair&)>& f) {
    for (std::size_t n = 1; n <= max_set; ++n)
        for (std::uint64_t code = 0; code < SetMap::count(n); ++code) {
            const SetMap m = SetMap::from_index(n, code);
            for (const auto& a : enumerate_colorations(m).discrete) f({m, a});
        }
}

inline Algebra build_duplicate(const DuplicatePair& p, bool fault) {
    Algebra T = twisted_product(p);
    if (fault) {
        Vec v = T.product_vec(0, 0);
        v[T.dim() - 1] += 1;
        T.set_product(0, 0, v);
    }
    return T;
}

/// Length of the cycle through x under m, 0 when x is not periodic.
inline std::size_t period_of(const SetMap& m, std::size_t x) {
    std::size_t y = m(x);
    for (std::size_t k = 1; k <= m.size(); ++k, y = m(y))
        if (y == x) return k;
    return 0;
}

inline bool has_long_cycle_by_iteration(const SetMap& m) {
    for (std::size_t x = 0; x < m.size(); ++x)
        if (period_of(m, x) > 1) return true;
    return false;
}

/// Predicted number of discrete colorations of a connected one-valued quiver Q_f.
inline std::uint64_t predicted_coloration_count(const SetMap& m) {
    std::size_t period = 0, anchor = 0;
    for (std::size_t x = 0; x < m.size() && period == 0; ++x)
        if ((period = period_of(m, x)) != 0) anchor = x;
    if (period == 1) {
        std::uint64_t in = 0;
        for (std::size_t x = 0; x < m.size(); ++x) in += (x != anchor && m(x) == anchor);
        return std::uint64_t{1} << in;
    }
    return period % 2 == 0 ? 2 : 0;
}

} // namespace detail

/// All quivers with 1..max_v vertices and 0..max_a arrows (loops and multiple
/// arrows allowed) up to isomorphism, optionally connected only.
inline std::vector<Quiver> enumerate_quivers(std::size_t max_v, std::size_t max_a, bool connected_only) {
    std::set<CanonicalCode> seen;
    std::vector<Quiver> out;
    for (std::size_t v = 1; v <= max_v; ++v) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t s = 0; s < v; ++s)
            for (std::size_t t = 0; t < v; ++t) slots.emplace_back(s, t);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::function<void(std::size_t)> grow = [&](std::size_t from) {
            Quiver q = Quiver::from_edges(v, edges);
            if (!connected_only || is_connected(q)) {
                auto code = canonical_form(q);
                if (seen.insert(code).second) out.push_back(std::move(q));
            }
            if (edges.size() == max_a) return;
            for (std::size_t i = from; i < slots.size(); ++i) {
                edges.push_back(slots[i]);
                grow(i);
                edges.pop_back();
            }
        };
        grow(0);
    }
    return out;
}

// ---------------------------------------------------------------------------

inline void criterion_interlacing_correspondence(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    const Algebra B = idempotent_line_algebra();
    for (std::size_t n = 1; n <= cfg.max_set; ++n) {
        const Algebra A = set_algebra(n);
        for (std::uint64_t code = 0; code < SetMap::count(n); ++code) {
            const SetMap m = SetMap::from_index(n, code);
            const Matrix F = setmap_matrix(m);
            std::set<Vec> by_pair;
            for (const auto& a : detail::discrete_candidates(m)) {
                const Matrix D = derivation_matrix(m, a);
                const bool pair = check_pair(F, D);
                const bool colour = is_coloration(m, a);
                const bool braid = check_braiding(tau_from_pair(F, D), A, B);
                rec.check(pair == colour && colour == braid, [&] {
                    return detail::show(m) + " " + detail::show(a) + ": check_pair=" + std::to_string(pair) +
                           " is_coloration=" + std::to_string(colour) + " braiding=" + std::to_string(braid);
                });
                if (pair) by_pair.insert(a.values);
            }
            std::set<Vec> enumerated;
            for (const auto& a : enumerate_colorations(m).discrete) enumerated.insert(a.values);
            rec.check(enumerated == by_pair, [&] { return detail::show(m) + ": enumerate_colorations disagrees with brute force"; });
        }
    }
}

inline void criterion_coloration_census(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    for (std::size_t n = 1; n <= cfg.census_vertices; ++n) {
        std::set<CanonicalCode> seen;
        for (std::uint64_t code = 0; code < SetMap::count(n); ++code) {
            const SetMap m = SetMap::from_index(n, code);
            const Quiver q = quiver_of_setmap(m);
            if (!is_connected(q) || !seen.insert(canonical_form(q)).second) continue;
            const Matrix F = setmap_matrix(m);
            std::uint64_t brute = 0;
            for (const auto& a : detail::discrete_candidates(m)) brute += check_pair(F, derivation_matrix(m, a));
            const std::uint64_t predicted = detail::predicted_coloration_count(m);
            const std::uint64_t enumerated = enumerate_colorations(m).discrete.size();
            rec.check(brute == predicted && enumerated == predicted, [&] {
                return detail::show(m) + ": brute force " + std::to_string(brute) + ", rule " + std::to_string(predicted) +
                       ", enumerated " + std::to_string(enumerated);
            });
        }
    }
}

inline void criterion_isomorphism_theorems(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    detail::for_each_pair(cfg.max_set, [&](const DuplicatePair& p) {
        const std::size_t n = p.setmap.size(), loops = loop_count(p.setmap);
        const std::string who = detail::show(p.setmap) + " " + detail::show(p.coloration);
        const Algebra T = detail::build_duplicate(p, cfg.inject_fault);
        rec.check(check_algebra(T).ok(), [&] { return who + ": twisted product fails associativity/unit"; });
        const RelatedQuiver r = related_quiver(p);
        rec.check(T.dim() == 2 * n && rad_square_zero_algebra(r.quiver).dim() == 2 * n,
                  [&] { return who + ": dimension is not 2|E|"; });
        rec.check(r.quiver.vertex_count() == n + loops && r.quiver.arrow_count() == n - loops,
                  [&] { return who + ": vertex/arrow counts differ from |E|+L1 / |E|-L1"; });
        bool iso = false;
        try {
            iso = is_isomorphism(explicit_iso(p));
        } catch (const std::exception&) {
            iso = false;
        }
        rec.check(iso, [&] { return who + ": explicit map is not an isomorphism"; });
        bool recovered = false;
        try {
            recovered = quiver_iso(quiver_of_2nilpotent(T), r.quiver);
        } catch (const std::exception&) {
            recovered = false;
        }
        rec.check(recovered, [&] { return who + ": recovered quiver differs from the related quiver"; });
    });
}

inline void criterion_round_trip_family(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    const SetMap m({1, 0});
    const Quiver crown = Quiver::from_edges(2, {{0, 1}, {1, 0}});
    const std::vector<Rational> params{Rational(0), Rational(-1), Rational(1, 2), Rational(-3)};
    std::vector<Algebra> algebras;
    std::vector<std::optional<AlgebraMap>> isos;
    for (const Rational& t : params) {
        const DuplicatePair p = make_duplicate_pair(m, DeterminingElement{{t, Rational(-1) - t}});
        const Algebra T = detail::build_duplicate(p, cfg.inject_fault);
        algebras.push_back(T);
        const std::string who = "t=" + t.to_string();
        rec.check(T.dim() == 4, [&] { return who + ": dimension is not 4"; });
        std::string why;
        bool recovered = false;
        try {
            recovered = quiver_iso(quiver_of_2nilpotent(T), crown);
        } catch (const std::exception& e) {
            why = std::string(" (") + e.what() + ")";
        }
        rec.check(recovered, [&] {
            return who + ": recovered quiver is not the 2-crown; radical dim " + std::to_string(radical_basis(T).size()) + why;
        });
        std::optional<AlgebraMap> F;
        try {
            F = explicit_iso(p);
            F->target = T;
            if (!check_morphism(*F) || !is_isomorphism(*F)) F.reset();
        } catch (const std::exception&) {
            F.reset();
        }
        rec.check(F.has_value(), [&] { return who + ": no isomorphism with (k 2-crown)_2 via the arrows vXu, uXv"; });
        isos.push_back(F);
    }
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j) {
            bool ok = false;
            if (isos[i] && isos[j]) {
                const AlgebraMap G = compose(*isos[j], inverse(*isos[i]));
                ok = check_morphism(G) && is_isomorphism(G);
            }
            rec.check(ok, [&] {
                return "t=" + params[i].to_string() + " vs t=" + params[j].to_string() + ": not shown isomorphic (radical dims " +
                       std::to_string(radical_basis(algebras[i]).size()) + " and " + std::to_string(radical_basis(algebras[j]).size()) + ")";
            });
        }
}

inline void criterion_fiber_count(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    for (std::size_t n = 1; n <= cfg.max_set; ++n) {
        using Key = std::pair<std::vector<std::string>, std::vector<std::tuple<std::size_t, std::size_t, std::string>>>;
        std::map<Key, std::uint64_t> census;
        std::map<Key, std::pair<Quiver, std::size_t>> expected;
        for (std::uint64_t code = 0; code < SetMap::count(n); ++code) {
            const SetMap m = SetMap::from_index(n, code);
            if (m.fixed_point_count() != 0) continue;
            const std::size_t comps = component_vertex_sets(quiver_of_setmap(m)).size();
            for (const auto& a : enumerate_colorations(m).discrete) {
                const Quiver q = related_quiver({m, a}).quiver;
                Key k{q.vertices, {}};
                for (const auto& ar : q.arrows) k.second.emplace_back(ar.src, ar.dst, ar.label);
                std::sort(k.second.begin(), k.second.end());
                ++census[k];
                expected.emplace(k, std::pair(q, comps));
            }
        }
        for (const auto& [k, count] : census) {
            const auto& [q, comps] = expected.at(k);
            const std::uint64_t want = std::uint64_t{1} << comps;
            rec.check(count == want, [&] { return "fiber of size " + std::to_string(count) + ", expected " + std::to_string(want); });
            rec.check(fiber_size(q, n) == count, [&] { return "fiber_size disagrees with the census"; });
        }
    }
}

inline void criterion_hh_cohomology(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    for (const auto& q : enumerate_quivers(cfg.quiver_vertices, cfg.quiver_arrows, true)) {
        if (is_crown(q)) continue;
        const Algebra A = rad_square_zero_algebra(q);
        const DimTable formula = hh_cohomology_dims(q, cfg.max_degree);
        const DimTable oracle = hochschild_cohomology_oracle(A, cfg.max_degree, cfg.oracle);
        const std::string who = std::to_string(q.vertex_count()) + " vertices, arrows " + [&] {
            std::string s;
            for (const auto& a : q.arrows) s += std::to_string(a.src) + ">" + std::to_string(a.dst) + " ";
            return s;
        }();
        rec.check(formula.entries == oracle.entries,
                  [&] { return who + ": formula [" + detail::show(formula) + "] oracle [" + detail::show(oracle) + "]"; });
        rec.check(oracle.at(0) == DimCell::of(center_dim(A)), [&] { return who + ": degree 0 differs from the center"; });
        if (cfg.max_degree >= 1)
            rec.check(oracle.at(1) == DimCell::of(outer_derivation_dim(A)),
                      [&] { return who + ": degree 1 differs from outer derivations"; });
    }
}

inline void criterion_finiteness(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    // hh_finite against closed walks: an oriented cycle exists iff tr(W_j) > 0 for some j <= |Q_0|.
    for (const auto& q : enumerate_quivers(cfg.quiver_vertices, cfg.quiver_arrows, false)) {
        bool cyclic = false;
        for (std::size_t j = 1; j <= q.vertex_count() && !cyclic; ++j) cyclic = closed_walk_count(q, j) > 0;
        rec.check(hh_finite(q) == !cyclic, [&] { return "hh_finite disagrees with closed-walk test"; });
    }
    detail::for_each_pair(cfg.max_set, [&](const DuplicatePair& p) {
        const bool long_cycle = detail::has_long_cycle_by_iteration(p.setmap);
        const DimTable t = duplicate_hh_summary(p, cfg.max_degree);
        const bool infinite = t.total == TotalKind::infinite;
        const bool related_finite = hh_finite(related_quiver(p).quiver);
        const bool h_zero = h_counts(p).h.empty();
        rec.check(infinite == long_cycle && related_finite == !long_cycle && h_zero == !long_cycle, [&] {
            return detail::show(p.setmap) + " " + detail::show(p.coloration) + ": finiteness flags disagree";
        });
    });
    const Algebra crown = rad_square_zero_algebra(Quiver::from_edges(2, {{0, 1}, {1, 0}}));
    const DimTable oc = hochschild_cohomology_oracle(crown, 3, cfg.oracle);
    for (std::size_t n = 2; n <= 3; ++n)
        rec.check(oc.at(n).has_value() && oc.at(n).value != 0,
                  [&] { return "2-crown oracle HH^" + std::to_string(n) + " = " + to_string(oc.at(n)); });
    const Quiver tail = Quiver::from_edges(3, {{0, 1}, {1, 0}, {2, 0}});
    const DimTable ft = hh_cohomology_dims(tail, 12);
    const DimTable ot = hochschild_cohomology_oracle(rad_square_zero_algebra(tail), 3, cfg.oracle);
    for (std::size_t n = 0; n <= 3; ++n)
        rec.check(ft.at(n) == ot.at(n), [&] { return "2-cycle with tail: formula and oracle differ at HH^" + std::to_string(n); });
    for (std::size_t n = 2; n <= 12; ++n)
        rec.check(ft.at(n).has_value() && ft.at(n).value != 0, [&] {
            return "2-cycle with tail: formula HH^" + std::to_string(n) + " = " + to_string(ft.at(n)) +
                   (n <= 3 ? ", oracle " + to_string(ot.at(n)) : std::string());
        });
}

inline void criterion_cyclic_homology(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    detail::for_each_pair(cfg.max_set, [&](const DuplicatePair& p) {
        const std::string who = detail::show(p.setmap) + " " + detail::show(p.coloration);
        const DimTable f = hc_dims_duplicate(p, 6);
        const DimTable fq = hc_dims_quiver(related_quiver(p).quiver, 6);
        rec.check(f.entries == fq.entries, [&] { return who + ": duplicate formula [" + detail::show(f) + "] quiver formula [" + detail::show(fq) + "]"; });
        const std::uint64_t even = p.setmap.size() + loop_count(p.setmap);
        for (std::size_t n = 0; n <= 6; n += 2)
            rec.check(f.at(n) == DimCell::of(even), [&] { return who + ": HC_" + std::to_string(n) + " is not |E| + loops"; });
        // Odd degrees from the cycle lengths of Q_f directly.
        std::map<std::size_t, std::uint64_t> h;
        for (const auto& c : setmap_components(p.setmap))
            if (c.cycle.size() > 1) ++h[c.cycle.size()];
        for (std::size_t n = 1; n <= 6; n += 2) {
            std::uint64_t s = 0;
            for (auto a : detail::divisors(n + 1)) s += h.count(a) ? h[a] : 0;
            rec.check(f.at(n) == DimCell::of(s), [&] { return who + ": HC_" + std::to_string(n) + " differs from the divisor sum"; });
        }
        if (p.setmap.size() <= cfg.oracle_set) {
            const DimTable o = cyclic_homology_oracle(detail::build_duplicate(p, cfg.inject_fault), cfg.max_degree, cfg.oracle);
            DimTable fc = hc_dims_duplicate(p, cfg.max_degree);
            rec.check(o.entries == fc.entries, [&] { return who + ": formula [" + detail::show(fc) + "] Connes oracle [" + detail::show(o) + "]"; });
        }
    });
    const DuplicatePair rt = make_duplicate_pair(SetMap({1, 0}), DeterminingElement{{Rational(0), Rational(-1)}});
    const std::vector<DimCell> want{DimCell::of(2), DimCell::of(1), DimCell::of(2), DimCell::of(1)};
    rec.check(hc_dims_duplicate(rt, 3).entries == want, [] { return "round trip formula is not (2,1,2,1)"; });
    rec.check(cyclic_homology_oracle(detail::build_duplicate(rt, cfg.inject_fault), 3, cfg.oracle).entries == want,
              [] { return "round trip oracle is not (2,1,2,1)"; });
}

inline void criterion_hochschild_homology(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    detail::for_each_pair(cfg.max_set, [&](const DuplicatePair& p) {
        const std::string who = detail::show(p.setmap) + " " + detail::show(p.coloration);
        const DimTable f = hh_homology_dims_duplicate(p, cfg.max_degree);
        rec.check(f.at(0) == hc_dims_duplicate(p, 0).at(0), [&] { return who + ": HH_0 differs from HC_even"; });
        if (p.setmap.size() > cfg.oracle_set) return;
        const Algebra T = detail::build_duplicate(p, cfg.inject_fault);
        const DimTable o = hochschild_homology_oracle(T, cfg.max_degree, cfg.oracle);
        rec.check(o.entries == f.entries, [&] { return who + ": formula [" + detail::show(f) + "] bar oracle [" + detail::show(o) + "]"; });
        const DimTable oc = cyclic_homology_oracle(T, 0, cfg.oracle);
        rec.check(o.at(0) == oc.at(0), [&] { return who + ": oracle HH_0 differs from oracle HC_0"; });
        if (!detail::has_long_cycle_by_iteration(p.setmap))
            for (std::size_t n = 1; n <= cfg.max_degree; ++n)
                rec.check(o.at(n) == DimCell::of(0), [&] { return who + ": loop-only duplicate has HH_" + std::to_string(n) + " != 0"; });
    });
}

inline void criterion_degenerate_cases(const AcceptanceConfig& cfg, detail::Recorder& rec) {
    const auto catalog = classify(1);
    rec.check(catalog.size() == 1, [&] { return "|E| = 1 gives " + std::to_string(catalog.size()) + " classes"; });
    if (catalog.size() == 1) {
        const Quiver& q = catalog.front().canonical_quiver;
        rec.check(q.vertex_count() == 2 && q.arrow_count() == 0, [] { return "|E| = 1 class is not two isolated vertices"; });
    }
    for (const auto& a : enumerate_colorations(SetMap({0})).discrete) {
        const Algebra T = detail::build_duplicate({SetMap({0}), a}, cfg.inject_fault);
        bool commutative = true;
        for (std::size_t i = 0; i < T.dim(); ++i)
            for (std::size_t j = 0; j < T.dim(); ++j) commutative = commutative && T.product_vec(i, j) == T.product_vec(j, i);
        rec.check(commutative && center_dim(T) == 2, [] { return "|E| = 1 duplicate is not k x k"; });
    }
    for (std::size_t n = 1; n <= cfg.max_set; ++n) {
        const SetMap id = SetMap::identity(n);
        const Matrix F = setmap_matrix(id);
        // Also the non-normalised candidates: every a in {0,-1}^E.
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            DeterminingElement a{Vec(n)};
            for (std::size_t x = 0; x < n; ++x)
                if ((mask >> x) & 1) a.values[x] = -1;
            const Matrix D = derivation_matrix(id, a);
            if (!check_pair(F, D)) continue;
            rec.check(tau_from_pair(F, D).matrix == flip_map(n, 2).matrix,
                      [&] { return "identity on " + std::to_string(n) + " elements admits a non-trivial interlacing"; });
        }
        rec.check(enumerate_colorations(id).discrete.size() == 1, [&] { return "identity has more than one coloration"; });
    }
}

/// Random invertible integer matrix with entries in [-2, 2].
inline Matrix random_invertible(std::size_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(-2, 2);
    while (true) {
        Matrix P(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) P(i, j) = pick(rng);
        if (rank(P) == d) return P;
    }
}

/// Oracle dimensions are unchanged after rewriting an algebra in a random basis.
inline CriterionResult basis_independence_check(std::uint64_t seed, std::size_t instances, const AcceptanceConfig& cfg) {
    CriterionResult r;
    r.title = "oracle dimensions are independent of the basis";
    detail::Recorder rec(r);
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    const std::vector<Algebra> pool{
        twisted_product(make_duplicate_pair(SetMap({1, 0}), DeterminingElement{{Rational(0), Rational(-1)}})),
        twisted_product(make_duplicate_pair(SetMap({0, 0, 1}), DeterminingElement{{Rational(0), Rational(0), Rational(-1)}})),
        rad_square_zero_algebra(Quiver::from_edges(3, {{0, 1}, {1, 0}, {2, 0}})),
        rad_square_zero_algebra(Quiver::from_edges(2, {{0, 0}, {0, 1}})),
    };
    try {
        for (std::size_t i = 0; i < instances; ++i) {
            const Algebra& A = pool[i % pool.size()];
            const Algebra B = change_basis(A, random_invertible(A.dim(), rng));
            const std::size_t deg = 2;
            rec.check(hochschild_cohomology_oracle(A, deg, cfg.oracle).entries == hochschild_cohomology_oracle(B, deg, cfg.oracle).entries,
                      [&] { return "instance " + std::to_string(i) + ": HH^* changed under a change of basis"; });
            rec.check(hochschild_homology_oracle(A, deg, cfg.oracle).entries == hochschild_homology_oracle(B, deg, cfg.oracle).entries,
                      [&] { return "instance " + std::to_string(i) + ": HH_* changed under a change of basis"; });
            rec.check(cyclic_homology_oracle(A, deg, cfg.oracle).entries == cyclic_homology_oracle(B, deg, cfg.oracle).entries,
                      [&] { return "instance " + std::to_string(i) + ": HC_* changed under a change of basis"; });
        }
    } catch (const std::exception& e) {
        ++r.failure_count;
        r.failures.push_back(std::string("aborted: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = r.failure_count == 0 && r.checks > 0;
    return r;
}

struct CriterionSpec {
    int id;
    const char* title;
    void (*run)(const AcceptanceConfig&, detail::Recorder&);
};

inline const std::vector<CriterionSpec>& acceptance_criteria() {
    static const std::vector<CriterionSpec> all{
        {1, "interlacing correspondence: check_pair <=> coloration <=> braiding", criterion_interlacing_correspondence},
        {2, "coloration census on connected one-valued quivers", criterion_coloration_census},
        {3, "isomorphism theorems: explicit iso and recovered quiver", criterion_isomorphism_theorems},
        {4, "round-trip family: parameters give isomorphic algebras", criterion_round_trip_family},
        {5, "fiber count 2^(components) for loop-free maps", criterion_fiber_count},
        {6, "HH^n formula vs cochain oracle on non-crown quivers", criterion_hh_cohomology},
        {7, "finiteness criteria for HH^*", criterion_finiteness},
        {8, "cyclic homology formulas vs Connes oracle", criterion_cyclic_homology},
        {9, "Hochschild homology formulas vs bar oracle", criterion_hochschild_homology},
        {10, "degenerate cases: |E| = 1 and f = identity", criterion_degenerate_cases},
    };
    return all;
}

inline CriterionResult run_criterion(const CriterionSpec& spec, const AcceptanceConfig& cfg) {
    CriterionResult r;
    r.id = spec.id;
    r.title = spec.title;
    detail::Recorder rec(r);
    const auto start = std::chrono::steady_clock::now();
    try {
        spec.run(cfg, rec);
    } catch (const std::exception& e) {
        ++r.failure_count;
        r.failures.push_back(std::string("aborted: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = r.failure_count == 0 && r.checks > 0;
    return r;
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
    std::vector<CriterionResult> out;
    for (const auto& spec : acceptance_criteria()) out.push_back(run_criterion(spec, cfg));
    return out;
}

} // namespace ncdup

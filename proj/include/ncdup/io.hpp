#pragma once

// JSON and TSV serialization. Rationals are always written as strings "p/q"
// or "p"; plain JSON integers are accepted on input.

#include "ncdup/algebra.hpp"
#include "ncdup/duplicate.hpp"
#include "ncdup/homology_formulas.hpp"
#include "ncdup/interlacing.hpp"
#include "ncdup/quiver.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ncdup {

/// Malformed or inconsistent input file (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

namespace detail {

template <class F>
auto as_input(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(what) + ": " + e.what());
    } catch (const std::out_of_range& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

inline std::size_t index_field(const json& j, const char* key, std::size_t bound) {
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= bound)
        throw InputError(std::string("field '") + key + "' is not an index below " + std::to_string(bound));
    return v.get<std::size_t>();
}

} // namespace detail

inline json rational_to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InputError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

inline json algebra_to_json(const Algebra& A) {
    json unit = json::array();
    for (const auto& u : A.unit()) unit.push_back(rational_to_json(u));
    json sc = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (const auto& t : A.product(i, j)) sc.push_back({{"i", i}, {"j", j}, {"k", t.index}, {"c", rational_to_json(t.coeff)}});
    return {{"dim", A.dim()}, {"basis", A.basis()}, {"unit", unit}, {"sc", sc}};
}

inline Algebra algebra_from_json(const json& j) {
    return detail::as_input("algebra", [&] {
        const std::size_t d = j.at("dim").get<std::size_t>();
        auto basis = j.at("basis").get<std::vector<std::string>>();
        if (basis.size() != d) throw InputError("algebra: basis length differs from dim");
        const json& ju = j.at("unit");
        if (!ju.is_array() || ju.size() != d) throw InputError("algebra: unit length differs from dim");
        Vec unit;
        for (const auto& u : ju) unit.push_back(rational_from_json(u));
        std::vector<Vec> products(d * d, Vec(d));
        for (const auto& e : j.at("sc")) {
            const std::size_t i = detail::index_field(e, "i", d), jj = detail::index_field(e, "j", d),
                              k = detail::index_field(e, "k", d);
            products[i * d + jj][k] += rational_from_json(e.at("c"));
        }
        Algebra A(basis, unit);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t jj = 0; jj < d; ++jj) A.set_product(i, jj, products[i * d + jj]);
        return A;
    });
}

inline json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows) arrows.push_back({{"src", a.src}, {"dst", a.dst}, {"label", a.label}});
    return {{"vertices", q.vertices}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const json& j) {
    return detail::as_input("quiver", [&] {
        Quiver q;
        q.vertices = j.at("vertices").get<std::vector<std::string>>();
        for (const auto& a : j.at("arrows"))
            q.arrows.push_back({detail::index_field(a, "src", q.vertex_count()), detail::index_field(a, "dst", q.vertex_count()),
                                a.at("label").get<std::string>()});
        q.validate();
        return q;
    });
}

inline json setmap_to_json(const SetMap& m) { return {{"n", m.size()}, {"phi", m.values()}}; }

inline SetMap setmap_from_json(const json& j) {
    return detail::as_input("set map", [&] {
        const json& phi = j.at("phi");
        if (!phi.is_array()) throw InputError("set map: 'phi' must be an array");
        std::vector<std::size_t> values;
        for (const auto& v : phi) {
            if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("set map: entries must be non-negative integers");
            values.push_back(v.get<std::size_t>());
        }
        if (j.contains("n") && j.at("n").get<std::size_t>() != values.size())
            throw InputError("set map: 'n' differs from the length of 'phi'");
        if (values.empty()) throw InputError("set map: the set must be non-empty");
        return SetMap(values);
    });
}

inline json coloration_to_json(const DeterminingElement& a) {
    json arr = json::array();
    for (const auto& v : a.values) arr.push_back(rational_to_json(v));
    return {{"a", arr}};
}

/// Entries are rationals, or {"param": true, "component": [u, v], "t": "p/q"} for a
/// round-trip family member a_u = t, a_v = -1 - t (t defaults to 0).
inline DeterminingElement coloration_from_json(const json& j, std::size_t n) {
    return detail::as_input("coloration", [&] {
        const json& arr = j.at("a");
        if (!arr.is_array() || arr.size() != n)
            throw InputError("coloration: 'a' must be an array of length " + std::to_string(n));
        DeterminingElement a{Vec(n)};
        std::vector<bool> fixed(n, false);
        for (std::size_t x = 0; x < n; ++x) {
            const json& e = arr[x];
            if (!e.is_object()) {
                if (!fixed[x]) a.values[x] = rational_from_json(e);
                continue;
            }
            if (!e.value("param", false)) throw InputError("coloration: object entries need \"param\": true");
            auto comp = e.at("component").get<std::vector<std::size_t>>();
            if (comp.size() != 2 || comp[0] >= n || comp[1] >= n || (comp[0] != x && comp[1] != x))
                throw InputError("coloration: bad parametric component at index " + std::to_string(x));
            const Rational t = e.contains("t") ? rational_from_json(e.at("t")) : Rational(0);
            a.values[comp[0]] = t;
            a.values[comp[1]] = Rational(-1) - t;
            fixed[comp[0]] = fixed[comp[1]] = true;
        }
        return a;
    });
}

inline json colorations_to_json(const ColorationSet& cs) {
    json list = json::array();
    for (const auto& a : cs.discrete) list.push_back(coloration_to_json(a));
    json par = json::array();
    for (const auto& c : cs.parametric) par.push_back({{"param", true}, {"component", {c[0], c[1]}}});
    return {{"colorations", list}, {"parametric", par}};
}

inline json dimtable_to_json(const DimTable& t) {
    json cells = json::array();
    for (std::size_t n = 0; n < t.entries.size(); ++n) {
        const auto& c = t.entries[n];
        if (c.has_value())
            cells.push_back({{"degree", n}, {"value", c.value}});
        else
            cells.push_back({{"degree", n}, {"flag", to_string(c)}});
    }
    return {{"entries", cells}, {"total", to_string(t.total)}};
}

inline DimTable dimtable_from_json(const json& j) {
    return detail::as_input("table", [&] {
        DimTable t;
        for (const auto& c : j.at("entries")) {
            if (c.contains("value")) {
                t.entries.push_back(DimCell::of(c.at("value").get<std::uint64_t>()));
                continue;
            }
            const auto flag = c.at("flag").get<std::string>();
            if (flag == "inapplicable-crown") t.entries.push_back(DimCell::crown());
            else if (flag == "skipped") t.entries.push_back(DimCell::skipped());
            else throw InputError("table: unknown flag '" + flag + "'");
        }
        const auto total = j.at("total").get<std::string>();
        t.total = total == "finite" ? TotalKind::finite : total == "infinite-total" ? TotalKind::infinite : TotalKind::unknown;
        return t;
    });
}

inline json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
        json comps = json::array();
        for (const auto& c : e.components) comps.push_back({{"type", c.type}, {"size", c.size}});
        out.push_back({{"canonical_quiver", quiver_to_json(e.canonical_quiver)},
                       {"multiplicity", e.multiplicity},
                       {"components", comps},
                       {"parametric", e.parametric},
                       {"sample", {{"phi", e.sample_phi.values()}, {"a", coloration_to_json(e.sample_a).at("a")}}}});
    }
    return out;
}

} // namespace ncdup

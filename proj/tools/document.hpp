#ifndef LCISR_TOOLS_DOCUMENT_HPP
#define LCISR_TOOLS_DOCUMENT_HPP

// Input documents and report serialization for the command-line front end.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcisr/classify.hpp"
#include "lcisr/local_cohomology.hpp"
#include "lcisr/monomial_ideal.hpp"
#include "lcisr/multiplicity.hpp"
#include "lcisr/simplicial_complex.hpp"

namespace lcisr::cli {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input; `field` names the offending location.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& field, const std::string& what)
        : std::runtime_error(field.empty() ? what : field + ": " + what) {}
};

/// Either a complex {vertices, facets} or an ideal {vars, generators}.
struct InputDocument {
    std::optional<SimplicialComplex> complex;
    std::optional<MonomialIdeal> ideal;

    SimplicialComplex as_complex() const {
        if (complex) return *complex;
        try {
            return complex_from_ideal(*ideal);
        } catch (const Error& e) {
            throw InputError("generators", e.what());
        }
    }

    MonomialIdeal as_ideal() const { return ideal ? *ideal : stanley_reisner_ideal(*complex); }
};

namespace detail {

inline unsigned positive_int(const Json& node, const std::string& field, std::uint64_t max) {
    if (!node.is_number_integer()) throw InputError(field, "expected an integer");
    auto v = node.get<std::int64_t>();
    if (v < 1 || static_cast<std::uint64_t>(v) > max)
        throw InputError(field, "expected an integer in 1.." + std::to_string(max) + ", got " + std::to_string(v));
    return static_cast<unsigned>(v);
}

inline SimplicialComplex parse_complex(const Json& doc) {
    if (!doc.contains("facets")) throw InputError("facets", "missing");
    unsigned n = positive_int(doc["vertices"], "vertices", kMaxVertices);
    const Json& facets = doc["facets"];
    if (!facets.is_array()) throw InputError("facets", "expected an array of vertex lists");
    std::vector<std::vector<unsigned>> lists;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const std::string where = "facets[" + std::to_string(i) + "]";
        if (!facets[i].is_array()) throw InputError(where, "expected an array of vertices");
        std::vector<unsigned> lst;
        for (std::size_t j = 0; j < facets[i].size(); ++j)
            lst.push_back(positive_int(facets[i][j], where + "[" + std::to_string(j) + "]", n));
        lists.push_back(std::move(lst));
    }
    try {
        return SimplicialComplex::from_facets(n, lists);
    } catch (const Error& e) {
        throw InputError("facets", e.what());
    }
}

inline MonomialIdeal parse_ideal(const Json& doc) {
    if (!doc.contains("generators")) throw InputError("generators", "missing");
    unsigned n = positive_int(doc["vars"], "vars", kMaxVertices);
    const Json& gens = doc["generators"];
    if (!gens.is_array()) throw InputError("generators", "expected an array");
    std::vector<Monomial> monomials;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string where = "generators[" + std::to_string(i) + "]";
        const Json& g = gens[i];
        if (g.is_string()) {
            try {
                monomials.push_back(Monomial::parse(g.get<std::string>(), n));
            } catch (const Error& e) {
                throw InputError(where, e.what());
            }
        } else if (g.is_array()) {
            if (g.size() != n) throw InputError(where, "exponent vector must have " + std::to_string(n) + " entries");
            std::vector<std::uint32_t> exps;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (!g[j].is_number_integer() || g[j].get<std::int64_t>() < 0 || g[j].get<std::int64_t>() > 1'000'000)
                    throw InputError(where + "[" + std::to_string(j) + "]", "expected a nonnegative exponent");
                exps.push_back(static_cast<std::uint32_t>(g[j].get<std::int64_t>()));
            }
            monomials.push_back(Monomial(std::move(exps)));
        } else {
            throw InputError(where, "expected a monomial string like \"x1*x3\" or an exponent vector");
        }
        if (monomials.back().degree() == 0) throw InputError(where, "the unit monomial is not allowed");
    }
    return MonomialIdeal(n, std::move(monomials));
}

}  // namespace detail

inline InputDocument parse_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("", std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("", "document must be an object");
    InputDocument out;
    if (doc.contains("vertices")) {
        out.complex = detail::parse_complex(doc);
    } else if (doc.contains("vars")) {
        out.ideal = detail::parse_ideal(doc);
    } else {
        throw InputError("", "expected either {vertices, facets} or {vars, generators}");
    }
    return out;
}

inline Json verdict_json(Verdict v) {
    switch (v) {
        case Verdict::Yes: return true;
        case Verdict::No: return false;
        case Verdict::Unknown: return to_string(v);
    }
    return nullptr;
}

inline Json complex_document(const SimplicialComplex& complex) {
    Json doc;
    doc["vertices"] = complex.n_vertices();
    doc["facets"] = complex.labeled_facets();
    return doc;
}

inline Json classification_json(const SimplicialComplex& complex, const ClassificationReport& r) {
    Json doc;
    doc["command"] = "classify";
    doc["vertices"] = complex.n_vertices();
    doc["dim"] = r.dim;
    doc["connected"] = r.is_connected;
    doc["pure"] = r.is_pure;
    doc["ci"] = r.is_ci;
    doc["lci"] = r.is_lci;
    doc["gci"] = r.is_gci;
    doc["s2"] = r.is_s2;
    doc["cm"] = verdict_json(r.cohen_macaulay);
    doc["buchsbaum"] = verdict_json(r.buchsbaum);
    if (r.witness_vertex) doc["witness_vertex"] = *r.witness_vertex;
    Json comps = Json::array();
    for (const auto& c : r.components) {
        Json item;
        item["kind"] = to_string(c.kind);
        if (c.kind == ComponentKind::Gon || c.kind == ComponentKind::PointedPath) item["m"] = c.size;
        item["vertices"] = c.vertices;
        comps.push_back(std::move(item));
    }
    doc["components"] = std::move(comps);
    if (r.is_ci) doc["ci_blocks"] = is_complete_intersection(stanley_reisner_ideal(complex)).blocks;
    return doc;
}

inline Json power_json(const MonomialIdeal& power, unsigned ell) {
    Json doc;
    doc["command"] = "power";
    doc["vars"] = power.n_vars();
    doc["power"] = ell;
    doc["count"] = power.size();
    Json gens = Json::array();
    for (const auto& m : power.generators()) {
        Json item;
        item["monomial"] = m.to_string();
        item["exponents"] = m.exponents();
        item["degree"] = m.degree();
        gens.push_back(std::move(item));
    }
    doc["generators"] = std::move(gens);
    return doc;
}

inline std::vector<unsigned> face_labels(Face f) {
    std::vector<unsigned> out;
    f.for_each_vertex([&](unsigned v) { out.push_back(v + 1); });
    return out;
}

inline Json cohomology_json(const CohomologyReport& r) {
    Json doc;
    doc["command"] = "cohomology";
    doc["power"] = r.power;
    doc["field"] = r.field.name();
    doc["dim"] = r.dim;
    doc["depth"] = r.depth;
    doc["is_cm"] = r.is_cm;
    Json pieces = Json::array();
    for (const auto& p : r.pieces) {
        Json item;
        item["i"] = p.index;
        item["finite"] = p.finite;
        item["total_dim"] = p.total_dim ? Json(*p.total_dim) : Json(nullptr);
        Json contribs = Json::array();
        for (const auto& c : p.contributions) {
            Json ci;
            ci["degree"] = c.degree.a;
            ci["face"] = face_labels(c.degree.negative_support());
            ci["homology_index"] = c.homology_index;
            ci["dim"] = c.dim;
            contribs.push_back(std::move(ci));
        }
        item["contributions"] = std::move(contribs);
        pieces.push_back(std::move(item));
    }
    doc["pieces"] = std::move(pieces);
    return doc;
}

inline std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

/// Six-decimal rendering for display; verdicts never depend on it.
inline std::string rational_decimal(const Rational& r) {
    BigInt scaled = numerator(r) * 1000000 / denominator(r);
    std::string digits = scaled.str();
    while (digits.size() < 7) digits.insert(digits.begin(), '0');
    return digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
}

inline Json screen_json(const IdealNumerics& num, const std::vector<ScreenRow>& rows) {
    Json doc;
    doc["command"] = "screen";
    doc["e"] = num.e;
    doc["c"] = num.c;
    doc["q"] = num.q ? Json(*num.q) : Json(nullptr);
    doc["max_power"] = rows.size();
    Json items = Json::array();
    Json first = nullptr;
    for (const auto& row : rows) {
        Json item;
        item["power"] = row.power;
        item["bound"] = rational_string(row.bound);
        item["bound_decimal"] = rational_decimal(row.bound);
        item["verdict"] = to_string(row.verdict);
        if (row.verdict == ScreenVerdict::RuledOut && first.is_null()) first = row.power;
        items.push_back(std::move(item));
    }
    doc["rows"] = std::move(items);
    doc["first_ruled_out"] = first;
    return doc;
}

/// Plain-text rendering of any report document: one `key: value` line per scalar,
/// arrays of objects as indented blocks.
inline void write_text(std::ostream& os, const Json& doc, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const Json& v = it.value();
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << pad << it.key() << ":\n";
            for (const auto& item : v) {
                os << pad << "  -\n";
                write_text(os, item, indent + 4);
            }
        } else if (v.is_string()) {
            os << pad << it.key() << ": " << v.get<std::string>() << '\n';
        } else {
            os << pad << it.key() << ": " << v.dump() << '\n';
        }
    }
}

}  // namespace lcisr::cli

#endif

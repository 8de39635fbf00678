/**
 * @file json_io.hpp
 * @brief JSON (de)serialization for every public data type.
 *
 * Schemas:
 *   Rational          "p/q" or "p" (string)
 *   GaussianRational  {"re": "p/q", "im": "p/q"}; integers and bare strings
 *                     are accepted on input as purely real values
 *   TruncSeries       {"cap": m, "coeffs": [scalar...]}
 *   ExactMatrix       {"n": n, "entries": [[scalar...]...]}  (row-major)
 *   DepthReport       {"m_plus_1", "contact_order" ("inf" allowed), "bound",
 *                      "effective_index", "sharp"}
 * Infinite contact orders serialize as the string "inf".
 */
#ifndef NILCALC_JSON_IO_HPP
#define NILCALC_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "nilcalc/depth.hpp"
#include "nilcalc/exceptional.hpp"
#include "nilcalc/gaussian.hpp"
#include "nilcalc/matrix.hpp"
#include "nilcalc/nilpotent.hpp"
#include "nilcalc/rational.hpp"
#include "nilcalc/scan.hpp"
#include "nilcalc/series.hpp"

namespace nilcalc {

using nlohmann::json;

inline void to_json(json& j, const Rational& r) { j = r.str(); }

inline void from_json(const json& j, Rational& r) {
    if (j.is_number_integer()) {
        r = Rational(j.get<long>());
    } else if (j.is_string()) {
        r = Rational::parse(j.get<std::string>());
    } else {
        throw std::invalid_argument("expected a rational as integer or \"p/q\" string, got " +
                                    j.dump());
    }
}

inline void to_json(json& j, const GaussianRational& z) {
    j = json{{"re", z.re().str()}, {"im", z.im().str()}};
}

inline void from_json(const json& j, GaussianRational& z) {
    if (j.is_object()) {
        Rational re, im;
        if (j.contains("re")) from_json(j.at("re"), re);
        if (j.contains("im")) from_json(j.at("im"), im);
        z = GaussianRational(re, im);
        return;
    }
    Rational re;
    from_json(j, re);  // integer or "p/q" string: purely real
    z = GaussianRational(re);
}

}  // namespace nilcalc

// TruncSeries and ExactMatrix have no default constructor (their invariants
// need data), so they plug into nlohmann via adl_serializer.
namespace nlohmann {

template <>
struct adl_serializer<nilcalc::TruncSeries> {
    static void to_json(json& j, const nilcalc::TruncSeries& f) {
        j = json{{"cap", f.cap()}, {"coeffs", f.coeffs()}};
    }
    static nilcalc::TruncSeries from_json(const json& j) {
        return nilcalc::TruncSeries(
            j.at("cap").get<std::size_t>(),
            j.at("coeffs").get<std::vector<nilcalc::GaussianRational>>());
    }
};

template <>
struct adl_serializer<nilcalc::ExactMatrix> {
    static void to_json(json& j, const nilcalc::ExactMatrix& m) {
        std::vector<std::vector<nilcalc::GaussianRational>> rows(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t k = 0; k < m.dim(); ++k) rows[i].push_back(m.at(i, k));
        j = json{{"n", m.dim()}, {"entries", rows}};
    }
    static nilcalc::ExactMatrix from_json(const json& j) {
        const auto n = j.at("n").get<std::size_t>();
        const auto rows = j.at("entries").get<std::vector<std::vector<nilcalc::GaussianRational>>>();
        if (rows.size() != n)
            throw std::invalid_argument("matrix declares n = " + std::to_string(n) + " but has " +
                                        std::to_string(rows.size()) + " rows");
        return nilcalc::ExactMatrix::from_rows(rows);
    }
};

}  // namespace nlohmann

namespace nilcalc {

/// Orders and pole orders: kInfiniteOrder maps to the string "inf".
inline json order_to_json(std::size_t r) {
    if (r == kInfiniteOrder) return json("inf");
    return json(r);
}

inline std::size_t order_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInfiniteOrder;
        throw std::invalid_argument("expected an order or \"inf\", got " + j.dump());
    }
    return j.get<std::size_t>();
}

inline void to_json(json& j, const DepthReport& rep) {
    j = json{{"m_plus_1", rep.m_plus_1},
             {"contact_order", order_to_json(rep.contact_order)},
             {"bound", rep.bound},
             {"effective_index", rep.effective_index},
             {"sharp", rep.sharp}};
}

inline void from_json(const json& j, DepthReport& rep) {
    rep.m_plus_1 = j.at("m_plus_1").get<std::size_t>();
    rep.contact_order = order_from_json(j.at("contact_order"));
    rep.bound = j.at("bound").get<std::size_t>();
    rep.effective_index = j.at("effective_index").get<std::size_t>();
    rep.sharp = j.at("sharp").get<bool>();
}

inline void to_json(json& j, const TerminationClassification& tc) {
    j = json{{"mechanism", to_string(tc.mechanism)},
             {"nilpotent_cutoff", tc.nilpotent_cutoff},
             {"effective_cutoff", tc.effective_cutoff}};
    j["parameter_cutoff"] = tc.parameter_cutoff ? json(*tc.parameter_cutoff) : json(nullptr);
}

inline void to_json(json& j, const CompositionBound& cb) {
    j = json{{"mu_plus_1", cb.mu_plus_1},
             {"coarse_bound", cb.coarse_bound},
             {"refined_bound", cb.refined_bound},
             {"effective", cb.effective}};
}

inline void to_json(json& j, const SpectralSummary& s) {
    j = json{{"spectrum_point", s.spectrum_point},
             {"trace", s.trace},
             {"determinant", s.determinant},
             {"multiplicity", s.multiplicity}};
}

/// Exceptional point summary (the nilpotent part is reproducible as
/// H - lambda I, so only the headline data is serialized).
inline void to_json(json& j, const ExceptionalPoint& ep) {
    j = json{{"lambda", ep.lambda}, {"order", ep.order}, {"dimension", ep.dimension}};
}

inline void to_json(json& j, const EvolutionPolynomial& evo) {
    j = json{{"lambda", evo.lambda}, {"coeffs", evo.matrix_coeffs}};
}

inline void to_json(json& j, const LaurentExpansion& lau) {
    j = json{{"lambda", lau.lambda}, {"pole_order", lau.pole_order}, {"coeffs", lau.coeffs}};
}

inline void to_json(json& j, const ScalarLaurent& lau) {
    j = json{{"lambda", lau.lambda}, {"pole_order", lau.pole_order}, {"coeffs", lau.coeffs}};
}

inline void to_json(json& j, const ModifiedResolvent& mr) {
    j = json{{"traced", mr.traced},
             {"matrix_valued", mr.matrix_valued},
             {"traced_pole_order", mr.traced_pole_order},
             {"matrix_pole_order", mr.matrix_pole_order}};
}

inline void to_json(json& j, const EPReport& rep) {
    j = json{{"ep", rep.ep},
             {"contact_order", order_to_json(rep.contact_order)},
             {"depth_before", rep.depth_before},
             {"depth_bound_after", rep.depth_bound_after},
             {"depth_effective_after", rep.depth_effective_after},
             {"annihilated", rep.annihilated},
             {"traced_pole_order", rep.traced_pole_order},
             {"matrix_pole_order", rep.matrix_pole_order},
             {"pole_order_bound", rep.pole_order_bound}};
}

inline void to_json(json& j, const ScanRecord& rec) {
    j = json{{"n", rec.n},
             {"r", rec.r},
             {"trial", rec.trial},
             {"blocks", rec.block_sizes},
             {"coeffs_hash", rec.coeffs_hash},
             {"bound", rec.bound},
             {"effective", rec.effective},
             {"sharp", rec.sharp}};
}

inline void to_json(json& j, const ScanSummaryRow& row) {
    j = json{{"summary", true},
             {"n", row.n},
             {"r", row.r},
             {"blocks", row.mixed_blocks ? "mixed" : "single"},
             {"trials", row.trials},
             {"sharp_count", row.sharp_count}};
}

}  // namespace nilcalc

#endif

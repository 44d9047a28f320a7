#include "circleroots/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace circleroots::io {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Json complex_pair(Coeff c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Coeff parse_complex(std::string_view text, std::size_t offset) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && is_space(text[i]))
            ++i;
    };

    double re = 0.0, im = 0.0;
    bool have_re = false, have_im = false;
    int terms = 0;
    skip();
    if (i == text.size())
        throw ParseError("empty coefficient", offset + i);

    while (i < text.size()) {
        const std::size_t term_start = i;
        double sign = 1.0;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1.0 : 1.0;
            ++i;
            skip();
        } else if (terms > 0) {
            throw ParseError("expected '+' or '-' between real and imaginary parts", offset + i);
        }

        double value = 1.0;
        bool have_number = false;
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
            const auto res = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (res.ec != std::errc{})
                throw ParseError("malformed number", offset + i);
            i = static_cast<std::size_t>(res.ptr - text.data());
            have_number = true;
        }
        skip();
        const bool imaginary = i < text.size() && (text[i] == 'i' || text[i] == 'I');
        if (imaginary)
            ++i;
        else if (!have_number)
            throw ParseError("expected a number or 'i'", offset + term_start);
        skip();

        if (imaginary) {
            if (have_im)
                throw ParseError("duplicate imaginary part", offset + term_start);
            have_im = true;
            im = sign * value;
        } else {
            if (have_re || have_im)
                throw ParseError("real part must precede the imaginary part", offset + term_start);
            have_re = true;
            re = sign * value;
        }
        ++terms;
        if (terms > 2)
            throw ParseError("too many terms", offset + term_start);
    }
    if (!std::isfinite(re) || !std::isfinite(im))
        throw ParseError("non-finite coefficient", offset);
    return {re, im};
}

Polynomial parse_coefficients(std::string_view text) {
    std::vector<Coeff> coeffs;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        coeffs.push_back(parse_complex(text.substr(start, end - start), start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw InvalidArgument("polynomial JSON needs an array field \"coeffs\"");
    const auto& arr = j.at("coeffs");
    if (arr.empty())
        throw InvalidArgument("\"coeffs\" is empty");
    std::vector<Coeff> coeffs;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const auto& e = arr[k];
        if (e.is_number()) {
            coeffs.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw InvalidArgument("coeffs[" + std::to_string(k) + "] must be [re, im]");
        }
    }
    return Polynomial(std::move(coeffs));
}

Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(complex_pair(c));
    return Json{{"coeffs", arr}};
}

Json to_json(const InversiveReport& r) {
    return Json{{"self_inversive", r.is_self_inversive},
                {"omega", r.omega ? complex_pair(*r.omega) : Json(nullptr)},
                {"self_reciprocal", r.is_self_reciprocal},
                {"max_residual", r.max_residual}};
}

Json to_json(const RootCountPrediction& p) {
    Json j{{"kind", std::string(to_string(p.kind))},
           {"count", p.count},
           {"l", p.l},
           {"simple", p.simple},
           {"margin", p.margin},
           {"criterion", std::string(to_string(p.criterion))},
           {"lhs", p.lhs},
           {"rhs", p.rhs}};
    if (p.criterion == Criterion::Salem)
        j["salem_candidate"] = p.salem_candidate;
    return j;
}

Json to_json(const Localization& loc) {
    Json arr = Json::array();
    for (const auto& iv : loc.intervals)
        arr.push_back(Json{{"t_lo", iv.t_lo}, {"t_hi", iv.t_hi}, {"sign_lo", iv.sign_lo}, {"sign_hi", iv.sign_hi}});
    return arr;
}

Json to_json(const RootClassification& cls) {
    Json roots = Json::array();
    for (const auto& r : cls.roots)
        roots.push_back(Json{{"re", r.value.real()},
                             {"im", r.value.imag()},
                             {"mult", r.multiplicity},
                             {"band", std::string(to_string(r.band))}});
    return Json{{"roots", roots},
                {"counts", Json{{"inside", cls.counts.inside}, {"on", cls.counts.on}, {"outside", cls.counts.outside}}},
                {"residual", cls.residual}};
}

Json to_json(const Verification& v) {
    Json clauses = Json::array();
    for (const auto& c : v.clauses)
        clauses.push_back(Json{{"clause", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
    return Json{{"verdict", std::string(to_string(v.overall))}, {"clauses", clauses}};
}

Json to_json(const SalemReport& r) {
    return Json{{"salem", r.is_salem},
                {"salem_number", r.salem_number ? Json(*r.salem_number) : Json(nullptr)},
                {"reasons", r.reasons},
                {"inconclusive", r.inconclusive},
                {"leading_coefficient", r.leading_coefficient}};
}

Json to_json(const BetheSpec& spec) {
    Json j{{"n", spec.n}, {"a", spec.a}, {"delta", spec.delta}};
    if (spec.omega_override)
        j["omega"] = complex_pair(*spec.omega_override);
    return j;
}

Json to_json(const BetheRegimeReport& r) {
    Json j{{"regime", std::string(to_string(r.regime))},
           {"threshold_lo", r.threshold_lo},
           {"threshold_hi", r.threshold_hi},
           {"off_pair", nullptr}};
    if (r.off_pair) {
        j["off_pair"] = Json::array({complex_pair(r.off_pair->first), complex_pair(r.off_pair->second)});
        j["pair_product_error"] = r.pair_product_error;
    }
    if (r.classification)
        j["classification"] = to_json(*r.classification);
    return j;
}

BetheSpec bethe_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("a") || !j.contains("delta"))
        throw InvalidArgument("Bethe spec JSON needs \"n\", \"a\" and \"delta\"");
    if (!j.at("n").is_number_integer() || !j.at("a").is_number_integer() || !j.at("delta").is_number())
        throw InvalidArgument("Bethe spec JSON: n and a must be integers, delta a number");
    BetheSpec spec{j.at("n").get<int>(), j.at("a").get<int>(), j.at("delta").get<double>(), std::nullopt};
    if (j.contains("omega")) {
        const auto& w = j.at("omega");
        if (!w.is_array() || w.size() != 2)
            throw InvalidArgument("Bethe spec JSON: omega must be [re, im]");
        spec.omega_override = Coeff{w[0].get<double>(), w[1].get<double>()};
    }
    return spec;
}

std::string roots_csv(const RootClassification& cls) {
    std::ostringstream out;
    out << "re,im,band\n";
    for (const auto& r : cls.roots)
        for (int k = 0; k < r.multiplicity; ++k)
            out << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ',' << to_string(r.band)
                << '\n';
    return out.str();
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::ostringstream out;
    out << "delta,regime,inside,on,outside,simple,min_root_gap\n";
    for (const auto& row : rows) {
        out << format_double(row.delta) << ',' << to_string(row.regime) << ',';
        if (row.ok)
            out << row.counts.inside << ',' << row.counts.on << ',' << row.counts.outside << ','
                << (row.simple ? "true" : "false") << ',' << format_double(row.min_root_gap) << '\n';
        else
            out << "NA,NA,NA,NA,NA\n";
    }
    return out.str();
}

}  // namespace circleroots::io

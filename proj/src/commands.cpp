#include "ringdim/commands.hpp"

#include "ringdim/errors.hpp"
#include "ringdim/hilbert.hpp"

#include <ostream>
#include <sstream>

namespace ringdim {

namespace {

long long to_json_int(const mpz_class& v) {
    if (!v.fits_slong_p())
        throw input_error("value exceeds the JSON integer range");
    return static_cast<long long>(v.get_si());
}

nlohmann::ordered_json names_of(const VariableSubset& s, const VariableSet& vars) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int v : s.indices())
        arr.push_back(vars.name(v));
    return arr;
}

std::string poly_in_t(const std::vector<mpz_class>& coeffs) {
    if (coeffs.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const mpz_class& c = coeffs[i];
        if (c == 0)
            continue;
        bool negative = c < 0;
        mpz_class mag = negative ? mpz_class(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (i == 0)
            out += mag.get_str();
        else {
            out += (mag == 1) ? "" : mag.get_str() + "*";
            out += "t";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

void check_proper_ideal(const GroebnerBasis& basis) {
    for (const Polynomial& g : basis.elements) {
        Term t = g.leading_term(basis.order);
        if (t.mono.is_one() && basis.domain.is_unit(t.coeff))
            throw input_error("unit ideal: the residue ring is zero");
    }
}

void require_free(const GroebnerBasis& basis) {
    check_proper_ideal(basis);
    if (!basis.monic)
        throw not_free_error(not_free_description(basis));
}

void put_hilbert_fields(nlohmann::ordered_json& j, const GroebnerBasis& basis, int terms) {
    HilbertSeries series = hilbert_series(MonomialIdeal::leading_term_ideal(basis));
    HilbertPolynomial p = hilbert_polynomial(series);

    nlohmann::ordered_json num = nlohmann::ordered_json::array();
    for (const mpz_class& a : series.numerator)
        num.push_back(to_json_int(a));
    j["numerator"] = num;
    j["n"] = series.nvars;

    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const mpz_class& h : series_coefficients(series, terms))
        coeffs.push_back(to_json_int(h));
    j["coefficients"] = coeffs;

    j["polynomial"] = p.str("x");
    j["degree"] = p.degree();

    auto [display_num, display_pow] = series.cancelled();
    j["display_numerator"] = poly_in_t(display_num);
    j["display_denominator_power"] = display_pow;
}

} // namespace

nlohmann::ordered_json run_command(const std::string& command, const ProblemSpec& spec,
                                   const RunOptions& options) {
    if (options.terms < 1)
        throw input_error("--terms must be at least 1");
    if (command != "gb" && command != "check-free" && command != "cdim" && command != "hilbert" &&
        command != "kdim" && command != "reduce")
        throw input_error("unknown command '" + command + "'");

    GroebnerBasis basis = strong_groebner(spec.generators, spec.order);

    nlohmann::ordered_json j;
    j["command"] = command;
    j["ring"] = spec.ring.name();
    nlohmann::ordered_json varnames = nlohmann::ordered_json::array();
    for (const std::string& n : spec.vars.names())
        varnames.push_back(n);
    j["vars"] = varnames;
    j["order"] = spec.order.name();
    nlohmann::ordered_json ideal = nlohmann::ordered_json::array();
    for (const Polynomial& g : spec.generators)
        ideal.push_back(g.str(spec.vars, spec.order));
    j["ideal"] = ideal;

    nlohmann::ordered_json basis_arr = nlohmann::ordered_json::array();
    for (const Polynomial& g : basis.elements)
        basis_arr.push_back(g.str(spec.vars, spec.order));
    j["basis"] = basis_arr;

    if (command == "gb") {
        j["reduced"] = basis.reduced;
        j["monic"] = basis.monic;
    } else if (command == "check-free") {
        j["reduced"] = basis.reduced;
        j["monic"] = basis.monic;
        FreenessReport rep = is_free_representation(basis);
        j["is_free"] = rep.is_free;
        if (rep.witness) {
            nlohmann::ordered_json w;
            w["monomial"] = rep.witness->monomial.str(spec.vars);
            nlohmann::ordered_json gens = nlohmann::ordered_json::array();
            for (const Coefficient& c : rep.witness->generators)
                gens.push_back(c.str());
            w["generators"] = gens;
            w["gcd"] = rep.witness->gcd.str();
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
    } else if (command == "cdim") {
        require_free(basis);
        DimensionReport rep = analyze_dimension(basis, options.scan);
        j["cdim"] = rep.cdim;
        nlohmann::ordered_json sets = nlohmann::ordered_json::array();
        for (const VariableSubset& s : rep.maximal_sets)
            sets.push_back(names_of(s, spec.vars));
        j["maximal_sets"] = sets;
        j["lbs"] = names_of(rep.lbs, spec.vars);
    } else if (command == "kdim") {
        if (spec.order.kind() == OrderKind::Lex) {
            int kdim = krull_dimension_lex(basis);
            DimensionReport rep = analyze_dimension(basis, options.scan);
            j["cdim"] = rep.cdim;
            nlohmann::ordered_json sets = nlohmann::ordered_json::array();
            for (const VariableSubset& s : rep.maximal_sets)
                sets.push_back(names_of(s, spec.vars));
            j["maximal_sets"] = sets;
            j["lbs"] = names_of(rep.lbs, spec.vars);
            j["kdim"] = kdim;
        } else {
            int kdim = krull_dimension_degcompat(basis);
            put_hilbert_fields(j, basis, options.terms);
            j["kdim"] = kdim;
        }
    } else if (command == "hilbert") {
        if (!spec.order.degree_compatible())
            throw input_error("hilbert requires a degree compatible order (deglex or degrevlex)");
        require_free(basis);
        put_hilbert_fields(j, basis, options.terms);
    } else if (command == "reduce") {
        if (options.poly.empty())
            throw input_error("reduce needs --poly with the polynomial to normalize");
        Polynomial f = parse_polynomial(options.poly, spec.vars, spec.ring);
        Polynomial r = reduce(f, basis.elements, spec.order);
        j["poly"] = f.str(spec.vars, spec.order);
        j["normal_form"] = r.str(spec.vars, spec.order);
    }

    j["warnings"] = nlohmann::ordered_json::array();
    return j;
}

std::string render_text(const nlohmann::ordered_json& report) {
    std::ostringstream out;
    out << "command: " << report["command"].get<std::string>() << "\n";
    out << "ring: " << report["ring"].get<std::string>() << "\n";
    out << "vars:";
    for (const auto& v : report["vars"])
        out << " " << v.get<std::string>();
    out << "\n";
    out << "order: " << report["order"].get<std::string>() << "\n";
    out << "ideal:\n";
    for (const auto& g : report["ideal"])
        out << "  " << g.get<std::string>() << "\n";
    if (report.contains("basis")) {
        out << "basis:\n";
        for (const auto& g : report["basis"])
            out << "  " << g.get<std::string>() << "\n";
    }
    if (report.contains("reduced"))
        out << "reduced: " << (report["reduced"].get<bool>() ? "yes" : "no") << "\n";
    if (report.contains("monic"))
        out << "monic: " << (report["monic"].get<bool>() ? "yes" : "no") << "\n";
    if (report.contains("is_free")) {
        out << "free: " << (report["is_free"].get<bool>() ? "yes" : "no") << "\n";
        if (!report["witness"].is_null()) {
            const auto& w = report["witness"];
            out << "witness monomial: " << w["monomial"].get<std::string>() << "\n";
            out << "witness leading coefficients:";
            for (const auto& c : w["generators"])
                out << " " << c.get<std::string>();
            out << "\n";
            out << "witness gcd: " << w["gcd"].get<std::string>() << "\n";
        }
    }
    if (report.contains("cdim"))
        out << "cdim: " << report["cdim"].get<int>() << "\n";
    if (report.contains("maximal_sets")) {
        out << "maximal independent sets:\n";
        for (const auto& s : report["maximal_sets"]) {
            out << "  {";
            bool first = true;
            for (const auto& v : s) {
                if (!first)
                    out << ", ";
                out << v.get<std::string>();
                first = false;
            }
            out << "}\n";
        }
    }
    if (report.contains("lbs")) {
        out << "left basic set: {";
        bool first = true;
        for (const auto& v : report["lbs"]) {
            if (!first)
                out << ", ";
            out << v.get<std::string>();
            first = false;
        }
        out << "}\n";
    }
    if (report.contains("numerator")) {
        out << "numerator: [";
        bool first = true;
        for (const auto& a : report["numerator"]) {
            if (!first)
                out << ", ";
            out << a.get<long long>();
            first = false;
        }
        out << "]\n";
        out << "series: (" << report["display_numerator"].get<std::string>() << ") / (1 - t)^"
            << report["display_denominator_power"].get<int>() << "\n";
        out << "coefficients:";
        for (const auto& h : report["coefficients"])
            out << " " << h.get<long long>();
        out << "\n";
        out << "polynomial: " << report["polynomial"].get<std::string>() << "\n";
        out << "degree: " << report["degree"].get<int>() << "\n";
    }
    if (report.contains("kdim"))
        out << "kdim: " << report["kdim"].get<int>() << "\n";
    if (report.contains("poly")) {
        out << "poly: " << report["poly"].get<std::string>() << "\n";
        out << "normal form: " << report["normal_form"].get<std::string>() << "\n";
    }
    return out.str();
}

int execute(const std::string& command, const ProblemSpec& spec, const RunOptions& options,
            std::ostream& out, std::ostream& err) {
    try {
        if (options.format != "json" && options.format != "text")
            throw input_error("unknown format '" + options.format + "' (expected text or json)");
        nlohmann::ordered_json report = run_command(command, spec, options);
        if (options.format == "json")
            out << report.dump(2) << "\n";
        else
            out << render_text(report);
        return 0;
    } catch (const not_free_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ringdim

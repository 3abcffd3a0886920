#include "perichar/serialize.hpp"

#include <regex>
#include <sstream>

namespace perichar {

namespace {

mpz_class parse_coefficient(const nlohmann::json& j, std::size_t index) {
    if (!j.is_string())
        throw DomainError("parse error: coefficient of term " + std::to_string(index) +
                          " must be a decimal string");
    const std::string s = j.get<std::string>();
    // canonical decimal only (no leading zeros, no "-0"), so that
    // serialize/deserialize is a bijection on canonical forms
    static const std::regex decimal(R"(^-?(0|[1-9][0-9]*)$)");
    if (!std::regex_match(s, decimal) || s == "-0")
        throw DomainError("parse error: bad coefficient \"" + s + "\" in term " + std::to_string(index));
    mpz_class c(s, 10);
    if (c == 0)
        throw DomainError("parse error: zero coefficient in term " + std::to_string(index) +
                          " (canonical form stores no zeros)");
    return c;
}

std::int64_t get_int64(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer())
        throw DomainError(std::string("parse error: ") + what + " must be an integer");
    return j.get<std::int64_t>();
}

} // namespace

nlohmann::ordered_json poly_to_json(const LaurentPolynomial& f) {
    nlohmann::ordered_json j;
    j["nvars"] = f.nvars();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : f.terms()) // std::map iterates in lex order
        terms.push_back({e, c.get_str()});
    j["terms"] = std::move(terms);
    return j;
}

LaurentPolynomial poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        throw DomainError("parse error: expected object with \"nvars\" and \"terms\"");
    const std::int64_t nvars = get_int64(j["nvars"], "nvars");
    if (nvars < 0) throw DomainError("parse error: nvars must be nonnegative");
    if (!j["terms"].is_array()) throw DomainError("parse error: terms must be an array");

    LaurentPolynomial f(static_cast<int>(nvars));
    Exponents previous;
    bool first = true;
    std::size_t index = 0;
    for (const auto& term : j["terms"]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_array())
            throw DomainError("parse error: term " + std::to_string(index) +
                              " must be [[e1,...,en], \"coef\"]");
        Exponents e;
        e.reserve(term[0].size());
        for (const auto& x : term[0]) e.push_back(get_int64(x, "exponent"));
        if (static_cast<std::int64_t>(e.size()) != nvars)
            throw DomainError("parse error: exponent length mismatch in term " + std::to_string(index));
        if (!first && !(previous < e))
            throw DomainError("parse error: terms not in strictly increasing lexicographic order at term " +
                              std::to_string(index));
        f.add_term(e, parse_coefficient(term[1], index));
        previous = std::move(e);
        first = false;
        ++index;
    }
    return f;
}

std::string poly_to_string(const LaurentPolynomial& f) { return poly_to_json(f).dump(); }

LaurentPolynomial poly_from_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("parse error: ") + e.what());
    }
    return poly_from_json(j);
}

std::string poly_to_text(const LaurentPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const mpz_class mag = abs(c);
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(v + 1);
            if (e[v] != 1) mono += "^" + std::to_string(e[v]);
        }
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        if (mono.empty())
            out << mag.get_str();
        else {
            if (mag != 1) out << mag.get_str() << "*";
            out << mono;
        }
        first = false;
    }
    return out.str();
}

nlohmann::ordered_json combo_to_json(const ThinKacCombination& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [lambda, coef] : c.coeffs) {
        if (!coef.fits_slong_p())
            throw DomainError("thin Kac coefficient exceeds the JSON integer range");
        terms.push_back({lambda, static_cast<std::int64_t>(coef.get_si())});
    }
    j["terms"] = std::move(terms);
    return j;
}

ThinKacCombination combo_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw DomainError("parse error: expected object with \"n\" and \"terms\"");
    ThinKacCombination c;
    c.n = static_cast<int>(get_int64(j["n"], "n"));
    if (c.n < 0) throw DomainError("parse error: n must be nonnegative");
    std::size_t index = 0;
    for (const auto& term : j["terms"]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_array())
            throw DomainError("parse error: term " + std::to_string(index) +
                              " must be [[l1,...,ln], coeff]");
        Weight lambda;
        for (const auto& x : term[0]) lambda.push_back(get_int64(x, "weight entry"));
        if (static_cast<int>(lambda.size()) != c.n)
            throw DomainError("parse error: weight length mismatch in term " + std::to_string(index));
        c.add(lambda, get_int64(term[1], "coefficient"));
        ++index;
    }
    return c;
}

std::string combo_to_text(const ThinKacCombination& c) {
    if (c.coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, coef] : c.coeffs) {
        if (!first) out << "\n";
        out << "(" << format_csv_integers(lambda) << "): " << coef.get_str();
        first = false;
    }
    return out.str();
}

nlohmann::ordered_json probe_to_json(const ProbeReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["k"] = report.k;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["a"] = row.a;
        r["ds_value"] = poly_to_json(row.ds_value.poly());
        r["equals_plus"] = row.equals_plus;
        r["equals_minus"] = row.equals_minus;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string probe_to_text(const ProbeReport& report) {
    std::ostringstream out;
    out << "probe n=" << report.n << " k=" << report.k << "\n";
    for (const auto& row : report.rows) {
        out << "a=" << row.a << "  ds=" << poly_to_text(row.ds_value.poly())
            << "  plus=" << (row.equals_plus ? "true" : "false")
            << "  minus=" << (row.equals_minus ? "true" : "false") << "\n";
    }
    return out.str();
}

std::vector<std::int64_t> parse_csv_integers(const std::string& text) {
    std::vector<std::int64_t> values;
    if (text.empty()) return values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        static const std::regex integer(R"(^\s*-?[0-9]+\s*$)");
        if (!std::regex_match(item, integer))
            throw DomainError("parse error: bad integer \"" + item + "\" in list \"" + text + "\"");
        values.push_back(std::stoll(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

std::string format_csv_integers(const std::vector<std::int64_t>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ",";
        out << values[i];
    }
    return out.str();
}

} // namespace perichar

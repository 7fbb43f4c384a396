#include "apolab/form_io.hpp"

#include "apolab/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace apolab {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::ParseError, path + ": " + what);
}

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void require_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) schema_error(path, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) schema_error(path, "unknown key '" + key + "'");
    }
    for (const char* a : allowed) {
        if (!obj.contains(a)) schema_error(path, "missing key '" + std::string(a) + "'");
    }
}

u64 unsigned_field(const json& obj, const char* key, const std::string& path) {
    const json& v = obj.at(key);
    if (!v.is_number_unsigned()) schema_error(path + "." + key, "expected a non-negative integer");
    return v.get<u64>();
}

Form parse_terms(const json& terms, std::size_t num_vars, unsigned degree, const PrimeField& field,
                 const std::string& path) {
    if (!terms.is_array()) schema_error(path, "expected an array of terms");
    Form form(num_vars, degree);
    std::set<std::vector<unsigned>> seen;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string here = path + "[" + std::to_string(k) + "]";
        const json& term = terms[k];
        require_keys(term, here, {"exp", "coeff"});
        const json& exp = term.at("exp");
        if (!exp.is_array() || exp.size() != num_vars) {
            schema_error(here + ".exp", "expected " + std::to_string(num_vars) + " exponents");
        }
        std::vector<unsigned> e;
        unsigned total = 0;
        for (const json& x : exp) {
            if (!x.is_number_unsigned()) schema_error(here + ".exp", "exponents must be non-negative integers");
            e.push_back(x.get<unsigned>());
            total += e.back();
        }
        if (total != degree) {
            schema_error(here + ".exp", "exponents sum to " + std::to_string(total) + ", form degree is " +
                                            std::to_string(degree));
        }
        if (!seen.insert(e).second) schema_error(here + ".exp", "duplicate exponent vector");
        const u64 coeff = unsigned_field(term, "coeff", here);
        if (coeff >= field.prime()) schema_error(here + ".coeff", "coefficient not in [0, prime)");
        form.set_coefficient(Monomial(std::move(e)), FieldElem{coeff});
    }
    return form;
}

json parse_strict(std::string_view text) {
    // nlohmann keeps the last of repeated keys; reject them instead.
    std::vector<std::set<std::string>> open_objects;
    std::string duplicate;
    json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
        case json::parse_event_t::object_start: open_objects.emplace_back(); break;
        case json::parse_event_t::object_end: open_objects.pop_back(); break;
        case json::parse_event_t::key:
            if (!open_objects.back().insert(parsed.get<std::string>()).second && duplicate.empty()) {
                duplicate = parsed.get<std::string>();
            }
            break;
        default: break;
        }
        return true;
    };
    json doc;
    try {
        doc = json::parse(text.begin(), text.end(), cb);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, line_col(text, e.byte) + ": " + e.what());
    }
    if (!duplicate.empty()) throw Error(ErrorCode::ParseError, "repeated key '" + duplicate + "'");
    return doc;
}

} // namespace

nlohmann::ordered_json form_to_json(const Form& form, u64 prime) {
    nlohmann::ordered_json doc;
    doc["num_vars"] = form.num_vars();
    doc["degree"] = form.degree();
    doc["prime"] = prime;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : form.terms()) {
        nlohmann::ordered_json t;
        t["exp"] = m.exponents();
        t["coeff"] = c.value;
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

nlohmann::ordered_json presentation_to_json(const LevelPresentation& p, u64 prime) {
    nlohmann::ordered_json doc;
    doc["num_vars"] = p.num_vars;
    doc["degree"] = p.socle_degree;
    doc["prime"] = prime;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const Form& g : p.generators) {
        nlohmann::ordered_json entry;
        entry["terms"] = form_to_json(g, prime)["terms"];
        gens.push_back(std::move(entry));
    }
    doc["generators"] = std::move(gens);
    return doc;
}

PresentationDocument parse_presentation(std::string_view text) {
    const json doc = parse_strict(text);
    if (!doc.is_object()) schema_error("$", "expected an object");
    const bool single = doc.contains("terms");
    if (single) {
        require_keys(doc, "$", {"num_vars", "degree", "prime", "terms"});
    } else {
        require_keys(doc, "$", {"num_vars", "degree", "prime", "generators"});
    }
    const u64 num_vars = unsigned_field(doc, "num_vars", "$");
    const u64 degree = unsigned_field(doc, "degree", "$");
    const u64 prime = unsigned_field(doc, "prime", "$");
    if (num_vars == 0) schema_error("$.num_vars", "at least one variable is required");
    if (!is_prime(prime)) schema_error("$.prime", std::to_string(prime) + " is not prime");
    const PrimeField field(prime);

    PresentationDocument out;
    out.prime = prime;
    out.presentation.num_vars = num_vars;
    out.presentation.socle_degree = static_cast<unsigned>(degree);
    if (single) {
        out.presentation.generators.push_back(parse_terms(doc.at("terms"), num_vars, degree, field, "$.terms"));
        return out;
    }
    const json& gens = doc.at("generators");
    if (!gens.is_array() || gens.empty()) schema_error("$.generators", "expected a non-empty array");
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::string here = "$.generators[" + std::to_string(j) + "]";
        require_keys(gens[j], here, {"terms"});
        out.presentation.generators.push_back(parse_terms(gens[j].at("terms"), num_vars, degree, field, here + ".terms"));
    }
    return out;
}

PresentationDocument read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

} // namespace apolab

#include "swlink/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace swlink {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("polynomial JSON: " + what);
}

Int parse_coefficient(const std::string& text) {
    if (text.empty()) fail("empty coefficient string");
    try {
        return Int(text);
    } catch (const std::exception&) {
        fail("malformed coefficient '" + text + "'");
    }
}

}  // namespace

std::string to_canonical_json(const LaurentPolynomial& p) {
    ordered_json j;
    j["vars"] = p.variables();
    auto terms = ordered_json::array();
    for (const auto& [exp, coeff] : p.terms()) {
        ordered_json term;
        term["exp"] = exp;
        term["coeff"] = coeff.str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

LaurentPolynomial polynomial_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("parse error: ") + e.what());
    }
    if (!j.is_object()) fail("expected a JSON object");
    if (!j.contains("vars") || !j["vars"].is_array()) fail("missing \"vars\" array");
    if (!j.contains("terms") || !j["terms"].is_array()) fail("missing \"terms\" array");

    std::vector<std::string> vars;
    for (const auto& v : j["vars"]) {
        if (!v.is_string()) fail("\"vars\" entries must be strings");
        vars.push_back(v.get<std::string>());
    }
    LaurentPolynomial p(std::move(vars));
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("coeff"))
            fail("each term needs \"exp\" and \"coeff\"");
        const auto& exp_json = term["exp"];
        if (!exp_json.is_array()) fail("\"exp\" must be an array");
        ExponentVector exp;
        for (const auto& e : exp_json) {
            if (!e.is_number_integer()) fail("\"exp\" entries must be integers");
            exp.push_back(e.get<int>());
        }
        if (exp.size() != p.variables().size())
            fail("exponent arity " + std::to_string(exp.size()) + " does not match " +
                 std::to_string(p.variables().size()) + " variables");
        if (!term["coeff"].is_string()) fail("\"coeff\" must be a decimal string");
        p.add_term(exp, parse_coefficient(term["coeff"].get<std::string>()));
    }
    return p;
}

LaurentPolynomial load_polynomial(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return polynomial_from_json(buffer.str());
}

std::string to_json(const BraidWord& word) {
    ordered_json j;
    j["strands"] = word.strands();
    auto letters = ordered_json::array();
    for (const auto& letter : word.letters())
        letters.push_back(ordered_json::array({letter.index, letter.sign}));
    j["letters"] = std::move(letters);
    return j.dump();
}

BraidWord braid_word_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("braid JSON: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("strands") || !j["strands"].is_number_integer() ||
        !j.contains("letters") || !j["letters"].is_array())
        throw std::runtime_error("braid JSON: expected {\"strands\": q, \"letters\": [[i, sign], ...]}");
    std::vector<BraidLetter> letters;
    for (const auto& pair : j["letters"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw std::runtime_error("braid JSON: each letter must be [index, sign]");
        letters.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return BraidWord(j["strands"].get<int>(), std::move(letters));
}

}  // namespace swlink

#include "talex/io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace talex {

LaurentPoly parse_poly(const std::string& text, int vars) {
    struct Term {
        Int coeff = 1;
        std::map<int, long> exps;  // var index -> exponent
        bool has_coeff = false;
        bool has_var = false;
    };
    std::vector<Term> terms;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_uint = [&]() -> long {
        long v = 0;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("poly: expected number", i);
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        return v;
    };
    auto parse_sint = [&]() -> long {
        bool neg = false;
        if (i < n && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        long v = parse_uint();
        return neg ? -v : v;
    };

    int maxvar = 0;
    skip();
    if (i >= n) throw ParseError("poly: empty input", 0);
    while (i < n) {
        skip();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!terms.empty()) {
            throw ParseError("poly: expected '+' or '-' between terms", i);
        }
        Term t;
        t.coeff = sign;
        bool expecting_factor = true;
        while (expecting_factor) {
            skip();
            if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                Int c = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
                    c = c * 10 + (text[i++] - '0');
                t.coeff *= c;
                t.has_coeff = true;
            } else if (i < n && (text[i] == 't' || text[i] == 'T')) {
                ++i;
                int v = 0;
                if (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
                    v = static_cast<int>(parse_uint()) - 1;
                if (v < 0 && i <= n && v != -1)
                    throw ParseError("poly: bad variable index", i);
                if (v == -1) v = 0;  // bare `t`
                long e = 1;
                skip();
                if (i < n && text[i] == '^') {
                    ++i;
                    skip();
                    e = parse_sint();
                }
                t.exps[v] += e;
                t.has_var = true;
                maxvar = std::max(maxvar, v);
            } else {
                throw ParseError("poly: expected coefficient or variable", i);
            }
            skip();
            if (i < n && text[i] == '*') {
                ++i;
                continue;
            }
            expecting_factor = false;
        }
        if (!t.has_coeff && !t.has_var) throw ParseError("poly: empty term", i);
        terms.push_back(std::move(t));
        skip();
    }
    int d = vars > 0 ? vars : maxvar + 1;
    if (maxvar + 1 > d) throw ParseError("poly: variable index exceeds requested arity", 0);
    LaurentPoly p(d);
    for (const auto& t : terms) {
        Exps e(d, 0);
        for (const auto& [v, k] : t.exps) e[v] = static_cast<int>(k);
        p.add_term(e, t.coeff);
    }
    return p;
}

std::string poly_to_json(const LaurentPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json term;
        term["coeff"] = c.str();
        term["exps"] = e;
        arr.push_back(term);
    }
    return arr.dump();
}

LaurentPoly poly_from_json(const std::string& json, int vars) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(json);
    } catch (const std::exception& e) {
        throw ParseError(std::string("poly json: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("poly json: expected an array of terms");
    int d = vars;
    for (const auto& term : arr)
        d = std::max<int>(d, static_cast<int>(term.at("exps").size()));
    if (d == 0) d = 1;
    LaurentPoly p(d);
    for (const auto& term : arr) {
        Exps e = term.at("exps").get<Exps>();
        e.resize(d, 0);
        p.add_term(e, Int(term.at("coeff").get<std::string>()));
    }
    return p;
}

Word parse_word(const std::string& text) {
    std::vector<Word::Letter> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok[0] != 'x') throw ParseError("word: expected token like x0 or x2^-1");
        std::size_t i = 1;
        if (i >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError("word: expected generator index in " + tok);
        int g = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
            g = g * 10 + (tok[i++] - '0');
        long e = 1;
        if (i < tok.size()) {
            if (tok[i] != '^') throw ParseError("word: expected ^ in " + tok);
            ++i;
            try {
                e = std::stol(tok.substr(i));
            } catch (...) {
                throw ParseError("word: bad exponent in " + tok);
            }
        }
        int s = e < 0 ? -1 : 1;
        for (long k = 0; k < (e < 0 ? -e : e); ++k) letters.push_back({g, s});
    }
    return Word(letters);
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    std::size_t i = 0;
    const auto& ls = w.letters();
    while (i < ls.size()) {
        std::size_t j = i;
        long e = 0;
        while (j < ls.size() && ls[j].first == ls[i].first && ls[j].second == ls[i].second) {
            e += ls[j].second;
            ++j;
        }
        if (!first) os << " ";
        first = false;
        os << "x" << ls[i].first;
        if (e != 1) os << "^" << e;
        i = j;
    }
    return os.str();
}

}  // namespace talex

#include "talex.h"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "talex/family.hpp"
#include "talex/io.hpp"
#include "talex/mahler.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

talex_status fail(talex_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <class Fn>
talex_status guarded(Fn&& fn) {
    try {
        fn();
        return TALEX_OK;
    } catch (const talex::ParseError& e) {
        return fail(TALEX_ERR_PARSE, e.what());
    } catch (const talex::ConventionError& e) {
        return fail(TALEX_ERR_CONVENTION, e.what());
    } catch (const talex::NumericError& e) {
        return fail(TALEX_ERR_NUMERIC, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(TALEX_ERR_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(TALEX_ERR, e.what());
    }
}

json poly_json(const talex::LaurentPoly& p) {
    json j;
    j["text"] = talex::to_string(p);
    j["terms"] = json::parse(talex::poly_to_json(p));
    j["vars"] = p.vars();
    return j;
}

int resolve_component(const talex::LinkDiagram& d, int one_based) {
    if (one_based == 0) return d.component_count() - 1;
    if (one_based < 1 || one_based > d.component_count())
        throw std::invalid_argument("surgery component out of range");
    return one_based - 1;
}

}  // namespace

struct talex_link {
    talex::LinkDiagram diagram;
};

extern "C" {

const char* talex_last_error(void) { return g_last_error.c_str(); }

void talex_string_free(char* s) { std::free(s); }

void talex_link_free(talex_link* link) { delete link; }

talex_status talex_link_from_braid(const char* word, int strands, talex_link** out) {
    return guarded([&] {
        if (!word || !out) throw std::invalid_argument("null argument");
        auto b = talex::parse_braid(word, strands);
        *out = new talex_link{talex::diagram_from_braid(b)};
    });
}

talex_status talex_link_from_braid_with_axis(const char* word, int strands, talex_link** out) {
    return guarded([&] {
        if (!word || !out) throw std::invalid_argument("null argument");
        auto b = talex::parse_braid(word, strands);
        *out = new talex_link{talex::braid_closure_with_axis(b)};
    });
}

talex_status talex_link_from_pd(const char* pd_text, talex_link** out) {
    return guarded([&] {
        if (!pd_text || !out) throw std::invalid_argument("null argument");
        *out = new talex_link{talex::parse_pd(pd_text)};
    });
}

int talex_link_component_count(const talex_link* link) {
    return link ? link->diagram.component_count() : -1;
}

int talex_link_crossing_count(const talex_link* link) {
    return link ? static_cast<int>(link->diagram.crossings().size()) : -1;
}

talex_status talex_invariant(const talex_link* link, char** json_out) {
    return guarded([&] {
        if (!link || !json_out) throw std::invalid_argument("null argument");
        auto delta = talex::link_alexander_polynomial(link->diagram);
        json j;
        j["schema"] = "talex/1";
        j["command"] = "invariant";
        j["components"] = link->diagram.component_count();
        j["crossings"] = link->diagram.crossings().size();
        j["linking_matrix"] = talex::linking_matrix(link->diagram);
        j["alexander"] = poly_json(delta);
        *json_out = dup_string(j.dump(2));
    });
}

talex_status talex_twisted(const talex_link* link, const char* rep_text, int symbols,
                           char** json_out) {
    return guarded([&] {
        if (!link || !rep_text || !json_out) throw std::invalid_argument("null argument");
        auto p = talex::wirtinger(link->diagram);
        auto eps = talex::standard_augmentation(p);
        auto rho = talex::parse_rep(rep_text, p.generator_count, symbols);
        auto bad = talex::validate_rep(p, rho);
        if (!bad.empty())
            throw std::invalid_argument("representation violates relator " +
                                        std::to_string(bad.front()));
        auto D = talex::alexander_lin_D(p, eps, rho);
        auto w = talex::wada(p, eps, rho);
        auto tw = talex::twisted_alexander_poly(p, eps, rho);
        auto classical = talex::alexander_polynomial(p, eps, 0);
        json j;
        j["schema"] = "talex/1";
        j["command"] = "twisted";
        j["symbols"] = symbols;
        j["representation"] = talex::to_string(rho);
        j["alexander_lin_D"] = poly_json(D);
        j["wada_numerator"] = poly_json(w.numerator);
        j["wada_denominator"] = poly_json(w.denominator);
        j["twisted_alexander"] = poly_json(tw);
        j["classical_alexander"] = poly_json(classical);
        j["classical_divides_twisted"] = talex::divides(talex::canonical_form(classical), tw);
        *json_out = dup_string(j.dump(2));
    });
}

talex_status talex_twist_family(const talex_link* link, int surgery_component, long q_min,
                                long q_max, const char* rep_text, int symbols, int with_mahler,
                                unsigned seed, char** json_out) {
    return guarded([&] {
        if (!link || !json_out) throw std::invalid_argument("null argument");
        if (q_min < 1 || q_max < q_min || q_max > 10000)
            throw std::invalid_argument("q range must satisfy 1 <= q_min <= q_max <= 10^4");
        const auto& d = link->diagram;
        int comp = resolve_component(d, surgery_component);
        talex::SurgerySpec spec{&d, comp, {}};
        auto p = talex::family_presentation(spec);
        if (rep_text && *rep_text)
            spec.rep = talex::parse_rep(rep_text, p.generator_count, symbols);
        talex::MahlerOptions mopt;
        mopt.seed = seed;

        auto lk = talex::linking_matrix(d);
        bool zero_lk = true;
        for (int c = 0; c < d.component_count(); ++c)
            if (c != comp && lk[c][comp] != 0) zero_lk = false;

        json j;
        j["schema"] = "talex/1";
        j["command"] = "twist-family";
        j["surgery_component"] = comp + 1;
        j["zero_linking"] = zero_lk;
        json rows = json::array();
        if (zero_lk) {
            auto res = talex::twist_family_polynomial(spec, 0);
            j["route"] = "symbolic";
            j["r"] = res.r;
            j["constant"] = res.constant;
            j["q_degree"] = res.P.degree();
            json pc = json::array();
            for (const auto& c : res.P.coeffs()) pc.push_back(poly_json(c));
            j["P_coeffs"] = pc;
            j["limit_poly"] = poly_json(res.limit_poly);
            j["modified_determinant"] = poly_json(res.modified_det);
            for (long q = q_min; q <= q_max; ++q) {
                auto delta = talex::canonical_form(res.P.evaluate(q));
                json row;
                row["q"] = q;
                row["polynomial"] = poly_json(delta);
                if (with_mahler)
                    row["mahler"] = talex::mahler(delta, talex::MahlerMethod::automatic, mopt).value;
                rows.push_back(std::move(row));
            }
        } else {
            j["route"] = "substitution";
            auto subs = talex::substitution_family(spec, q_min, q_max);
            for (const auto& [q, val] : subs) {
                json row;
                row["q"] = q;
                row["polynomial"] = poly_json(val);
                if (with_mahler)
                    row["mahler"] = talex::mahler(val, talex::MahlerMethod::automatic, mopt).value;
                rows.push_back(std::move(row));
            }
        }
        j["rows"] = std::move(rows);
        *json_out = dup_string(j.dump(2));
    });
}

talex_status talex_mahler(const char* poly_text, const char* method, unsigned seed, double* value,
                          double* error_bound, char** json_out) {
    return guarded([&] {
        if (!poly_text) throw std::invalid_argument("null argument");
        auto p = talex::parse_poly(poly_text);
        talex::MahlerMethod m = talex::MahlerMethod::automatic;
        if (method && *method) {
            std::string ms = method;
            if (ms == "lawton")
                m = talex::MahlerMethod::lawton;
            else if (ms == "quadrature")
                m = talex::MahlerMethod::quadrature;
            else if (ms != "auto")
                throw std::invalid_argument("method must be auto, lawton or quadrature");
        }
        talex::MahlerOptions opt;
        opt.seed = seed;
        auto est = talex::mahler(p, m, opt);
        if (value) *value = est.value;
        if (error_bound) *error_bound = est.error_bound;
        if (json_out) {
            json j;
            j["schema"] = "talex/1";
            j["command"] = "mahler";
            j["polynomial"] = poly_json(talex::canonical_form(p));
            j["value"] = est.value;
            j["error_bound"] = est.error_bound;
            j["method"] = est.method;
            *json_out = dup_string(j.dump(2));
        }
    });
}

talex_status talex_rep_search(const talex_link* link, int symbols, int transitive_only,
                              int max_results, char** json_out) {
    return guarded([&] {
        if (!link || !json_out) throw std::invalid_argument("null argument");
        auto p = talex::wirtinger(link->diagram);
        talex::RepSearchOptions opt;
        opt.transitive_only = transitive_only != 0;
        opt.max_results = max_results > 0 ? max_results : 64;
        auto reps = talex::enumerate_permutation_reps(p, symbols, opt);
        json j;
        j["schema"] = "talex/1";
        j["command"] = "rep-search";
        j["symbols"] = symbols;
        j["generators"] = p.generator_count;
        json arr = json::array();
        for (const auto& r : reps) {
            json e;
            e["rep"] = talex::to_string(r);
            e["transitive"] = r.is_transitive();
            e["trivial"] = r.is_trivial();
            arr.push_back(std::move(e));
        }
        j["representations"] = std::move(arr);
        *json_out = dup_string(j.dump(2));
    });
}

talex_status talex_torsion_growth(const char* poly_text, int n_min, int n_max, char** json_out) {
    return guarded([&] {
        if (!poly_text || !json_out) throw std::invalid_argument("null argument");
        if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad n range");
        auto p = talex::parse_poly(poly_text);
        if (p.vars() != 1) throw std::invalid_argument("torsion growth needs a knot polynomial");
        auto est = talex::mahler_univariate(p);
        json j;
        j["schema"] = "talex/1";
        j["command"] = "torsion-growth";
        j["polynomial"] = poly_json(talex::canonical_form(p));
        j["log_mahler"] = std::log(est.value);
        json rows = json::array();
        for (int n = n_min; n <= n_max; ++n) {
            auto b = talex::cyclic_cover_torsion(p, n);
            json row;
            row["n"] = n;
            row["b_n"] = b.str();
            row["infinite_homology"] = (b == 0);
            if (b > 0) row["rate"] = std::log(b.convert_to<double>()) / n;
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        *json_out = dup_string(j.dump(2));
    });
}

}  // extern "C"

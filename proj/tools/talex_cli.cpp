// Command-line front end. Uses only the public C API in talex.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "talex.h"

namespace {

int exit_code(talex_status st) {
    switch (st) {
        case TALEX_OK:
            return 0;
        case TALEX_ERR_PARSE:
            return 2;
        case TALEX_ERR_CONVENTION:
            return 3;
        case TALEX_ERR_NUMERIC:
            return 4;
        default:
            return 1;
    }
}

int bail(talex_status st) {
    std::cerr << "error: " << talex_last_error() << "\n";
    return exit_code(st);
}

struct LinkHandle {
    talex_link* ptr = nullptr;
    ~LinkHandle() { talex_link_free(ptr); }
};

struct JsonOut {
    char* s = nullptr;
    ~JsonOut() { talex_string_free(s); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --rep accepts a literal cycle string or a file containing one
std::string resolve_rep(const std::string& rep) {
    if (rep.find('=') != std::string::npos) return rep;
    return read_file(rep);
}

struct InputOpts {
    std::string braid;
    std::string pd_file;
    int strands = 0;
    bool axis = false;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
    auto* b = cmd->add_option("--braid", in.braid, "braid word, e.g. \"(s1 s2)^7 s1^-2\"");
    auto* p = cmd->add_option("--pd", in.pd_file, "PD code file");
    cmd->add_option("--strands", in.strands, "strand count override for --braid");
    cmd->add_flag("--axis", in.axis, "add an encircling axis component to the braid closure");
    b->excludes(p);
}

talex_status make_link(const InputOpts& in, talex_link** out) {
    if (!in.braid.empty() && !in.pd_file.empty()) {
        std::cerr << "error: choose exactly one of --braid / --pd\n";
        return TALEX_ERR_ARG;
    }
    if (!in.braid.empty())
        return in.axis ? talex_link_from_braid_with_axis(in.braid.c_str(), in.strands, out)
                       : talex_link_from_braid(in.braid.c_str(), in.strands, out);
    if (!in.pd_file.empty()) {
        std::string text;
        try {
            text = read_file(in.pd_file);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return TALEX_ERR_ARG;
        }
        return talex_link_from_pd(text.c_str(), out);
    }
    std::cerr << "error: an input is required (--braid or --pd)\n";
    return TALEX_ERR_ARG;
}

void print_human(const std::string& jtext) {
    auto j = nlohmann::json::parse(jtext);
    const std::string cmd = j.value("command", "");
    if (cmd == "invariant") {
        std::cout << "components: " << j["components"] << "  crossings: " << j["crossings"]
                  << "\n";
        std::cout << "Delta = " << j["alexander"]["text"].get<std::string>() << "\n";
    } else if (cmd == "twisted") {
        std::cout << "rho: " << j["representation"].get<std::string>() << "\n";
        std::cout << "D        = " << j["alexander_lin_D"]["text"].get<std::string>() << "\n";
        std::cout << "W        = (" << j["wada_numerator"]["text"].get<std::string>() << ") / ("
                  << j["wada_denominator"]["text"].get<std::string>() << ")\n";
        std::cout << "Delta^rho = " << j["twisted_alexander"]["text"].get<std::string>() << "\n";
        std::cout << "classical Delta = " << j["classical_alexander"]["text"].get<std::string>()
                  << (j["classical_divides_twisted"].get<bool>() ? "  (divides Delta^rho)" : "")
                  << "\n";
    } else if (cmd == "twist-family") {
        std::cout << "route: " << j["route"].get<std::string>() << "\n";
        if (j.contains("limit_poly"))
            std::cout << "limit polynomial: " << j["limit_poly"]["text"].get<std::string>()
                      << (j["constant"].get<bool>() ? "  (constant family)" : "") << "\n";
        for (const auto& row : j["rows"]) {
            std::cout << "q = " << row["q"] << ":  " << row["polynomial"]["text"].get<std::string>();
            if (row.contains("mahler")) std::cout << "   M = " << row["mahler"];
            std::cout << "\n";
        }
    } else if (cmd == "mahler") {
        std::printf("M = %.10f  (± %.2g, %s)\n", j["value"].get<double>(),
                    j["error_bound"].get<double>(), j["method"].get<std::string>().c_str());
    } else if (cmd == "rep-search") {
        for (const auto& e : j["representations"])
            std::cout << e["rep"].get<std::string>()
                      << (e["transitive"].get<bool>() ? "   [transitive]" : "") << "\n";
        std::cout << j["representations"].size() << " representation(s)\n";
    } else if (cmd == "torsion-growth") {
        std::cout << "log M(Delta) = " << j["log_mahler"] << "\n";
        for (const auto& row : j["rows"]) {
            std::cout << "n = " << row["n"] << ":  b_n = " << row["b_n"].get<std::string>();
            if (row.contains("rate")) std::cout << "   (1/n) log b_n = " << row["rate"];
            std::cout << "\n";
        }
    } else {
        std::cout << jtext << "\n";
    }
}

bool parse_range(const std::string& s, long* lo, long* hi) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            *lo = *hi = std::stol(s);
        } else {
            *lo = std::stol(s.substr(0, dots));
            *hi = std::stol(s.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"talex: Alexander invariants of links and their twist families"};
    app.require_subcommand(1);
    bool as_json = false;
    unsigned seed = 0x5eed;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--seed", seed, "seed for numeric root-finder starting points");

    InputOpts in;
    std::string rep, method = "auto", poly, qrange = "1..5", nrange = "1..10";
    int symbols = 2, surgery = 0, max_results = 64;
    bool transitive = false, with_mahler = false;

    auto* inv = app.add_subcommand("invariant", "multivariable Alexander polynomial");
    add_input_flags(inv, in);

    auto* tw = app.add_subcommand("twisted", "twisted invariants for a permutation representation");
    add_input_flags(tw, in);
    tw->add_option("--rep", rep, "representation: cycle string or file")->required();
    tw->add_option("--symbols", symbols, "number of permuted symbols N");

    auto* fam = app.add_subcommand("twist-family", "1/q-surgery twist family");
    add_input_flags(fam, in);
    fam->add_option("--surgery", surgery, "surgery component (1-based; default last)");
    fam->add_option("--q", qrange, "q range, e.g. 1..5");
    fam->add_option("--rep", rep, "optional representation for the twisted family");
    fam->add_option("--symbols", symbols, "number of permuted symbols N");
    fam->add_flag("--mahler", with_mahler, "add Mahler measures per row");

    auto* mah = app.add_subcommand("mahler", "Mahler measure of a polynomial");
    mah->add_option("--poly", poly, "polynomial, e.g. \"t^2-t+1\"")->required();
    mah->add_option("--method", method, "auto | lawton | quadrature");

    auto* rs = app.add_subcommand("rep-search", "enumerate permutation representations");
    add_input_flags(rs, in);
    rs->add_option("--symbols", symbols, "number of permuted symbols N")->required();
    rs->add_flag("--transitive", transitive, "transitive representations only");
    rs->add_option("--max", max_results, "maximum number of results");

    auto* tg = app.add_subcommand("torsion-growth", "cyclic branched cover torsion");
    tg->add_option("--poly", poly, "knot Alexander polynomial")->required();
    tg->add_option("--n", nrange, "cover order range, e.g. 1..10");

    CLI11_PARSE(app, argc, argv);

    talex_status st = TALEX_OK;
    JsonOut out;

    if (inv->parsed()) {
        LinkHandle link;
        st = make_link(in, &link.ptr);
        if (st != TALEX_OK) return bail(st);
        st = talex_invariant(link.ptr, &out.s);
    } else if (tw->parsed()) {
        LinkHandle link;
        st = make_link(in, &link.ptr);
        if (st != TALEX_OK) return bail(st);
        std::string rtext;
        try {
            rtext = resolve_rep(rep);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        st = talex_twisted(link.ptr, rtext.c_str(), symbols, &out.s);
    } else if (fam->parsed()) {
        LinkHandle link;
        st = make_link(in, &link.ptr);
        if (st != TALEX_OK) return bail(st);
        long qlo = 1, qhi = 5;
        if (!parse_range(qrange, &qlo, &qhi)) {
            std::cerr << "error: bad --q range\n";
            return 2;
        }
        std::string rtext;
        if (!rep.empty()) {
            try {
                rtext = resolve_rep(rep);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
        st = talex_twist_family(link.ptr, surgery, qlo, qhi, rtext.empty() ? nullptr : rtext.c_str(),
                                symbols, with_mahler ? 1 : 0, seed, &out.s);
    } else if (mah->parsed()) {
        double value = 0, err = 0;
        st = talex_mahler(poly.c_str(), method.c_str(), seed, &value, &err, &out.s);
    } else if (rs->parsed()) {
        LinkHandle link;
        st = make_link(in, &link.ptr);
        if (st != TALEX_OK) return bail(st);
        st = talex_rep_search(link.ptr, symbols, transitive ? 1 : 0, max_results, &out.s);
    } else if (tg->parsed()) {
        long nlo = 1, nhi = 10;
        if (!parse_range(nrange, &nlo, &nhi)) {
            std::cerr << "error: bad --n range\n";
            return 2;
        }
        st = talex_torsion_growth(poly.c_str(), static_cast<int>(nlo), static_cast<int>(nhi),
                                  &out.s);
    }

    if (st != TALEX_OK) return bail(st);
    if (out.s) {
        if (as_json)
            std::cout << out.s << "\n";
        else
            print_human(out.s);
    }
    return 0;
}

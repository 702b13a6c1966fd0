#include "talex/twisted.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace talex {

Perm PermutationRep::word_image(const Word& w) const {
    Perm cur = Perm::identity(N);
    for (const auto& [g, s] : w.letters())
        cur = (s > 0) ? cur.then(images.at(g)) : cur.then(images.at(g).inverse());
    return cur;
}

bool PermutationRep::is_trivial() const {
    return std::all_of(images.begin(), images.end(), [](const Perm& p) { return p.is_identity(); });
}

bool PermutationRep::is_transitive() const {
    std::vector<int> root(N);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (root[a] != a) a = root[a] = root[root[a]];
        return a;
    };
    for (const Perm& p : images)
        for (int i = 0; i < N; ++i) {
            int a = find(i), b = find(p.img[i]);
            if (a != b) root[a] = b;
        }
    for (int i = 1; i < N; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

PermutationRep PermutationRep::conjugate(const Perm& s) const {
    PermutationRep r;
    r.N = N;
    Perm si = s.inverse();
    for (const Perm& p : images) r.images.push_back(si.then(p).then(s));
    return r;
}

std::vector<int> validate_rep(const WirtingerPresentation& p, const PermutationRep& rho) {
    std::vector<int> bad;
    if (static_cast<int>(rho.images.size()) != p.generator_count) {
        bad.push_back(-1);
        return bad;
    }
    for (int i = 0; i < static_cast<int>(p.relators.size()); ++i)
        if (!rho.word_image(p.relators[i]).is_identity()) bad.push_back(i);
    return bad;
}

// --------------------------------------------------------------- rep search

namespace {

std::vector<Perm> all_perms(int N) {
    std::vector<int> v(N);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm{v});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

std::vector<PermutationRep> enumerate_permutation_reps(const WirtingerPresentation& p, int N,
                                                       const RepSearchOptions& opt) {
    if (N < 1 || N > 7) throw std::invalid_argument("enumerate_permutation_reps: N must be 1..7");
    const int n = p.generator_count;
    std::vector<Perm> sym = all_perms(N);
    std::vector<int> assigned(n, -1);  // index into sym, -1 = free
    std::vector<Perm> img(n, Perm::identity(N));

    // Wirtinger relators determine one generator from the two others:
    // out = over^s in over^{-s}.
    struct Rule {
        int out, over, in, sign;
    };
    std::vector<Rule> rules;
    if (p.diagram) {
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
            int c = p.relator_crossing[i];
            const Crossing& x = p.diagram->crossings()[c];
            rules.push_back({p.arc_gen[x.under_out], p.arc_gen[x.over], p.arc_gen[x.under_in],
                             x.sign});
        }
    }

    std::vector<PermutationRep> found;
    std::map<Perm, int> sym_index;
    for (int i = 0; i < static_cast<int>(sym.size()); ++i) sym_index[sym[i]] = i;

    std::function<bool()> propagate_and_search;
    std::function<void()> search;

    auto relators_ok_partial = [&]() {
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
            bool all_assigned = true;
            for (const auto& [g, s] : p.relators[i].letters())
                if (assigned[g] < 0) {
                    all_assigned = false;
                    break;
                }
            if (!all_assigned) continue;
            PermutationRep r;
            r.N = N;
            r.images = img;
            if (!r.word_image(p.relators[i]).is_identity()) return false;
        }
        return true;
    };

    search = [&]() {
        if (static_cast<int>(found.size()) >= opt.max_results) return;
        // propagate forced assignments to a fixpoint
        std::vector<int> forced;  // generators assigned in this frame
        bool changed = true, contradiction = false;
        while (changed && !contradiction) {
            changed = false;
            for (const Rule& r : rules) {
                if (assigned[r.over] < 0 || assigned[r.in] < 0) continue;
                Perm ov = img[r.over];
                if (r.sign < 0) ov = ov.inverse();
                Perm want = ov.then(img[r.in]).then(ov.inverse());
                if (assigned[r.out] < 0) {
                    img[r.out] = want;
                    assigned[r.out] = sym_index[want];
                    forced.push_back(r.out);
                    changed = true;
                } else if (!(img[r.out] == want)) {
                    contradiction = true;
                    break;
                }
            }
        }
        if (!contradiction && relators_ok_partial()) {
            int next = -1;
            for (int g = 0; g < n; ++g)
                if (assigned[g] < 0) {
                    next = g;
                    break;
                }
            if (next < 0) {
                PermutationRep r;
                r.N = N;
                r.images = img;
                if (validate_rep(p, r).empty() && (!opt.transitive_only || r.is_transitive()) &&
                    (!opt.skip_trivial || !r.is_trivial()))
                    found.push_back(r);
            } else {
                for (int si = 0; si < static_cast<int>(sym.size()); ++si) {
                    if (static_cast<int>(found.size()) >= opt.max_results) break;
                    assigned[next] = si;
                    img[next] = sym[si];
                    search();
                    assigned[next] = -1;
                    img[next] = Perm::identity(N);
                }
            }
        }
        for (int g : forced) {
            assigned[g] = -1;
            img[g] = Perm::identity(N);
        }
    };

    if (opt.fix_surgery_trivial) {
        if (p.surgery_component < 0)
            throw std::invalid_argument("rep search: no surgery component to fix");
        for (int g = 0; g < n; ++g)
            if (p.gen_component[g] == p.surgery_component) {
                assigned[g] = sym_index[Perm::identity(N)];
                img[g] = Perm::identity(N);
            }
    }
    search();
    return found;
}

// ----------------------------------------------------------- twisted matrix

PolyMatrix twisted_fox_matrix(const std::vector<Word>& relators, int generator_count,
                              const Augmentation& eps, const PermutationRep& rho,
                              bool drop_first_column) {
    const int N = rho.N;
    const int cols = generator_count - (drop_first_column ? 1 : 0);
    PolyMatrix m(static_cast<int>(relators.size()) * N, cols * N, LaurentPoly(eps.vars));
    for (int i = 0; i < static_cast<int>(relators.size()); ++i) {
        for (int j = 0; j < cols; ++j) {
            int gen = j + (drop_first_column ? 1 : 0);
            PolyMatrix blk = eps_rho_apply(fox_derivative(relators[i], gen), eps, rho.images, N);
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) m.at(i * N + a, j * N + b) = blk.at(a, b);
        }
    }
    return m;
}

PolyMatrix twisted_matrix(const WirtingerPresentation& p, const Augmentation& eps,
                          const PermutationRep& rho) {
    auto bad = validate_rep(p, rho);
    if (!bad.empty())
        throw std::invalid_argument("twisted_matrix: representation violates relator " +
                                    std::to_string(bad.front()));
    return twisted_fox_matrix(p.relators, p.generator_count, eps, rho, true);
}

LaurentPoly alexander_lin_D(const WirtingerPresentation& p, const Augmentation& eps,
                            const PermutationRep& rho) {
    PolyMatrix m = twisted_matrix(p, eps, rho);
    if (m.rows() == m.cols()) return canonical_form(determinant(m));
    return minors_gcd(m, std::min(m.rows(), m.cols()));
}

LaurentPoly wada_denominator(const Augmentation& eps, const PermutationRep& rho, int x0_gen) {
    const int N = rho.N;
    PolyMatrix m(N, N, LaurentPoly(eps.vars));
    auto t1 = LaurentPoly::variable(eps.vars, 0);
    const Perm& px = rho.images.at(x0_gen);
    for (int i = 0; i < N; ++i) {
        m.at(i, i) += LaurentPoly::constant(eps.vars, 1);
        m.at(i, px.img[i]) -= t1;
    }
    return determinant(m);
}

WadaInvariant wada(const WirtingerPresentation& p, const Augmentation& eps,
                   const PermutationRep& rho) {
    WadaInvariant w;
    w.numerator = alexander_lin_D(p, eps, rho);
    w.denominator = wada_denominator(eps, rho, 0);
    return w;
}

LaurentPoly order_of_H0(const WirtingerPresentation& p, const Augmentation& eps,
                        const PermutationRep& rho) {
    const int N = rho.N;
    PolyMatrix stack(p.generator_count * N, N, LaurentPoly(eps.vars));
    for (int g = 0; g < p.generator_count; ++g) {
        GroupRingElem e;
        e.add(Word::generator(g), 1);
        PolyMatrix blk = eps_rho_apply(e, eps, rho.images, N);
        for (int a = 0; a < N; ++a) {
            for (int b = 0; b < N; ++b) stack.at(g * N + a, b) = blk.at(a, b);
            stack.at(g * N + a, a) -= LaurentPoly::constant(eps.vars, 1);
        }
    }
    return minors_gcd(stack, N);
}

LaurentPoly twisted_alexander_poly(const WirtingerPresentation& p, const Augmentation& eps,
                                   const PermutationRep& rho) {
    LaurentPoly D = alexander_lin_D(p, eps, rho);
    LaurentPoly d0 = order_of_H0(p, eps, rho);
    LaurentPoly den = wada_denominator(eps, rho, 0);
    LaurentPoly num = D * d0;
    if (!divides(den, num))
        throw ConventionError("twisted_alexander_poly: det(I - t1 rho(x0)) does not divide D*Delta0");
    return canonical_form(exact_div(num, den));
}

// -------------------------------------------------------------------- text

PermutationRep parse_rep(const std::string& text, int generator_count, int N) {
    PermutationRep r;
    r.N = N;
    r.images.assign(generator_count, Perm::identity(N));
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ';')) ++i;
    };
    while (true) {
        skip();
        if (i >= n) break;
        if (text[i] != 'x') throw ParseError("rep: expected generator like x0", i);
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("rep: expected generator index", i);
        int g = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) g = g * 10 + (text[i++] - '0');
        if (g >= generator_count) throw ParseError("rep: generator index out of range", i);
        skip();
        if (i >= n || text[i] != '=') throw ParseError("rep: expected '='", i);
        ++i;
        Perm perm = Perm::identity(N);
        skip();
        while (i < n && text[i] == '(') {
            ++i;
            std::vector<int> cyc;
            for (;;) {
                skip();
                if (i < n && text[i] == ')') {
                    ++i;
                    break;
                }
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("rep: expected symbol in cycle", i);
                int v = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
                    v = v * 10 + (text[i++] - '0');
                if (v < 1 || v > N) throw ParseError("rep: symbol out of range 1..N", i);
                cyc.push_back(v - 1);
                skip();
                if (i < n && text[i] == ',') ++i;
            }
            Perm c = Perm::identity(N);
            for (std::size_t k = 0; k < cyc.size(); ++k) c.img[cyc[k]] = cyc[(k + 1) % cyc.size()];
            perm = perm.then(c);
            skip();
        }
        r.images[g] = perm;
    }
    return r;
}

std::string to_string(const PermutationRep& rho) {
    std::ostringstream os;
    bool first = true;
    for (int g = 0; g < static_cast<int>(rho.images.size()); ++g) {
        if (rho.images[g].is_identity()) continue;
        if (!first) os << "; ";
        first = false;
        os << "x" << g << "=";
        std::vector<bool> seen(rho.N, false);
        for (int i = 0; i < rho.N; ++i) {
            if (seen[i] || rho.images[g].img[i] == i) continue;
            os << "(";
            int j = i;
            bool f2 = true;
            do {
                if (!f2) os << " ";
                f2 = false;
                os << (j + 1);
                seen[j] = true;
                j = rho.images[g].img[j];
            } while (j != i);
            os << ")";
        }
    }
    if (first) os << "trivial";
    return os.str();
}

}  // namespace talex

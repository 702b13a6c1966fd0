#include "talex/fox.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace talex {

Word::Word(std::vector<Letter> letters) {
    for (const auto& l : letters) {
        if (l.second != 1 && l.second != -1)
            throw std::invalid_argument("Word: letter exponents must be ±1");
        push_reduced(l);
    }
}

Word Word::generator(int g, int exp) {
    Word w;
    int s = exp < 0 ? -1 : 1;
    for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) w.push_reduced({g, s});
    return w;
}

void Word::push_reduced(const Letter& l) {
    if (!letters_.empty() && letters_.back().first == l.first &&
        letters_.back().second == -l.second) {
        letters_.pop_back();
    } else {
        letters_.push_back(l);
    }
}

int Word::max_generator() const {
    int m = -1;
    for (const auto& [g, s] : letters_) m = std::max(m, g);
    return m;
}

Word Word::inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->first, -it->second});
    return w;
}

Word& Word::operator*=(const Word& o) {
    for (const auto& l : o.letters_) push_reduced(l);
    return *this;
}

Word Word::pow(long n) const {
    Word r;
    const Word base = n < 0 ? inverse() : *this;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) r *= base;
    return r;
}

void GroupRingElem::add(const Word& w, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
    return r;
}

GroupRingElem operator*(const Word& w, const GroupRingElem& e) {
    GroupRingElem r;
    for (const auto& [we, c] : e.terms()) r.add(w * we, c);
    return r;
}

GroupRingElem fox_derivative(const Word& w, int j) {
    GroupRingElem d;
    Word prefix;
    for (const auto& [g, s] : w.letters()) {
        if (s > 0) {
            if (g == j) d.add(prefix, 1);
            prefix *= Word::generator(g, 1);
        } else {
            prefix *= Word::generator(g, -1);
            if (g == j) d.add(prefix, -1);
        }
    }
    return d;
}

Exps Augmentation::word_exps(const Word& w) const {
    Exps e(vars, 0);
    for (const auto& [g, s] : w.letters()) {
        const Exps& img = images.at(g);
        for (int v = 0; v < vars; ++v) e[v] += s * img[v];
    }
    return e;
}

LaurentPoly Augmentation::word_image(const Word& w) const {
    return LaurentPoly::monomial(vars, word_exps(w), 1);
}

bool Augmentation::is_epimorphism() const {
    // gcd of d x d minors of the (gens x vars) integer exponent matrix is ±1
    const int d = vars;
    const int n = static_cast<int>(images.size());
    if (n < d) return false;
    std::vector<int> sel(d);
    std::function<Int(int, std::vector<int>&)> rec;
    Int g = 0;
    std::function<void(int, int)> choose = [&](int start, int picked) {
        if (g == 1) return;
        if (picked == d) {
            // determinant of the selected d x d block by integer cofactor
            std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) m[i][j] = images[sel[i]][j];
            std::function<Int(std::vector<std::vector<Int>>&)> det =
                [&](std::vector<std::vector<Int>>& a) -> Int {
                const int k = static_cast<int>(a.size());
                if (k == 1) return a[0][0];
                Int acc = 0;
                for (int j = 0; j < k; ++j) {
                    if (a[0][j] == 0) continue;
                    std::vector<std::vector<Int>> sub(k - 1, std::vector<Int>(k - 1));
                    for (int r = 1; r < k; ++r) {
                        int cc = 0;
                        for (int c = 0; c < k; ++c)
                            if (c != j) sub[r - 1][cc++] = a[r][c];
                    }
                    Int term = a[0][j] * det(sub);
                    acc += (j % 2 == 0) ? term : -term;
                }
                return acc;
            };
            Int dd = det(m);
            if (dd < 0) dd = -dd;
            Int t = g;
            // integer gcd
            Int x = t, y = dd;
            while (y != 0) {
                Int r = x % y;
                x = y;
                y = r;
            }
            g = x < 0 ? -x : x;
            return;
        }
        for (int i = start; i <= n - (d - picked); ++i) {
            sel[picked] = i;
            choose(i + 1, picked + 1);
        }
    };
    choose(0, 0);
    return g == 1;
}

LaurentPoly augment(const GroupRingElem& e, const Augmentation& eps) {
    LaurentPoly r(eps.vars);
    for (const auto& [w, c] : e.terms()) {
        for (const auto& [g, s] : w.letters())
            if (g >= static_cast<int>(eps.images.size()))
                throw std::invalid_argument("augment: generator has no image");
        r.add_term(eps.word_exps(w), c);
    }
    return r;
}

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img[i] != i) return false;
    return true;
}

Perm Perm::then(const Perm& o) const {
    Perm r;
    r.img.resize(size());
    for (int i = 0; i < size(); ++i) r.img[i] = o.img[img[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(size());
    for (int i = 0; i < size(); ++i) r.img[img[i]] = i;
    return r;
}

int Perm::order() const {
    Perm p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = p.then(*this);
        ++k;
    }
    return k;
}

PolyMatrix perm_matrix(const Perm& p, int vars) {
    PolyMatrix m(p.size(), p.size(), LaurentPoly(vars));
    for (int i = 0; i < p.size(); ++i) m.at(i, p.img[i]) = LaurentPoly::constant(vars, 1);
    return m;
}

PolyMatrix eps_rho_word(const Word& w, const Augmentation& eps, const std::vector<Perm>& rho,
                        int N) {
    // image of a single word is eps(w) times the permutation matrix of rho(w)
    Perm cur = Perm::identity(N);
    Exps e(eps.vars, 0);
    for (const auto& [g, s] : w.letters()) {
        const Exps& img = eps.images.at(g);
        for (int v = 0; v < eps.vars; ++v) e[v] += s * img[v];
        cur = (s > 0) ? cur.then(rho.at(g)) : cur.then(rho.at(g).inverse());
    }
    PolyMatrix m = perm_matrix(cur, eps.vars);
    LaurentPoly mono = LaurentPoly::monomial(eps.vars, e, 1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m.at(i, j) *= mono;
    return m;
}

PolyMatrix eps_rho_apply(const GroupRingElem& e, const Augmentation& eps,
                         const std::vector<Perm>& rho, int N) {
    PolyMatrix r(N, N, LaurentPoly(eps.vars));
    for (const auto& [w, c] : e.terms()) {
        PolyMatrix m = eps_rho_word(w, eps, rho, N);
        LaurentPoly cc = LaurentPoly::constant(eps.vars, c);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r.at(i, j) += cc * m.at(i, j);
    }
    return r;
}

}  // namespace talex

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "talex/laurent.hpp"
#include "talex/matrix.hpp"

namespace talex {

// Freely reduced word in the free group on generators x0, x1, ....
// Letters are (generator index, ±1); reduction is applied eagerly.
class Word {
public:
    using Letter = std::pair<int, int>;

    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word generator(int g, int exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    int max_generator() const;

    Word inverse() const;
    Word& operator*=(const Word& o);
    friend Word operator*(Word a, const Word& b) { return a *= b; }
    Word pow(long n) const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

private:
    void push_reduced(const Letter& l);
    std::vector<Letter> letters_;
};

// Finite Z-linear combination of freely reduced words.
class GroupRingElem {
public:
    GroupRingElem() = default;

    const std::map<Word, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Word& w, const Int& c);

    GroupRingElem operator-() const;
    GroupRingElem& operator+=(const GroupRingElem& o);
    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator*(const Word& w, const GroupRingElem& e);
    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Word, Int> terms_;
};

// Fox partial derivative d w / d x_j.
GroupRingElem fox_derivative(const Word& w, int j);

// Generator images under an abelianization epsilon: index -> monomial of R_d.
struct Augmentation {
    int vars = 1;
    std::vector<Exps> images;  // images[g] = exponent vector of eps(x_g)

    LaurentPoly word_image(const Word& w) const;  // monomial
    Exps word_exps(const Word& w) const;
    // images generate Z^d (gcd of maximal minors of the exponent matrix = 1)
    bool is_epimorphism() const;
};

LaurentPoly augment(const GroupRingElem& e, const Augmentation& eps);

// Permutation of {0..N-1}; img[i] is the image of i. Products compose left
// to right so that matrices multiply in word order.
struct Perm {
    std::vector<int> img;

    static Perm identity(int n);
    int size() const { return static_cast<int>(img.size()); }
    bool is_identity() const;
    Perm then(const Perm& o) const;
    Perm inverse() const;
    int order() const;
    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// 0/1 matrix of the permutation acting on row vectors from the right:
// M[i][g(i)] = 1, so M(a·b) = M(a)·M(b) in word order.
PolyMatrix perm_matrix(const Perm& p, int vars);

// (eps ⊗ rho)(e): N x N matrix over R_d, multiplicative on words, linear on
// sums; rho given per generator index.
PolyMatrix eps_rho_apply(const GroupRingElem& e, const Augmentation& eps,
                         const std::vector<Perm>& rho, int N);
PolyMatrix eps_rho_word(const Word& w, const Augmentation& eps, const std::vector<Perm>& rho,
                        int N);

}  // namespace talex

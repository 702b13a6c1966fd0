#include "talex/mahler.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace talex {

namespace {

using Cplx = std::complex<double>;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// ------------------------------------------------------------- root finding

Cplx horner(const std::vector<Cplx>& c, Cplx z) {
    Cplx r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

// Aberth-Ehrlich simultaneous iteration; c: coefficients low->high, c.back() != 0.
std::vector<Cplx> aberth_roots(const std::vector<Cplx>& c, unsigned seed) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<Cplx> dc(n);
    for (int k = 1; k <= n; ++k) dc[k - 1] = c[k] * static_cast<double>(k);
    // start on a circle slightly off the unit radius with golden-angle spacing
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.01, 0.01);
    double r0 = 1.0;
    {
        double a0 = std::abs(c[0]), an = std::abs(c[n]);
        if (a0 > 0 && an > 0) r0 = std::pow(a0 / an, 1.0 / n);
        r0 = std::clamp(r0, 0.2, 5.0) + 0.1;
    }
    std::vector<Cplx> z(n);
    const double ga = 2.399963229728653;
    for (int i = 0; i < n; ++i) {
        double ang = ga * i + 0.7 + jitter(rng);
        double rr = r0 * (1.0 + 0.05 * std::sin(3.1 * i)) + jitter(rng);
        z[i] = Cplx(rr * std::cos(ang), rr * std::sin(ang));
    }
    for (int iter = 0; iter < 800; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            Cplx p = horner(c, z[i]);
            Cplx dp = horner(dc, z[i]);
            if (std::abs(p) == 0) continue;
            Cplx w = (std::abs(dp) > 0) ? p / dp : Cplx(1e-3, 1e-3);
            Cplx s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            Cplx corr = w / (1.0 - w * s);
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

// Newton polish in 50-digit floats from a double seed; exact coefficients.
double refined_abs(const std::vector<Int>& coeffs, Cplx seed) {
    using C = std::complex<BigFloat>;
    std::vector<C> c;
    c.reserve(coeffs.size());
    for (const auto& a : coeffs) c.push_back(C(BigFloat(a), 0));
    std::vector<C> dc(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) dc[k - 1] = c[k] * BigFloat(k);
    C z(BigFloat(seed.real()), BigFloat(seed.imag()));
    for (int it = 0; it < 100; ++it) {
        C p(0), dp(0);
        for (auto i = c.rbegin(); i != c.rend(); ++i) p = p * z + *i;
        for (auto i = dc.rbegin(); i != dc.rend(); ++i) dp = dp * z + *i;
        if (abs(p) == 0) break;
        if (abs(dp) == 0) break;
        C step = p / dp;
        z -= step;
        if (abs(step) < BigFloat("1e-40") * (BigFloat(1) + abs(z))) break;
    }
    return static_cast<double>(abs(z));
}

std::vector<Int> univariate_coeffs(const LaurentPoly& p) {
    LaurentPoly c = canonical_form(p);
    std::vector<Int> out(c.max_exp(0) + 1, 0);
    for (const auto& [e, a] : c.terms()) out[e[0]] = a;
    return out;
}

}  // namespace

MahlerEstimate mahler_univariate(const LaurentPoly& p, const MahlerOptions& opt) {
    if (p.vars() != 1) throw std::invalid_argument("mahler_univariate: needs one variable");
    MahlerEstimate est;
    est.method = "jensen-roots";
    if (p.is_zero()) return est;  // M(0) = 0 by definition
    auto coeffs = univariate_coeffs(p);
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n == 0) {
        est.value = std::abs(static_cast<double>(coeffs[0].convert_to<double>()));
        return est;
    }
    // scale to double safely
    double scale = 0;
    for (const auto& a : coeffs) scale = std::max(scale, std::abs(a.convert_to<double>()));
    std::vector<Cplx> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].convert_to<double>() / scale;
    auto roots = aberth_roots(c, opt.seed);
    double logm = std::log(std::abs(coeffs[n].convert_to<double>()));
    double err = 1e-13 * n;
    for (const auto& z : roots) {
        double a = std::abs(z);
        if (std::abs(a - 1.0) < 1e-6) {
            a = refined_abs(coeffs, z);  // escalate, never clamp
            if (std::abs(a - 1.0) < 1e-30) a = 1.0;
        }
        if (a > 1.0) logm += std::log(a);
    }
    est.value = std::exp(logm);
    est.error_bound = est.value * err;
    return est;
}

namespace {

double lawton_value(const LaurentPoly& p, long K, const MahlerOptions& opt, bool* ok) {
    std::vector<long> ks(p.vars());
    long k = 1;
    for (int i = 0; i < p.vars(); ++i) {
        ks[i] = k;
        k *= K;
    }
    LaurentPoly s = specialize_exponents(p, ks);
    if (s.is_zero()) {
        *ok = false;
        return 0;
    }
    *ok = true;
    return mahler_univariate(s, opt).value;
}

MahlerEstimate mahler_lawton(const LaurentPoly& p, const MahlerOptions& opt) {
    MahlerEstimate est;
    double prev = -1;
    long used = 0;
    for (long K : opt.lawton_bases) {
        bool ok = false;
        double v = lawton_value(p, K, opt, &ok);
        if (!ok) continue;
        used = K;
        if (prev >= 0 && std::abs(v - prev) < opt.lawton_tol) {
            est.value = v;
            est.error_bound = std::abs(v - prev) + 1e-10;
            est.method = "lawton(" + std::to_string(K) + ")";
            return est;
        }
        prev = v;
    }
    // no stabilization within the ladder: push one harder rung
    bool ok = false;
    double v = lawton_value(p, used ? used * 3 + 1 : 301, opt, &ok);
    if (!ok) v = prev;
    est.value = v;
    est.error_bound = std::abs(v - prev) + 1e-6;
    est.method = "lawton(" + std::to_string(used ? used * 3 + 1 : 301) + ")";
    return est;
}

MahlerEstimate mahler_quadrature2(const LaurentPoly& p, const MahlerOptions& opt) {
    // outer integral over t1, inner Jensen per fiber in t2
    if (p.vars() != 2) throw std::invalid_argument("quadrature method implemented for d = 2");
    MahlerEstimate est;
    est.method = "quadrature";
    LaurentPoly c = canonical_form(p);
    const int d2 = c.max_exp(1);
    const int N = opt.quadrature_points;
    double acc = 0;
    int used = 0;
    for (int k = 0; k < N; ++k) {
        double th = 2.0 * M_PI * (k + 0.5) / N;
        Cplx z(std::cos(th), std::sin(th));
        std::vector<Cplx> fib(d2 + 1, Cplx(0, 0));
        for (const auto& [e, a] : c.terms())
            fib[e[1]] += a.convert_to<double>() * std::pow(z, e[0]);
        while (!fib.empty() && std::abs(fib.back()) < 1e-13) fib.pop_back();
        if (fib.empty()) continue;  // fiber degenerates; measure-zero set
        ++used;
        if (fib.size() == 1) {
            acc += std::log(std::abs(fib[0]));
            continue;
        }
        auto roots = aberth_roots(fib, opt.seed + k);
        double lg = std::log(std::abs(fib.back()));
        for (const auto& r : roots) {
            double a = std::abs(r);
            if (a > 1.0) lg += std::log(a);
        }
        acc += lg;
    }
    est.value = used ? std::exp(acc / used) : 0.0;
    est.error_bound = est.value * (2.0 / N + 1e-9);
    return est;
}

}  // namespace

MahlerEstimate mahler_multivariate(const LaurentPoly& p, MahlerMethod method,
                                   const MahlerOptions& opt) {
    if (p.is_zero()) return MahlerEstimate{};
    if (p.vars() == 1) return mahler_univariate(p, opt);
    switch (method) {
        case MahlerMethod::lawton:
            return mahler_lawton(p, opt);
        case MahlerMethod::quadrature:
            return mahler_quadrature2(p, opt);
        case MahlerMethod::automatic:
        default:
            return (p.vars() == 2) ? mahler_quadrature2(p, opt) : mahler_lawton(p, opt);
    }
}

MahlerEstimate mahler(const LaurentPoly& p, MahlerMethod method, const MahlerOptions& opt) {
    return mahler_multivariate(p, method, opt);
}

MahlerEstimate mahler_rational(const LaurentPoly& num, const LaurentPoly& den,
                               const MahlerOptions& opt) {
    if (den.is_zero()) throw std::invalid_argument("mahler_rational: zero denominator");
    auto a = mahler(num, MahlerMethod::automatic, opt);
    auto b = mahler(den, MahlerMethod::automatic, opt);
    MahlerEstimate est;
    est.value = a.value / b.value;
    est.error_bound = a.error_bound / b.value + b.error_bound * est.value / b.value;
    est.method = a.method + "/" + b.method;
    return est;
}

// ------------------------------------------------------------------- sweeps

namespace {

bool tail_monotone_gap(const std::vector<SweepRow>& rows) {
    if (rows.size() < 4) return true;
    std::size_t start = rows.size() - rows.size() / 4 - 1;
    for (std::size_t i = start; i + 1 < rows.size(); ++i)
        if (std::abs(rows[i + 1].gap) > std::abs(rows[i].gap) + 1e-9) return false;
    return true;
}

}  // namespace

FamilySweep family_mahler_sweep(const SurgerySpec& spec, long q_min, long q_max,
                                const MahlerOptions& opt) {
    FamilySweep sweep;
    auto rows = substitution_family(spec, q_min, q_max);
    // target: multivariate invariant of the full link (the surplus factors
    // are products of generalized cyclotomics and do not change the measure)
    WirtingerPresentation p = family_presentation(spec);
    Augmentation eps = standard_augmentation(p, SurgeryImage::full_variable);
    LaurentPoly D = determinant(alexander_matrix(p, eps));
    sweep.target = mahler_multivariate(D, MahlerMethod::lawton, opt).value;
    sweep.target_source = "multivariate invariant";
    for (const auto& row : rows) {
        SweepRow r;
        r.q = row.q;
        r.delta = row.value;
        r.mahler = mahler(row.value, MahlerMethod::automatic, opt).value;
        r.gap = r.mahler - sweep.target;
        sweep.rows.push_back(std::move(r));
    }
    sweep.tail_monotone = tail_monotone_gap(sweep.rows);
    return sweep;
}

FamilySweep zero_linking_sweep(const SurgerySpec& spec, long q_min, long q_max,
                               const MahlerOptions& opt) {
    FamilySweep sweep;
    sweep.normalized_by_q = true;
    auto fam = twist_family_polynomial(spec, 0);
    sweep.target = fam.constant ? 0.0
                                : mahler(fam.P.leading(), MahlerMethod::automatic, opt).value;
    sweep.target_source = "leading coefficient";
    for (long q = q_min; q <= q_max; ++q) {
        SweepRow r;
        r.q = q;
        r.delta = canonical_form(fam.P.evaluate(q));
        r.mahler = mahler(r.delta, MahlerMethod::automatic, opt).value / static_cast<double>(q);
        r.gap = r.mahler - sweep.target;
        sweep.rows.push_back(std::move(r));
    }
    sweep.tail_monotone = tail_monotone_gap(sweep.rows);
    return sweep;
}

// ------------------------------------------------------- torsion growth

namespace {

Int idet_bareiss(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Int cyclic_cover_torsion(const LaurentPoly& delta, int n) {
    if (delta.vars() != 1 || delta.is_zero())
        throw std::invalid_argument("cyclic_cover_torsion: nonzero univariate input required");
    if (n < 1) throw std::invalid_argument("cyclic_cover_torsion: n >= 1 required");
    Int at1 = evaluate_at_one(delta);
    if (at1 != 1 && at1 != -1)
        throw std::invalid_argument("cyclic_cover_torsion: knot normalization Delta(1) = ±1 required");
    auto c = univariate_coeffs(delta);
    const int deg = static_cast<int>(c.size()) - 1;
    Int lead = c.back();
    if (lead == 1 || lead == -1) {
        // |det(C^n - I)| with C the companion matrix of the monic normalization
        std::vector<Int> mc(c.begin(), c.end());
        if (lead == -1)
            for (auto& a : mc) a = -a;
        if (deg == 0) return 1;
        auto mul = [&](const std::vector<std::vector<Int>>& A,
                       const std::vector<std::vector<Int>>& B) {
            std::vector<std::vector<Int>> R(deg, std::vector<Int>(deg, 0));
            for (int i = 0; i < deg; ++i)
                for (int k = 0; k < deg; ++k) {
                    if (A[i][k] == 0) continue;
                    for (int j = 0; j < deg; ++j) R[i][j] += A[i][k] * B[k][j];
                }
            return R;
        };
        std::vector<std::vector<Int>> C(deg, std::vector<Int>(deg, 0));
        for (int i = 0; i + 1 < deg; ++i) C[i + 1][i] = 1;
        for (int i = 0; i < deg; ++i) C[i][deg - 1] = -mc[i];
        std::vector<std::vector<Int>> P(deg, std::vector<Int>(deg, 0));
        for (int i = 0; i < deg; ++i) P[i][i] = 1;
        int e = n;
        auto base = C;
        while (e > 0) {
            if (e & 1) P = mul(P, base);
            base = mul(base, base);
            e >>= 1;
        }
        for (int i = 0; i < deg; ++i) P[i][i] -= 1;
        Int d = idet_bareiss(P);
        return d < 0 ? -d : d;
    }
    // general case: |det(delta(S))| with S the n x n cyclic shift; delta(S) is
    // the circulant with entries c_{(j-i) mod n}
    std::vector<Int> folded(n, 0);
    for (int k = 0; k <= deg; ++k) folded[k % n] += c[k];
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = folded[((j - i) % n + n) % n];
    Int d = idet_bareiss(m);
    return d < 0 ? -d : d;
}

}  // namespace talex

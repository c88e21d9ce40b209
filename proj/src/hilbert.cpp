// Hilbert series numerator of a monomial ideal by recursive pivot
// splitting; dimension and degree fall out of the (1-t) factorization.
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "surml/groebner.hpp"

namespace surml {

namespace {

// Dense integer polynomial in the series variable t.
struct TPoly {
    std::vector<Integer> c;  // c[k] = coefficient of t^k

    static TPoly zero() { return {}; }
    static TPoly one() { return {{Integer(1)}}; }
    bool is_zero() const { return c.empty(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

TPoly add(const TPoly& a, const TPoly& b) {
    TPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), Integer(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    out.trim();
    return out;
}

TPoly mul(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly::zero();
    TPoly out;
    out.c.resize(a.c.size() + b.c.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

TPoly shift(const TPoly& a, std::uint32_t k) {
    if (a.is_zero() || k == 0) return a;
    TPoly out;
    out.c.resize(a.c.size() + k, Integer(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i + k] = a.c[i];
    return out;
}

// 1 - t^d
TPoly one_minus_tk(std::uint32_t d) {
    TPoly out;
    out.c.resize(d + 1, Integer(0));
    out.c[0] = 1;
    out.c[d] = -1;
    return out;
}

Integer eval_at_one(const TPoly& a) {
    Integer s(0);
    for (const Integer& x : a.c) s += x;
    return s;
}

// Quotient of a by (1 - t); requires a(1) == 0.
TPoly divide_one_minus_t(const TPoly& a) {
    // a(t) = (1 - t) q(t) gives the recurrence q_k = a_k + q_{k-1}.
    TPoly q;
    if (a.c.size() <= 1) return TPoly::zero();
    q.c.resize(a.c.size() - 1, Integer(0));
    Integer carry(0);
    for (std::size_t k = 0; k + 1 < a.c.size(); ++k) {
        carry += a.c[k];
        q.c[k] = carry;
    }
    q.trim();
    return q;
}

// Drops generators divisible by another generator; also dedupes.
void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& k : kept)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(m);
    }
    gens = std::move(kept);
}

TPoly numerator(std::vector<Monomial> gens, std::size_t nvars) {
    if (gens.empty()) return TPoly::one();
    for (const Monomial& m : gens)
        if (m.is_one()) return TPoly::zero();

    // Pairwise coprime: the numerator is the product of (1 - t^deg).
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].coprime_with(gens[j])) {
                coprime = false;
                break;
            }
    if (coprime) {
        TPoly out = TPoly::one();
        for (const Monomial& m : gens) out = mul(out, one_minus_tk(m.total_degree()));
        return out;
    }

    // Pivot on the most shared variable at its median positive exponent.
    std::size_t pivot_var = 0, best_count = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
        std::size_t count = 0;
        for (const Monomial& m : gens)
            if (m.exp(v) > 0) ++count;
        if (count > best_count) {
            best_count = count;
            pivot_var = v;
        }
    }
    std::vector<std::uint32_t> exps;
    for (const Monomial& m : gens)
        if (m.exp(pivot_var) > 0) exps.push_back(m.exp(pivot_var));
    std::sort(exps.begin(), exps.end());
    std::uint32_t e = exps[exps.size() / 2];
    Monomial pivot = Monomial::variable(nvars, pivot_var, e);

    // I = (I + <p>) overlap corrected by t^deg(p) * (I : p).
    std::vector<Monomial> plus = gens;
    plus.push_back(pivot);
    minimalize(plus);

    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const Monomial& m : gens) {
        std::vector<std::uint32_t> q = m.exps();
        q[pivot_var] = q[pivot_var] > e ? q[pivot_var] - e : 0;
        colon.emplace_back(std::move(q));
    }
    minimalize(colon);

    return add(numerator(std::move(plus), nvars), shift(numerator(std::move(colon), nvars), e));
}

}  // namespace

std::pair<int, long> monomial_dim_degree(const std::vector<Monomial>& lms, std::size_t nvars) {
    std::vector<Monomial> gens = lms;
    minimalize(gens);
    TPoly num = numerator(std::move(gens), nvars);
    if (num.is_zero()) return {-1, 0};

    std::size_t cancels = 0;
    while (eval_at_one(num) == 0) {
        num = divide_one_minus_t(num);
        ++cancels;
    }
    Integer degree = eval_at_one(num);
    if (degree <= 0 || !degree.fits_slong_p())
        throw std::logic_error("hilbert: unexpected series numerator");
    return {static_cast<int>(nvars - cancels), degree.get_si()};
}

}  // namespace surml

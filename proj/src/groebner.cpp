#include "surml/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "surml/errors.hpp"

namespace surml {

Ideal Ideal::from_generators(std::vector<MultiPoly> gens) {
    if (gens.empty()) throw std::invalid_argument("ideal: empty generator list");
    std::size_t nvars = gens.front().nvars();
    for (const MultiPoly& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("ideal: zero generator");
        if (g.nvars() != nvars) throw std::invalid_argument("ideal: mixed variable counts");
    }
    return Ideal{std::move(gens), nvars};
}

bool GroebnerResult::is_unit_ideal() const {
    return basis.size() == 1 && basis.front().total_degree() == 0;
}

std::vector<Monomial> GroebnerResult::leading_monomials() const {
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const MultiPoly& p : basis) lms.push_back(p.leading_term(order).first);
    return lms;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order) {
    for (const MultiPoly& g : basis)
        if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");

    MultiPoly out(p.nvars());
    MultiPoly work = p;
    while (!work.is_zero()) {
        const auto& [lm, lc] = work.leading_term(order);
        bool reduced = false;
        for (const MultiPoly& g : basis) {
            const auto& [glm, glc] = g.leading_term(order);
            if (!glm.divides(lm)) continue;
            MultiPoly factor(p.nvars());
            factor.add_term(lm.quotient(glm), lc / glc);
            work -= factor * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            out.add_term(lm, lc);
            MultiPoly single(p.nvars());
            single.add_term(lm, lc);
            work -= single;
        }
    }
    return out;
}

namespace {

void check_deadline(const Deadline& deadline) {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw ComputeTimeout("groebner: compute budget exceeded");
}

struct ITerm {
    Monomial m;
    Integer c;
};

// Terms sorted strictly descending under the active order; coefficients
// integer, content 1, leading coefficient positive.
struct IntPoly {
    std::vector<ITerm> t;
    bool empty() const { return t.empty(); }
};

int compare_shifted(const Monomial& a, const Monomial& sa, const Monomial& b, const Monomial& sb,
                    const MonomialOrder& order) {
    if (order.kind == OrderKind::Lex) {
        for (std::uint32_t v : order.perm) {
            std::uint32_t ea = a.exp(v) + sa.exp(v);
            std::uint32_t eb = b.exp(v) + sb.exp(v);
            if (ea != eb) return ea < eb ? -1 : 1;
        }
        return 0;
    }
    std::uint32_t da = a.total_degree() + sa.total_degree();
    std::uint32_t db = b.total_degree() + sb.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = order.perm.size(); i-- > 0;) {
        std::uint32_t v = order.perm[i];
        std::uint32_t ea = a.exp(v) + sa.exp(v);
        std::uint32_t eb = b.exp(v) + sb.exp(v);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

// alpha * su * p - beta * sv * q, merged into descending order.
IntPoly lincomb(const Integer& alpha, const Monomial& su, const IntPoly& p, const Integer& beta,
                const Monomial& sv, const IntPoly& q, const MonomialOrder& order) {
    IntPoly out;
    out.t.reserve(p.t.size() + q.t.size());
    std::size_t i = 0, j = 0;
    while (i < p.t.size() && j < q.t.size()) {
        int cmp = compare_shifted(p.t[i].m, su, q.t[j].m, sv, order);
        if (cmp > 0) {
            out.t.push_back({p.t[i].m.times(su), alpha * p.t[i].c});
            ++i;
        } else if (cmp < 0) {
            out.t.push_back({q.t[j].m.times(sv), -(beta * q.t[j].c)});
            ++j;
        } else {
            Integer c = alpha * p.t[i].c - beta * q.t[j].c;
            if (c != 0) out.t.push_back({p.t[i].m.times(su), std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < p.t.size(); ++i) out.t.push_back({p.t[i].m.times(su), alpha * p.t[i].c});
    for (; j < q.t.size(); ++j) out.t.push_back({q.t[j].m.times(sv), -(beta * q.t[j].c)});
    return out;
}

Integer coefficient_content(const std::vector<ITerm>& terms) {
    Integer g(0);
    for (const ITerm& t : terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IntPoly& p) {
    if (p.empty()) return;
    Integer g = coefficient_content(p.t);
    if (p.t.front().c < 0) g = -g;
    if (g != 1)
        for (ITerm& t : p.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

IntPoly from_multipoly(const MultiPoly& p, const MonomialOrder& order) {
    Integer den_lcm(1);
    for (const auto& [m, c] : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    IntPoly out;
    out.t.reserve(p.nterms());
    for (const auto& [m, c] : p.terms()) {
        Rational scaled = c * Rational(den_lcm);
        out.t.push_back({m, scaled.get_num()});
    }
    std::sort(out.t.begin(), out.t.end(),
              [&](const ITerm& a, const ITerm& b) { return order.greater(a.m, b.m); });
    make_primitive(out);
    return out;
}

MultiPoly to_monic_multipoly(const IntPoly& p, std::size_t nvars) {
    MultiPoly out(nvars);
    if (p.empty()) return out;
    Rational lead(p.t.front().c);
    for (const ITerm& t : p.t) out.add_term(t.m, Rational(t.c) / lead);
    return out;
}

struct Reducer {
    const std::vector<IntPoly>* basis;
    const std::vector<char>* alive;  // nullptr means all alive
    const MonomialOrder* order;
    Monomial one;

    // Full normal form up to a positive scalar; primitive on return.
    // The invariant throughout is that done + work is a positive-scalar
    // multiple of the input modulo the basis ideal, so moved-out terms
    // must be rescaled together with the working remainder.
    IntPoly reduce(IntPoly work, const Deadline& deadline, std::size_t skip_index = SIZE_MAX) const {
        std::vector<ITerm> done;
        int steps = 0;
        while (!work.empty()) {
            if (++steps % 64 == 0) check_deadline(deadline);
            const ITerm& lt = work.t.front();
            std::size_t best = SIZE_MAX;
            std::size_t best_terms = SIZE_MAX;
            for (std::size_t k = 0; k < basis->size(); ++k) {
                if (k == skip_index || (alive && !(*alive)[k])) continue;
                const IntPoly& g = (*basis)[k];
                if (!g.t.front().m.divides(lt.m)) continue;
                if (g.t.size() < best_terms) {
                    best = k;
                    best_terms = g.t.size();
                }
            }
            if (best == SIZE_MAX) {
                done.push_back(std::move(work.t.front()));
                work.t.erase(work.t.begin());
                continue;
            }
            const IntPoly& g = (*basis)[best];
            Integer d;
            mpz_gcd(d.get_mpz_t(), lt.c.get_mpz_t(), g.t.front().c.get_mpz_t());
            Integer alpha = g.t.front().c / d;
            Integer beta = lt.c / d;
            if (alpha < 0) {
                alpha = -alpha;
                beta = -beta;
            }
            Monomial u = lt.m.quotient(g.t.front().m);
            work = lincomb(alpha, one, work, beta, u, g, *order);
            if (alpha != 1)
                for (ITerm& t : done) t.c *= alpha;
            if (steps % 16 == 0 && !done.empty()) {
                Integer cont = coefficient_content(done);
                if (cont != 1 && !work.empty()) {
                    Integer wcont = coefficient_content(work.t);
                    mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), wcont.get_mpz_t());
                }
                if (cont > 1) {
                    for (ITerm& t : done)
                        mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), cont.get_mpz_t());
                    for (ITerm& t : work.t)
                        mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), cont.get_mpz_t());
                }
            }
        }
        IntPoly out;
        out.t = std::move(done);
        make_primitive(out);
        return out;
    }
};

struct PairRec {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t deg;
};

IntPoly spoly(const IntPoly& f, const IntPoly& g, const Monomial& lcm, const MonomialOrder& order) {
    Monomial uf = lcm.quotient(f.t.front().m);
    Monomial ug = lcm.quotient(g.t.front().m);
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.t.front().c.get_mpz_t(), g.t.front().c.get_mpz_t());
    Integer alpha = g.t.front().c / d;
    Integer beta = f.t.front().c / d;
    return lincomb(alpha, uf, f, beta, ug, g, order);
}

// Gebauer-Moeller pair update: prunes the pending pair set with the chain
// criterion and filters the new pairs with the coprimality criterion.
void gm_update(std::vector<PairRec>& pairs, const std::vector<IntPoly>& basis, std::size_t t,
               const MonomialOrder& order) {
    const Monomial& lmh = basis[t].t.front().m;

    struct Cand {
        std::size_t i;
        Monomial lcm;
        bool keep = true;
    };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
        cand.push_back({i, Monomial::lcm(basis[i].t.front().m, lmh)});

    // Drop candidates whose lcm is a proper multiple of another candidate
    // lcm; among equal lcms keep the first unless some member is coprime.
    for (std::size_t a = 0; a < cand.size(); ++a) {
        if (!cand[a].keep) continue;
        for (std::size_t b = 0; b < cand.size(); ++b) {
            if (a == b || !cand[b].keep) continue;
            if (cand[b].lcm == cand[a].lcm) {
                if (b < a) {
                    cand[a].keep = false;
                    break;
                }
            } else if (cand[b].lcm.divides(cand[a].lcm)) {
                cand[a].keep = false;
                break;
            }
        }
    }
    for (Cand& c : cand) {
        if (!c.keep) continue;
        // Coprimality covers the whole equal-lcm group.
        for (const Cand& other : cand) {
            if (other.lcm == c.lcm &&
                basis[other.i].t.front().m.coprime_with(lmh)) {
                c.keep = false;
                break;
            }
        }
    }

    // Chain criterion against the pending old pairs.
    std::erase_if(pairs, [&](const PairRec& pr) {
        if (!lmh.divides(pr.lcm)) return false;
        if (Monomial::lcm(basis[pr.i].t.front().m, lmh) == pr.lcm) return false;
        if (Monomial::lcm(basis[pr.j].t.front().m, lmh) == pr.lcm) return false;
        return true;
    });

    for (Cand& c : cand)
        if (c.keep) pairs.push_back({c.i, t, c.lcm, c.lcm.total_degree()});
}

}  // namespace

GroebnerResult buchberger(const Ideal& ideal, const MonomialOrder& order,
                          const Deadline& deadline) {
    if (ideal.generators.empty()) throw std::invalid_argument("buchberger: empty generator list");
    if (order.nvars() != ideal.nvars)
        throw std::invalid_argument("buchberger: order variable count mismatch");

    std::size_t nvars = ideal.nvars;
    auto unit_result = [&]() {
        GroebnerResult r;
        r.basis = {MultiPoly::constant(nvars, Rational(1))};
        r.order = order;
        r.dimension = -1;
        r.degree = 0;
        return r;
    };

    std::vector<IntPoly> basis;
    std::vector<PairRec> pairs;
    Reducer reducer{&basis, nullptr, &order, Monomial(nvars)};

    for (const MultiPoly& gen : ideal.generators) {
        IntPoly g = from_multipoly(gen, order);
        if (g.empty()) throw std::invalid_argument("buchberger: zero generator");
        // Interreducing incoming generators keeps the initial pair set lean.
        g = reducer.reduce(std::move(g), deadline);
        if (g.empty()) continue;
        if (g.t.front().m.is_one()) return unit_result();
        basis.push_back(std::move(g));
        gm_update(pairs, basis, basis.size() - 1, order);
    }
    if (basis.empty()) throw std::invalid_argument("buchberger: all generators reduce to zero");

    while (!pairs.empty()) {
        check_deadline(deadline);
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const PairRec &a = pairs[k], &b = pairs[best];
            if (a.deg != b.deg) {
                if (a.deg < b.deg) best = k;
                continue;
            }
            int cmp = order.compare(a.lcm, b.lcm);
            if (cmp != 0) {
                if (cmp < 0) best = k;
                continue;
            }
            if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = k;
        }
        PairRec pr = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        IntPoly s = spoly(basis[pr.i], basis[pr.j], pr.lcm, order);
        IntPoly h = reducer.reduce(std::move(s), deadline);
        if (h.empty()) continue;
        if (h.t.front().m.is_one()) return unit_result();
        basis.push_back(std::move(h));
        gm_update(pairs, basis, basis.size() - 1, order);
    }

    // Minimalize: drop elements whose leading monomial is a multiple of
    // another's.
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order.less(basis[a].t.front().m, basis[b].t.front().m);
    });
    std::vector<char> alive(basis.size(), 0);
    std::vector<std::size_t> kept;
    for (std::size_t i : idx) {
        bool redundant = false;
        for (std::size_t j : kept)
            if (basis[j].t.front().m.divides(basis[i].t.front().m)) {
                redundant = true;
                break;
            }
        if (!redundant) {
            kept.push_back(i);
            alive[i] = 1;
        }
    }

    // Tail-reduce the survivors to the unique reduced basis.
    Reducer final_reducer{&basis, &alive, &order, Monomial(nvars)};
    GroebnerResult result;
    result.order = order;
    for (std::size_t i : kept) {
        IntPoly r = final_reducer.reduce(basis[i], deadline, i);
        result.basis.push_back(to_monic_multipoly(r, nvars));
    }

    auto [dim, degree] = hilbert_dim_degree(result);
    result.dimension = dim;
    result.degree = degree;
    return result;
}

std::pair<int, long> hilbert_dim_degree(const GroebnerResult& gb) {
    std::size_t nvars = gb.order.nvars();
    if (gb.is_unit_ideal()) return {-1, 0};
    return monomial_dim_degree(gb.leading_monomials(), nvars);
}

std::vector<Monomial> standard_monomials(const GroebnerResult& gb) {
    auto [dim, degree] = hilbert_dim_degree(gb);
    if (dim != 0) throw std::domain_error("standard_monomials: ideal dimension is not zero");

    std::vector<Monomial> lms = gb.leading_monomials();
    std::vector<Monomial> out;
    std::vector<Monomial> queue{Monomial(gb.order.nvars())};
    std::set<Monomial> seen{queue.front()};
    while (!queue.empty()) {
        Monomial m = std::move(queue.back());
        queue.pop_back();
        bool in_ideal = false;
        for (const Monomial& lm : lms)
            if (lm.divides(m)) {
                in_ideal = true;
                break;
            }
        if (in_ideal) continue;
        out.push_back(m);
        for (std::size_t v = 0; v < gb.order.nvars(); ++v) {
            Monomial next = m.times(Monomial::variable(gb.order.nvars(), v));
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
    return out;
}

}  // namespace surml

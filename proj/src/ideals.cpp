#include "cid/ideals.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>

#include "cid/errors.hpp"

namespace cid {

namespace {

// Total order on polynomials used to keep bases deterministic: leading
// monomial, then leading coefficient, then remaining terms.
bool poly_less(const Polynomial& a, const Polynomial& b, MonomialOrder order) {
    const auto& la = a.leading_term(order);
    const auto& lb = b.leading_term(order);
    if (la.mono != lb.mono) return monomial_less(la.mono, lb.mono, order);
    if (la.coeff != lb.coeff) return la.coeff < lb.coeff;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        if (ta[i].mono != tb[i].mono) return monomial_less(ta[i].mono, tb[i].mono, order);
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
    }
    return ta.size() < tb.size();
}

Polynomial sign_normalized(const Polynomial& p, MonomialOrder order) {
    if (p.is_zero()) return p;
    return p.leading_term(order).coeff < 0 ? -p : p;
}

// Least non-negative residue step: q = floor(c/a), nonzero iff c is outside
// [0, a).
Int floor_quotient(const Int& c, const Int& a) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    return q;
}

struct Reducer {
    const std::vector<Polynomial>* basis;
    MonomialOrder order;
    long step_cap;
    long* steps;

    void bump() const {
        if (++*steps > step_cap)
            throw resource_limit_error("groebner: reduction step cap exceeded", basis->size(), *steps);
    }

    Polynomial run(Polynomial p) const {
        while (!p.is_zero()) {
            // Highest term (under the active order) that some basis element
            // can shrink or cancel.
            const Term* target = nullptr;
            const Polynomial* reducer = nullptr;
            Int quotient;
            for (const auto& t : p.terms()) {
                if (target && !monomial_less(target->mono, t.mono, order)) continue;
                for (const auto& g : *basis) {
                    const Term& lt = g.leading_term(order);
                    if (!lt.mono.divides(t.mono)) continue;
                    Int q = floor_quotient(t.coeff, lt.coeff);
                    if (q == 0) continue;
                    target = &t;
                    reducer = &g;
                    quotient = std::move(q);
                    break;
                }
                // Stored terms descend in degrevlex, so the first hit is
                // already the highest.
                if (target && order == MonomialOrder::degrevlex) break;
            }
            if (!target) break;
            bump();
            p = p.add_scaled(-quotient, reducer->leading_term(order).mono.quotient_of(target->mono), *reducer);
        }
        return p;
    }
};

struct Pair {
    int lcm_degree;
    int i, j;

    auto operator<=>(const Pair&) const = default;
};

} // namespace

GroebnerBasis strong_groebner(const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
    const int nvars = gens.empty() ? 0 : gens.front().nvars();
    for (const auto& g : gens)
        if (g.nvars() != nvars)
            throw std::invalid_argument("groebner: generators with mismatched ambient variables");
    GroebnerBasis gb{nvars, opts.order, {}};

    long steps = 0;
    Reducer red{&gb.elems, opts.order, opts.step_cap, &steps};

    // Interreduce the input: each generator is replaced by its remainder
    // against the ones already kept, which collapses the heavily redundant
    // minor lists this engine typically receives.
    std::vector<Polynomial> pending;
    for (const auto& g : gens)
        if (!g.is_zero()) pending.push_back(sign_normalized(g, opts.order));
    std::sort(pending.begin(), pending.end(),
              [&](const Polynomial& a, const Polynomial& b) { return poly_less(a, b, opts.order); });
    pending.erase(std::unique(pending.begin(), pending.end()), pending.end());

    const Polynomial one = Polynomial::constant(nvars, 1);

    std::set<Pair> queue;
    auto push_pairs_for = [&](int j) {
        const Term& ltj = gb.elems[j].leading_term(opts.order);
        for (int i = 0; i < j; ++i) {
            const Term& lti = gb.elems[i].leading_term(opts.order);
            queue.insert({Monomial::lcm(lti.mono, ltj.mono).total_degree(), i, j});
        }
    };
    auto add_element = [&](Polynomial p) -> bool { // true when the ideal is <1>
        if (p.is_constant() && p.constant_value() == 1) return true;
        gb.elems.push_back(std::move(p));
        push_pairs_for(static_cast<int>(gb.elems.size()) - 1);
        return false;
    };

    for (const auto& g : pending) {
        Polynomial r = red.run(g);
        if (r.is_zero()) continue;
        if (add_element(sign_normalized(r, opts.order))) return GroebnerBasis{nvars, opts.order, {one}};
    }

    while (!queue.empty()) {
        const Pair pair = *queue.begin();
        queue.erase(queue.begin());
        // Copies: additions below may reallocate the basis vector.
        const Polynomial f = gb.elems[pair.i];
        const Polynomial g = gb.elems[pair.j];
        const Term& ltf = f.leading_term(opts.order);
        const Term& ltg = g.leading_term(opts.order);
        const Monomial lcm_mono = Monomial::lcm(ltf.mono, ltg.mono);
        const Monomial mf = ltf.mono.quotient_of(lcm_mono);
        const Monomial mg = ltg.mono.quotient_of(lcm_mono);

        Int coeff_gcd, bez_u, bez_v;
        mpz_gcdext(coeff_gcd.get_mpz_t(), bez_u.get_mpz_t(), bez_v.get_mpz_t(), ltf.coeff.get_mpz_t(),
                   ltg.coeff.get_mpz_t());
        const Int coeff_lcm = ltf.coeff / coeff_gcd * ltg.coeff;

        bool added_s = false, added_g = false;

        // S-polynomial; skippable only in the integer-valid case of coprime
        // leading monomials AND coprime leading coefficients.
        const bool mono_coprime = lcm_mono.total_degree() == ltf.mono.total_degree() + ltg.mono.total_degree();
        if (!(mono_coprime && coeff_gcd == 1)) {
            Polynomial spoly =
                Polynomial(nvars).add_scaled(coeff_lcm / ltf.coeff, mf, f).add_scaled(-(coeff_lcm / ltg.coeff), mg, g);
            Polynomial r = red.run(std::move(spoly));
            if (!r.is_zero()) {
                added_s = true;
                if (add_element(sign_normalized(r, opts.order))) return GroebnerBasis{nvars, opts.order, {one}};
            }
        }

        // GCD-polynomial with leading term gcd(lc f, lc g) * lcm monomial;
        // when one leading coefficient divides the other it is a monomial
        // multiple of that element and reduces to 0 trivially.
        if (ltf.coeff % ltg.coeff != 0 && ltg.coeff % ltf.coeff != 0) {
            Polynomial gpoly = Polynomial(nvars).add_scaled(bez_u, mf, f).add_scaled(bez_v, mg, g);
            Polynomial r = red.run(std::move(gpoly));
            if (!r.is_zero()) {
                added_g = true;
                if (add_element(sign_normalized(r, opts.order))) return GroebnerBasis{nvars, opts.order, {one}};
            }
        }

        if (opts.trace)
            *opts.trace << "pair (" << pair.i << "," << pair.j << ") lcm_deg=" << pair.lcm_degree
                        << " spoly=" << (added_s ? "new" : "0") << " gpoly=" << (added_g ? "new" : "0")
                        << " basis=" << gb.elems.size() << "\n";
    }

    std::sort(gb.elems.begin(), gb.elems.end(),
              [&](const Polynomial& a, const Polynomial& b) { return poly_less(a, b, opts.order); });
    gb.elems.erase(std::unique(gb.elems.begin(), gb.elems.end()), gb.elems.end());
    return gb;
}

Polynomial reduce(const Polynomial& p, const GroebnerBasis& gb) {
    long steps = 0;
    // Reduction terminates unconditionally; the cap only guards basis builds.
    Reducer red{&gb.elems, gb.order, std::numeric_limits<long>::max(), &steps};
    return red.run(p);
}

bool is_trivial(const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
    bool any = false;
    bool all_zero_constant_term = true;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        any = true;
        if (g.is_constant() && (g.constant_value() == 1 || g.constant_value() == -1)) return true;
        const auto& terms = g.terms();
        if (!terms.empty() && terms.back().mono.is_constant()) all_zero_constant_term = false;
    }
    if (!any) return false;
    // Every generator vanishing at the origin keeps 1 out of the ideal.
    if (all_zero_constant_term) return false;
    GroebnerBasis gb = strong_groebner(gens, opts);
    return reduce(Polynomial::constant(gb.nvars, 1), gb).is_zero();
}

bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                  const GroebnerOptions& opts) {
    const GroebnerBasis gb_a = strong_groebner(a, opts);
    const GroebnerBasis gb_b = strong_groebner(b, opts);
    for (const auto& g : a)
        if (!reduce(g, gb_b).is_zero()) return false;
    for (const auto& g : b)
        if (!reduce(g, gb_a).is_zero()) return false;
    return true;
}

std::optional<NontrivialityWitness> find_nontriviality_witness(const std::vector<Polynomial>& gens) {
    int nvars = 0;
    for (const auto& g : gens) nvars = std::max(nvars, g.nvars());
    static const long primes[] = {2, 3, 5};
    static const long coords[] = {-1, 0, 1, 2};
    std::vector<long> point(nvars, 0);
    for (long p : primes) {
        std::vector<std::size_t> pick(nvars, 0);
        while (true) {
            for (int i = 0; i < nvars; ++i) point[i] = coords[pick[i]];
            bool all_vanish = true;
            for (const auto& g : gens) {
                std::vector<Int> ipoint(point.begin(), point.end());
                Int v = g.evaluate(ipoint);
                if (v % p != 0) {
                    all_vanish = false;
                    break;
                }
            }
            if (all_vanish) return NontrivialityWitness{p, point};
            int i = 0;
            while (i < nvars && pick[i] == 3) pick[i++] = 0;
            if (i == nvars) break;
            ++pick[i];
        }
    }
    return std::nullopt;
}

} // namespace cid

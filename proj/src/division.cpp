#include "germcalc/division.hpp"

namespace germcalc {

namespace {

struct Reducer {
    const Poly* poly;
    Monomial lm;
    Scalar lc;
    unsigned ecart;     // total_degree(poly) - total_degree(lm)
    long divisor_index; // >=0: one of the original divisors; <0: inserted
};

unsigned ecart_of(const Poly& p, const Monomial& lm) {
    return (unsigned)p.total_degree() - lm.total_degree();
}

// Global full-reduction division. Every remainder term ends up irreducible.
DivisionResult divide_global(const Poly& p, const std::vector<Poly>& divisors,
                             const MonomialOrder& ord, bool track) {
    DivisionResult res{Poly(p.ctx()), {}, Poly::constant(p.ctx(), Scalar(1))};
    if (track) res.cofactors.assign(divisors.size(), Poly(p.ctx()));
    std::vector<std::pair<Monomial, Scalar>> lts;
    lts.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.is_zero()) throw error("divide: zero divisor");
        lts.push_back(g.leading_term(ord));
    }
    Poly h = p;
    while (!h.is_zero()) {
        auto [lm, lc] = h.leading_term(ord);
        bool reduced = false;
        for (size_t j = 0; j < divisors.size(); ++j) {
            if (!lts[j].first.divides(lm)) continue;
            Monomial q = lm.quotient_by(lts[j].first);
            Scalar s = lc / lts[j].second;
            h -= divisors[j].times_term(q, s);
            if (track) res.cofactors[j].add_term(q, s);
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.add_term(lm, lc);
            h.add_term(lm, -lc);
        }
    }
    return res;
}

// Mora weak normal form for local orders. Only the leading term is reduced;
// the algorithm may insert intermediate results as extra reducers, which is
// what makes it terminate and is also where the unit comes from.
DivisionResult divide_mora(const Poly& p, const std::vector<Poly>& divisors,
                           const MonomialOrder& ord, bool track) {
    const VarContext& ctx = p.ctx();
    DivisionResult res{Poly(ctx), {}, Poly::constant(ctx, Scalar(1))};
    if (track) res.cofactors.assign(divisors.size(), Poly(ctx));
    if (p.is_zero()) {
        res.remainder = p;
        return res;
    }

    struct Inserted {
        Poly poly;
        Poly u;                  // identity snapshot: poly = u*p - sum q_i*divisor_i
        std::vector<Poly> q;
    };
    std::vector<Reducer> table;
    std::vector<Inserted> extras;
    std::vector<std::pair<Monomial, Scalar>> div_lts;
    for (size_t j = 0; j < divisors.size(); ++j) {
        if (divisors[j].is_zero()) throw error("divide: zero divisor");
        auto lt = divisors[j].leading_term(ord);
        table.push_back({&divisors[j], lt.first, lt.second,
                         ecart_of(divisors[j], lt.first), (long)j});
    }

    Poly h = p;
    Poly u = Poly::constant(ctx, Scalar(1));
    std::vector<Poly> q(track ? divisors.size() : 0, Poly(ctx));

    while (!h.is_zero()) {
        auto [lm, lc] = h.leading_term(ord);
        unsigned h_ecart = ecart_of(h, lm);
        long best = -1;
        for (size_t t = 0; t < table.size(); ++t) {
            if (!table[t].lm.divides(lm)) continue;
            if (best < 0 || table[t].ecart < table[(size_t)best].ecart) best = (long)t;
        }
        if (best < 0) break;  // leading term irreducible: weak normal form reached
        Reducer red = table[(size_t)best];
        // Copy now: inserting below may reallocate `extras` and move the
        // polynomial this reducer points at.
        Poly red_poly = *red.poly;
        if (red.ecart > h_ecart) {
            // Remember h itself as a reducer before using a worse-ecart one.
            extras.push_back({h, u, q});
            const Inserted& ins = extras.back();
            table.push_back({&ins.poly, lm, lc, h_ecart, -(long)extras.size()});
            // extras may reallocate; refresh stored pointers
            for (size_t t = 0; t < table.size(); ++t)
                if (table[t].divisor_index < 0)
                    table[t].poly = &extras[(size_t)(-table[t].divisor_index - 1)].poly;
        }
        Monomial qm = lm.quotient_by(red.lm);
        Scalar qs = lc / red.lc;
        h -= red_poly.times_term(qm, qs);
        if (track) {
            if (red.divisor_index >= 0) {
                q[(size_t)red.divisor_index].add_term(qm, qs);
            } else {
                const Inserted& ins = extras[(size_t)(-red.divisor_index - 1)];
                u -= ins.u.times_term(qm, qs);
                for (size_t j = 0; j < q.size(); ++j) q[j] -= ins.q[j].times_term(qm, qs);
            }
        }
    }

    res.remainder = h;
    if (track) {
        res.unit = u;
        res.cofactors = std::move(q);
        if (res.unit.constant_term().is_zero())
            throw error("divide (Mora): unit degenerated; this should be impossible");
    }
    return res;
}

}  // namespace

DivisionResult divide(const Poly& p, const std::vector<Poly>& divisors,
                      const MonomialOrder& ord) {
    if (divisors.empty()) throw error("divide: empty divisor list");
    for (const auto& g : divisors)
        if (g.ctx() != p.ctx()) throw error("divide: context mismatch");
    return ord.is_local() ? divide_mora(p, divisors, ord, true)
                          : divide_global(p, divisors, ord, true);
}

Poly reduce_only(const Poly& p, const std::vector<Poly>& divisors, const MonomialOrder& ord) {
    if (divisors.empty()) return p;
    return ord.is_local() ? divide_mora(p, divisors, ord, false).remainder
                          : divide_global(p, divisors, ord, false).remainder;
}

}  // namespace germcalc

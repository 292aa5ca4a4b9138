#include "germcalc/order.hpp"

#include <algorithm>

namespace germcalc {

MonomialOrder MonomialOrder::block(std::vector<size_t> front_vars, OrderKind front,
                                   OrderKind back) {
    if (front == OrderKind::Block || back == OrderKind::Block ||
        front == OrderKind::LocalNegDegRevLex || back == OrderKind::LocalNegDegRevLex)
        throw error("MonomialOrder::block: inner orders must be lex or degrevlex");
    if (front_vars.empty()) throw error("MonomialOrder::block: empty front block");
    std::sort(front_vars.begin(), front_vars.end());
    front_vars.erase(std::unique(front_vars.begin(), front_vars.end()), front_vars.end());
    MonomialOrder o(OrderKind::Block);
    o.front_ = std::move(front_vars);
    o.front_kind_ = front;
    o.back_kind_ = back;
    return o;
}

namespace {

int cmp_lex(const uint32_t* a, const uint32_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_degrevlex(const uint32_t* a, const uint32_t* b, size_t n) {
    long da = 0, db = 0;
    for (size_t i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    // Same degree: larger is the one whose LAST differing exponent is smaller.
    for (size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_kind(OrderKind k, const uint32_t* a, const uint32_t* b, size_t n) {
    switch (k) {
        case OrderKind::Lex:
            return cmp_lex(a, b, n);
        case OrderKind::DegRevLex:
            return cmp_degrevlex(a, b, n);
        default:
            throw error("cmp_kind: unsupported inner order");
    }
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity()) throw error("MonomialOrder::compare: arity mismatch");
    size_t n = a.arity();
    const uint32_t* ea = a.exps().data();
    const uint32_t* eb = b.exps().data();
    switch (kind_) {
        case OrderKind::Lex:
            return cmp_lex(ea, eb, n);
        case OrderKind::DegRevLex:
            return cmp_degrevlex(ea, eb, n);
        case OrderKind::LocalNegDegRevLex: {
            unsigned da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db ? 1 : -1;  // lower degree ranks higher
            return cmp_degrevlex(ea, eb, n);
        }
        case OrderKind::Block: {
            // Compare restrictions to the front block, then the rest.
            std::vector<uint32_t> fa, fb, ra, rb;
            fa.reserve(front_.size());
            fb.reserve(front_.size());
            size_t fi = 0;
            for (size_t i = 0; i < n; ++i) {
                if (fi < front_.size() && front_[fi] == i) {
                    fa.push_back(ea[i]);
                    fb.push_back(eb[i]);
                    ++fi;
                } else {
                    ra.push_back(ea[i]);
                    rb.push_back(eb[i]);
                }
            }
            if (int c = cmp_kind(front_kind_, fa.data(), fb.data(), fa.size())) return c;
            return cmp_kind(back_kind_, ra.data(), rb.data(), ra.size());
        }
    }
    throw error("MonomialOrder::compare: unreachable");
}

std::string MonomialOrder::key() const {
    std::string k;
    switch (kind_) {
        case OrderKind::Lex: k = "lex"; break;
        case OrderKind::DegRevLex: k = "degrevlex"; break;
        case OrderKind::LocalNegDegRevLex: k = "local"; break;
        case OrderKind::Block: {
            k = "block";
            k += (front_kind_ == OrderKind::Lex) ? "[lex;" : "[drl;";
            k += (back_kind_ == OrderKind::Lex) ? "lex]" : "drl]";
            for (size_t v : front_) k += ":" + std::to_string(v);
            break;
        }
    }
    return k;
}

}  // namespace germcalc

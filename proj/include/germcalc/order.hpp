#pragma once

#include <string>
#include <vector>

#include "germcalc/monomial.hpp"

namespace germcalc {

enum class OrderKind { Lex, DegRevLex, LocalNegDegRevLex, Block };

/// Monomial order. The Block kind compares a designated front block of
/// variables first (so they are "greatest": any monomial involving a front
/// variable beats any monomial without one), which is what elimination needs.
/// LocalNegDegRevLex ranks lower total degree higher (1 is the largest
/// monomial), tie-broken like degrevlex; it is the local order used for germ
/// computations and is not a well-order, so division through it runs Mora's
/// algorithm.
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex); }
    static MonomialOrder local() { return MonomialOrder(OrderKind::LocalNegDegRevLex); }
    static MonomialOrder block(std::vector<size_t> front_vars,
                               OrderKind front = OrderKind::DegRevLex,
                               OrderKind back = OrderKind::DegRevLex);

    OrderKind kind() const { return kind_; }
    bool is_local() const { return kind_ == OrderKind::LocalNegDegRevLex; }
    bool is_global() const { return !is_local(); }
    const std::vector<size_t>& front_vars() const { return front_; }

    /// >0 if a comes after b in the order (a is larger), <0 if smaller, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    /// Stable string key (cache lookups, deterministic maps).
    std::string key() const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.front_ == b.front_ && a.front_kind_ == b.front_kind_ &&
               a.back_kind_ == b.back_kind_;
    }

private:
    explicit MonomialOrder(OrderKind k) : kind_(k) {}

    OrderKind kind_;
    std::vector<size_t> front_;  // Block only
    OrderKind front_kind_ = OrderKind::DegRevLex;
    OrderKind back_kind_ = OrderKind::DegRevLex;
};

}  // namespace germcalc

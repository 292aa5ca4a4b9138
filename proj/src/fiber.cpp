#include "germcalc/fiber.hpp"

#include <algorithm>
#include <map>

namespace germcalc {

namespace {

// Joint variable list: source names first, then target names mangled past any
// collision (the joint context is internal; results use the original target).
std::vector<std::string> joint_names(const VarContext& src, const VarContext& tgt) {
    std::vector<std::string> names;
    for (size_t i = 0; i < src.size(); ++i) names.push_back(src.name(i));
    for (size_t i = 0; i < tgt.size(); ++i) {
        std::string n = tgt.name(i);
        while (std::find(names.begin(), names.end(), n) != names.end()) n += "~";
        names.push_back(n);
    }
    return names;
}

}  // namespace

FiberAlgebra::FiberAlgebra(const VarContext& source, std::vector<Poly> components,
                           const VarContext& target)
    : source_(source),
      target_(target),
      joint_(VarContext::plain(joint_names(source, target))),
      ord_(MonomialOrder::degrevlex()) {
    size_t ns = source.size(), nt = target.size();
    if (components.size() != nt) {
        failure_ = "component count does not match the target arity";
        return;
    }
    src_to_joint_.resize(ns);
    for (size_t i = 0; i < ns; ++i) src_to_joint_[i] = i;
    tgt_to_joint_.resize(nt);
    for (size_t i = 0; i < nt; ++i) tgt_to_joint_[i] = ns + i;

    std::vector<size_t> front(ns);
    for (size_t i = 0; i < ns; ++i) front[i] = i;
    ord_ = MonomialOrder::block(front);

    std::vector<Poly> gens;
    for (size_t j = 0; j < nt; ++j) {
        Poly g = reindex(components[j], joint_, src_to_joint_);
        g -= Poly::variable(joint_, ns + j);
        gens.push_back(g);
    }
    gb_ = standard_basis_of(gens, ord_);

    // The module basis in x exists (with this detection) when every leading
    // term is a pure source monomial with the staircase finite.
    std::vector<Monomial> lts;
    for (const Poly& g : gb_) {
        Monomial lt = g.leading_monomial(ord_);
        bool has_src = false, has_tgt = false;
        for (size_t i = 0; i < ns; ++i) has_src |= lt[i] > 0;
        for (size_t i = ns; i < ns + nt; ++i) has_tgt |= lt[i] > 0;
        if (has_tgt && !has_src) {
            failure_ = "the map components satisfy a relation over the target";
            return;
        }
        if (has_tgt) {
            failure_ = "mixed leading term; no monomial module basis detected";
            return;
        }
        lts.push_back(lt);
    }
    std::vector<uint32_t> bound(ns, 0);
    for (const Monomial& lt : lts) {
        size_t support = 0, only = 0;
        for (size_t v = 0; v < ns; ++v)
            if (lt[v] > 0) {
                ++support;
                only = v;
            }
        if (support == 1 && (bound[only] == 0 || lt[only] < bound[only])) bound[only] = lt[only];
    }
    size_t cells = 1;
    for (size_t v = 0; v < ns; ++v) {
        if (bound[v] == 0) {
            failure_ = "fiber of infinite length over the target";
            return;
        }
        cells *= bound[v];
        if (cells > 2000000) {
            failure_ = "fiber basis too large";
            return;
        }
    }
    std::vector<uint32_t> e(ns, 0);
    for (size_t idx = 0; idx < cells; ++idx) {
        size_t r = idx;
        for (size_t v = 0; v < ns; ++v) {
            e[v] = (uint32_t)(r % bound[v]);
            r /= bound[v];
        }
        Monomial m(ns);
        for (size_t v = 0; v < ns; ++v) m.at(v) = e[v];
        bool reducible = false;
        for (const Monomial& lt : lts) {
            Monomial lt_src(ns);
            for (size_t v = 0; v < ns; ++v) lt_src.at(v) = lt[v];
            if (lt_src.divides(m)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis_.push_back(m);
    }
    std::sort(basis_.begin(), basis_.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return MonoLexLess{}(a, b);
    });
}

std::optional<PolyMatrix> FiberAlgebra::mult_matrix(const Poly& h) const {
    if (!ok()) return std::nullopt;
    size_t ns = source_.size(), r = basis_.size();
    Poly hj = reindex(h, joint_, src_to_joint_);
    std::map<Monomial, size_t, MonoLexLess> index;
    for (size_t i = 0; i < r; ++i) index.emplace(basis_[i], i);
    PolyMatrix m(r, std::vector<Poly>(r, Poly(target_)));
    for (size_t col = 0; col < r; ++col) {
        Monomial bj(joint_.size());
        for (size_t v = 0; v < ns; ++v) bj.at(v) = basis_[col][v];
        Poly red = reduce_only(Poly::term(joint_, bj, Scalar(1)) * hj, gb_, ord_);
        for (const auto& [mon, c] : red.terms()) {
            Monomial msrc(ns), mtgt(target_.size());
            for (size_t v = 0; v < ns; ++v) msrc.at(v) = mon[v];
            for (size_t v = 0; v < target_.size(); ++v) mtgt.at(v) = mon[ns + v];
            auto it = index.find(msrc);
            if (it == index.end()) return std::nullopt;
            m[it->second][col] += Poly::term(target_, mtgt, c);
        }
    }
    return m;
}

std::optional<std::vector<Poly>> FiberAlgebra::char_poly_of(const Poly& h) const {
    auto m = mult_matrix(h);
    if (!m) return std::nullopt;
    return char_poly(*m);
}

std::optional<Poly> FiberAlgebra::trace_of(const Poly& h) const {
    auto m = mult_matrix(h);
    if (!m) return std::nullopt;
    Poly t(target_);
    for (size_t i = 0; i < m->size(); ++i) t += (*m)[i][i];
    return t;
}

}  // namespace germcalc

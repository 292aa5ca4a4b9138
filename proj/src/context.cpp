#include "germcalc/context.hpp"

#include <set>

namespace germcalc {

namespace {
void check_names(const std::vector<std::string>& names) {
    if (names.empty()) throw error("VarContext: empty variable list");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw error("VarContext: empty variable name");
        if (!seen.insert(n).second) throw error("VarContext: duplicate variable '" + n + "'");
    }
}
}  // namespace

VarContext VarContext::plain(std::vector<std::string> names) {
    check_names(names);
    VarContext c;
    c.names_ = std::move(names);
    c.paired_ = false;
    return c;
}

VarContext VarContext::paired(const std::vector<std::string>& base, const std::string& suffix) {
    std::vector<std::string> names = base;
    for (const auto& n : base) names.push_back(n + suffix);
    check_names(names);
    VarContext c;
    c.names_ = std::move(names);
    c.paired_ = true;
    return c;
}

VarContext VarContext::paired_explicit(std::vector<std::string> names) {
    if (names.size() % 2 != 0) throw error("VarContext::paired_explicit: odd name count");
    check_names(names);
    VarContext c;
    c.names_ = std::move(names);
    c.paired_ = true;
    return c;
}

std::optional<size_t> VarContext::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

size_t VarContext::partner(size_t i) const {
    if (!paired_) throw error("VarContext::partner on unpaired context");
    size_t half = names_.size() / 2;
    return i < half ? i + half : i - half;
}

}  // namespace germcalc

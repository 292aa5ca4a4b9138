#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germcalc/scalar.hpp"

namespace germcalc {

/// Named variable list a polynomial lives over. Optionally "paired": the
/// second half of the list consists of conjugate partners of the first half
/// (used for complexified real manifolds, where partner(z) plays zbar/zeta).
class VarContext {
public:
    VarContext() = default;

    static VarContext plain(std::vector<std::string> names);
    /// Paired context over base names; partner names get `suffix` appended.
    static VarContext paired(const std::vector<std::string>& base,
                             const std::string& suffix = "_bar");
    /// Paired context from a full name list: first half bases, second half
    /// their partners in the same order.
    static VarContext paired_explicit(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<size_t> index_of(const std::string& name) const;

    bool is_paired() const { return paired_; }
    size_t base_size() const { return paired_ ? names_.size() / 2 : names_.size(); }
    /// Index of the conjugate partner (paired contexts only).
    size_t partner(size_t i) const;
    /// True for slots in the conjugate half of a paired context.
    bool is_conjugate_slot(size_t i) const { return paired_ && i >= names_.size() / 2; }

    friend bool operator==(const VarContext& a, const VarContext& b) {
        return a.paired_ == b.paired_ && a.names_ == b.names_;
    }
    friend bool operator!=(const VarContext& a, const VarContext& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
    bool paired_ = false;
};

}  // namespace germcalc

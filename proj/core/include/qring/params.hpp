#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qring {

// Ordered list of formal parameter names (e.g. {"q"}, or {"q12","q13","q23"}).
// Parameters are algebraically independent over Q: a Laurent expression in them
// equals 1 only if it is literally 1.
//
// Square roots are handled by re-basing: declaring p with q = p^2 puts only p
// in the space and records q as an alias for p^2, so exponent vectors stay
// integral and q never appears as an independent parameter.
class ParamSpace {
public:
    ParamSpace() = default;
    explicit ParamSpace(std::vector<std::string> names);

    // Space in which `squared` is the square of the fresh parameter `root`.
    // `names` must already contain `root` and must not contain `squared`.
    static ParamSpace with_square_root(std::vector<std::string> names,
                                       const std::string& squared,
                                       const std::string& root);
    // Same, for several squared/root pairs at once.
    static ParamSpace with_square_roots(std::vector<std::string> names,
                                        const std::map<std::string, std::string>& aliases);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    // Resolves an identifier to (parameter index, exponent multiplier).
    // A plain parameter resolves to (its index, 1); an aliased square
    // resolves to (index of its root, 2). Unknown names resolve to nullopt.
    std::optional<std::pair<std::size_t, int>> resolve(const std::string& ident) const;

    bool operator==(const ParamSpace& o) const = default;

    const std::map<std::string, std::string>& square_aliases() const noexcept {
        return squares_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::string> squares_;  // squared name -> root name
};

using ParamSpacePtr = std::shared_ptr<const ParamSpace>;

ParamSpacePtr make_param_space(std::vector<std::string> names);
ParamSpacePtr make_param_space_with_root(std::vector<std::string> names,
                                         const std::string& squared,
                                         const std::string& root);

// True if the two pointers denote the same space (by identity or by value).
bool same_space(const ParamSpacePtr& a, const ParamSpacePtr& b);

}  // namespace qring

#include "qring/params.hpp"

#include <algorithm>
#include <set>

#include "qring/errors.hpp"

namespace qring {

ParamSpace::ParamSpace(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw PresentationError("empty parameter name");
        if (!seen.insert(n).second)
            throw PresentationError("duplicate parameter name: " + n);
    }
}

ParamSpace ParamSpace::with_square_root(std::vector<std::string> names,
                                        const std::string& squared,
                                        const std::string& root) {
    return with_square_roots(std::move(names), {{squared, root}});
}

ParamSpace ParamSpace::with_square_roots(
    std::vector<std::string> names,
    const std::map<std::string, std::string>& aliases) {
    ParamSpace sp(std::move(names));
    for (const auto& [squared, root] : aliases) {
        // The root must be a declared name, not itself an alias: resolve()
        // reports a flat multiplier, so chains would silently mis-scale.
        if (std::find(sp.names_.begin(), sp.names_.end(), root) == sp.names_.end())
            throw PresentationError("square-root parameter not declared: " + root);
        if (sp.resolve(squared))
            throw PresentationError("squared parameter must not appear independently: " +
                                    squared);
        sp.squares_[squared] = root;
    }
    return sp;
}

std::optional<std::pair<std::size_t, int>> ParamSpace::resolve(
    const std::string& ident) const {
    auto it = std::find(names_.begin(), names_.end(), ident);
    if (it != names_.end())
        return std::pair{static_cast<std::size_t>(it - names_.begin()), 1};
    auto sq = squares_.find(ident);
    if (sq != squares_.end()) {
        auto root = resolve(sq->second);
        return std::pair{root->first, 2};
    }
    return std::nullopt;
}

ParamSpacePtr make_param_space(std::vector<std::string> names) {
    return std::make_shared<const ParamSpace>(std::move(names));
}

ParamSpacePtr make_param_space_with_root(std::vector<std::string> names,
                                         const std::string& squared,
                                         const std::string& root) {
    return std::make_shared<const ParamSpace>(
        ParamSpace::with_square_root(std::move(names), squared, root));
}

bool same_space(const ParamSpacePtr& a, const ParamSpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace qring

#include "qring/commutation.hpp"

#include <string>

#include "qring/errors.hpp"

namespace qring {

CommutationSpec::CommutationSpec(int n, ParamSpacePtr params,
                                 std::vector<IntMatrix> exponents)
    : n_(n), params_(std::move(params)), exponents_(std::move(exponents)) {
    if (n_ < 0) throw PresentationError("negative generator count");
    if (!params_) params_ = make_param_space({});
    if (exponents_.size() != params_->size())
        throw PresentationError("need one exponent matrix per parameter");
    for (const auto& e : exponents_) {
        if (static_cast<int>(e.size()) != n_)
            throw PresentationError("exponent matrix size mismatch");
        for (int i = 0; i < n_; ++i) {
            if (static_cast<int>(e[i].size()) != n_)
                throw PresentationError("exponent matrix size mismatch");
            if (e[i][i] != 0)
                throw PresentationError("q-matrix not multiplicatively antisymmetric: q_ii != 1");
            for (int j = 0; j < n_; ++j)
                if (e[i][j] != -e[j][i])
                    throw PresentationError(
                        "q-matrix not multiplicatively antisymmetric: q_ji != q_ij^-1");
        }
    }
}

Scalar CommutationSpec::q(int i, int j) const {
    Scalar::Exponents e(params_->size(), 0);
    for (std::size_t t = 0; t < exponents_.size(); ++t) e[t] = exponents_[t][i][j];
    return Scalar::term(params_, Rational(1), std::move(e));
}

CommutationSpec CommutationSpec::single_parameter(int n) {
    return single_parameter(n, make_param_space({"q"}), "q");
}

CommutationSpec CommutationSpec::single_parameter(int n, ParamSpacePtr space,
                                                  const std::string& name) {
    auto res = space->resolve(name);
    if (!res) throw MismatchError("unknown parameter: " + name);
    std::vector<IntMatrix> exps(space->size(),
                                IntMatrix(n, std::vector<int>(n, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            exps[res->first][i][j] = res->second;
            exps[res->first][j][i] = -res->second;
        }
    return CommutationSpec(n, std::move(space), std::move(exps));
}

CommutationSpec CommutationSpec::multiparameter(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            names.push_back("q" + std::to_string(i) + std::to_string(j));
    auto space = make_param_space(std::move(names));
    std::vector<IntMatrix> exps(space->size(),
                                IntMatrix(n, std::vector<int>(n, 0)));
    std::size_t t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t) {
            exps[t][i][j] = 1;
            exps[t][j][i] = -1;
        }
    return CommutationSpec(n, std::move(space), std::move(exps));
}

CommutationSpec CommutationSpec::commutative(int n, ParamSpacePtr space) {
    if (!space) space = make_param_space({});
    std::vector<IntMatrix> exps(space->size(),
                                IntMatrix(n, std::vector<int>(n, 0)));
    return CommutationSpec(n, std::move(space), std::move(exps));
}

CommutationSpec CommutationSpec::from_scalar_matrix(
    const std::vector<std::vector<Scalar>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) throw PresentationError("empty q-matrix");
    ParamSpacePtr space = m[0][0].space();
    std::vector<IntMatrix> exps(space->size(),
                                IntMatrix(n, std::vector<int>(n, 0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw PresentationError("q-matrix not square");
        for (int j = 0; j < n; ++j) {
            const Scalar& s = m[i][j];
            if (!same_space(s.space(), space))
                throw MismatchError("q-matrix entries over different parameter spaces");
            if (!s.is_unit() || s.terms().begin()->second != 1)
                throw PresentationError(
                    "q-matrix entries must be parameter monomials with coefficient 1");
            if (i == j && !s.is_one())
                throw PresentationError("q-matrix not multiplicatively antisymmetric: q_ii != 1");
            const auto& e = s.terms().begin()->first;
            for (std::size_t t = 0; t < e.size(); ++t) exps[t][i][j] = e[t];
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(m[i][j] * m[j][i]).is_one())
                throw PresentationError(
                    "q-matrix not multiplicatively antisymmetric: q_ji != q_ij^-1");
    return CommutationSpec(n, std::move(space), std::move(exps));
}

CommutationSpec CommutationSpec::restricted(const std::vector<int>& keep) const {
    int m = static_cast<int>(keep.size());
    std::vector<IntMatrix> exps(exponents_.size(),
                                IntMatrix(m, std::vector<int>(m, 0)));
    for (std::size_t t = 0; t < exponents_.size(); ++t)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                exps[t][a][b] = exponents_[t][keep[a]][keep[b]];
    return CommutationSpec(m, params_, std::move(exps));
}

CommutationSpec CommutationSpec::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw PresentationError("permutation size mismatch");
    return restricted(perm);
}

}  // namespace qring

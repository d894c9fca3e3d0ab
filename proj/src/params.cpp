#include "treeqaoa/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "treeqaoa/errors.hpp"

namespace treeqaoa {

namespace {

void check_angles(const std::vector<double> &angles, int p, const char *name) {
    if (static_cast<int>(angles.size()) != p)
        throw InvalidParameter(std::string(name) + " has " +
                               std::to_string(angles.size()) +
                               " entries, expected p = " + std::to_string(p));
    for (std::size_t t = 0; t < angles.size(); ++t)
        if (!std::isfinite(angles[t]))
            throw InvalidParameter(std::string(name) + "[" + std::to_string(t) +
                                   "] is not finite");
}

} // namespace

void ParamSet::validate() const {
    if (p < 1)
        throw InvalidParameter("depth p must be >= 1, got " + std::to_string(p));
    if (d < 2)
        throw InvalidParameter("degree d must be >= 2, got " + std::to_string(d));
    check_angles(gamma, p, "gamma");
    check_angles(beta, p, "beta");
    if (gamma_prime)
        check_angles(*gamma_prime, p, "gamma_prime");
}

std::vector<double> ParamSet::pack() const {
    std::vector<double> out(gamma);
    if (gamma_prime)
        out.insert(out.end(), gamma_prime->begin(), gamma_prime->end());
    out.insert(out.end(), beta.begin(), beta.end());
    return out;
}

ParamSet ParamSet::unpack(int p, int d, std::span<const double> packed,
                          bool with_gamma_prime) {
    const std::size_t blocks = with_gamma_prime ? 3 : 2;
    if (p < 1 || packed.size() != blocks * static_cast<std::size_t>(p))
        throw InvalidParameter("packed angle vector has " +
                               std::to_string(packed.size()) + " entries, expected " +
                               std::to_string(blocks * static_cast<std::size_t>(std::max(p, 0))));
    const auto up = static_cast<std::size_t>(p);
    ParamSet ps;
    ps.p = p;
    ps.d = d;
    ps.gamma.assign(packed.begin(), packed.begin() + up);
    if (with_gamma_prime) {
        ps.gamma_prime.emplace(packed.begin() + up, packed.begin() + 2 * up);
        ps.beta.assign(packed.begin() + 2 * up, packed.end());
    } else {
        ps.beta.assign(packed.begin() + up, packed.end());
    }
    return ps;
}

ParamSet ParamSet::zeros(int p, int d, bool with_gamma_prime) {
    ParamSet ps;
    ps.p = p;
    ps.d = d;
    ps.gamma.assign(static_cast<std::size_t>(std::max(p, 0)), 0.0);
    ps.beta = ps.gamma;
    if (with_gamma_prime)
        ps.gamma_prime = ps.gamma;
    return ps;
}

} // namespace treeqaoa

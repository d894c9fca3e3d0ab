#include "treeqaoa/certificate.hpp"

#include <cmath>
#include <sstream>

#include "treeqaoa/errors.hpp"

namespace treeqaoa {

double truncate_bound(double x) noexcept { return std::floor(x * 1e4) / 1e4; }

BoundCertificate make_certificate(const OptimizationResult &cut,
                                  const std::optional<OptimizationResult> &mis,
                                  const EngineOptions &opts) {
    if (cut.mode == Mode::mis_three_param)
        throw InvalidParameter("the cut bound needs a maxcut or mis2 result");
    BoundCertificate cert;
    cert.p = cut.params.p;
    cert.d = cut.params.d;
    cert.girth_requirement = 2 * cert.p + 2;
    cert.params = cut.params;
    cert.c_edge = edge_expectation(cut.params, opts).c_edge;
    cert.c_edge_bound = truncate_bound(cert.c_edge);
    cert.m_g_bound = cert.c_edge_bound;
    if (cert.d == 3)
        cert.ir_two_param_bound = truncate_bound(ir_from_cut_fraction(cert.c_edge));
    if (mis) {
        if (mis->mode != Mode::mis_three_param)
            throw InvalidParameter("the three-parameter bound needs a mis3 result");
        if (mis->params.p != cert.p || mis->params.d != cert.d)
            throw InvalidParameter("cut and independent-set results differ in p or d");
        cert.mis_params = mis->params;
        cert.ir_three_param_bound = truncate_bound(mis_edge_objective(mis->params, opts));
    }
    cert.engine_version = kEngineVersion;
    cert.seed = cut.seed;
    return cert;
}

std::string describe(const BoundCertificate &cert) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(4);
    os << "every " << cert.d << "-regular graph of girth >= " << cert.girth_requirement
       << " has cut fraction >= " << cert.c_edge_bound << " (p = " << cert.p << ")\n";
    if (cert.ir_two_param_bound)
        os << "every 3-regular graph of girth >= " << cert.girth_requirement
           << " has independence ratio >= " << *cert.ir_two_param_bound
           << " (from the cut bound)\n";
    if (cert.ir_three_param_bound)
        os << "every 3-regular graph of girth >= " << cert.girth_requirement
           << " has independence ratio >= " << *cert.ir_three_param_bound
           << " (field-term driver)\n";
    return os.str();
}

} // namespace treeqaoa

#include "bohr/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bohr {

namespace {

nlohmann::json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json per_irrep = nlohmann::json::array();
    for (const auto& [n, contribution] : r.per_irrep)
        per_irrep.push_back({{"n", n}, {"contribution", contribution}});
    return {
        {"lhs", r.lhs},
        {"rhs_bound", r.rhs_bound},
        {"constraint_value", r.constraint_value},
        {"constraint_bound", r.constraint_bound},
        {"margin", r.margin},
        {"constraint_satisfied", r.constraint_satisfied},
        {"pass", r.pass},
        {"per_irrep", per_irrep},
        {"variant", r.variant},
        {"dot_mode", r.dot_mode},
        {"x", r.x},
    };
}

nlohmann::json to_json(const SweepSummary& s) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& rep : s.failure_samples) cases.push_back(to_json(rep));
    return {
        {"trials", s.trials},
        {"failures", s.failures},
        {"worst_margin", finite_or_null(s.worst_margin)},
        {"constraint_rejections", s.constraint_rejections},
        {"cases", cases},
        {"overflow", s.overflow},
    };
}

nlohmann::json to_json(const OracleSweepSummary& s) {
    return {
        {"trials", s.trials},
        {"failures", s.failures},
        {"worst_margin", finite_or_null(s.worst_margin)},
        {"note", s.note},
    };
}

nlohmann::json to_json(const Thm3Report& r) {
    return {
        {"trials", r.trials},
        {"failures", r.failures},
        {"worst_margin", finite_or_null(r.worst_margin)},
        {"max_membership_residual", r.max_membership_residual},
        {"max_extraction_error", r.max_extraction_error},
        {"note", r.note},
        {"pass", r.pass},
    };
}

nlohmann::json to_json(const ConvexityEstimate& e) {
    return {
        {"p", e.p},
        {"lambda_hat", e.lambda_hat},
        {"theta_resolution", e.theta_resolution},
        {"trials", e.trials},
        {"worst_pair_dim", e.worst_x.rows()},
    };
}

nlohmann::json to_json(const RadiusResult& r) {
    return {
        {"radius", r.radius},
        {"saturated_cap", r.saturated_cap},
        {"cap", r.cap},
    };
}

nlohmann::json to_json(const MuCheckReport& r) {
    return {
        {"max_abs", r.max_abs},
        {"a0", r.a0},
        {"coeff_residual", r.coeff_residual},
        {"tail_bound", r.tail_bound},
        {"truncation_flagged", r.truncation_flagged},
        {"pass", r.pass},
    };
}

nlohmann::json to_json(const SharpnessReport& r) {
    return {
        {"trials", r.trials},
        {"max_lhs", r.max_lhs},
        {"inflation_at_first_violation", finite_or_null(r.inflation_at_first_violation)},
        {"note", r.note},
    };
}

nlohmann::json summary_envelope(const std::string& command, std::uint64_t seed,
                                double wall_time_s, nlohmann::json payload) {
    return {
        {"schema_version", kSchemaVersion},
        {"command", command},
        {"seed", seed},
        {"wall_time_s", wall_time_s},
        {"report", std::move(payload)},
    };
}

nlohmann::json group_function_to_json(const GroupFunction& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : f.values) {
        if (f.value_dim() == 1) {
            out.push_back({m(0, 0).real(), m(0, 0).imag()});
        } else {
            nlohmann::json rows = nlohmann::json::array();
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (Eigen::Index j = 0; j < m.cols(); ++j)
                    row.push_back({m(i, j).real(), m(i, j).imag()});
                rows.push_back(row);
            }
            out.push_back(rows);
        }
    }
    return out;
}

GroupFunction group_function_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("group function JSON must be a nonempty array");
    GroupFunction f;
    f.group_order = static_cast<int>(j.size());
    const bool scalar = j[0].is_array() && j[0].size() == 2 && j[0][0].is_number();
    const size_t dim = scalar ? 1 : j[0].size();
    for (const auto& entry : j) {
        if (scalar) {
            Matrix m(1, 1);
            m(0, 0) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
            f.values.push_back(m);
        } else {
            if (entry.size() != dim)
                throw std::invalid_argument("group function entries must share one dimension");
            Matrix m(dim, dim);
            for (size_t i = 0; i < dim; ++i) {
                if (entry.at(i).size() != dim)
                    throw std::invalid_argument("group function value matrices must be square");
                for (size_t k = 0; k < dim; ++k)
                    m(i, k) = Complex(entry.at(i).at(k).at(0).get<double>(),
                                      entry.at(i).at(k).at(1).get<double>());
            }
            f.values.push_back(m);
        }
    }
    return f;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out << content;
    }
    std::filesystem::rename(tmp, target);
}

std::string csv_row(const std::vector<double>& values) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out.precision(17);
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    out << '\n';
    return out.str();
}

}  // namespace bohr

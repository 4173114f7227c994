#include "indpoly/report.hpp"

namespace indpoly {

std::string render_text(const CheckReport &r)
{
    std::string out = r.name + "(";
    for (std::size_t i = 0; i < r.params.size(); ++i)
        out += (i ? "," : "") + std::to_string(r.params[i]);
    out += "): ";
    out += status_name(r.status);
    if (!r.detail.empty())
        out += " " + r.detail;
    if (r.lhs != r.rhs)
        out += " lhs=" + to_string(r.lhs) + " rhs=" + to_string(r.rhs);
    return out;
}

nlohmann::json to_json(const CheckReport &r)
{
    return {
        {"name", r.name},
        {"params", r.params},
        {"status", std::string(status_name(r.status))},
        {"lhs", coefficient_strings(r.lhs)},
        {"rhs", coefficient_strings(r.rhs)},
        {"detail", r.detail},
    };
}

CheckReport report_from_json(const nlohmann::json &j)
{
    CheckReport r;
    r.name = j.at("name").get<std::string>();
    r.params = j.at("params").get<std::vector<std::int64_t>>();
    const auto status = j.at("status").get<std::string>();
    if (status == "PASS")
        r.status = Status::Pass;
    else if (status == "FAIL")
        r.status = Status::Fail;
    else if (status == "FINDING")
        r.status = Status::Finding;
    else
        throw std::invalid_argument("unknown status '" + status + "'");
    r.lhs = parse_coefficients(j.at("lhs").get<std::vector<std::string>>());
    r.rhs = parse_coefficients(j.at("rhs").get<std::vector<std::string>>());
    r.detail = j.value("detail", "");
    return r;
}

}  // namespace indpoly

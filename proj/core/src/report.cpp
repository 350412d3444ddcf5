#include <equivar/conventions.hpp>
#include <equivar/error.hpp>
#include <equivar/report.hpp>

#include <json.hpp>

namespace equivar {

using ojson = nlohmann::ordered_json;

std::string_view status_name(Status s) noexcept
{
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped_out_of_scope: return "skipped-out-of-scope";
    }
    return "fail";
}

std::optional<Status> parse_status(std::string_view text) noexcept
{
    for (auto s : {Status::pass, Status::fail, Status::skipped_out_of_scope}) {
        if (status_name(s) == text) {
            return s;
        }
    }
    return std::nullopt;
}

Conventions Conventions::engine()
{
    return {std::string(conventions::two_pi_policy), std::string(conventions::fourier_sign),
            std::string(conventions::orientation_rule)};
}

bool Report::passed() const
{
    for (const auto &r : results) {
        if (r.status == Status::fail) {
            return false;
        }
    }
    return true;
}

void Report::add(std::string check, bool ok, std::optional<std::string> witness)
{
    results.push_back({std::move(check), ok ? Status::pass : Status::fail, ok ? std::nullopt : std::move(witness)});
}

void Report::record(std::string check, std::string value)
{
    results.push_back({std::move(check), Status::pass, std::move(value)});
}

void Report::skip(std::string check, std::string reason)
{
    results.push_back({std::move(check), Status::skipped_out_of_scope, std::move(reason)});
}

std::string to_json(const Report &r)
{
    ojson j;
    j["command"] = r.command;
    j["model"] = r.model;
    j["conventions"] = ojson{{"twoPiPolicy", r.conventions.two_pi_policy},
                             {"fourierSign", r.conventions.fourier_sign},
                             {"orientationRule", r.conventions.orientation_rule}};
    ojson results = ojson::array();
    for (const auto &c : r.results) {
        ojson e{{"check", c.check}, {"status", std::string(status_name(c.status))}};
        if (c.witness) {
            e["witness"] = *c.witness;
        }
        results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    if (r.characters) {
        ojson chars = ojson::array();
        for (const auto &c : *r.characters) {
            ojson coeff = c.coefficient.fits_slong_p() ? ojson(c.coefficient.get_si()) : ojson(c.coefficient.get_str());
            chars.push_back(ojson{{"weight", c.weight}, {"coefficient", std::move(coeff)}});
        }
        j["characters"] = std::move(chars);
    }
    return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text)
{
    try {
        const ojson j = ojson::parse(text);
        Report r;
        r.command = j.at("command").get<std::string>();
        r.model = j.at("model").get<std::string>();
        const auto &c = j.at("conventions");
        r.conventions = {c.at("twoPiPolicy").get<std::string>(), c.at("fourierSign").get<std::string>(),
                         c.at("orientationRule").get<std::string>()};
        for (const auto &e : j.at("results")) {
            auto status = parse_status(e.at("status").get<std::string>());
            if (!status) {
                fail(Errc::parse_error, "unknown status '" + e.at("status").get<std::string>() + "'");
            }
            CheckResult cr{e.at("check").get<std::string>(), *status, std::nullopt};
            if (e.contains("witness")) {
                cr.witness = e.at("witness").get<std::string>();
            }
            r.results.push_back(std::move(cr));
        }
        if (j.contains("characters")) {
            r.characters.emplace();
            for (const auto &e : j.at("characters")) {
                const auto &coeff = e.at("coefficient");
                Integer v = coeff.is_string() ? Integer(coeff.get<std::string>()) : Integer(coeff.get<long>());
                r.characters->push_back({e.at("weight").get<Weight>(), v});
            }
        }
        return r;
    } catch (const nlohmann::json::exception &e) {
        fail(Errc::parse_error, std::string("report: ") + e.what());
    }
}

} // namespace equivar

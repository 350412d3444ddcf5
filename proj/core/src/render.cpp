#include <equivar/element_text.hpp>
#include <equivar/genco.hpp>
#include <equivar/jform.hpp>
#include <equivar/render.hpp>

#include <array>
#include <cctype>
#include <sstream>

namespace equivar {

std::optional<RenderFormat> parse_render_format(std::string_view text) noexcept
{
    if (text == "text") {
        return RenderFormat::text;
    }
    if (text == "latex") {
        return RenderFormat::latex;
    }
    return std::nullopt;
}

namespace {

constexpr std::array<std::string_view, 24> greek = {
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa", "lambda", "mu",
    "nu", "xi", "omicron", "pi", "rho", "sigma", "tau", "upsilon", "phi", "chi", "psi", "omega"};

std::string latex_symbol(std::string_view stem)
{
    for (auto g : greek) {
        if (stem == g) {
            return "\\" + std::string(g);
        }
        // capitalized Greek: Psi -> \Psi
        if (stem.size() == g.size() && std::toupper(static_cast<unsigned char>(g[0])) == stem[0] &&
            stem.substr(1) == g.substr(1)) {
            return "\\" + std::string(stem);
        }
    }
    return std::string(stem);
}

// dalpha2 -> d\alpha_{2}, xi_E0_1 -> \xi_{E0,1}
std::string latex_name(std::string_view name)
{
    std::string_view stem = name;
    std::string sub;
    if (auto us = name.find('_'); us != std::string_view::npos) {
        stem = name.substr(0, us);
        sub = std::string(name.substr(us + 1));
        for (char &c : sub) {
            c = c == '_' ? ',' : c;
        }
    } else {
        std::size_t end = name.size();
        while (end > 0 && std::isdigit(static_cast<unsigned char>(name[end - 1]))) {
            --end;
        }
        if (end > 0 && end < name.size()) {
            stem = name.substr(0, end);
            sub = std::string(name.substr(end));
        }
    }
    std::string out = latex_symbol(stem);
    if (out == stem && stem.size() > 1 && stem[0] == 'd') {
        const std::string rest = latex_symbol(stem.substr(1));
        if (rest != stem.substr(1)) {
            out = "d" + rest;
        }
    }
    if (!sub.empty()) {
        out += "_{" + sub + "}";
    }
    return out;
}

std::string latex_power(const std::string &base, int e)
{
    return e == 1 ? base : base + "^{" + std::to_string(e) + "}";
}

std::string latex_monomial(const Monomial &mono, const FormalModel &m)
{
    std::string out;
    auto append = [&out](const std::string &f) {
        if (!out.empty()) {
            out += ' ';
        }
        out += f;
    };
    for (std::size_t a = 0; a < mono.x.size(); ++a) {
        if (mono.x[a] != 0) {
            append(latex_power(latex_name(m.parameters()[a]), mono.x[a]));
        }
    }
    if (mono.delta) {
        std::string d = "\\delta";
        if (mono.delta->deriv.order() != 0) {
            d += "^{(";
            for (int j = 0; j < mono.delta->deriv.size(); ++j) {
                d += (j ? "," : "") + std::to_string(mono.delta->deriv[j]);
            }
            d += ")}";
        }
        d += mono.delta->argument == DeltaArgument::moment ? "(f)" : "(u)";
        append(d);
    }
    for (GenId g : mono.odd) {
        append(latex_name(m.generator(g).name));
    }
    for (auto [g, e] : mono.even) {
        append(latex_power(latex_name(m.generator(g).name), e));
    }
    return out;
}

std::string latex_rational(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

} // namespace

std::string to_latex(const Element &e, const FormalModel &m)
{
    if (e.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &t : e.terms()) {
        const bool negative = t.coeff < 0;
        const Rational mag = abs(t.coeff);
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        const std::string body = latex_monomial(t.mono, m);
        if (body.empty()) {
            out += latex_rational(mag);
        } else if (mag == 1) {
            out += body;
        } else {
            out += latex_rational(mag) + " " + body;
        }
    }
    return out;
}

std::string render_j_forms(const FormalModel &m, RenderFormat format)
{
    std::ostringstream out;
    for (const auto &F : m.frames()) {
        const JForm j = j_form(m, F.id);
        const Element display = taylor_expand_delta(j.value, F.id, m);
        if (format == RenderFormat::latex) {
            out << "\\mathcal{J}_{" << F.id << "} = " << to_latex(j.value, m) << "\n";
            out << "\\mathcal{J}_{" << F.id << "} = " << to_latex(display, m) << "\n";
        } else {
            out << "J[" << F.id << "] = " << to_text(j.value, m) << "\n";
            out << "J[" << F.id << "] (display) = " << to_text(display, m) << "\n";
        }
    }
    return out.str();
}

} // namespace equivar

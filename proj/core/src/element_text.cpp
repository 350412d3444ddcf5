#include <equivar/element_text.hpp>
#include <equivar/error.hpp>
#include <equivar/formal_model.hpp>

#include <cctype>
#include <sstream>

namespace equivar {

namespace {

class Parser {
public:
    Parser(std::string_view text, const FormalModel &m) : text_(text), m_(m) {}

    Element parse()
    {
        Element e = expr();
        skip_space();
        if (pos_ != text_.size()) {
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    [[noreturn]] void error(const std::string &what) const
    {
        fail(Errc::parse_error, "column " + std::to_string(pos_ + 1) + " of '" + std::string(text_) + "': " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            error(std::string("expected '") + c + "'");
        }
    }

    std::string_view digits()
    {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            error("expected a number");
        }
        return text_.substr(start, pos_ - start);
    }

    int small_uint()
    {
        const auto d = digits();
        if (d.size() > 6) {
            error("exponent too large");
        }
        return std::stoi(std::string(d));
    }

    std::string identifier()
    {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    Element expr()
    {
        Element acc;
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        while (true) {
            Element t = term();
            acc += negative ? -t : t;
            if (accept('+')) {
                negative = false;
            } else if (accept('-')) {
                negative = true;
            } else {
                return acc;
            }
        }
    }

    Element term()
    {
        Element acc = factor();
        while (accept('*')) {
            acc = multiply(acc, factor(), m_);
        }
        return acc;
    }

    Element factor()
    {
        Element base = primary();
        skip_space();
        if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] != '(') {
            ++pos_;
            base = power(base, small_uint(), m_);
        }
        return base;
    }

    Element primary()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            error("unexpected end of expression");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Element e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit(digits());
            skip_space();
            if (accept('/')) {
                lit += '/';
                lit += digits();
            }
            return Element::constant(parse_rational(lit));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const auto start = pos_;
            std::string name = identifier();
            if (name == "delta") {
                return delta();
            }
            if (auto a = m_.find_parameter(name)) {
                return m_.param(*a);
            }
            if (auto g = m_.find_generator(name)) {
                return m_.gen(*g);
            }
            pos_ = start;
            error("unknown symbol '" + name + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    Element delta()
    {
        expect('[');
        const std::string frame = identifier();
        auto fi = m_.find_frame(frame);
        if (!fi) {
            error("unknown frame '" + frame + "'");
        }
        DeltaArgument arg = DeltaArgument::closed;
        if (accept(';')) {
            const std::string which = identifier();
            if (which == "f") {
                arg = DeltaArgument::moment;
            } else if (which != "u") {
                error("delta argument must be u or f");
            }
        }
        expect(']');
        MultiIndex I = MultiIndex::zero(m_.frame(*fi).rank);
        skip_space();
        if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '(') {
            pos_ += 2;
            std::vector<int> entries;
            do {
                entries.push_back(small_uint());
            } while (accept(','));
            expect(')');
            if (static_cast<int>(entries.size()) != I.size()) {
                error("derivative order has the wrong length for frame '" + frame + "'");
            }
            I.entries = std::move(entries);
        }
        return m_.delta(*fi, std::move(I), arg);
    }

    std::string_view text_;
    const FormalModel &m_;
    std::size_t pos_ = 0;
};

} // namespace

Element parse_element(std::string_view text, const FormalModel &m)
{
    return Parser(text, m).parse();
}

std::string to_text(const Monomial &mono, const FormalModel &m)
{
    std::vector<std::string> factors;
    auto with_power = [](const std::string &name, int e) { return e == 1 ? name : name + "^" + std::to_string(e); };
    for (std::size_t a = 0; a < mono.x.size(); ++a) {
        if (mono.x[a] != 0) {
            factors.push_back(with_power(m.parameters()[a], mono.x[a]));
        }
    }
    if (mono.delta) {
        std::string d = "delta[" + m.frame(mono.delta->frame).id;
        if (mono.delta->argument == DeltaArgument::moment) {
            d += ";f";
        }
        d += "]";
        if (mono.delta->deriv.order() != 0) {
            d += "^(";
            for (int j = 0; j < mono.delta->deriv.size(); ++j) {
                d += (j ? "," : "") + std::to_string(mono.delta->deriv[j]);
            }
            d += ")";
        }
        factors.push_back(d);
    }
    for (GenId g : mono.odd) {
        factors.push_back(m.generator(g).name);
    }
    for (auto [g, e] : mono.even) {
        factors.push_back(with_power(m.generator(g).name, e));
    }
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i ? "*" : "") + factors[i];
    }
    return out;
}

std::string to_text(const Element &e, const FormalModel &m)
{
    if (e.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &t : e.terms()) {
        const bool negative = t.coeff < 0;
        const Rational mag = abs(t.coeff);
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const std::string body = to_text(t.mono, m);
        if (body.empty()) {
            out << mag.get_str();
        } else if (mag == 1) {
            out << body;
        } else {
            out << mag.get_str() << '*' << body;
        }
    }
    return out.str();
}

} // namespace equivar

#include <equivar/error.hpp>
#include <equivar/formal_model.hpp>
#include <equivar/superalg.hpp>

#include <algorithm>

namespace equivar {

std::string_view kind_name(GeneratorKind kind) noexcept
{
    switch (kind) {
        case GeneratorKind::plain_form: return "plainForm";
        case GeneratorKind::frame_form: return "frameForm";
        case GeneratorKind::closed_argument: return "closedArgument";
        case GeneratorKind::fibre_coordinate: return "fibreCoordinate";
        case GeneratorKind::fibre_coform: return "fibreCoform";
    }
    return "plainForm";
}

std::optional<GeneratorKind> parse_kind(std::string_view text) noexcept
{
    for (auto k : {GeneratorKind::plain_form, GeneratorKind::frame_form, GeneratorKind::closed_argument,
                   GeneratorKind::fibre_coordinate, GeneratorKind::fibre_coform}) {
        if (kind_name(k) == text) {
            return k;
        }
    }
    return std::nullopt;
}

int Generator::truncation_degree() const noexcept
{
    switch (kind) {
        case GeneratorKind::closed_argument:
        case GeneratorKind::fibre_coordinate:
        case GeneratorKind::fibre_coform:
            return 0;
        default:
            return form_degree;
    }
}

int MultiIndex::order() const noexcept
{
    int s = 0;
    for (int e : entries) {
        s += e;
    }
    return s;
}

Integer MultiIndex::factorial() const
{
    Integer f = 1;
    for (int e : entries) {
        f *= equivar::factorial(static_cast<unsigned>(e));
    }
    return f;
}

bool operator==(const Term &a, const Term &b)
{
    return a.coeff == b.coeff && a.mono == b.mono;
}

Element Element::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.mono < b.mono; });
    Element e;
    for (auto &t : terms) {
        if (!e.terms_.empty() && e.terms_.back().mono == t.mono) {
            e.terms_.back().coeff += t.coeff;
            if (e.terms_.back().coeff == 0) {
                e.terms_.pop_back();
            }
        } else if (t.coeff != 0) {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

Element Element::constant(const Rational &c)
{
    if (c == 0) {
        return {};
    }
    return from_terms({Term{c, {}}});
}

Element &Element::operator+=(const Element &other)
{
    if (other.is_zero()) {
        return *this;
    }
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    *this = from_terms(std::move(all));
    return *this;
}

Element &Element::operator-=(const Element &other)
{
    return *this += -other;
}

Element Element::operator-() const
{
    Element e = *this;
    for (auto &t : e.terms_) {
        t.coeff = -t.coeff;
    }
    return e;
}

Element operator*(const Rational &s, const Element &a)
{
    if (s == 0) {
        return {};
    }
    Element e = a;
    for (auto &t : e.terms_) {
        t.coeff *= s;
    }
    return e;
}

int form_degree(const Monomial &mono, const FormalModel &m)
{
    int deg = 0;
    for (GenId g : mono.odd) {
        deg += m.generator(g).form_degree;
    }
    for (auto [g, e] : mono.even) {
        deg += e * m.generator(g).form_degree;
    }
    return deg;
}

std::optional<Term> normalize_term(Term t, const FormalModel &m)
{
    if (t.coeff == 0) {
        return std::nullopt;
    }
    auto &mono = t.mono;
    while (!mono.x.empty() && mono.x.back() == 0) {
        mono.x.pop_back();
    }

    // insertion sort keeps track of the transposition count
    auto &odd = mono.odd;
    bool flip = false;
    for (std::size_t i = 1; i < odd.size(); ++i) {
        for (std::size_t j = i; j > 0 && odd[j - 1] >= odd[j]; --j) {
            if (odd[j - 1] == odd[j]) {
                return std::nullopt;
            }
            std::swap(odd[j - 1], odd[j]);
            flip = !flip;
        }
    }
    if (flip) {
        t.coeff = -t.coeff;
    }

    auto &even = mono.even;
    std::sort(even.begin(), even.end());
    std::vector<std::pair<GenId, int>> merged;
    for (auto [g, e] : even) {
        if (!merged.empty() && merged.back().first == g) {
            merged.back().second += e;
        } else {
            merged.emplace_back(g, e);
        }
    }
    std::erase_if(merged, [](const auto &p) { return p.second == 0; });
    even = std::move(merged);

    if (mono.delta && mono.delta->argument == DeltaArgument::closed) {
        auto &delta = *mono.delta;
        std::vector<std::pair<GenId, int>> rest;
        for (auto [g, e] : even) {
            const Generator &gen = m.generator(g);
            if (gen.kind != GeneratorKind::closed_argument || gen.frame_index != delta.frame) {
                rest.emplace_back(g, e);
                continue;
            }
            // u_j^e delta^(I) = (-1)^e I_j!/(I_j-e)! delta^(I - e e_j)
            int &ij = delta.deriv[gen.slot - 1];
            if (e > ij) {
                return std::nullopt;
            }
            t.coeff *= falling_factorial(static_cast<unsigned>(ij), static_cast<unsigned>(e));
            if (e % 2 != 0) {
                t.coeff = -t.coeff;
            }
            ij -= e;
        }
        even = std::move(rest);
    }

    int total = 0;
    int basic = 0;
    auto account = [&](GenId g, int e) {
        const Generator &gen = m.generator(g);
        total += e * gen.truncation_degree();
        if (gen.basic) {
            basic += e * gen.form_degree;
        }
    };
    for (GenId g : odd) {
        account(g, 1);
    }
    for (auto [g, e] : even) {
        account(g, e);
    }
    if (total > m.manifold_dim()) {
        return std::nullopt;
    }
    if (m.base_dim() && basic > *m.base_dim()) {
        return std::nullopt;
    }
    return t;
}

Element normal_form(const Element &a, const FormalModel &m)
{
    std::vector<Term> out;
    for (const auto &t : a.terms()) {
        if (auto n = normalize_term(t, m)) {
            out.push_back(std::move(*n));
        }
    }
    return Element::from_terms(std::move(out));
}

Element delta_rewrite(const Term &term, const FormalModel &m)
{
    if (auto n = normalize_term(term, m)) {
        return Element::from_terms({std::move(*n)});
    }
    return {};
}

namespace {

Monomial product_monomial(const Monomial &a, const Monomial &b)
{
    Monomial p;
    p.x = a.x;
    if (p.x.size() < b.x.size()) {
        p.x.resize(b.x.size(), 0);
    }
    for (std::size_t i = 0; i < b.x.size(); ++i) {
        p.x[i] += b.x[i];
    }
    if (a.delta && b.delta) {
        fail(Errc::delta_clash, "product of two generalized coefficients");
    }
    p.delta = a.delta ? a.delta : b.delta;
    p.odd = a.odd;
    p.odd.insert(p.odd.end(), b.odd.begin(), b.odd.end());
    p.even = a.even;
    p.even.insert(p.even.end(), b.even.begin(), b.even.end());
    return p;
}

Element single(Term t, const FormalModel &m)
{
    if (auto n = normalize_term(std::move(t), m)) {
        return Element::from_terms({std::move(*n)});
    }
    return {};
}

} // namespace

Element multiply(const Element &a, const Element &b, const FormalModel &m)
{
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            Term t{ta.coeff * tb.coeff, product_monomial(ta.mono, tb.mono)};
            if (auto n = normalize_term(std::move(t), m)) {
                out.push_back(std::move(*n));
            }
        }
    }
    return Element::from_terms(std::move(out));
}

Element power(const Element &a, int n, const FormalModel &m)
{
    Element r = m.one();
    for (int i = 0; i < n && !r.is_zero(); ++i) {
        r = multiply(r, a, m);
    }
    return r;
}

std::optional<Element> apply_odd_derivation(const Element &a, const FormalModel &m, const GeneratorRule &on_generator)
{
    Element result;
    for (const auto &t : a.terms()) {
        const auto &odd = t.mono.odd;
        const auto p = odd.size();
        for (std::size_t i = 0; i < p; ++i) {
            auto v = on_generator(odd[i]);
            if (!v) {
                return std::nullopt;
            }
            if (v->is_zero()) {
                continue;
            }
            Term left{i % 2 == 0 ? t.coeff : Rational(-t.coeff), {}};
            left.mono.x = t.mono.x;
            left.mono.delta = t.mono.delta;
            left.mono.odd.assign(odd.begin(), odd.begin() + static_cast<std::ptrdiff_t>(i));
            Term right{1, {}};
            right.mono.odd.assign(odd.begin() + static_cast<std::ptrdiff_t>(i) + 1, odd.end());
            right.mono.even = t.mono.even;
            result += multiply(multiply(single(std::move(left), m), *v, m), single(std::move(right), m), m);
        }
        for (std::size_t h = 0; h < t.mono.even.size(); ++h) {
            const auto [g, e] = t.mono.even[h];
            auto v = on_generator(g);
            if (!v) {
                return std::nullopt;
            }
            if (v->is_zero()) {
                continue;
            }
            Term rest = t;
            rest.coeff *= e;
            if (p % 2 != 0) {
                rest.coeff = -rest.coeff;
            }
            rest.mono.even[h].second -= 1;
            result += multiply(single(std::move(rest), m), *v, m);
        }
    }
    return result;
}

Element equivariant_differential(const Element &a, const FormalModel &m)
{
    for (const auto &t : a.terms()) {
        if (t.mono.delta && t.mono.delta->argument == DeltaArgument::moment) {
            fail(Errc::invariant_violation, "D is not defined on the Taylor display form");
        }
    }
    return *apply_odd_derivation(a, m, [&](GenId g) { return std::optional<Element>(m.D_value(g)); });
}

namespace {

void require_plain(const Element &a, const FormalModel &m, const char *what)
{
    for (const auto &t : a.terms()) {
        bool bad = !t.mono.x.empty() || t.mono.delta.has_value();
        for (auto [g, e] : t.mono.even) {
            bad = bad || m.generator(g).kind == GeneratorKind::closed_argument;
        }
        if (bad) {
            fail(Errc::invariant_violation, std::string(what) + " applies only to forms without X, deltas or u");
        }
    }
}

} // namespace

Element exterior_derivative(const Element &a, const FormalModel &m)
{
    require_plain(a, m, "d");
    auto r = apply_odd_derivation(a, m, [&](GenId g) -> std::optional<Element> {
        if (const Element *v = m.d_value(g)) {
            return *v;
        }
        return std::nullopt;
    });
    if (!r) {
        fail(Errc::splitting_missing, "d is undeclared on a frame form");
    }
    return *r;
}

Element contraction(const Element &a, int parameter, const FormalModel &m)
{
    require_plain(a, m, "iota");
    if (parameter < 0 || parameter >= m.parameter_count()) {
        fail(Errc::out_of_range, "no parameter with index " + std::to_string(parameter));
    }
    auto r = apply_odd_derivation(a, m, [&](GenId g) -> std::optional<Element> {
        if (const Element *v = m.iota_value(g, parameter)) {
            return *v;
        }
        return std::nullopt;
    });
    if (!r) {
        fail(Errc::rank_data_missing, "iota is symbolic on a frame form");
    }
    return *r;
}

} // namespace equivar

#include <equivar/element_text.hpp>
#include <equivar/error.hpp>
#include <equivar/formal_model.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <tuple>

namespace equivar {

namespace {

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

[[noreturn]] void reject(const std::string &model, const std::string &what)
{
    fail(Errc::invariant_violation, "model '" + model + "': " + what);
}

bool is_constant(const Element &e)
{
    return e.is_zero() || (e.size() == 1 && e.terms().front().mono == Monomial{});
}

Rational constant_value(const Element &e)
{
    return e.is_zero() ? Rational(0) : e.terms().front().coeff;
}

} // namespace

FormalModel FormalModel::build(ModelSpec spec)
{
    FormalModel m;
    m.spec_ = std::move(spec);
    const ModelSpec &s = m.spec_;
    const std::string &mn = s.name;

    if (s.manifold_dim < 0) {
        reject(mn, "manifoldDim must be non-negative");
    }
    if (s.base_dim && (*s.base_dim < 0 || *s.base_dim > s.manifold_dim)) {
        reject(mn, "baseDim must lie in [0, manifoldDim]");
    }

    std::set<std::string> names;
    for (const auto &p : s.parameters) {
        if (!is_identifier(p) || p == "delta" || !names.insert(p).second) {
            reject(mn, "bad or duplicate parameter name '" + p + "'");
        }
    }

    std::set<std::string> frame_ids;
    for (const auto &f : s.frames) {
        if (!is_identifier(f.id) || !frame_ids.insert(f.id).second) {
            reject(mn, "bad or duplicate frame id '" + f.id + "'");
        }
    }

    std::set<std::tuple<int, std::string, int>> seen_slots;
    for (const auto &g : s.generators) {
        if (!is_identifier(g.name) || g.name == "delta" || !names.insert(g.name).second) {
            reject(mn, "bad or duplicate generator name '" + g.name + "'");
        }
        if (g.form_degree < 0) {
            reject(mn, "generator '" + g.name + "' has negative degree");
        }
        const bool odd = g.parity == Parity::odd;
        if (odd != (g.form_degree % 2 == 1)) {
            reject(mn, "generator '" + g.name + "' has parity inconsistent with its degree");
        }
        auto need = [&](bool ok, const char *what) {
            if (!ok) {
                reject(mn, "generator '" + g.name + "': " + what);
            }
        };
        switch (g.kind) {
            case GeneratorKind::plain_form:
                need(g.frame.empty() && g.slot == 0, "plain forms carry no frame or slot");
                break;
            case GeneratorKind::frame_form:
                need(odd && g.form_degree == 1, "frame forms are odd of degree 1");
                break;
            case GeneratorKind::closed_argument:
                need(!odd && g.form_degree == 2, "closed arguments are even of degree 2");
                break;
            case GeneratorKind::fibre_coordinate:
                need(!odd && g.form_degree == 0, "fibre coordinates are even of degree 0");
                break;
            case GeneratorKind::fibre_coform:
                need(odd && g.form_degree == 1, "fibre coforms are odd of degree 1");
                break;
        }
        if (g.kind != GeneratorKind::plain_form) {
            need(frame_ids.count(g.frame) == 1, "references an undeclared frame");
            need(!g.basic, "only plain forms can be basic");
            need(seen_slots.emplace(static_cast<int>(g.kind), g.frame, g.slot).second, "duplicate frame slot");
        }
    }

    std::vector<GeneratorSpec> order = s.generators;
    std::sort(order.begin(), order.end(), [](const GeneratorSpec &a, const GeneratorSpec &b) {
        return std::tie(a.frame, a.slot, a.name) < std::tie(b.frame, b.slot, b.name);
    });
    for (const auto &g : order) {
        Generator gen{g.name, g.parity, g.form_degree, g.kind, g.frame, g.slot, g.basic, -1};
        m.by_name_.emplace(g.name, static_cast<GenId>(m.generators_.size()));
        m.generators_.push_back(std::move(gen));
    }

    const int r = static_cast<int>(s.parameters.size());
    for (std::size_t fi = 0; fi < s.frames.size(); ++fi) {
        const FrameSpec &f = s.frames[fi];
        if (f.rank < 0 || static_cast<int>(f.slots.size()) != f.rank) {
            reject(mn, "frame '" + f.id + "' lists " + std::to_string(f.slots.size()) + " slots for rank " + std::to_string(f.rank));
        }
        FrameDecl decl;
        decl.id = f.id;
        decl.rank = f.rank;
        auto find_kind = [&](GeneratorKind kind, int slot) -> std::optional<GenId> {
            for (std::size_t g = 0; g < m.generators_.size(); ++g) {
                const auto &gen = m.generators_[g];
                if (gen.kind == kind && gen.frame == f.id && gen.slot == slot) {
                    return static_cast<GenId>(g);
                }
            }
            return std::nullopt;
        };
        for (int j = 0; j < f.rank; ++j) {
            auto it = m.by_name_.find(f.slots[static_cast<std::size_t>(j)]);
            if (it == m.by_name_.end()) {
                reject(mn, "frame '" + f.id + "' names unknown slot '" + f.slots[static_cast<std::size_t>(j)] + "'");
            }
            const Generator &alpha = m.generators_[static_cast<std::size_t>(it->second)];
            if (alpha.kind != GeneratorKind::frame_form || alpha.frame != f.id || alpha.slot != j + 1) {
                reject(mn, "slot " + std::to_string(j + 1) + " of frame '" + f.id + "' is not its frame form");
            }
            decl.slots.push_back(it->second);
            auto u = find_kind(GeneratorKind::closed_argument, j + 1);
            if (!u) {
                reject(mn, "frame '" + f.id + "' has no closed argument for slot " + std::to_string(j + 1));
            }
            decl.closed_args.push_back(*u);
            if (auto xi = find_kind(GeneratorKind::fibre_coordinate, j + 1)) {
                decl.fibre_coords.push_back(*xi);
            }
            if (auto dxi = find_kind(GeneratorKind::fibre_coform, j + 1)) {
                decl.fibre_coforms.push_back(*dxi);
            }
        }
        for (const auto &gen : m.generators_) {
            if (gen.kind != GeneratorKind::plain_form && gen.frame == f.id && (gen.slot < 1 || gen.slot > f.rank)) {
                reject(mn, "generator '" + gen.name + "' uses slot outside frame '" + f.id + "'");
            }
        }
        const auto nfib = static_cast<int>(decl.fibre_coords.size());
        if (nfib != static_cast<int>(decl.fibre_coforms.size()) || (nfib != 0 && nfib != f.rank)) {
            reject(mn, "frame '" + f.id + "' has an incomplete fibre");
        }
        for (const auto &sample : f.moment_samples) {
            if (sample.rows() != f.rank || sample.cols() != r) {
                reject(mn, "moment sample of frame '" + f.id + "' is not " + std::to_string(f.rank) + "x" + std::to_string(r));
            }
        }
        decl.moment_samples = f.moment_samples;
        for (const auto &c : f.curvature) {
            auto it = m.by_name_.find(c);
            if (it == m.by_name_.end() || m.generators_[static_cast<std::size_t>(it->second)].parity != Parity::even) {
                reject(mn, "curvature symbol '" + c + "' is not an even generator");
            }
            decl.curvature.push_back(it->second);
        }
        m.frames_.push_back(std::move(decl));
    }
    for (auto &gen : m.generators_) {
        if (gen.kind != GeneratorKind::plain_form) {
            for (std::size_t fi = 0; fi < m.frames_.size(); ++fi) {
                if (m.frames_[fi].id == gen.frame) {
                    gen.frame_index = static_cast<int>(fi);
                }
            }
        }
    }

    const auto n = m.generators_.size();
    m.d_table_.assign(n, std::nullopt);
    m.iota_table_.assign(n, std::vector<std::optional<Element>>(static_cast<std::size_t>(r)));
    for (std::size_t g = 0; g < n; ++g) {
        const auto kind = m.generators_[g].kind;
        if (kind != GeneratorKind::frame_form && kind != GeneratorKind::closed_argument) {
            m.d_table_[g] = Element{};
            for (auto &v : m.iota_table_[g]) {
                v = Element{};
            }
        }
    }

    auto check_value = [&](const std::string &gname, const Element &v, int expected_degree, const char *table) {
        for (const auto &t : v.terms()) {
            bool bad = !t.mono.x.empty() || t.mono.delta.has_value();
            for (auto [h, e] : t.mono.even) {
                bad = bad || m.generators_[static_cast<std::size_t>(h)].kind == GeneratorKind::closed_argument;
            }
            if (bad) {
                reject(mn, std::string(table) + " value of '" + gname + "' may not contain X, deltas or closed arguments");
            }
            if (form_degree(t.mono, m) != expected_degree) {
                reject(mn, std::string(table) + " value of '" + gname + "' has the wrong degree or parity");
            }
        }
    };

    for (const auto &[gname, expr] : s.d_table) {
        const GenId g = m.generator_id(gname);
        if (m.generators_[static_cast<std::size_t>(g)].kind == GeneratorKind::closed_argument) {
            reject(mn, "closed argument '" + gname + "' cannot carry a d entry");
        }
        Element v = parse_element(expr, m);
        check_value(gname, v, m.generators_[static_cast<std::size_t>(g)].form_degree + 1, "d");
        m.d_table_[static_cast<std::size_t>(g)] = std::move(v);
    }
    for (const auto &[gname, exprs] : s.iota_table) {
        const GenId g = m.generator_id(gname);
        if (m.generators_[static_cast<std::size_t>(g)].kind == GeneratorKind::closed_argument) {
            reject(mn, "closed argument '" + gname + "' cannot carry an iota entry");
        }
        if (static_cast<int>(exprs.size()) != r) {
            reject(mn, "iota entry of '" + gname + "' needs one value per parameter");
        }
        for (int a = 0; a < r; ++a) {
            Element v = parse_element(exprs[static_cast<std::size_t>(a)], m);
            check_value(gname, v, m.generators_[static_cast<std::size_t>(g)].form_degree - 1, "iota");
            m.iota_table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(a)] = std::move(v);
        }
    }

    m.D_table_.resize(n);
    for (std::size_t g = 0; g < n; ++g) {
        const Generator &gen = m.generators_[g];
        if (gen.kind == GeneratorKind::frame_form) {
            m.D_table_[g] = m.gen(m.frames_[static_cast<std::size_t>(gen.frame_index)].closed_args[static_cast<std::size_t>(gen.slot - 1)]);
        } else if (gen.kind != GeneratorKind::closed_argument) {
            Element v = *m.d_table_[g];
            for (int a = 0; a < r; ++a) {
                v -= multiply(m.param(a), *m.iota_table_[g][static_cast<std::size_t>(a)], m);
            }
            m.D_table_[g] = std::move(v);
        }
    }

    for (auto &decl : m.frames_) {
        RationalMatrix f(decl.rank, r);
        bool known = true;
        for (int j = 0; j < decl.rank && known; ++j) {
            for (int a = 0; a < r && known; ++a) {
                const Element *v = m.iota_value(decl.slots[static_cast<std::size_t>(j)], a);
                known = v && is_constant(*v);
                if (known) {
                    f(j, a) = -constant_value(*v);
                }
            }
        }
        if (known && decl.rank > 0) {
            decl.moment_matrix = f;
            for (const auto &sample : decl.moment_samples) {
                if (!(sample == f)) {
                    reject(mn, "moment samples of frame '" + decl.id + "' disagree with its iota table");
                }
            }
        }
    }

    m.validate();
    m.check_truncation_consistency();
    return m;
}

void FormalModel::validate() const
{
    const std::string &mn = spec_.name;
    const int r = parameter_count();
    GeneratorRule d_rule = [&](GenId g) -> std::optional<Element> {
        if (const Element *v = d_value(g)) {
            return *v;
        }
        return std::nullopt;
    };
    auto iota_rule = [&](int a) {
        return GeneratorRule([this, a](GenId g) -> std::optional<Element> {
            if (const Element *v = iota_value(g, a)) {
                return *v;
            }
            return std::nullopt;
        });
    };

    for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
        const GenId g = static_cast<GenId>(gi);
        const Generator &gen = generators_[gi];
        if (gen.kind == GeneratorKind::closed_argument) {
            continue;
        }
        const Element *dg = d_value(g);
        if (dg) {
            auto dd = apply_odd_derivation(*dg, *this, d_rule);
            if (dd && !dd->is_zero()) {
                reject(mn, "d(d(" + gen.name + ")) is not zero");
            }
        }
        for (int a = 0; a < r; ++a) {
            const Element *ia = iota_value(g, a);
            for (int b = a; b < r && ia; ++b) {
                const Element *ib = iota_value(g, b);
                if (!ib) {
                    continue;
                }
                auto x = apply_odd_derivation(*ib, *this, iota_rule(a));
                auto y = apply_odd_derivation(*ia, *this, iota_rule(b));
                if (x && y && !(*x + *y).is_zero()) {
                    reject(mn, "contractions anticommute fails on '" + gen.name + "'");
                }
            }
            if (dg && ia) {
                auto x = apply_odd_derivation(*ia, *this, d_rule);
                auto y = apply_odd_derivation(*dg, *this, iota_rule(a));
                if (x && y && !(*x + *y).is_zero()) {
                    reject(mn, "'" + gen.name + "' is not invariant under parameter " + spec_.parameters[static_cast<std::size_t>(a)]);
                }
            }
        }
        if (gen.kind == GeneratorKind::frame_form && dg) {
            bool complete = true;
            Element w = *dg;
            for (int a = 0; a < r; ++a) {
                const Element *ia = iota_value(g, a);
                complete = complete && ia;
                if (ia) {
                    w -= multiply(param(a), *ia, *this);
                }
            }
            if (complete && !equivariant_differential(w, *this).is_zero()) {
                reject(mn, "splitting of the closed argument of '" + gen.name + "' is not D-closed");
            }
        }
        if (gen.basic) {
            for (const auto &t : dg->terms()) {
                for (GenId h : t.mono.odd) {
                    if (!generator(h).basic) {
                        reject(mn, "d of basic generator '" + gen.name + "' is not basic");
                    }
                }
                for (auto [h, e] : t.mono.even) {
                    if (!generator(h).basic) {
                        reject(mn, "d of basic generator '" + gen.name + "' is not basic");
                    }
                }
            }
            for (int a = 0; a < r; ++a) {
                if (!iota_value(g, a)->is_zero()) {
                    reject(mn, "basic generator '" + gen.name + "' is not horizontal");
                }
            }
        }
    }
}

void FormalModel::check_truncation_consistency() const
{
    std::vector<GenId> positive;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (generators_[g].truncation_degree() > 0) {
            positive.push_back(static_cast<GenId>(g));
        }
    }

    // Every minimal truncated monomial is (surviving monomial) * generator, so
    // checking D on those products covers the whole truncation ideal.
    std::vector<Element> alive;
    std::function<void(std::size_t, const Element &)> walk = [&](std::size_t i, const Element &mono) {
        if (i == positive.size()) {
            alive.push_back(mono);
            return;
        }
        walk(i + 1, mono);
        const Element g = gen(positive[i]);
        Element cur = mono;
        while (true) {
            cur = multiply(cur, g, *this);
            if (cur.is_zero()) {
                break;
            }
            walk(i + 1, cur);
            if (generators_[static_cast<std::size_t>(positive[i])].parity == Parity::odd) {
                break;
            }
        }
    };
    walk(0, one());

    for (const auto &mono : alive) {
        const auto &t = mono.terms().front();
        const Element Dm = equivariant_differential(mono, *this);
        const bool odd_mono = t.mono.odd.size() % 2 == 1;
        for (GenId g : positive) {
            const Generator &gen = generators_[static_cast<std::size_t>(g)];
            if (gen.parity == Parity::odd && std::binary_search(t.mono.odd.begin(), t.mono.odd.end(), g)) {
                continue;
            }
            const Element G = this->gen(g);
            if (!multiply(mono, G, *this).is_zero()) {
                continue;
            }
            Element D = multiply(Dm, G, *this);
            const Element tail = multiply(mono, D_value(g), *this);
            D = odd_mono ? D - tail : D + tail;
            if (!D.is_zero()) {
                reject(spec_.name, "truncation is not D-stable at " + to_text(mono, *this) + "*" + gen.name);
            }
        }
    }
}

std::optional<int> FormalModel::find_parameter(std::string_view name) const
{
    for (std::size_t a = 0; a < spec_.parameters.size(); ++a) {
        if (spec_.parameters[a] == name) {
            return static_cast<int>(a);
        }
    }
    return std::nullopt;
}

std::optional<GenId> FormalModel::find_generator(std::string_view name) const
{
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) {
        return std::nullopt;
    }
    return it->second;
}

GenId FormalModel::generator_id(std::string_view name) const
{
    if (auto g = find_generator(name)) {
        return *g;
    }
    fail(Errc::invariant_violation, "model '" + spec_.name + "' has no generator '" + std::string(name) + "'");
}

std::optional<int> FormalModel::find_frame(std::string_view id) const
{
    for (std::size_t f = 0; f < frames_.size(); ++f) {
        if (frames_[f].id == id) {
            return static_cast<int>(f);
        }
    }
    return std::nullopt;
}

int FormalModel::frame_index(std::string_view id) const
{
    if (auto f = find_frame(id)) {
        return *f;
    }
    fail(Errc::invariant_violation, "model '" + spec_.name + "' has no frame '" + std::string(id) + "'");
}

const Element *FormalModel::d_value(GenId g) const
{
    const auto &v = d_table_.at(static_cast<std::size_t>(g));
    return v ? &*v : nullptr;
}

const Element *FormalModel::iota_value(GenId g, int parameter) const
{
    const auto &v = iota_table_.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(parameter));
    return v ? &*v : nullptr;
}

Element FormalModel::gen(GenId g) const
{
    Term t{1, {}};
    if (generator(g).parity == Parity::odd) {
        t.mono.odd.push_back(g);
    } else {
        t.mono.even.emplace_back(g, 1);
    }
    if (auto n = normalize_term(std::move(t), *this)) {
        return Element::from_terms({std::move(*n)});
    }
    return {};
}

Element FormalModel::param(int a) const
{
    if (a < 0 || a >= parameter_count()) {
        fail(Errc::out_of_range, "no parameter with index " + std::to_string(a));
    }
    Term t{1, {}};
    t.mono.x.assign(static_cast<std::size_t>(a + 1), 0);
    t.mono.x.back() = 1;
    return Element::from_terms({std::move(t)});
}

Element FormalModel::delta(int frame_idx, MultiIndex deriv, DeltaArgument argument) const
{
    const FrameDecl &f = frame(frame_idx);
    if (deriv.size() != f.rank) {
        fail(Errc::invariant_violation, "delta derivative of length " + std::to_string(deriv.size()) + " on frame '" + f.id + "' of rank " + std::to_string(f.rank));
    }
    for (int e : deriv.entries) {
        if (e < 0) {
            fail(Errc::invariant_violation, "negative delta derivative order");
        }
    }
    Term t{1, {}};
    t.mono.delta = DeltaFactor{frame_idx, std::move(deriv), argument};
    return Element::from_terms({std::move(t)});
}

} // namespace equivar

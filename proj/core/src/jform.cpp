#include <equivar/error.hpp>
#include <equivar/jform.hpp>

#include <algorithm>
#include <functional>

namespace equivar {

TransversalityResult check_transversality(const FormalModel &m, std::string_view frame)
{
    const FrameDecl &F = m.frame(m.frame_index(frame));
    TransversalityResult res;
    if (F.rank == 0) {
        res.transverse = true;
        return res;
    }
    std::vector<RationalMatrix> samples;
    if (F.moment_matrix) {
        samples.push_back(*F.moment_matrix);
    }
    samples.insert(samples.end(), F.moment_samples.begin(), F.moment_samples.end());
    if (samples.empty()) {
        fail(Errc::rank_data_missing, "frame '" + F.id + "' declares no moment data");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].rank() < F.rank) {
            res.witness = samples[i];
            res.witness_index = static_cast<int>(i);
            return res;
        }
    }
    res.transverse = true;
    return res;
}

namespace {

Element descending_product(const std::vector<Element> &forms, const FormalModel &m)
{
    Element p = m.one();
    for (auto it = forms.rbegin(); it != forms.rend(); ++it) {
        p = multiply(p, *it, m);
    }
    return p;
}

} // namespace

JForm j_form(const FormalModel &m, std::string_view frame)
{
    const int fi = m.frame_index(frame);
    const FrameDecl &F = m.frame(fi);
    if (F.rank == 0) {
        return JForm{m.one(), fi};
    }
    const auto tr = check_transversality(m, frame);
    if (!tr.transverse) {
        fail(Errc::not_transverse, "moment map of frame '" + F.id + "' drops rank at sample " + tr.witness->to_string());
    }
    std::vector<Element> alphas;
    for (GenId a : F.slots) {
        alphas.push_back(m.gen(a));
    }
    return JForm{multiply(descending_product(alphas, m), m.delta(fi, MultiIndex::zero(F.rank)), m), fi};
}

bool check_closed(const JForm &j, const FormalModel &m)
{
    return equivariant_differential(j.value, m).is_zero();
}

bool check_absorption(const JForm &j, const FormalModel &m)
{
    for (GenId a : m.frame(j.frame).slots) {
        if (!multiply(m.gen(a), j.value, m).is_zero()) {
            return false;
        }
    }
    return true;
}

Element frame_changed_j_form(const FormalModel &m, std::string_view frame, const RationalMatrix &A, OrientationMode mode)
{
    const int fi = m.frame_index(frame);
    const FrameDecl &F = m.frame(fi);
    if (A.rows() != F.rank || A.cols() != F.rank) {
        fail(Errc::invariant_violation, "frame change must be " + std::to_string(F.rank) + "x" + std::to_string(F.rank));
    }
    if (F.rank == 0) {
        return m.one();
    }
    std::vector<Element> betas;
    for (int i = 0; i < F.rank; ++i) {
        Element b;
        for (int j = 0; j < F.rank; ++j) {
            b += A(i, j) * m.gen(F.slots[static_cast<std::size_t>(j)]);
        }
        betas.push_back(std::move(b));
    }
    // u^beta = D beta = A u, so delta_0(u^beta) = delta_0(A u)
    const Element d = delta_linear_substitute(DeltaFactor{fi, MultiIndex::zero(F.rank), DeltaArgument::closed}, A, mode);
    return multiply(descending_product(betas, m), d, m);
}

bool frame_change_compare(const FormalModel &m, std::string_view frame, const RationalMatrix &A, OrientationMode mode)
{
    return frame_changed_j_form(m, frame, A, mode) == j_form(m, frame).value;
}

Element chern_weil_pair(const FormalModel &m, const Element &p)
{
    const int r = m.parameter_count();
    int fi = -1;
    for (std::size_t f = 0; f < m.frames().size(); ++f) {
        if (!m.frames()[f].curvature.empty()) {
            fi = static_cast<int>(f);
            break;
        }
    }
    if (fi < 0) {
        fail(Errc::not_principal, "model '" + m.name() + "' declares no curvature");
    }
    const FrameDecl &F = m.frame(fi);
    if (F.rank != r || static_cast<int>(F.curvature.size()) != r) {
        fail(Errc::not_principal, "connection rank must match the number of parameters");
    }
    for (int j = 0; j < r; ++j) {
        const GenId psi = F.slots[static_cast<std::size_t>(j)];
        const GenId Psi = F.curvature[static_cast<std::size_t>(j)];
        const Element *dpsi = m.d_value(psi);
        if (!dpsi || !(*dpsi == m.gen(Psi)) || !m.generator(Psi).basic) {
            fail(Errc::not_principal, "d of '" + m.generator(psi).name + "' is not its basic curvature symbol");
        }
        for (int a = 0; a < r; ++a) {
            const Element *v = m.iota_value(psi, a);
            if (!v || !(*v == Element::constant(a == j ? 1 : 0))) {
                fail(Errc::not_principal, "connection '" + m.generator(psi).name + "' does not dualize the parameters");
            }
        }
    }
    for (const auto &t : p.terms()) {
        if (t.mono.delta || !t.mono.odd.empty() || !t.mono.even.empty()) {
            fail(Errc::invariant_violation, "invariant polynomial must be a polynomial in the parameters");
        }
    }

    const JForm J = j_form(m, F.id);

    // pi_*: strip psi_r ... psi_1 from the left
    std::vector<GenId> top(F.slots.rbegin(), F.slots.rend());
    std::vector<Term> pushed;
    for (const auto &t : J.value.terms()) {
        std::vector<GenId> rest;
        std::size_t hits = 0;
        for (GenId g : t.mono.odd) {
            if (std::find(F.slots.begin(), F.slots.end(), g) != F.slots.end()) {
                ++hits;
            } else {
                rest.push_back(g);
            }
        }
        if (hits != F.slots.size()) {
            continue;
        }
        std::vector<GenId> seq = top;
        seq.insert(seq.end(), rest.begin(), rest.end());
        bool flip = false;
        for (std::size_t a = 0; a < seq.size(); ++a) {
            for (std::size_t b = a + 1; b < seq.size(); ++b) {
                flip = flip != (seq[b] < seq[a]);
            }
        }
        Term n = t;
        n.mono.odd = rest;
        if (flip) {
            n.coeff = -n.coeff;
        }
        pushed.push_back(std::move(n));
    }
    const Element base = taylor_expand_delta(Element::from_terms(std::move(pushed)), F.id, m);
    const RationalMatrix Fm = *F.moment_matrix;

    // int delta^(K)(F X) p(X) dX, using int delta^(L)(X) p(X) dX = (-1)^|L| d^L p(0)
    auto pair = [&](const MultiIndex &K) {
        Rational total = 0;
        const Element sub = delta_linear_substitute(DeltaFactor{fi, K, DeltaArgument::moment}, Fm, OrientationMode::absolute);
        for (const auto &s : sub.terms()) {
            const MultiIndex &L = s.mono.delta->deriv;
            for (const auto &pt : p.terms()) {
                std::vector<int> x = pt.mono.x;
                x.resize(static_cast<std::size_t>(r), 0);
                if (x != L.entries) {
                    continue;
                }
                Rational v = s.coeff * pt.coeff * Rational(L.factorial());
                total += L.order() % 2 == 0 ? v : Rational(-v);
            }
        }
        return total;
    };

    std::vector<Term> out;
    for (const auto &t : base.terms()) {
        if (!t.mono.delta) {
            fail(Errc::invariant_violation, "pushforward lost its delta factor");
        }
        const Rational c = pair(t.mono.delta->deriv);
        if (c == 0) {
            continue;
        }
        Term n = t;
        n.mono.delta.reset();
        n.coeff *= c;
        out.push_back(std::move(n));
    }
    return Element::from_terms(std::move(out));
}

} // namespace equivar

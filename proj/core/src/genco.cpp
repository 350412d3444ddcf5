#include <equivar/error.hpp>
#include <equivar/genco.hpp>

#include <functional>
#include <map>

namespace equivar {

namespace {

// Parity of the permutation that sorts `seq`.
bool odd_permutation(const std::vector<GenId> &seq)
{
    bool flip = false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[j] < seq[i]) {
                flip = !flip;
            }
        }
    }
    return flip;
}

} // namespace

Element delta_linear_substitute(const DeltaFactor &d, const RationalMatrix &A, OrientationMode mode)
{
    const int k = d.deriv.size();
    if (A.rows() != k || A.cols() != k) {
        fail(Errc::invariant_violation, "substitution matrix must be " + std::to_string(k) + "x" + std::to_string(k));
    }
    const Rational det = A.determinant();
    if (det == 0 || (mode == OrientationMode::preserving && det < 0)) {
        fail(Errc::non_orientable, "frame change with det = " + det.get_str());
    }
    const RationalMatrix B = A.inverse().transpose();

    // prod_i (sum_j B_ij d_j)^{I_i}, expanded as a polynomial in the d_j
    std::map<std::vector<int>, Rational> poly{{std::vector<int>(static_cast<std::size_t>(k), 0), Rational(1)}};
    for (int i = 0; i < k; ++i) {
        for (int rep = 0; rep < d.deriv[i]; ++rep) {
            std::map<std::vector<int>, Rational> next;
            for (const auto &[exp, c] : poly) {
                for (int j = 0; j < k; ++j) {
                    if (B(i, j) == 0) {
                        continue;
                    }
                    auto e = exp;
                    ++e[static_cast<std::size_t>(j)];
                    next[e] += c * B(i, j);
                }
            }
            poly = std::move(next);
        }
    }

    const Rational scale = 1 / (mode == OrientationMode::absolute ? Rational(abs(det)) : det);
    std::vector<Term> terms;
    for (auto &[exp, c] : poly) {
        Term t{c * scale, {}};
        t.mono.delta = DeltaFactor{d.frame, MultiIndex{exp}, d.argument};
        terms.push_back(std::move(t));
    }
    return Element::from_terms(std::move(terms));
}

Element delta_linear_substitute(const Element &e, const RationalMatrix &A, OrientationMode mode)
{
    std::vector<Term> out;
    for (const auto &t : e.terms()) {
        if (!t.mono.delta) {
            out.push_back(t);
            continue;
        }
        const Element sub = delta_linear_substitute(*t.mono.delta, A, mode);
        for (const auto &s : sub.terms()) {
            Term n = t;
            n.coeff *= s.coeff;
            n.mono.delta = s.mono.delta;
            out.push_back(std::move(n));
        }
    }
    return Element::from_terms(std::move(out));
}

Element taylor_expand_delta(const Element &e, std::string_view frame, const FormalModel &m)
{
    const int fi = m.frame_index(frame);
    const FrameDecl &F = m.frame(fi);
    std::vector<Element> w;
    for (GenId alpha : F.slots) {
        const Element *dv = m.d_value(alpha);
        if (!dv) {
            fail(Errc::splitting_missing, "no d entry for '" + m.generator(alpha).name + "' in frame '" + F.id + "'");
        }
        w.push_back(*dv);
    }

    Element out;
    for (const auto &t : e.terms()) {
        if (!t.mono.delta || t.mono.delta->frame != fi || t.mono.delta->argument != DeltaArgument::closed) {
            out += Element::from_terms({t});
            continue;
        }
        Term rest_term = t;
        rest_term.mono.delta.reset();
        const Element rest = Element::from_terms({rest_term});
        const MultiIndex I = t.mono.delta->deriv;

        MultiIndex J = MultiIndex::zero(F.rank);
        std::function<void(int, const Element &)> walk = [&](int j, const Element &wJ) {
            if (j == F.rank) {
                MultiIndex IJ = I;
                for (int s = 0; s < F.rank; ++s) {
                    IJ[s] += J[s];
                }
                const Element piece = multiply(rest, wJ, m);
                out += Rational(Integer(1), J.factorial()) * multiply(piece, m.delta(fi, IJ, DeltaArgument::moment), m);
                return;
            }
            Element cur = wJ;
            for (J[j] = 0; !cur.is_zero(); ++J[j]) {
                walk(j + 1, cur);
                if (w[static_cast<std::size_t>(j)].is_zero()) {
                    break;
                }
                cur = multiply(cur, w[static_cast<std::size_t>(j)], m);
            }
            J[j] = 0;
        };
        walk(0, m.one());
    }
    return out;
}

FormalModel with_fibre(const FormalModel &base, std::string_view frame)
{
    const FrameDecl &F = base.frame(base.frame_index(frame));
    if (!F.fibre_coords.empty()) {
        fail(Errc::invariant_violation, "frame '" + F.id + "' already carries a fibre");
    }
    ModelSpec spec = base.spec();
    spec.name += "+fibre";
    for (int j = 1; j <= F.rank; ++j) {
        const std::string xi = "xi_" + F.id + "_" + std::to_string(j);
        const std::string dxi = "dxi_" + F.id + "_" + std::to_string(j);
        spec.generators.push_back({xi, Parity::even, 0, GeneratorKind::fibre_coordinate, F.id, j, false});
        spec.generators.push_back({dxi, Parity::odd, 1, GeneratorKind::fibre_coform, F.id, j, false});
        spec.d_table[xi] = dxi;
    }
    return FormalModel::build(std::move(spec));
}

Element fourier_fibre_integrate(const FormalModel &m, std::string_view frame)
{
    const int fi = m.frame_index(frame);
    const FrameDecl &F = m.frame(fi);
    const int k = F.rank;
    if (k == 0) {
        return m.one();
    }
    if (static_cast<int>(F.fibre_coords.size()) != k) {
        fail(Errc::missing_fibre, "frame '" + F.id + "' has no fibre coordinates");
    }

    Element lambda;
    Element phase; // expected xi-linear part of D lambda: -sum xi^j u_j
    for (int j = 0; j < k; ++j) {
        const auto sj = static_cast<std::size_t>(j);
        lambda -= multiply(m.gen(F.fibre_coords[sj]), m.gen(F.slots[sj]), m);
        phase -= multiply(m.gen(F.fibre_coords[sj]), m.gen(F.closed_args[sj]), m);
    }
    const Element Dlambda = equivariant_differential(lambda, m);

    auto is_coform = [&](GenId g) { return m.generator(g).kind == GeneratorKind::fibre_coform && m.generator(g).frame_index == fi; };
    std::vector<Term> P;
    std::vector<Term> N;
    for (const auto &t : Dlambda.terms()) {
        bool has_dxi = false;
        for (GenId g : t.mono.odd) {
            has_dxi = has_dxi || is_coform(g);
        }
        (has_dxi ? N : P).push_back(t);
    }
    if (!(Element::from_terms(P) == phase)) {
        fail(Errc::invariant_violation, "the fibre-degree-0 part of D lambda is not -<xi,u>");
    }
    const Element Nelem = Element::from_terms(N);

    // exp(iN) = re + i im, N is nilpotent under truncation
    Element re = m.one();
    Element im;
    Element cur = m.one();
    for (int n = 1;; ++n) {
        cur = Rational(1, n) * multiply(cur, Nelem, m);
        if (cur.is_zero()) {
            break;
        }
        switch (n % 4) {
            case 0: re += cur; break;
            case 1: im += cur; break;
            case 2: re -= cur; break;
            default: im -= cur; break;
        }
    }

    Element out_re;
    Element out_im;
    auto extract = [&](const Element &part, bool imaginary) {
        for (const auto &t : part.terms()) {
            std::vector<GenId> rest;
            int coforms = 0;
            for (GenId g : t.mono.odd) {
                if (is_coform(g)) {
                    ++coforms;
                } else {
                    rest.push_back(g);
                }
            }
            if (coforms != k) {
                continue;
            }
            std::vector<GenId> target = rest;
            target.insert(target.end(), F.fibre_coforms.begin(), F.fibre_coforms.end());
            Rational c = odd_permutation(target) ? Rational(-t.coeff) : t.coeff;

            MultiIndex J = MultiIndex::zero(k);
            Term base{1, {}};
            base.mono.x = t.mono.x;
            base.mono.odd = rest;
            for (auto [g, e] : t.mono.even) {
                const Generator &gen = m.generator(g);
                if (gen.kind == GeneratorKind::fibre_coordinate && gen.frame_index == fi) {
                    J[gen.slot - 1] = e;
                } else {
                    base.mono.even.emplace_back(g, e);
                }
            }
            if (t.mono.delta) {
                fail(Errc::delta_clash, "fibre integrand already carries a delta factor");
            }
            // int xi^J e^{-i<xi,u>} dxi = (2 pi)^k i^{|J|} delta^(J)(u); with the
            // (2 pi i)^{-k} prefactor the net factor is i^{|J|-k}
            const int p = ((J.order() - k + (imaginary ? 1 : 0)) % 4 + 4) % 4;
            if (p >= 2) {
                c = -c;
            }
            const bool to_imag = p % 2 == 1;
            base.coeff = c;
            Element term = multiply(Element::from_terms({base}), m.delta(fi, J), m);
            (to_imag ? out_im : out_re) += term;
        }
    };
    extract(re, false);
    extract(im, true);
    if (!out_im.is_zero()) {
        fail(Errc::invariant_violation, "fibre integral has a non-real part");
    }
    return out_re;
}

Element transfer(const Element &e, const FormalModel &from, const FormalModel &to)
{
    std::vector<GenId> gmap;
    for (const auto &g : from.generators()) {
        auto id = to.find_generator(g.name);
        gmap.push_back(id ? *id : -1);
    }
    std::vector<Term> out;
    for (const auto &t : e.terms()) {
        Term n{t.coeff, {}};
        n.mono.x = t.mono.x;
        if (static_cast<int>(n.mono.x.size()) > to.parameter_count()) {
            fail(Errc::invariant_violation, "target model has fewer parameters");
        }
        if (t.mono.delta) {
            n.mono.delta = t.mono.delta;
            n.mono.delta->frame = to.frame_index(from.frame(t.mono.delta->frame).id);
        }
        auto map_id = [&](GenId g) {
            const GenId h = gmap[static_cast<std::size_t>(g)];
            if (h < 0) {
                fail(Errc::invariant_violation, "generator '" + from.generator(g).name + "' is missing in '" + to.name() + "'");
            }
            return h;
        };
        for (GenId g : t.mono.odd) {
            n.mono.odd.push_back(map_id(g));
        }
        for (auto [g, x] : t.mono.even) {
            n.mono.even.emplace_back(map_id(g), x);
        }
        if (auto norm = normalize_term(std::move(n), to)) {
            out.push_back(std::move(*norm));
        }
    }
    return Element::from_terms(std::move(out));
}

} // namespace equivar

#include <equivar/characters.hpp>
#include <equivar/element_text.hpp>
#include <equivar/error.hpp>
#include <equivar/jform.hpp>

#include <cstdlib>
#include <functional>

namespace equivar {

LaurentPolynomial weyl_character_oracle(int n)
{
    if (n < 0) {
        fail(Errc::out_of_range, "Weyl character needs n >= 0");
    }
    LaurentPolynomial p(1);
    for (int i = 0; i <= n; ++i) {
        // z1 has weight 1, z2 weight -1
        p.add_term({(n - i) - i}, 1);
    }
    return p;
}

int frobenius_multiplicity_oracle(int n, int m)
{
    if (m < 0) {
        fail(Errc::out_of_range, "irrep label must be non-negative");
    }
    int count = 0;
    for (int w = m; w >= -m; w -= 2) {
        count += w == n ? 1 : 0;
    }
    return count;
}

Integer hrr_cp1_oracle(int n)
{
    auto monomials = [](int degree) {
        Integer c = 0;
        for (int i = 0; i <= degree; ++i) {
            c += 1;
        }
        return c;
    };
    return monomials(n) - monomials(-n - 2);
}

std::map<Weight, Integer> l2_torus_oracle(int rank, int box)
{
    std::map<Weight, Integer> out;
    Weight w(static_cast<std::size_t>(rank), -box);
    while (true) {
        // the Fourier mode exp(i<w,theta>) spans the w-isotype
        out[w] += 1;
        std::size_t i = 0;
        while (i < w.size() && w[i] == box) {
            w[i] = -box;
            ++i;
        }
        if (i == w.size()) {
            break;
        }
        ++w[i];
    }
    return out;
}

namespace {

SeriesPolicy checked(const SeriesPolicy &policy)
{
    if (policy.max_degree < 0) {
        fail(Errc::out_of_range, "maxDegree must be non-negative");
    }
    return policy;
}

// Integral over M of the top form alpha_l ... alpha_1 * c * delta^(I)(u),
// with M oriented by the frame.
Element integrate_frame_top(const JForm &j, const FormalModel &m)
{
    const auto &slots = m.frame(j.frame).slots;
    std::vector<GenId> top(slots.rbegin(), slots.rend());
    std::vector<Term> out;
    for (const auto &t : j.value.terms()) {
        if (t.mono.odd.size() != slots.size() || !t.mono.even.empty()) {
            continue;
        }
        bool flip = false;
        for (std::size_t a = 0; a < top.size(); ++a) {
            for (std::size_t b = a + 1; b < top.size(); ++b) {
                flip = flip != (top[b] < top[a]);
            }
        }
        Term n = t;
        n.mono.odd.clear();
        if (flip) {
            n.coeff = -n.coeff;
        }
        out.push_back(std::move(n));
    }
    return Element::from_terms(std::move(out));
}

void add_integer_check(Report &r, const std::vector<CharacterEntry> &entries)
{
    // entries are Integers by construction; a fractional value would have thrown upstream
    r.add("integer-coefficients", true);
    (void)entries;
}

} // namespace

DistributionalCharacter index_torus_zero_op(int rank)
{
    const FormalModel m = FormalModel::build(torus_model_spec(rank));
    const JForm j = j_form(m, "E0");
    const Element top = integrate_frame_top(j, m);
    if (top.size() != 1 || !top.terms().front().mono.delta || top.terms().front().mono.delta->deriv.order() != 0) {
        fail(Errc::invariant_violation, "integral of J over the torus is not a multiple of delta_0(u)");
    }
    const FrameDecl &F = m.frame(j.frame);
    // u = f(X) = F X; pull delta_0(F X) back to delta_0(X)
    const Element pulled = delta_linear_substitute(top, *F.moment_matrix, OrientationMode::absolute);
    const Rational c = pulled.terms().front().coeff;
    if (!is_integer(c)) {
        fail(Errc::non_integer_coefficients, "delta class coefficient " + c.get_str());
    }
    // Fourier coefficients of c * delta_0 on the weight lattice are all c
    return DistributionalCharacter::lattice(rank, c.get_num());
}

Report index_torus_zero_pipeline(int rank, const SeriesPolicy &policy)
{
    const int box = checked(policy).max_degree;
    Report r;
    r.command = "index torus-zero";
    r.model = rank == 1 ? "s1-on-s1" : "t" + std::to_string(rank) + "-on-t" + std::to_string(rank);

    const FormalModel m = FormalModel::build(torus_model_spec(rank));
    const JForm j = j_form(m, "E0");
    r.add("transversality", check_transversality(m, "E0").transverse);
    r.add("closedness", check_closed(j, m));
    r.add("delta-class", integrate_frame_top(j, m) == m.delta(j.frame, MultiIndex::zero(rank)), to_text(j.value, m));

    const DistributionalCharacter d = index_torus_zero_op(rank);
    const auto oracle = l2_torus_oracle(rank, box);
    std::vector<CharacterEntry> entries;
    std::optional<std::string> witness;
    for (const auto &[w, mult] : oracle) {
        const Integer got = multiplicity(d, w);
        if (got != mult && !witness) {
            witness = "weight " + to_string(w) + ": formula " + got.get_str() + ", L2 " + mult.get_str();
        }
        if (got != 0) {
            entries.push_back({w, got});
        }
    }
    r.add("l2-oracle", !witness, witness);
    add_integer_check(r, entries);
    r.characters = std::move(entries);
    return r;
}

LaurentPolynomial cp1_etm_character(int twist, const SeriesPolicy &policy)
{
    if (std::abs(twist) > checked(policy).max_degree) {
        fail(Errc::out_of_range, "twist exceeds the series bound");
    }
    const ModelFile file = builtin_model("cp1-dolbeault");
    std::vector<FixedLocusDatum> loci = file.fixed_loci;
    for (auto &d : loci) {
        d.twist = scaled(d.twist, twist);
    }
    const RationalCharacter chi = localize_index(loci, PipelineCase::elliptic_etm, policy);
    auto lp = chi.as_laurent();
    if (!lp) {
        fail(Errc::invariant_violation, "CP1 character does not reduce to a Laurent polynomial: " + chi.to_string());
    }
    return *lp;
}

Report index_cp1_pipeline(Cp1Case c, int twist, const SeriesPolicy &policy)
{
    checked(policy);
    Report r;
    if (c == Cp1Case::e0) {
        r.command = "index cp1-l2";
        r.model = "cp1-l2";
        std::vector<CharacterEntry> entries;
        std::optional<std::string> witness;
        for (int m = 0; m <= policy.max_degree; ++m) {
            const int mult = frobenius_multiplicity_oracle(twist, m);
            // branching read off the weight basis must agree with the Weyl character
            if (Rational(mult) != weyl_character_oracle(m).coefficient({twist}) && !witness) {
                witness = "irrep " + std::to_string(m);
            }
            entries.push_back({{m}, Integer(mult)});
        }
        r.add("frobenius-oracle", !witness, witness);
        r.skip("formula-side", "E=0 endpoint on SU(2)/T is verified on the Frobenius side only");
        add_integer_check(r, entries);
        r.characters = std::move(entries);
        return r;
    }

    r.command = "index cp1-dolbeault";
    r.model = "cp1-dolbeault";
    const ModelFile file = builtin_model("cp1-dolbeault");
    const FormalModel m = FormalModel::build(file.spec);
    const JForm j = j_form(m, "E0");
    r.add("j-form-is-one", j.value == m.one(), to_text(j.value, m));
    r.add("closedness", check_closed(j, m));

    const LaurentPolynomial chi = cp1_etm_character(twist, policy);
    LaurentPolynomial oracle(1);
    if (twist >= 0) {
        oracle = weyl_character_oracle(twist);
    } else if (twist <= -2) {
        oracle = -weyl_character_oracle(-twist - 2);
    }
    r.add("weyl-oracle", chi == oracle, "formula " + chi.to_string() + ", oracle " + oracle.to_string());
    Rational dim = 0;
    for (const auto &[w, coef] : chi.terms()) {
        dim += coef;
    }
    r.add("hrr-oracle", dim == Rational(hrr_cp1_oracle(twist)), "value at t=1: " + dim.get_str());
    if (!chi.has_integer_coefficients()) {
        fail(Errc::non_integer_coefficients, "CP1 character " + chi.to_string());
    }
    std::vector<CharacterEntry> entries;
    for (const auto &[w, coef] : chi.terms()) {
        entries.push_back({w, coef.get_num()});
    }
    add_integer_check(r, entries);
    r.characters = std::move(entries);
    return r;
}

namespace {

struct HopfData {
    ModelFile file;
    FormalModel model;
    Element todd;
};

const HopfData &hopf_data()
{
    static const HopfData data = [] {
        ModelFile file = builtin_model("hopf");
        FormalModel m = FormalModel::build(file.spec);
        if (!file.base) {
            fail(Errc::invariant_violation, "hopf model declares no base data");
        }
        Element todd = parse_element(file.base->todd, m);
        return HopfData{std::move(file), std::move(m), std::move(todd)};
    }();
    return data;
}

Rational integrate_base(const Element &e, const HopfData &h)
{
    Rational total = 0;
    const int top = *h.model.base_dim();
    for (const auto &t : e.terms()) {
        if (form_degree(t.mono, h.model) != top) {
            continue;
        }
        const std::string key = to_text(t.mono, h.model);
        auto it = h.file.base->integrals.find(key);
        if (it == h.file.base->integrals.end()) {
            fail(Errc::invariant_violation, "no base integral declared for '" + key + "'");
        }
        total += t.coeff * parse_rational(it->second);
    }
    return total;
}

} // namespace

Integer hopf_multiplicity(int k)
{
    const HopfData &h = hopf_data();
    const FormalModel &m = h.model;
    // e^{-kX}, truncated where the base degree cuts off
    Element p;
    Element xp = m.one();
    for (int i = 0; 2 * i <= *m.base_dim(); ++i) {
        p += Rational(pow(Rational(-k), i) / Rational(factorial(static_cast<unsigned>(i)))) * xp;
        xp = multiply(xp, m.param(0), m);
    }
    const Element paired = chern_weil_pair(m, p);
    const Rational v = integrate_base(multiply(h.todd, paired, m), h);
    if (!is_integer(v)) {
        fail(Errc::non_integer_coefficients, "Hopf multiplicity " + v.get_str() + " at weight " + std::to_string(k));
    }
    return v.get_num();
}

Report index_hopf_pipeline(const SeriesPolicy &policy)
{
    const int D = checked(policy).max_degree;
    Report r;
    r.command = "index hopf";
    r.model = "hopf";
    const HopfData &h = hopf_data();
    const FormalModel &m = h.model;
    const JForm j = j_form(m, "P");
    r.add("transversality", check_transversality(m, "P").transverse);
    r.add("closedness", check_closed(j, m));
    r.add("j-h-abelian", j_h_function({}, {1}, 8) == PowerSeries{std::vector<Rational>{1, 0, 0, 0, 0, 0, 0, 0, 0}});
    const Element cw = chern_weil_pair(m, m.param(0));
    r.add("chern-weil-linear", cw == m.gen("Psi"), to_text(cw, m));

    std::vector<CharacterEntry> entries;
    std::optional<std::string> witness;
    for (int k = -D; k <= D; ++k) {
        const Integer mult = hopf_multiplicity(k);
        const Integer oracle = hrr_cp1_oracle(k);
        if (mult != oracle && !witness) {
            witness = "weight " + std::to_string(k) + ": formula " + mult.get_str() + ", oracle " + oracle.get_str();
        }
        if (mult != 0) {
            entries.push_back({{k}, mult});
        }
    }
    r.add("hrr-oracle", !witness, witness);
    add_integer_check(r, entries);
    r.characters = std::move(entries);
    return r;
}

Report index_s3_contact_pipeline(const SeriesPolicy &policy)
{
    const int D = checked(policy).max_degree;
    Report r;
    r.command = "index s3-contact";
    r.model = "s3-contact";
    const ModelFile file = builtin_model("s3-contact");
    const FormalModel m = FormalModel::build(file.spec);
    const JForm j = j_form(m, "E0");
    r.add("transversality", check_transversality(m, "E0").transverse);
    r.add("closedness", check_closed(j, m));
    const Element display = taylor_expand_delta(j.value, "E0", m);
    const Element expected = parse_element("alpha*delta[E0;f] + alpha*delta[E0;f]^(1)*dalpha", m);
    r.add("display-form", display == expected, to_text(display, m));

    const RationalCharacter chi = localize_index(file.fixed_loci, PipelineCase::contact, policy);
    const DistributionalCharacter d = expand_to_degree(chi, policy);

    std::optional<std::string> quadrant;
    std::optional<std::string> symmetry;
    for (int a = 0; a <= D; ++a) {
        for (int b = 0; a + b <= D; ++b) {
            // exactly one CR monomial z1^a z2^b
            if (multiplicity(d, {a, b}) != 1 && !quadrant) {
                quadrant = "weight (" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
        }
    }
    std::vector<CharacterEntry> entries;
    for (const auto &[w, c] : d.coefficients()) {
        if (multiplicity(d, {w[1], w[0]}) != c && !symmetry) {
            symmetry = "weight " + to_string(w);
        }
        entries.push_back({w, c});
    }
    r.add("cr-oracle-quadrant", !quadrant, quadrant);
    r.add("exchange-symmetry", !symmetry, symmetry);
    add_integer_check(r, entries);
    r.characters = std::move(entries);
    return r;
}

} // namespace equivar

#include "generators.hpp"

#include <equivar/superalg.hpp>

namespace gen {

using namespace equivar;

int uniform(std::mt19937_64 &rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational small_rational(std::mt19937_64 &rng)
{
    Rational q(uniform(rng, -4, 4), uniform(rng, 1, 3));
    q.canonicalize();
    return q;
}

Element element(std::mt19937_64 &rng, const FormalModel &m, int terms, bool deltas)
{
    Element out;
    const int n_gen = static_cast<int>(m.generators().size());
    for (int t = uniform(rng, 1, terms); t > 0; --t) {
        Element term = Element::constant(small_rational(rng));
        for (int a = 0; a < m.parameter_count(); ++a) {
            term = multiply(term, power(m.param(a), uniform(rng, 0, 2), m), m);
        }
        if (deltas && uniform(rng, 0, 2) == 0) {
            const int fi = uniform(rng, 0, static_cast<int>(m.frames().size()) - 1);
            const FrameDecl &F = m.frame(fi);
            if (F.rank > 0) {
                MultiIndex I = MultiIndex::zero(F.rank);
                for (int j = 0; j < F.rank; ++j) {
                    I[j] = uniform(rng, 0, 2);
                }
                term = multiply(term, m.delta(fi, I), m);
            }
        }
        if (n_gen > 0) {
            for (int f = uniform(rng, 1, 4); f > 0; --f) {
                term = multiply(term, m.gen(static_cast<GenId>(uniform(rng, 0, n_gen - 1))), m);
            }
        }
        out += term;
    }
    return out;
}

RationalMatrix invertible(std::mt19937_64 &rng, int k, bool positive)
{
    while (true) {
        RationalMatrix A(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                A(i, j) = small_rational(rng);
            }
        }
        const Rational det = A.determinant();
        if (det != 0 && (!positive || det > 0)) {
            return A;
        }
    }
}

} // namespace gen

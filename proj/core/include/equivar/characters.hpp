#pragma once

#include <map>

#include <equivar/charclass.hpp>
#include <equivar/model_io.hpp>
#include <equivar/report.hpp>

namespace equivar {

/// t^n + t^{n-2} + ... + t^{-n}, by enumerating monomials z1^{n-i} z2^i.
LaurentPolynomial weyl_character_oracle(int n);

/// Multiplicity of the T-weight n in the SU(2) irrep of highest weight m.
int frobenius_multiplicity_oracle(int n, int m);

/// h^0 - h^1 of O(n) on CP^1 by monomial counts, h^1 through Serre duality.
Integer hrr_cp1_oracle(int n);

/// Multiplicity of each weight of L^2(T^l) on the box |w_i| <= box.
std::map<Weight, Integer> l2_torus_oracle(int rank, int box);

/// The formula side of the zero operator on T^l acting on itself.
DistributionalCharacter index_torus_zero_op(int rank);

enum class Cp1Case { e0, etm };

/// Localized Dolbeault character of O(n) on CP^1.
LaurentPolynomial cp1_etm_character(int twist, const SeriesPolicy &policy);

/// Multiplicity of the weight-k isotype for the Hopf fibration S^3 -> CP^1.
Integer hopf_multiplicity(int k);

Report index_torus_zero_pipeline(int rank, const SeriesPolicy &policy);
Report index_cp1_pipeline(Cp1Case c, int twist, const SeriesPolicy &policy);
Report index_hopf_pipeline(const SeriesPolicy &policy);
Report index_s3_contact_pipeline(const SeriesPolicy &policy);

} // namespace equivar

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "casc/cascade.hpp"
#include "casc/coadjoint.hpp"
#include "casc/polynomial.hpp"
#include "casc/rootsystem.hpp"

namespace casc {

// e_alpha acting on S(n) as a derivation: the differential of the coadjoint
// action on polynomial functions on n_-.
NilPolynomial derivation_action(const RootSystem& rs, int simple_i, const NilPolynomial& f);

// Integer root coordinates of the H-weight of a monomial (sum of its roots).
std::vector<int> mono_weight_rc(const RootSystem& rs, const Mono& m);

// Monomials of total degree d whose weight is weight_rc, sorted.
std::vector<Mono> enumerate_monomials(const RootSystem& rs, int d,
                                      const std::vector<int>& weight_rc);

// Same, with the degree left free (it is bounded by the height of weight_rc).
std::vector<Mono> enumerate_weighted_multisets(const RootSystem& rs,
                                               const std::vector<int>& weight_rc);

// Basis of the weight component of S^d(n)^N: exact nullspace of the stacked
// simple-root derivations. Each element is normalized.
std::vector<NilPolynomial> invariant_block(const RootSystem& rs, int d,
                                           const std::vector<int>& weight_rc);

struct SpectrumEntry {
  std::vector<int> weight_rc;
  int degree = 0;
  int multiplicity = 1;
  NilPolynomial xi;         // normalized basis invariant
  IntVec cascade_coeffs;    // b_beta with weight = sum b_beta beta
};

struct Spectrum {
  int max_degree = 0;
  std::vector<SpectrumEntry> entries;    // by (degree, weight)
  std::vector<std::string> violations;   // multiplicity/dominance/lattice findings
};

// All H-weights with nonzero invariant multiplicity up to max_degree.
// Weight blocks are independent; the parallel driver fans them out with
// OpenMP and merges in block order, so output is identical to the serial
// reference below.
Spectrum weight_spectrum(const RootSystem& rs, const Cascade& c, int max_degree);
Spectrum weight_spectrum_serial(const RootSystem& rs, const Cascade& c, int max_degree);

struct GeneratorShortfall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeneratorSet {
  std::vector<SpectrumEntry> gens;  // the m prime generators, by degree
};

// The spectrum weights that are not sums of two nonzero spectrum weights.
// Throws GeneratorShortfall when fewer than m such weights exist up to the
// spectrum's max degree; records a violation in *violations when more than m
// appear.
GeneratorSet extract_generators(const RootSystem& rs, const Cascade& c, const Spectrum& s,
                                std::vector<std::string>* violations = nullptr);

// Unique integer solution of nu = sum e_i mu_i over the generator weights;
// nullopt when none exists.
std::optional<IntVec> factorization_exponents(const RootSystem& rs, const GeneratorSet& g,
                                              const Weight& nu);

struct TorusMonomial {
  IntVec exps;  // over cascade order
  Rat coeff;
};

// Substitution e_phi -> a_phi on cascade roots, 0 elsewhere; nullopt unless
// the result is a single nonzero monomial.
std::optional<TorusMonomial> restrict_to_torus(const RootSystem& rs, const Cascade& c,
                                               const NilPolynomial& xi);

// Homogeneous with dominant weight (n-invariance is the caller's premise).
bool highest_weight_vector_check(const RootSystem& rs, const NilPolynomial& xi);

// Degree bound large enough to reach every generator at desk scale:
// ceil((l+1)/2) for A_l, 6 for G2, 4 otherwise; max over product factors.
int default_max_degree(const RootSystem& rs);

}  // namespace casc

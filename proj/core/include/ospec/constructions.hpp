#pragma once

#include "ospec/catalog.hpp"
#include "ospec/report.hpp"
#include "ospec/spectrum.hpp"

#include <string>
#include <vector>

namespace ospec::constructions {

using catalog::Effort;
using catalog::GroupSpec;
using numtheory::Int;
using spectra::Spectrum;

// Why a candidate prime was rejected by the sequence generator: it
// divides q_j - 1, or q_j^3 + 1, or is the defining characteristic.
enum class SkipReason { DividesQMinus1, DividesQCubedPlus1, IsThree };

const char* to_string(SkipReason r);

struct SkipEntry {
  unsigned long candidate;
  unsigned witness;  // 1-based index j of the term q_j providing the divisor
  SkipReason reason;
};

// Greedy sequence of odd primes: the first term is 5, and each later
// term is the smallest prime exceeding its predecessor that divides none
// of the Ree orders |2G2(3^p_j)| built from the earlier terms. Every
// prime passed over is recorded with its divisibility witness.
struct SequenceCertificate {
  std::vector<unsigned long> terms;
  std::vector<SkipEntry> skipped;

  // Rechecks every certificate invariant from scratch (primality,
  // ordering, cross-term coprimality, witness divisibilities).
  Report validate() const;
};

SequenceCertificate sequence(unsigned k);

// Coprimality facts about the sequence terms, all decided by exact
// arithmetic: (a) primes common to two Ree orders are only {2, 3, 7};
// (b) no term divides any of the Ree orders; (c) the shape facts about
// q +- 1 and q +- sqrt(3q) + 1 per term; (d) for each m in m_range that
// is not a term, a primitive prime divisor of 3^(6m) - 1 divides
// |2G2(3^m)| but none of the certified Ree orders.
Report verify_prime_lemma(const SequenceCertificate& cert,
                          const std::vector<unsigned long>& m_range,
                          const Effort& effort = {});

// D6 x D10: the solvable replacement partner for the fourth power of J1.
struct J1Witness {
  std::vector<GroupSpec> factors;
  Spectrum mu;
  bool solvable;
};

J1Witness j1_witness();

// {6, 9, q-1, (q+1)/2}: the spectrum of the replacement partner for the
// cube of the Ree group with q = 3^alpha.
Spectrum ree_witness_mu(unsigned alpha);

struct ReplacementOutcome {
  bool ok;
  std::string diff;  // mu-set difference when ok is false
};

// omega(J1^4) = omega(J1^3 x D6 x D10), via the replacement hypotheses
// plus a direct spectrum comparison.
ReplacementOutcome check_theorem_j1();

// omega(R^3) = omega(R^2 x H) for R the Ree group of q = 3^alpha and H
// with mu(H) = {6, 9, q-1, (q+1)/2}.
ReplacementOutcome check_theorem_ree(unsigned alpha);

// The arithmetic ingredients behind recognizability of the product
// P_k = R_1 x ... x R_k of sequence Ree groups: certificate validity,
// the four-prime cocliques per factor surviving in the product graph,
// and the absence of the forbidden order 2 * r_13 * ... * r_k3.
Report check_product_ingredients(unsigned k, const Effort& effort = {});

}  // namespace ospec::constructions

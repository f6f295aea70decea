#include "ospec/constructions.hpp"

#include "ospec/prime_graph.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace ospec::constructions {

namespace nt = ospec::numtheory;

const char* to_string(SkipReason r) {
  switch (r) {
    case SkipReason::DividesQMinus1: return "divides q-1";
    case SkipReason::DividesQCubedPlus1: return "divides q^3+1";
    case SkipReason::IsThree: return "equals the characteristic 3";
  }
  return "?";
}

namespace {

Int pow3(unsigned long e) {
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), 3, e);
  return q;
}

// Reason a candidate prime divides |2G2(3^p)|, if it does. Decided by
// modular exponentiation only.
std::optional<SkipReason> division_reason(unsigned long candidate,
                                          unsigned long p) {
  if (candidate == 3) return SkipReason::IsThree;
  const Int r(candidate);
  if (nt::mod_pow(3, Int(p), r) == 1) return SkipReason::DividesQMinus1;
  if (nt::mod_pow(3, Int(3 * p), r) == r - 1)
    return SkipReason::DividesQCubedPlus1;
  return std::nullopt;
}

unsigned long next_prime_after(unsigned long n) {
  Int p(n);
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p.get_ui();
}

std::string mu_to_string(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.mu().size(); ++i) {
    if (i) out += ", ";
    out += s.mu()[i].get_str();
  }
  return out + "}";
}

}  // namespace

SequenceCertificate sequence(unsigned k) {
  if (k == 0) throw std::invalid_argument("sequence: k >= 1");
  SequenceCertificate cert;
  cert.terms.push_back(5);
  unsigned long candidate = 5;
  while (cert.terms.size() < k) {
    candidate = next_prime_after(candidate);
    std::optional<SkipEntry> skip;
    for (unsigned j = 0; j < cert.terms.size() && !skip; ++j) {
      if (auto reason = division_reason(candidate, cert.terms[j])) {
        skip = SkipEntry{candidate, j + 1, *reason};
      }
    }
    if (skip) {
      cert.skipped.push_back(*skip);
    } else {
      cert.terms.push_back(candidate);
    }
  }
  return cert;
}

Report SequenceCertificate::validate() const {
  Report rep;
  if (terms.empty() || terms[0] != 5) {
    rep.add("certificate.first_term", false, "first term must be 5");
    return rep;
  }
  rep.add("certificate.first_term", true, "p_1 = 5");

  bool shape_ok = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!nt::is_prime(Int(terms[i])) || (i > 0 && terms[i] <= terms[i - 1]))
      shape_ok = false;
  }
  rep.add("certificate.terms_ascending_primes", shape_ok);

  bool coprime_ok = true;
  for (unsigned long pi : terms) {
    for (unsigned long pj : terms) {
      if (catalog::divides_ree_order(Int(pi), pj)) coprime_ok = false;
    }
  }
  rep.add("certificate.terms_divide_no_ree_order", coprime_ok);

  // Each skipped candidate must carry a true divisibility witness, and
  // together with the terms they must cover every prime up to the last
  // term: that is what certifies minimality of each step.
  bool witnesses_ok = true;
  std::set<unsigned long> covered(terms.begin(), terms.end());
  for (const SkipEntry& e : skipped) {
    covered.insert(e.candidate);
    if (e.witness == 0 || e.witness > terms.size()) {
      witnesses_ok = false;
      continue;
    }
    auto reason = division_reason(e.candidate, terms[e.witness - 1]);
    if (!reason || *reason != e.reason) witnesses_ok = false;
  }
  rep.add("certificate.skip_witnesses", witnesses_ok);

  bool complete = true;
  for (unsigned long p = 5; p < terms.back(); p = next_prime_after(p)) {
    if (!covered.count(p)) complete = false;
  }
  rep.add("certificate.no_prime_unaccounted", complete);
  return rep;
}

Report verify_prime_lemma(const SequenceCertificate& cert,
                          const std::vector<unsigned long>& m_range,
                          const Effort& effort) {
  Report rep;
  const auto& terms = cert.terms;
  std::vector<Int> q(terms.size());
  std::vector<Int> cofactor(terms.size());  // (q-1)(q^3+1), the 3'-part of the order
  for (std::size_t i = 0; i < terms.size(); ++i) {
    q[i] = pow3(terms[i]);
    Int q3 = q[i] * q[i] * q[i];
    cofactor[i] = (q[i] - 1) * (q3 + 1);
  }

  // (a) Common primes of two Ree orders are exactly {2, 3, 7}: the gcd
  // of the 3'-parts carries every common prime other than 3.
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      std::string name = "common_primes(p" + std::to_string(i + 1) + ",p" +
                         std::to_string(j + 1) + ")";
      Int g;
      mpz_gcd(g.get_mpz_t(), cofactor[i].get_mpz_t(), cofactor[j].get_mpz_t());
      try {
        nt::Factorization fg = nt::factorize(g, effort);
        const std::vector<Int> gprimes = fg.primes();
        std::set<Int> ps(gprimes.begin(), gprimes.end());
        bool ok = ps == std::set<Int>{Int(2), Int(7)};
        rep.add(name, ok, "gcd of 3'-parts = " + g.get_str() + " = " + fg.to_string() +
                          "; with the common characteristic the shared primes are {2, 3, 7}");
      } catch (const nt::EffortExceeded& e) {
        rep.add(name, CheckStatus::Unverified, e.what());
      }
    }
  }

  // (b) No term divides any of the orders, its own included.
  {
    bool ok = true;
    for (unsigned long pi : terms)
      for (unsigned long pj : terms)
        if (catalog::divides_ree_order(Int(pi), pj)) ok = false;
    rep.add("terms_outside_all_ree_orders", ok,
            std::to_string(terms.size() * terms.size()) + " modular checks");
  }

  // (c) Shape facts per term.
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string suffix = "(p" + std::to_string(i + 1) + ")";
    const Int s = catalog::ree_sqrt3q(static_cast<unsigned>(terms[i]));
    const Int minus = q[i] - s + 1, plus = q[i] + s + 1;

    rep.add("q_pm_1_not_2_power" + suffix,
            nt::r_prime_part(q[i] - 1, 2) > 1 && nt::r_prime_part(q[i] + 1, 2) > 1);

    const bool seven_minus = mpz_divisible_ui_p(minus.get_mpz_t(), 7) != 0;
    const bool seven_plus = mpz_divisible_ui_p(plus.get_mpz_t(), 7) != 0;
    rep.add("seven_divides_exactly_one" + suffix, seven_minus != seven_plus,
            seven_minus ? "7 | q-sqrt(3q)+1" : "7 | q+sqrt(3q)+1");

    rep.add("q_pm_sqrt_not_7_power" + suffix,
            nt::r_prime_part(minus, 7) > 1 && nt::r_prime_part(plus, 7) > 1);

    Int q3p1 = q[i] * q[i] * q[i] + 1;
    rep.add("seven_part_of_q3_plus_1" + suffix, nt::r_part(q3p1, 7) == 7,
            "(q^3+1)_7 = " + nt::r_part(q3p1, 7).get_str());
  }

  // (d) Any odd m > 3 outside the terms is separated from all of them by
  // a primitive prime divisor of 3^(6m) - 1.
  for (unsigned long m : m_range) {
    std::string name = "no_other_ree_group(m=" + std::to_string(m) + ")";
    if (m <= 3 || m % 2 == 0) {
      rep.add(name, false, "m must be odd and > 3");
      continue;
    }
    if (std::find(terms.begin(), terms.end(), m) != terms.end()) {
      rep.add(name, true, "m is a sequence term");
      continue;
    }
    try {
      std::vector<Int> ppds = nt::primitive_prime_divisors(3, 6 * m, effort);
      if (ppds.empty()) {
        rep.add(name, false, "no primitive prime divisor of 3^(6m)-1");
        continue;
      }
      const Int& r = ppds.front();
      bool divides_target = nt::mod_pow(3, Int(3 * m), r) == r - 1;
      bool outside = true;
      for (unsigned long p : terms)
        if (catalog::divides_ree_order(r, p)) outside = false;
      rep.add(name, divides_target && outside,
              "witness prime " + r.get_str() + " divides |2G2(3^" +
                  std::to_string(m) + ")| and none of the certified orders");
    } catch (const nt::EffortExceeded& e) {
      rep.add(name, CheckStatus::Unverified, e.what());
    }
  }

  return rep;
}

J1Witness j1_witness() {
  std::vector<GroupSpec> factors = {GroupSpec::dihedral(3),
                                    GroupSpec::dihedral(5)};
  Spectrum mu = product(catalog::mu(factors[0]), catalog::mu(factors[1]));
  // a direct product of dihedral groups is solvable
  return J1Witness{std::move(factors), std::move(mu), true};
}

Spectrum ree_witness_mu(unsigned alpha) {
  catalog::GroupSpec g = catalog::GroupSpec::ree_alpha(alpha);
  return Spectrum::from_orders({Int(6), Int(9), g.q - 1, (g.q + 1) / 2});
}

namespace {

ReplacementOutcome compare(const Spectrum& lhs, const Spectrum& rhs) {
  if (lhs == rhs) return {true, {}};
  std::ostringstream os;
  os << "mu mismatch: " << mu_to_string(lhs) << " vs " << mu_to_string(rhs);
  return {false, os.str()};
}

}  // namespace

ReplacementOutcome check_theorem_j1() {
  Spectrum sj = catalog::mu(GroupSpec::j1());
  J1Witness w = j1_witness();
  if (!replacement_hypotheses(sj, w.mu, 4))
    return {false, "replacement hypotheses fail for J1 at k = 4"};
  return compare(sj.power(4), product(sj.power(3), w.mu));
}

ReplacementOutcome check_theorem_ree(unsigned alpha) {
  Spectrum sr = catalog::mu(GroupSpec::ree_alpha(alpha));
  Spectrum w = ree_witness_mu(alpha);
  if (!replacement_hypotheses(sr, w, 3))
    return {false, "replacement hypotheses fail for Ree at k = 3"};
  return compare(sr.power(3), product(sr.power(2), w));
}

Report check_product_ingredients(unsigned k, const Effort& effort) {
  Report rep;
  SequenceCertificate cert = sequence(k);
  rep.merge(cert.validate());

  std::vector<Spectrum> factors;
  for (unsigned long p : cert.terms)
    factors.push_back(catalog::mu(catalog::GroupSpec::ree_alpha(static_cast<unsigned>(p))));

  Spectrum left = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) left = product(left, factors[i]);
  Spectrum right = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) right = product(factors[i], right);
  rep.add("product_fold_order_independent", left == right);

  Int forbidden = 2;
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    const unsigned alpha = static_cast<unsigned>(cert.terms[i]);
    const std::string suffix = "(p" + std::to_string(i + 1) + ")";
    try {
      primegraph::SigmaQuadruple sigma = primegraph::coclique_sigma(alpha, effort);
      // coclique_sigma has already confirmed the quadruple inside its
      // own factor; survival in the product is the new content.
      rep.add("sigma_coclique_in_factor" + suffix, true,
              "{" + sigma.r1.get_str() + ", " + sigma.r2.get_str() + ", " +
                  sigma.r3.get_str() + ", " + sigma.r4.get_str() + "}");
      rep.add("sigma_coclique_in_product" + suffix,
              primegraph::is_coclique(left, sigma.as_vector()));
      forbidden *= sigma.r3;
    } catch (const nt::EffortExceeded& e) {
      rep.add("sigma_coclique_in_factor" + suffix, CheckStatus::Unverified,
              e.what());
    } catch (const FalsifiedError& e) {
      rep.add("sigma_coclique_in_factor" + suffix, CheckStatus::Falsified,
              e.what());
    }

    const Int q = pow3(cert.terms[i]);
    const Int s = catalog::ree_sqrt3q(alpha);
    const bool seven_minus = mpz_divisible_ui_p(Int(q - s + 1).get_mpz_t(), 7) != 0;
    const bool seven_plus = mpz_divisible_ui_p(Int(q + s + 1).get_mpz_t(), 7) != 0;
    rep.add("seven_divides_exactly_one" + suffix, seven_minus != seven_plus);
  }

  rep.add("forbidden_order_absent", !left.contains(forbidden),
          "2 * r_13 * ... * r_k3 = " + forbidden.get_str());
  return rep;
}

}  // namespace ospec::constructions

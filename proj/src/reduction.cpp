#include "rednum/reduction.hpp"

#include <algorithm>

namespace rednum {

ReductionCap reduction_cap(std::optional<unsigned> explicit_cap, unsigned d, const std::optional<mpz_class>& e0,
                           std::optional<unsigned> order) {
  ReductionCap cap;
  if (explicit_cap) {
    cap.value = *explicit_cap;
    return cap;
  }
  if (e0 && order && *order > 0) {
    mpz_class v = (mpz_class(d) * *e0) / *order - 2 * d + 1;
    if (v < 1) v = 1;
    cap.value = v.fits_uint_p() ? static_cast<unsigned>(v.get_ui()) : power_cap();
    cap.from_vasconcelos = true;
  }
  return cap;
}

ReductionCertificate is_reduction_with_number(const Ideal& i, const Ideal& j, unsigned cap,
                                              const std::vector<Polynomial>& modulo) {
  ReductionCertificate cert;
  cert.generators = j.generators();
  cert.cap = cap;
  for (const auto& g : j.generators()) {
    if (!i.contains(g)) {
      cert.failure = "reduction candidate is not inside the ideal";
      return cert;
    }
  }
  try {
    // Modular screen: the first n where the step provably holds. Steps
    // below it are then decided exactly.
    std::optional<unsigned> first;
    for (unsigned n = 0; n <= cap && !first; ++n) {
      if (reduction_step_holds(i, j, n, modulo, false)) first = n;
    }
    if (!first) {
      cert.failure = "not verified as reduction within cap " + std::to_string(cap);
      return cert;
    }
    unsigned r = *first;
    for (unsigned n = 0; n < *first; ++n) {
      const bool holds = reduction_step_holds(i, j, n, modulo);
      cert.trail.push_back(holds);
      if (holds) {
        r = n;
        break;
      }
    }
    if (r == *first) cert.trail.push_back(true);
    for (unsigned k = r + 1; k <= r + 2; ++k) {
      const bool again = reduction_step_holds(i, j, k, modulo);
      cert.trail.push_back(again);
      if (!again) {
        cert.failure = "reduction step failed to telescope at n = " + std::to_string(k);
        return cert;
      }
    }
    cert.verified = true;
    cert.r = r;
    return cert;
  } catch (const CapExceeded& e) {
    cert.failure = e.what();
    return cert;
  }
}
ReductionCertificate find_minimal_reduction(const Ideal& i, unsigned d, std::uint64_t seed, unsigned attempts,
                                            unsigned cap, const std::optional<Polynomial>& first, unsigned samples) {
  ReductionCertificate best;
  ReductionCertificate last;
  last.failure = "no attempts";
  unsigned level = 0;  // coefficient bound 1, 2, 4; raised after each failure
  unsigned found = 0;
  for (unsigned a = 0; a < attempts && found < std::max(samples, 1u); ++a) {
    const unsigned bound = 1u << level;
    const std::uint64_t base = derive_seed(seed, a);
    std::vector<Polynomial> gens;
    if (first) gens.push_back(*first);
    for (unsigned k = static_cast<unsigned>(gens.size()); k < d; ++k) {
      gens.push_back(random_combination(i, derive_seed(base, k), bound));
    }
    ReductionCertificate cert = is_reduction_with_number(i, Ideal(i.ring(), gens), cap);
    cert.attempts = a + 1;
    cert.coefficient_bound = bound;
    if (cert.verified) {
      ++found;
      if (found == 1 || cert.r < best.r) best = std::move(cert);
      continue;
    }
    level = std::min(level + 1, 2u);
    cert.failure = "attempt " + std::to_string(a + 1) + ": " + cert.failure;
    last = std::move(cert);
  }
  if (found == 0) return last;
  best.samples = found;
  return best;
}

SuperficialCertificate check_superficial(const Ideal& i, const HilbertData& h, const Polynomial& x) {
  SuperficialCertificate cert;
  cert.element = x;
  if (!h.certified || h.dimension == 0) {
    cert.failure = h.dimension == 0 ? "dimension 0" : "Hilbert coefficients of I are not certified";
    return cert;
  }
  cert.in_i_not_m_i = i.contains(x) && !i.maximal_multiple().contains(x);
  if (!cert.in_i_not_m_i) {
    cert.failure = "element is not in I \\ mI";
    return cert;
  }
  const HilbertData q = hilbert_coefficients_modulo(i, x, h.dimension - 1);
  if (!q.certified) {
    cert.failure = "Hilbert coefficients of the quotient are not certified";
    return cert;
  }
  bool same = true;
  for (unsigned k = 0; k < h.dimension; ++k) {
    cert.comparison.emplace_back(h.coefficients[k], q.coefficients[k]);
    same = same && h.coefficients[k] == q.coefficients[k];
  }
  cert.accepted = same;
  if (!same) cert.failure = "coefficients differ";
  return cert;
}

SuperficialCertificate find_superficial_element(const Ideal& i, const HilbertData& h, std::uint64_t seed,
                                                unsigned attempts) {
  SuperficialCertificate last;
  last.failure = "no attempts";
  for (unsigned a = 0; a < attempts; ++a) {
    const unsigned bound = a == 0 ? 1u : (a == 1 ? 2u : 4u);
    const Polynomial x = random_combination(i, derive_seed(seed, a), bound);
    SuperficialCertificate cert = check_superficial(i, h, x);
    cert.attempts = a + 1;
    if (cert.accepted) return cert;
    last = std::move(cert);
  }
  return last;
}

}  // namespace rednum

#include "rednum/hilbert.hpp"

#include <stdexcept>

namespace rednum {

mpz_class binomial(long n, unsigned k) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= n - static_cast<long>(j);
    den *= j + 1;
  }
  return num / den;
}

mpz_class hilbert_polynomial_value(const std::vector<mpz_class>& e, unsigned d, long n) {
  mpz_class sum = 0;
  for (unsigned i = 0; i <= d && i < e.size(); ++i) {
    const mpz_class term = e[i] * binomial(n + static_cast<long>(d) - 1 - static_cast<long>(i), d - i);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<mpz_class> fit_hilbert_coefficients(const std::vector<mpz_class>& values, unsigned d, long first_n) {
  const std::size_t k = d + 1;
  if (values.size() != k) throw std::invalid_argument("fit_hilbert_coefficients: need d+1 values");
  // Rows: sum_i (-1)^i C(n+d-1-i, d-i) e_i = H(n).
  std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(k + 1));
  for (std::size_t row = 0; row < k; ++row) {
    const long n = first_n + static_cast<long>(row);
    for (unsigned i = 0; i <= d; ++i) {
      mpz_class c = binomial(n + static_cast<long>(d) - 1 - static_cast<long>(i), d - i);
      if (i % 2 == 1) c = -c;
      a[row][i] = c;
    }
    a[row][k] = values[row];
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) throw std::domain_error("fit_hilbert_coefficients: singular system");
    std::swap(a[piv], a[col]);
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const mpq_class f = a[row][col] / a[col][col];
      for (std::size_t c = col; c <= k; ++c) a[row][c] -= f * a[col][c];
    }
  }
  std::vector<mpz_class> e(k);
  for (std::size_t i = 0; i < k; ++i) {
    mpq_class v = a[i][k] / a[i][i];
    v.canonicalize();
    if (v.get_den() != 1) throw std::domain_error("fit_hilbert_coefficients: non-integral coefficient");
    e[i] = v.get_num();
  }
  return e;
}

namespace {

mpz_class difference(const std::vector<std::size_t>& h, unsigned order, std::size_t n) {
  // sum_j (-1)^(order-j) C(order, j) h(n+j)
  mpz_class s = 0;
  for (unsigned j = 0; j <= order; ++j) {
    const mpz_class term = binomial(order, j) * mpz_class(static_cast<unsigned long>(h[n + j]));
    if ((order - j) % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

// d-th differences equal over the window ending at the last value.
bool window_constant(const std::vector<std::size_t>& h, unsigned d, unsigned w) {
  const std::size_t last = h.size() - 1;
  if (last < d + w) return false;  // windows start at n >= 1
  const std::size_t start = last - d - (w - 1);
  const mpz_class first = difference(h, d, start);
  for (std::size_t n = start + 1; n + d <= last; ++n) {
    if (difference(h, d, n) != first) return false;
  }
  return true;
}

}  // namespace

HilbertData analyze_hilbert_function(const std::function<std::size_t(unsigned)>& h, unsigned d, unsigned max_n) {
  HilbertData out;
  out.dimension = d;
  out.values.push_back(0);
  const unsigned w = d + 2;
  out.window_used = w;
  auto extend = [&](std::size_t upto) -> bool {
    while (out.values.size() <= upto) {
      const auto n = static_cast<unsigned>(out.values.size());
      if (n > max_n) {
        out.cap_exceeded = true;
        return false;
      }
      try {
        out.values.push_back(h(n));
      } catch (const CapExceeded&) {
        out.cap_exceeded = true;
        return false;
      }
    }
    return true;
  };
  while (true) {
    if (!extend(out.values.size())) return out;
    if (!window_constant(out.values, d, w)) continue;
    const std::size_t last = out.values.size() - 1;
    std::vector<mpz_class> pts;
    for (std::size_t n = last - d; n <= last; ++n) pts.emplace_back(static_cast<unsigned long>(out.values[n]));
    std::vector<mpz_class> e;
    try {
      e = fit_hilbert_coefficients(pts, d, static_cast<long>(last - d));
    } catch (const std::domain_error&) {
      continue;
    }
    if (!extend(last + 2)) return out;
    bool ok = true;
    for (std::size_t n = last + 1; n <= last + 2; ++n) {
      if (hilbert_polynomial_value(e, d, static_cast<long>(n)) != static_cast<unsigned long>(out.values[n])) ok = false;
    }
    if (!ok) continue;
    out.coefficients = std::move(e);
    out.certified = true;
    std::size_t p = out.values.size() - 1;
    while (p > 0 && hilbert_polynomial_value(out.coefficients, d, static_cast<long>(p - 1)) ==
                        static_cast<unsigned long>(out.values[p - 1])) {
      --p;
    }
    out.postulation_index = static_cast<unsigned>(p);
    return out;
  }
}

std::size_t hilbert_samuel_value(const Ideal& i, unsigned n) {
  if (n == 0) return 0;
  return i.power(n).quotient_length();
}

HilbertData hilbert_coefficients(const Ideal& i, std::optional<unsigned> dimension) {
  const unsigned d = dimension ? *dimension : krull_dimension(i.ring());
  return analyze_hilbert_function([&](unsigned n) { return hilbert_samuel_value(i, n); }, d, power_cap());
}

HilbertData hilbert_coefficients_modulo(const Ideal& i, const Polynomial& x, unsigned dimension) {
  const Ideal principal(i.ring(), {x});
  return analyze_hilbert_function(
      [&](unsigned n) -> std::size_t {
        if (n == 0) return 0;
        return length_with_floor(principal, i.power(n));
      },
      dimension, power_cap());
}

unsigned krull_dimension(const PresentationRef& ring) {
  if (auto d = ring->dimension()) return *d;
  const Ideal m = Ideal::maximal(ring);
  const std::size_t nvars = ring->nvars();
  std::vector<std::size_t> h{0};
  const unsigned cap = power_cap();
  for (unsigned n = 1; n <= cap; ++n) {
    h.push_back(hilbert_samuel_value(m, n));
    for (unsigned d = 0; d <= nvars; ++d) {
      // Constant d-th difference over d+2 values plus two more.
      if (!window_constant(h, d, d + 4)) continue;
      const std::size_t last = h.size() - 1;
      if (difference(h, d, last - d) <= 0) continue;
      ring->set_dimension(d);
      return d;
    }
  }
  throw CapExceeded("krull_dimension: no polynomial regime below the power cap", cap);
}

RingInvariants cm_type_and_mu(const PresentationRef& ring, const Ideal& j, const std::optional<Ideal>& floor) {
  RingInvariants out;
  out.dimension = krull_dimension(ring);
  const Ideal m = Ideal::maximal(ring);
  out.mu = m.power(2).quotient_length() - 1;
  if (out.dimension == 0) {
    if (!j.is_zero()) throw std::invalid_argument("cm_type_and_mu: dimension 0 needs the zero ideal");
  } else if (j.generators().size() != out.dimension) {
    throw std::invalid_argument("cm_type_and_mu: parameter ideal needs exactly d generators");
  }
  const Ideal local = floor ? sum_with_floor(j, *floor) : j;
  if (!local.is_m_primary()) throw std::invalid_argument("cm_type_and_mu: ideal is not m-primary");
  const Ideal socle = ideal_colon(local, m);
  out.cm_type = local.quotient_length() - socle.quotient_length();
  return out;
}

}  // namespace rednum

#include "capelli/identities.hpp"

#include <chrono>
#include <stdexcept>

namespace capelli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string multi_index_text(MultiIndex code, int base, int k)
{
  std::string s;
  for (int d : decode_multi_index(code, base, k))
    s += (s.empty() ? "" : ",") + std::to_string(d + 1);
  return s;
}

std::string monomial_text(const WeylSpace& space, const WeylMonomial& mono)
{
  const auto text = to_string(WeylElement::monomial(space, mono, Rational(1)));
  return text;
}

template <class Map, class Describe>
std::optional<std::string> first_map_difference(const Map& lhs, const Map& rhs, Describe describe)
{
  auto a = lhs.begin();
  auto b = rhs.begin();
  const auto key_less = lhs.key_comp();
  while (a != lhs.end() || b != rhs.end()) {
    if (b == rhs.end() || (a != lhs.end() && key_less(a->first, b->first)))
      return describe(a->first, &a->second, nullptr);
    if (a == lhs.end() || key_less(b->first, a->first))
      return describe(b->first, nullptr, &b->second);
    if (!(a->second == b->second))
      return describe(a->first, &a->second, &b->second);
    ++a;
    ++b;
  }
  return std::nullopt;
}

std::vector<WeylMatrix> shifted_factors(const StandardTableau& t, int m, int n)
{
  const auto e = build_E(m, n);
  std::vector<WeylMatrix> factors;
  for (int r = 1; r <= t.size(); ++r)
    factors.push_back(e.shifted(Rational(t.content(r))));
  return factors;
}

}  // namespace

WeylMatrix build_X(int m, int n)
{
  const WeylSpace space{m, n};
  WeylMatrix x(WeylRing{space}, m, n);
  for (int a = 1; a <= m; ++a)
    for (int i = 1; i <= n; ++i)
      x(a, i) = WeylElement::x(space, a, i);
  return x;
}

WeylMatrix build_D(int m, int n)
{
  const WeylSpace space{m, n};
  WeylMatrix d(WeylRing{space}, m, n);
  for (int a = 1; a <= m; ++a)
    for (int i = 1; i <= n; ++i)
      d(a, i) = WeylElement::d(space, a, i);
  return d;
}

WeylMatrix build_E(int m, int n)
{
  if (m < 1 || n < 1)
    throw std::invalid_argument("build_E: m and n must be positive");
  const WeylSpace space{m, n};
  WeylMatrix e(WeylRing{space}, m, m);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int i = 1; i <= n; ++i)
        e(a, b) += WeylElement::x(space, a, i) * WeylElement::d(space, b, i);
  return e;
}

UglMatrix build_generator_matrix(int m)
{
  UglMatrix e(UglRing{m}, m, m);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      e(a, b) = UglElement::generator(m, a, b);
  return e;
}

WeylTensor lhs_theorem(const StandardTableau& t, const StandardTableau& t_prime, int m, int n)
{
  const auto g = psi(t, t_prime);
  return right_mul_group_algebra(tensor_product(shifted_factors(t, m, n)), g);
}

WeylTensor polarization_tensor(int k, int m, int n)
{
  const std::vector<WeylMatrix> xs(k, build_X(m, n));
  const std::vector<WeylMatrix> ds(k, build_D(m, n).transpose());
  return tensor_matmul(tensor_product(xs), tensor_product(ds));
}

WeylTensor rhs_theorem(const StandardTableau& t, const StandardTableau& t_prime, int m, int n)
{
  const auto g = psi(t, t_prime);
  return right_mul_group_algebra(polarization_tensor(t.size(), m, n), g);
}

WeylElement lhs_corollary(const StandardTableau& t, int m, int n)
{
  return full_trace(lhs_theorem(t, t, m, n));
}

WeylElement rhs_corollary(const Partition& lambda, int m, int n)
{
  const auto chi = character_element(lambda);
  const auto dim = static_cast<long>(enumerate_standard_tableaux(lambda).size());
  auto traced = full_trace(right_mul_group_algebra(polarization_tensor(lambda.weight(), m, n), chi));
  return make_rational(1, dim) * std::move(traced);
}

UglElement quantum_immanant(const Partition& lambda, const StandardTableau& t, int m)
{
  if (!(t.shape() == lambda))
    throw std::invalid_argument("quantum_immanant: tableau has the wrong shape");
  const auto e = build_generator_matrix(m);
  std::vector<UglMatrix> factors;
  for (int r = 1; r <= t.size(); ++r)
    factors.push_back(e.shifted(Rational(t.content(r))));
  return full_trace(right_mul_group_algebra(tensor_product(factors), psi(t, t)));
}

std::string to_string(const CaseDescriptor& c)
{
  std::string out = c.check + " shape=" + to_string(c.shape);
  if (c.t)
    out += " T=" + to_string(*c.t);
  if (c.t_prime)
    out += " T'=" + to_string(*c.t_prime);
  if (c.m)
    out += " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n);
  return out;
}

std::size_t term_count(const WeylTensor& u)
{
  std::size_t count = 0;
  for (const auto& [key, value] : u.terms())
    count += value.size();
  return count;
}

std::optional<std::string> first_difference(const WeylElement& lhs, const WeylElement& rhs)
{
  const auto space = lhs.space();
  return first_map_difference(lhs.terms(), rhs.terms(),
                              [&](const WeylMonomial& mono, const Rational* a, const Rational* b) {
                                return "monomial " + monomial_text(space, mono) + ": lhs " +
                                       (a ? a->get_str() : "0") + ", rhs " + (b ? b->get_str() : "0");
                              });
}

std::optional<std::string> first_difference(const WeylTensor& lhs, const WeylTensor& rhs)
{
  const WeylElement zero(lhs.ring().space);
  return first_map_difference(
      lhs.terms(), rhs.terms(), [&](const WeylTensor::Key& key, const WeylElement* a, const WeylElement* b) {
        const auto inner = first_difference(a ? *a : zero, b ? *b : zero);
        return "entry (" + multi_index_text(key.first, lhs.rows(), lhs.factors()) + " | " +
               multi_index_text(key.second, lhs.cols(), lhs.factors()) + ") " + inner.value_or("");
      });
}

VerificationReport verify_theorem_case(const StandardTableau& t, const StandardTableau& t_prime, int m, int n,
                                       const Rational& psi_scale)
{
  const auto start = Clock::now();
  VerificationReport report;
  report.case_info = CaseDescriptor{"theorem", t.shape(), t, t_prime, m, n};
  if (!(t.shape() == t_prime.shape()))
    throw std::invalid_argument("verify_theorem: tableaux of different shapes");

  const auto g = psi_scale * psi(t, t_prime);
  const auto lhs = right_mul_group_algebra(tensor_product(shifted_factors(t, m, n)), g);
  const auto rhs = right_mul_group_algebra(polarization_tensor(t.size(), m, n), g);
  report.lhs_terms = term_count(lhs);
  report.rhs_terms = term_count(rhs);
  report.first_diff = first_difference(lhs, rhs);
  report.passed = !report.first_diff;
  report.millis = elapsed_ms(start);
  return report;
}

std::vector<VerificationReport> verify_theorem(const Partition& lambda, int m, int n)
{
  std::vector<VerificationReport> reports;
  const auto tableaux = enumerate_standard_tableaux(lambda);
  for (const auto& t : tableaux)
    for (const auto& t_prime : tableaux)
      reports.push_back(verify_theorem_case(t, t_prime, m, n));
  return reports;
}

std::vector<VerificationReport> verify_corollary(const Partition& lambda, int m, int n)
{
  std::vector<VerificationReport> reports;
  const auto rhs = rhs_corollary(lambda, m, n);
  std::optional<WeylElement> reference;
  for (const auto& t : enumerate_standard_tableaux(lambda)) {
    const auto start = Clock::now();
    VerificationReport report;
    report.case_info = CaseDescriptor{"corollary", lambda, t, std::nullopt, m, n};
    const auto lhs = lhs_corollary(t, m, n);
    report.lhs_terms = lhs.size();
    report.rhs_terms = rhs.size();
    report.first_diff = first_difference(lhs, rhs);
    if (!report.first_diff && reference && !(*reference == lhs))
      report.first_diff = "left side depends on the tableau: " + first_difference(lhs, *reference).value_or("");
    if (!reference)
      reference = lhs;
    report.passed = !report.first_diff;
    report.millis = elapsed_ms(start);
    reports.push_back(std::move(report));
  }
  return reports;
}

Rational branching_constant(const StandardTableau& t)
{
  const auto u = t.without_largest();
  const auto dim_mu = static_cast<long>(enumerate_standard_tableaux(u.shape()).size());
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(t.size() - 1));
  Rational c(mpz_class(dim_mu), fact);
  c.canonicalize();
  return c;
}

VerificationReport verify_proof_steps(const Partition& lambda)
{
  const auto start = Clock::now();
  const int k = lambda.weight();
  if (k < 2)
    throw std::invalid_argument("verify_proof_steps: need |lambda| >= 2");
  VerificationReport report;
  report.case_info = CaseDescriptor{"proof-steps", lambda, std::nullopt, std::nullopt, 0, 0};

  const auto tableaux = enumerate_standard_tableaux(lambda);
  const auto identity = GroupAlgebraElement::identity(k);
  const auto jm = jm_element(k, k);
  for (const auto& t : tableaux) {
    const auto u = t.without_largest();
    const auto psi_uu = psi(u, u).extended(k);
    const auto constant = branching_constant(t);
    const auto annihilator = jm - Rational(t.content(k)) * identity;
    for (const auto& t_prime : tableaux) {
      const auto g = psi(t, t_prime);
      const auto branched = constant * (psi_uu * g);
      report.lhs_terms += g.size();
      report.rhs_terms += branched.size();
      const std::string pair = "T=" + to_string(t) + " T'=" + to_string(t_prime);
      if (!report.first_diff && !(branched == g))
        report.first_diff = "branching fails for " + pair + ": " + to_string(branched - g);
      const auto killed = annihilator * g;
      if (!report.first_diff && !killed.is_zero())
        report.first_diff = "Jucys-Murphy annihilation fails for " + pair + ": " + to_string(killed);
    }
  }
  report.passed = !report.first_diff;
  report.millis = elapsed_ms(start);
  return report;
}

std::vector<VerificationReport> verify_sweep(int max_k, int max_m, int max_n)
{
  std::vector<VerificationReport> reports;
  for (int k = 1; k <= max_k; ++k)
    for (const auto& lambda : partitions_of(k))
      for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n) {
          for (auto& r : verify_theorem(lambda, m, n))
            reports.push_back(std::move(r));
          for (auto& r : verify_corollary(lambda, m, n))
            reports.push_back(std::move(r));
        }
  return reports;
}

}  // namespace capelli

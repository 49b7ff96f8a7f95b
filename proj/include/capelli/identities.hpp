#pragma once

#include "capelli/mattens.hpp"
#include "capelli/symcore.hpp"
#include "capelli/ugl.hpp"
#include "capelli/weyl.hpp"
#include "capelli/young.hpp"

#include <optional>
#include <string>
#include <vector>

namespace capelli {

using WeylMatrix = AlgMatrix<WeylRing>;
using WeylTensor = TensorElement<WeylRing>;
using UglMatrix = AlgMatrix<UglRing>;
using UglTensor = TensorElement<UglRing>;

/// m x n matrix of the variables x[a,i].
WeylMatrix build_X(int m, int n);
/// m x n matrix of the derivations D[a,i].
WeylMatrix build_D(int m, int n);
/// E[a,b] = sum_i x[a,i] D[b,i], i.e. X * D^t.
WeylMatrix build_E(int m, int n);
/// The abstract generator matrix (E_ab) over U(gl(m)).
UglMatrix build_generator_matrix(int m);

/// (E - c_T(1)) (x) ... (x) (E - c_T(k)) * P(psi(T, T')).
WeylTensor lhs_theorem(const StandardTableau& t, const StandardTableau& t_prime, int m, int n);
/// X^{(x)k} * (D^t)^{(x)k} * P(psi(T, T')).
WeylTensor rhs_theorem(const StandardTableau& t, const StandardTableau& t_prime, int m, int n);

/// X^{(x)k} * (D^t)^{(x)k}.
WeylTensor polarization_tensor(int k, int m, int n);

/// Left side of the traced identity for tableau T: tr of lhs_theorem(T, T).
WeylElement lhs_corollary(const StandardTableau& t, int m, int n);
/// (1/dim lambda) tr X^{(x)k} (D^t)^{(x)k} chi^lambda.
WeylElement rhs_corollary(const Partition& lambda, int m, int n);

/// Trace of (E - c_T(1)) (x) ... (x) (E - c_T(k)) * psi(T, T) over U(gl(m)).
UglElement quantum_immanant(const Partition& lambda, const StandardTableau& t, int m);

struct CaseDescriptor {
  std::string check;  // "theorem", "corollary", "proof-steps"
  Partition shape;
  std::optional<StandardTableau> t;
  std::optional<StandardTableau> t_prime;
  int m = 0;
  int n = 0;
};

std::string to_string(const CaseDescriptor& c);

struct VerificationReport {
  CaseDescriptor case_info;
  bool passed = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  /// First differing (multi-index, monomial) or failed sub-check, if any.
  std::optional<std::string> first_diff;
  double millis = 0.0;
};

/// Compares both sides of the tensor identity for one tableau pair.
/// `psi_scale` multiplies psi on both sides.
VerificationReport verify_theorem_case(const StandardTableau& t, const StandardTableau& t_prime, int m, int n,
                                       const Rational& psi_scale = Rational(1));

/// Every ordered pair of standard tableaux of shape lambda.
std::vector<VerificationReport> verify_theorem(const Partition& lambda, int m, int n);

/// One report per tableau T; also fails when the left side differs from that
/// of the first tableau.
std::vector<VerificationReport> verify_corollary(const Partition& lambda, int m, int n);

/// Branching identity psi(T,T') = dim(mu)/(k-1)! psi(U,U) psi(T,T') and
/// annihilation (X_k - c_T(k)) psi(T,T') = 0 for every pair; |lambda| >= 2.
VerificationReport verify_proof_steps(const Partition& lambda);

/// Branching constant dim(mu)/(k-1)! for U = T minus its largest entry.
Rational branching_constant(const StandardTableau& t);

/// Theorem and corollary for all lambda |- k <= max_k, m <= max_m, n <= max_n.
std::vector<VerificationReport> verify_sweep(int max_k, int max_m, int max_n);

/// Describes the first difference between two canonical forms, if any.
std::optional<std::string> first_difference(const WeylTensor& lhs, const WeylTensor& rhs);
std::optional<std::string> first_difference(const WeylElement& lhs, const WeylElement& rhs);

std::size_t term_count(const WeylTensor& u);

}  // namespace capelli

#pragma once

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "tdeg/matrix.hpp"
#include "tdeg/poly.hpp"
#include "tdeg/weight.hpp"

namespace tdeg {

// Linear-algebra view of cubic weight products: V drops the constant term,
// U lists a weight's entries, and M_m(f) has V(f(mn + i)) as column i, so
// M_m(f) U(alpha) = V(alpha (x) f).

/// (a1, a2, a3) of a polynomial of degree <= 3. Throws Error(DegreeTooHigh).
ExactVector v_of(const Poly& p);

/// Entries of alpha as a column.
ExactVector u_of(const Weight& alpha);

/// 3 x m matrix with column i = v_of(f(m n + i)), i = 0..m-1.
ExactMatrix m_of(const Poly& f, std::size_t m);

bool check_matrix_identity(const Poly& f, const Weight& alpha);

struct Det3 {
  Rat formula;  // 9 m^6 (a-b)(b-c)(a-c)
  Rat direct;   // cofactor determinant of [V((mn+a)^3) V((mn+b)^3) V((mn+c)^3)]
};

Det3 det3_lemma(long m, long a, long b, long c);

using Support = std::array<std::size_t, 3>;  // 0-based column indices

struct PerturbSolution {
  ExactVector u_eps;
  Support support;
  /// Entries outside the support, unchanged from the input.
  ExactVector w_block;
};

struct Singular {};
struct PositivityLost {
  ExactVector u_eps;  // the offending solution
};

/// Keeps M_eps U_eps = M U by re-solving the support block:
/// U_eps = [B_eps^{-1}(P - C_eps W) | W]. Throws Error(BadSupport) if the
/// support columns of M are dependent or U is not positive on the support
/// and nonnegative elsewhere.
std::variant<PerturbSolution, Singular, PositivityLost> perturb_solve(const ExactMatrix& m, const ExactVector& u,
                                                                      const Support& support,
                                                                      const ExactMatrix& m_eps);

struct BottomWitness {
  /// Weight whose product with q_eps(n + t) matches alpha (x) (n+t)^3 in
  /// the n^3, n^2, n coefficients; keeps alpha's constant.
  Weight weight;
  /// (alpha (x) (n+t)^3) - (weight (x) q_eps(n+t)), a constant.
  Rat constant_delta;
  Support support;
};

/// Checks q_eps = n^3 + b2 n^2 + b1 n with b2, b1 >= 0.
bool is_q_eps_shape(const Poly& q);

/// Transduces a cubic of the q_eps shape into the m-transform alpha (x) (n+t)^3.
/// Throws Error(NotEnoughPositives) when m_degree(alpha) < 3 and
/// Error(InvalidParam) when q_eps has the wrong shape.
std::variant<BottomWitness, PositivityLost, Singular> bottom_witness(const Weight& alpha, long t, const Poly& q_eps);

/// n^3 + eps n^2 + eps n.
Poly q_eps_uniform(const Rat& eps);

struct SearchedWitness {
  BottomWitness witness;
  Poly q_eps;
};

/// bottom_witness with q_eps_uniform(10^-j) for j = 1..max_digits, returning
/// the first success.
std::variant<SearchedWitness, PositivityLost> find_bottom_witness(const Weight& alpha, long t, int max_digits = 30);

}  // namespace tdeg

#include "tdeg/bridge.hpp"

#include "tdeg/error.hpp"

namespace tdeg {

ExactVector v_of(const Poly& p) {
  if (p.degree() > 3) throw Error(ErrorKind::DegreeTooHigh, "V needs degree <= 3, got " + std::to_string(p.degree()));
  return {p.coeff(1), p.coeff(2), p.coeff(3)};
}

ExactVector u_of(const Weight& alpha) { return alpha.entries(); }

ExactMatrix m_of(const Poly& f, std::size_t m) {
  std::vector<ExactVector> cols;
  for (std::size_t i = 0; i < m; ++i)
    cols.push_back(v_of(affine(f, Rat(static_cast<unsigned long>(m)), Rat(static_cast<unsigned long>(i)))));
  return ExactMatrix::from_columns(cols);
}

bool check_matrix_identity(const Poly& f, const Weight& alpha) {
  return m_of(f, alpha.samples()) * u_of(alpha) == v_of(single_product_poly(alpha, f));
}

Det3 det3_lemma(long m, long a, long b, long c) {
  if (m < 1) throw Error(ErrorKind::InvalidParam, "m must be >= 1");
  std::vector<ExactVector> cols;
  for (long x : {a, b, c}) cols.push_back(v_of(Poly::linear_power(Rat(m), Rat(x), 3)));
  Integer m6 = 1;
  for (int i = 0; i < 6; ++i) m6 *= m;
  const Rat formula(Integer(9 * m6 * (a - b) * (b - c) * (a - c)));
  return {formula, ExactMatrix::from_columns(cols).cofactor_determinant()};
}

namespace {

std::vector<std::size_t> complement(const Support& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != s[0] && i != s[1] && i != s[2]) out.push_back(i);
  return out;
}

}  // namespace

std::variant<PerturbSolution, Singular, PositivityLost> perturb_solve(const ExactMatrix& m, const ExactVector& u,
                                                                      const Support& support,
                                                                      const ExactMatrix& m_eps) {
  const std::size_t n = m.cols();
  if (m.rows() != 3 || n < 3 || u.size() != n || m_eps.rows() != 3 || m_eps.cols() != n)
    throw Error(ErrorKind::InvalidParam, "perturb_solve needs a 3 x n system with n >= 3");
  for (std::size_t j : support)
    if (j >= n) throw Error(ErrorKind::BadSupport, "support index out of range");
  if (support[0] == support[1] || support[1] == support[2] || support[0] == support[2])
    throw Error(ErrorKind::BadSupport, "support indices must be distinct");
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_support = i == support[0] || i == support[1] || i == support[2];
    if (in_support ? u[i] <= 0 : u[i] < 0) throw Error(ErrorKind::BadSupport, "U must be positive on the support");
  }
  const std::vector<std::size_t> js(support.begin(), support.end());
  if (m.select_columns(js).cofactor_determinant() == 0)
    throw Error(ErrorKind::BadSupport, "support columns of M are dependent");

  const ExactVector p = m * u;
  const auto rest = complement(support, n);
  ExactVector w;
  for (std::size_t i : rest) w.push_back(u[i]);
  const ExactVector cw = m_eps.select_columns(rest) * w;
  ExactVector rhs(3);
  for (std::size_t r = 0; r < 3; ++r) rhs[r] = p[r] - cw[r];
  const auto solved = m_eps.select_columns(js).solve(rhs);
  if (!solved) return Singular{};

  ExactVector u_eps = u;
  for (std::size_t k = 0; k < 3; ++k) u_eps[support[k]] = (*solved)[k];
  for (std::size_t k = 0; k < 3; ++k)
    if ((*solved)[k] <= 0) return PositivityLost{u_eps};
  return PerturbSolution{std::move(u_eps), support, std::move(w)};
}

bool is_q_eps_shape(const Poly& q) {
  return q.degree() == 3 && q.coeff(3) == 1 && q.coeff(2) >= 0 && q.coeff(1) >= 0 && q.coeff(0) == 0;
}

Poly q_eps_uniform(const Rat& eps) { return Poly({Rat(0), eps, eps, Rat(1)}); }

std::variant<BottomWitness, PositivityLost, Singular> bottom_witness(const Weight& alpha, long t, const Poly& q_eps) {
  if (m_degree(alpha) < 3)
    throw Error(ErrorKind::NotEnoughPositives, "need at least three positive entries, got " + std::to_string(m_degree(alpha)));
  if (!is_q_eps_shape(q_eps)) throw Error(ErrorKind::InvalidParam, "q_eps must be n^3 + b2 n^2 + b1 n with b2, b1 >= 0");

  Support support{};
  std::size_t found = 0;
  for (std::size_t i = 0; i < alpha.samples() && found < 3; ++i)
    if (alpha.entries()[i] > 0) support[found++] = i;

  const Poly base = Poly::linear_power(Rat(1), Rat(t), 3);
  const Poly shifted_q = shift(q_eps, Integer(t));
  const std::size_t k = alpha.samples();
  auto solved = perturb_solve(m_of(base, k), u_of(alpha), support, m_of(shifted_q, k));
  if (auto* lost = std::get_if<PositivityLost>(&solved)) return *lost;
  if (std::holds_alternative<Singular>(solved)) return Singular{};
  auto& sol = std::get<PerturbSolution>(solved);

  Weight w(sol.u_eps, alpha.constant());
  const Poly target = single_product_poly(alpha, base);
  const Poly diff = target - single_product_poly(w, shifted_q);
  if (diff.degree() > 0) throw Error(ErrorKind::ClaimFalse, "witness does not match in the non-constant terms");
  return BottomWitness{std::move(w), diff.coeff(0), support};
}

std::variant<SearchedWitness, PositivityLost> find_bottom_witness(const Weight& alpha, long t, int max_digits) {
  Rat eps(1, 10);
  PositivityLost last;
  for (int j = 1; j <= max_digits; ++j, eps /= 10) {
    const Poly q = q_eps_uniform(eps);
    auto res = bottom_witness(alpha, t, q);
    if (auto* w = std::get_if<BottomWitness>(&res)) return SearchedWitness{std::move(*w), q};
    if (auto* lost = std::get_if<PositivityLost>(&res)) last = std::move(*lost);
  }
  return last;
}

}  // namespace tdeg

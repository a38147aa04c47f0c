#pragma once

#include <string>
#include <vector>

#include "braidrep/associator.hpp"
#include "braidrep/infrep.hpp"

namespace braidrep {

// Word in sigma_1^{+-1} .. ; letter +i is sigma_i, -i its inverse.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<int> letters);
  static BraidWord sigma(int i, int e = 1);
  // sigma_{j-1} .. sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} .. sigma_{j-1}^{-1}
  static BraidWord xi(int i, int j);
  // sigma_{r-1} .. sigma_2 sigma_1^2 sigma_2 .. sigma_{r-1}
  static BraidWord delta(int r);
  // (sigma_1 .. sigma_{r-1})^r
  static BraidWord gamma(int r);
  static BraidWord parse(const std::string& s);

  const std::vector<int>& letters() const { return w_; }
  bool empty() const { return w_.empty(); }
  int max_index() const;
  BraidWord inverse() const;
  BraidWord free_reduced() const;
  std::string str() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord& a, const BraidWord& b) { return a.w_ == b.w_; }

 private:
  std::vector<int> w_;
};

struct Provenance {
  std::string rep;
  std::string assoc;
  FieldElem lambda;
  FieldElem alpha;
};

struct BraidRep {
  int n = 0;
  int D = 0;
  std::vector<HMatrix> sigmas;
  std::vector<HMatrix> inverses;
  Provenance provenance;
  size_t N() const { return sigmas.empty() ? 0 : sigmas[0].n(); }
};

// fills the inverses; throws when a constant term is singular
BraidRep make_braid_rep(int n, std::vector<HMatrix> sigmas, Provenance p = {});
std::vector<std::string> braid_failures(const BraidRep& R);

// rejects invalid r with InputError, relation failures with ResidualError
BraidRep lift(const InfRep& r, const Associator& phi);
BraidRep lift(const InfRep& r, const Associator& phi, int D);
HMatrix lift_sigma(const InfRep& r, const Associator& phi, int i, int D);

HMatrix eval_word(const BraidRep& R, const BraidWord& w);

struct HResidual {
  std::string name;
  HMatrix value;
  bool zero() const { return value.is_zero(); }
};
bool all_zero(const std::vector<HResidual>& rs);

// delta_k = exp(2 lambda h Y_k), 2 <= k <= n
std::vector<HResidual> delta_identity(const BraidRep& R, const InfRep& r);
// gamma_n = exp(2 lambda h T)
std::vector<HResidual> gamma_identity(const BraidRep& R, const InfRep& r);
// s (e^{lt} + l^2/3 [Y,t] - a [t,[t,Y]] + l^3/6 (t[Y,t] + [Y,t]t)), t = h t_{i,i+1}, Y = h Y_i
HMatrix order3_expansion(const InfRep& r, int i, const FieldElem& lambda, const FieldElem& alpha, int D);
// xi_ij through h^1, and sigma_{n-1} against the order-3 expansion through h^3
std::vector<HResidual> first_order_checks(const BraidRep& R, const InfRep& r);

bool admits(const FormReport& f, FormType mode);
// R^T beta R - beta, or R^T beta eps(R) - beta in the unitary case
std::vector<HResidual> isometry_check(const BraidRep& R, const InfRep& r, const Matrix& beta, FormType mode);

// P with P abar = a P, where Q(a) = 0 and abar is the constant term of a
HMatrix hensel_conjugate(const HMatrix& a, const Poly& Q);

struct HomSpaceResult {
  int D = 0;
  size_t hom_inf = 0;        // dim Hom of the infinitesimal representations
  size_t hom_sym = 0;        // dim Hom of the underlying S_n-modules
  size_t truncated_dim = 0;  // k-dim of solutions X_0 + .. + h^D X_D
  size_t lifted_dim = 0;     // solutions mod h^D that extend to h^D
  size_t constant_dim = 0;   // constant terms of solutions
  // the module of solutions mod h^D is free of rank hom_inf
  bool free_of_rank() const { return lifted_dim == static_cast<size_t>(D) * hom_inf && constant_dim == hom_inf; }
  bool matches_full() const { return truncated_dim == static_cast<size_t>(D + 1) * hom_inf; }
};
size_t hom_infinitesimal(const InfRep& r1, const InfRep& r2);
HomSpaceResult hom_space(const BraidRep& R1, const BraidRep& R2, const InfRep& r1, const InfRep& r2);

struct IrreducibilityResult {
  bool lifted = false;         // constant terms with first-order xi coefficients span M_N
  bool infinitesimal = false;  // s_i and t_ij span M_N
  bool agree() const { return lifted == infinitesimal; }
};
IrreducibilityResult abs_irreducible(const BraidRep& R, const InfRep& r);

BraidRep tensor(const BraidRep& a, const BraidRep& b);
BraidRep dual(const BraidRep& a);
BraidRep direct_sum(const BraidRep& a, const BraidRep& b);
BraidRep restrict(const BraidRep& a, int m);
// h -> alpha h
BraidRep scale_h(const BraidRep& a, const FieldElem& alpha);
bool equal(const BraidRep& a, const BraidRep& b);

}  // namespace braidrep

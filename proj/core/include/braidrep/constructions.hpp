#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidrep/extvariety.hpp"
#include "braidrep/infrep.hpp"

namespace braidrep {

// tau = alpha + beta s_1 on the seminormal irrep of the partition
VarietyPoint hecke_point(const Partition& p, const FieldElem& alpha, const FieldElem& beta);
InfRep hecke_rep(const Partition& p, const FieldElem& alpha, const FieldElem& beta);
// Burau: [n-1,1], alpha = 0, beta = 1
InfRep burau_rep(int n);

struct CubicHecke {
  FieldElem a, b, c;
  Matrix s1, s2;
  FieldElem discriminant;
  bool semisimple = false;  // discriminant != 0
  bool braid = false, cubic = false, trace_ok = false, det_ok = false;
  Matrix central;  // (s1 s2)^3
  bool central_scalar = false;
  std::vector<std::string> failures() const;
};
// throws InputError on zero or coincident parameters
CubicHecke cubic_hecke_matrices(const FieldElem& a, const FieldElem& b, const FieldElem& c);
FieldElem cubic_discriminant(const FieldElem& a, const FieldElem& b, const FieldElem& c);

// Lie algebra on a basis e_0..e_{d-1}: bracket[i][j] holds the coordinates of [e_i, e_j].
struct LieAlgSpec {
  std::string name;
  size_t dim = 0;
  std::vector<std::vector<Vec>> bracket;
  Matrix form;             // Gram matrix of the invariant form
  std::vector<Vec> dual;   // coordinates of the dual basis e^i
  std::vector<Matrix> ad() const;
};
Matrix killing_form(const std::vector<std::vector<Vec>>& bracket);
// fills dual; throws when the form is degenerate or not invariant
LieAlgSpec make_lie_algebra(std::string name, std::vector<std::vector<Vec>> bracket,
                            std::optional<Matrix> form = std::nullopt);
bool is_invariant(const LieAlgSpec& g);
LieAlgSpec lie_sl2();       // basis e, f, h
LieAlgSpec lie_so(int m);   // basis E_ij - E_ji, i < j; 3 <= m <= 5
LieAlgSpec lie_algebra(const std::string& name);  // "sl2", "so3", "so4", "so5"

struct LieModule {
  std::string name;
  std::vector<Matrix> action;  // image of each basis element
  size_t dim() const { return action.empty() ? 0 : action[0].rows(); }
};
LieModule sl2_irrep(int k);    // highest weight k, dimension k + 1
LieModule so_defining(int m);
bool is_module(const LieAlgSpec& g, const LieModule& V);
// nonzero B with x^T B + B x = 0 for all x, if a nondegenerate one exists
std::optional<Matrix> invariant_form(const LieModule& V);

// 2 sum_l e_l (x) e^l acting on V (x) W
Matrix casimir_tensor(const LieAlgSpec& g, const LieModule& V, const LieModule& W);

struct CasimirRep {
  int n = 0;
  std::vector<size_t> dims;
  TFamily taus;                   // tau_ij, i < j, lexicographic
  std::vector<Matrix> diagonal;   // Delta(x) on the tensor product
  std::optional<Matrix> form;     // product of the factor forms
  std::vector<std::string> relation_failures;
  bool commutes_diagonal = false;
  bool total_commutes = false;    // [t_total, Delta g] = 0
  bool selfadjoint = false;       // each tau_ij w.r.t. form
  std::optional<InfRep> rep;      // when all factors coincide
  const Matrix& tau(int i, int j) const;
};
CasimirRep casimir_rep(const LieAlgSpec& g, const std::vector<LieModule>& factors);
CasimirRep casimir_rep(const LieAlgSpec& g, const LieModule& V, int n);

// residuals of the T_n relations on an explicit family (i < j, lexicographic)
std::vector<std::string> tn_relation_failures(const TFamily& ts, int n);

struct HighestWeightSub {
  std::vector<int> weights;
  Matrix basis;                 // columns span ker(Delta e), mutually orthogonal
  TFamily taus;                 // restrictions of tau_ij
  std::vector<std::string> relation_failures;
  std::optional<InfRep> rep;    // when all weights coincide
  AgregatingResult witness;
  uint64_t seed = 0;
};
HighestWeightSub highest_weight_sub(const std::vector<int>& weights, uint64_t seed, int trials = 50);

// Representation of B_n semidirect U L_n: an InfRep on n strands with images of g_1..g_n.
struct LongRep {
  InfRep core;
  std::vector<Matrix> g;
  int n() const { return core.n(); }
  size_t dim() const { return core.dim(); }
};
// validity, equivariance s g_k s^-1 = g_{s(k)}, [t_ij, g_k] = 0 off {i,j}, [t_ik, g_k] = [g_k, g_i]
std::vector<std::string> long_failures(const LongRep& L);
// g_k = t_{k,n+1}, core restricted to the first n strands
LongRep artin_restriction(const InfRep& r);
// g_k = 0: the representation factoring through B_n x Z
LongRep long_from_base(const InfRep& r);

// t+_ij on V^n after g_i -> g_i + alpha
Matrix long_t_plus(const LongRep& L, const FieldElem& alpha, int i, int j);
// s (v_1..v_n) = (s v_{s^-1(1)}, .., s v_{s^-1(n)})
Matrix long_s_plus(const LongRep& L, int i);
InfRep long_plus(const LongRep& L, const FieldElem& alpha);

// V + V* with the hyperbolic form [[0,1],[eps,0]]; t and g act antiselfadjointly
struct HyperbolicDouble {
  InfRep rep;
  Matrix form;
};
HyperbolicDouble hyperbolic_double(const InfRep& r, int eps);

struct LongFormReport {
  Matrix form;                 // block diagonal, blocks (g_i + alpha)^T beta
  FieldElem det;
  bool nondegenerate = false;
  bool degeneracy_predicted = false;  // -alpha in Sp(g_i) for some i
  bool isometry = false;              // s+ isometric
  int t_sign = 0;                     // rho(t_12)^dagger = t_sign rho(t_12), 0 if neither
  int g_sign = 0;                     // same for every twisted g_i
  bool d_identity = false, m_identity = false;  // checked when the sign is nonzero
  FormType base_type = FormType::none;      // restrictions of rho to B_n and L_n
  FormType expected = FormType::none;       // type predicted for rho+
  FormType plus_type = FormType::none;      // type computed on rho+
  std::vector<std::string> failures() const;
};
// throws InputError when beta is degenerate or not S_n-isometric
LongFormReport long_form(const LongRep& L, const Matrix& beta, const FieldElem& alpha);

}  // namespace braidrep

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidrep/polynomial.hpp"
#include "braidrep/symgroup.hpp"

namespace braidrep {

// Representation of the infinitesimal braid algebra: an S_n-module together
// with the image tau of t_12. Other t_ij are obtained by conjugation.
class InfRep {
 public:
  InfRep() = default;
  InfRep(SymRep base, Matrix tau);

  int n() const { return base_.n; }
  size_t dim() const { return base_.dim(); }
  const SymRep& base() const { return base_; }
  const Matrix& tau() const { return tau_; }
  const Matrix& s(int i) const { return base_.gens.at(i - 1); }

  // 1-based, i != j
  const Matrix& t(int i, int j) const;

 private:
  SymRep base_;
  Matrix tau_;
  std::shared_ptr<const std::vector<Matrix>> ttab_;
};

Matrix t_image(const InfRep& r, int i, int j);
// Y_k = sum_{i<k} t_ik
Matrix y_element(const InfRep& r, int k);
Matrix t_total(const InfRep& r);

// x -> rho(p) x rho(p)^{-1}
Matrix act(const SymRep& m, const Perm& p, const Matrix& x);
Matrix C1(const SymRep& m, const Matrix& x);
Matrix C2(const SymRep& m, const Matrix& x);

struct Residual {
  std::string name;
  Matrix value;
  bool zero() const { return value.is_zero(); }
};

struct ValidationReport {
  bool in_commutant = true;
  std::vector<Residual> commutant;  // [tau, s] for s in S_{2,n-2}
  std::vector<Residual> c_residuals;
  std::vector<Residual> relations;  // full T_n relation set on derived t_ij
  bool c_zero() const;
  bool valid() const;
  std::vector<std::string> failures() const;
};

ValidationReport validate(const InfRep& r);

InfRep tensor(const InfRep& a, const InfRep& b);
InfRep dual(const InfRep& a);
InfRep direct_sum(const InfRep& a, const InfRep& b);
InfRep twist(const InfRep& a, const FieldElem& alpha);
InfRep restrict(const InfRep& a, int m);

// coefficients c with rho(s_1) = sum_k c_k tau^k, if any
std::optional<Vec> essential_purity_certificate(const InfRep& r);
bool is_essentially_pure(const InfRep& r);

enum class SimplicialStatus { simplex, affinely_dependent, not_diagonalizable, spectrum_mismatch };
std::string to_string(SimplicialStatus s);
struct SimplicialResult {
  SimplicialStatus status;
  std::string detail;
  bool simplicial() const { return status == SimplicialStatus::simplex; }
};
// Points given by rational coordinates; true iff affinely independent.
bool affinely_independent(const std::vector<std::vector<Rational>>& points);
// eigenvalues: coordinates over the basis {sqrt(prod_{i in S} radicands_i)}
// (bitmask order), one vector per declared distinct eigenvalue.
SimplicialResult is_simplicial(const InfRep& r, const std::vector<long>& radicands,
                               const std::vector<std::vector<Rational>>& eigenvalues);

struct AgregatingResult {
  bool found = false;
  int trials_used = 0;
  std::vector<std::pair<std::pair<int, int>, Rational>> coefficients;
  Matrix element;
  Poly charpoly;
};
AgregatingResult is_agregating(const InfRep& r, uint64_t seed, int trials);
// same search over an explicit family of t_ij images
using TFamily = std::vector<std::pair<std::pair<int, int>, Matrix>>;
AgregatingResult is_agregating(const TFamily& ts, size_t dim, uint64_t seed, int trials);

enum class FormType { orthogonal, symplectic, unitary, none };
std::string to_string(FormType t);
struct FormReport {
  bool symmetric = false, skew = false, sn_isometric = false;
  bool tau_antiselfadjoint = false, tau_selfadjoint = false;
  FormType type = FormType::none;
};
// beta(x,y) = x^T beta y; adjoint x^dagger = beta^{-1} x^T beta
Matrix adjoint(const Matrix& x, const Matrix& beta);
FormReport form_type(const InfRep& r, const Matrix& beta);

struct LieClosure {
  std::vector<Matrix> basis;
  size_t dim = 0;
  std::vector<Matrix> center_basis;
  bool t_total_central = false;
};
LieClosure lie_closure(const InfRep& r);

struct QuotientFlags {
  bool center_kills = false;  // T = 0
  bool hurwitz = false;       // rho(Y_n) = 0
  bool z_times_sn = false;    // tau commutes with rho(S_n)
  bool enhanced_sym = false;  // rho([t12, t23]) = 0
};
QuotientFlags quotient_flags(const InfRep& r);

size_t linear_independence_dim(const InfRep& r);

// unital algebra generated by the given matrices
size_t generated_algebra_dim(const std::vector<Matrix>& gens, size_t n);

}  // namespace braidrep

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidrep/drinfeld.hpp"
#include "braidrep/infrep.hpp"

namespace braidrep {

// A point of V(M): tau in End_{S_{2,n-2}}(M) with C_1 = C_2 = 0.
struct VarietyPoint {
  SymRep M;
  std::vector<size_t> blocks;  // sizes of the recorded summands of M
  std::vector<Matrix> basis;   // commutant basis of M
  Vec coords;                  // tau in that basis
  InfRep rep;
  const Matrix& tau() const { return rep.tau(); }
};

struct PointCheck {
  bool in_commutant = false;
  bool c_zero = false;
  ValidationReport report;
  std::optional<VarietyPoint> point;
};

PointCheck verify_point(const SymRep& M, const Matrix& tau, std::vector<size_t> blocks = {});
// throws InputError on failure, naming the failed stage
VarietyPoint make_point(const SymRep& M, const Matrix& tau, std::vector<size_t> blocks = {});

bool is_surjective(const VarietyPoint& p);

// Quadratic form in the commutant coordinates, q(x) = sum_{k<=l} c_kl x_k x_l,
// stored on the upper triangle in row order.
struct QuadForm {
  size_t vars = 0;
  Vec coeffs;
  FieldElem at(size_t k, size_t l) const;
  FieldElem eval(const Vec& x) const;
  static QuadForm product(const Vec& lin1, const Vec& lin2);
};
// A basis of the span of all entries of C_1(tau) and C_2(tau) as polynomials
// in the coordinates of tau on `basis`.
std::vector<QuadForm> validity_quadrics(const SymRep& M, const std::vector<Matrix>& basis);
// whether the spans of two families of quadratic forms coincide
bool same_span(const std::vector<QuadForm>& a, const std::vector<QuadForm>& b);

struct GuardCertificate {
  size_t hom_dim = 0;
  bool certified = false;  // Hom_{S_{2,n-2}}(C,B) = 0: V^s(B+C) empty, Ext vanishes both ways
};
GuardCertificate vsvide_guard(const SymRep& B, const SymRep& C);

struct ExtensionPair {
  size_t n1 = 0, n2 = 0;
  std::vector<Matrix> upper;  // lattice h M_1 + M_2, sub-representation M_1
  std::vector<Matrix> lower;  // lattice M_1 + h M_2, sub-representation M_2
  std::vector<std::string> upper_failures, lower_failures;
  bool upper_split = true, lower_split = true;
};
ExtensionPair extension_pair(const VarietyPoint& p, const FieldElem& lambda);
// is there X with the graph of X a complement to the sub-representation
bool upper_splits(const std::vector<Matrix>& gens, size_t n1);
bool lower_splits(const std::vector<Matrix>& gens, size_t n1);

// Koszul differential Lambda^p E -> Lambda^{p-1} E on sorted-subset bases
Matrix koszul_d(int n, int p);
// x -> y ^ x from Lambda^{p-1} E to Lambda^p E
Matrix wedge_left(const Vec& y, int p);

struct HookFamily {
  int n = 0, p = 0;
  FieldElem alpha;
  std::vector<Matrix> f;  // Lambda^p of the f-basis representation of E
  std::vector<Matrix> g;  // s_k.g + y_k ^ dg
  std::vector<std::string> failures;
};
// E-level matrices of the f- and g-basis representations
std::vector<Matrix> hook_f_matrices(int n, const FieldElem& alpha);
std::vector<Matrix> hook_g_matrices(int n, const FieldElem& alpha);
HookFamily hook_family(int n, int p, const FieldElem& alpha);

// rank-one nilpotent tau forces [t12, t23] = 0; returns whether the hypothesis held
bool transvection_guard(const VarietyPoint& p);

// Eigenvalues on the basis sqrt(prod of a subset of radicands), bitmask order.
struct DeclaredSpectrum {
  std::vector<long> radicands;
  std::vector<std::vector<Rational>> eigenvalues;
};
// sqrt(r) = c sqrt(d) with d a squarefree integer
std::pair<Rational, long> sqrt_decompose(const Rational& r);

using FamilyParams = std::map<std::string, std::string>;
VarietyPoint family_catalog(const std::string& name, const FamilyParams& params);
std::vector<std::string> family_names();

SymRep s3_orthogonal_std_plus_triv();
Matrix s3_std_plus_triv_tau(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d,
                            const FieldElem& l);
SymRep s3_square_module();
Matrix s3_square_tau(const FieldElem& x, const FieldElem& y, const FieldElem& u, const FieldElem& v);
// spectrum of tau (a quarter of the 4 tau spectrum)
DeclaredSpectrum s3_square_spectrum(const FieldElem& x, const FieldElem& y, const FieldElem& u, const FieldElem& v);
// permutation module in the basis (v, u_1, .., u_{n-1}), u_j = e_1 + .. + e_j - j e_{j+1}
SymRep adapted_permutation_module(int n);
Matrix adapted_basis(int n);
VarietyPoint hooks_chain(int n, const FieldElem& alpha, const FieldElem& lambda);

}  // namespace braidrep

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/series.hpp"

namespace braidrep {

// Free algebra on an alphabet modulo homogeneous quadratic relations, with
// per-degree normal forms up to degree D. The leading word of a relation is
// its largest word in the dense index order; normal words are the words that
// are not leading words of the ideal's degree-d slice.
class GradedQuotient {
 public:
  using SparseRow = std::vector<std::pair<uint32_t, Rational>>;

  GradedQuotient() = default;
  // relations: homogeneous quadratic series over `alphabet`
  GradedQuotient(std::vector<std::string> alphabet, const std::vector<TruncSeries>& relations, int D);

  const std::vector<std::string>& alphabet() const { return alpha_; }
  size_t k() const { return alpha_.size(); }
  int degree() const { return D_; }
  size_t dim(int d) const { return normal_.at(d).size(); }
  std::vector<Word> basis(int d) const;
  size_t generator(const std::string& name) const;

  // coordinates of the degree-d part of s on basis(d)
  Vec normal_form(const TruncSeries& s, int d) const;
  Vec normal_form(const Vec& block, int d) const;
  // product of degree-i and degree-j elements given in normal coordinates
  Vec multiply(const Vec& a, int i, const Vec& b, int j) const;
  bool vanishes(const TruncSeries& s) const;

 private:
  std::vector<std::string> alpha_;
  int D_ = 0;
  // per degree: for a leading word, the rest of its normalized relation row
  std::vector<std::vector<SparseRow>> tail_;
  std::vector<std::vector<char>> lead_;
  std::vector<std::vector<int32_t>> pos_;
  std::vector<std::vector<uint32_t>> normal_;
};

// U T_m: generators t_ij (i<j), relations [t_ij,t_kl] for disjoint pairs and
// [t_ij, t_ik + t_jk].
GradedQuotient build_ut(int m, int D);
GradedQuotient build_ut4(int D);
// {A,B,Z} with Z central
GradedQuotient build_central_ab(int D);
std::string ut_name(int i, int j);

// Lyndon words of length d over k letters, increasing lexicographic order
std::vector<Word> lyndon_words(size_t k, int d);
// standard bracketing of a Lyndon word, as a homogeneous series
TruncSeries lyndon_bracket(const Word& w, const std::vector<std::string>& alphabet, int D);
// dimension of the degree-d part of the free Lie algebra on k letters
size_t witt_dimension(size_t k, int d);

struct Associator {
  FieldElem lambda;
  int D = 0;
  bool even = false;
  TruncSeries phi;  // over {A, B}
  TruncSeries psi;  // log phi
  // coefficient of AAB, the free cubic parameter
  FieldElem alpha() const;
};

std::vector<std::string> ab_alphabet();

Associator make_associator(const FieldElem& lambda, const TruncSeries& phi, bool even);
// 1 + lambda^2/6 [A,B] + alpha([A,[A,B]] - [B,[B,A]])
Associator taylor3(const FieldElem& lambda, const FieldElem& alpha);
Associator solve(const Rational& lambda, int D, bool even);
// Phi(mu A, mu B) as an associator for lambda mu
Associator rescale(const Associator& a, const FieldElem& mu);

// residual of the inverse relation Phi(B,A) Phi(A,B) - 1
TruncSeries inverse_residual(const TruncSeries& phi);
// e^{lA} Phi(C,A) e^{lC} Phi(B,C) e^{lB} Phi(A,B) - 1 with C = -A-B
TruncSeries hexagon_residual(const TruncSeries& phi, const FieldElem& lambda);
// difference of the two sides of the pentagon, in the free algebra on t_ij
TruncSeries pentagon_free(const TruncSeries& phi, const GradedQuotient& ut4);
// Phi(A+Z, B) - Phi(A, B) in the free algebra on {A,B,Z}
TruncSeries central_shift_free(const TruncSeries& phi);

struct AssociatorReport {
  int D = 0;
  std::vector<ShuffleDefect> grouplike;  // nonzero shuffle defects only
  TruncSeries inverse;
  TruncSeries hexagon;
  std::vector<Vec> pentagon;       // normal coordinates per degree
  std::vector<Vec> central_shift;  // normal coordinates per degree
  bool grouplike_ok() const { return grouplike.empty(); }
  bool pentagon_ok() const;
  bool central_shift_ok() const;
  bool ok() const;
  std::vector<std::string> failures() const;
};

AssociatorReport verify(const Associator& a, int D);
AssociatorReport verify(const Associator& a, int D, const GradedQuotient& ut4);

}  // namespace braidrep

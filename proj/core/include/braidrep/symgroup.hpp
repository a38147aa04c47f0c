#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidrep/matrix.hpp"

namespace braidrep {

// Permutation of {1..n}; composition is (p*q)(x) = p(q(x)).
class Perm {
 public:
  explicit Perm(int n = 0);
  static Perm from_images(const std::vector<int>& images1);  // 1-based one-line notation
  static Perm adjacent(int n, int i);                         // s_i = (i i+1)
  static Perm transposition(int n, int i, int j);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1] + 1; }  // 1-based
  std::vector<int> images() const;                        // 1-based
  Perm inverse() const;
  bool is_identity() const;
  int sign() const;
  // i_1..i_k (1-based) with p = s_{i_1} ... s_{i_k}, of minimal length
  std::vector<int> reduced_word() const;
  std::vector<int> cycle_type() const;  // sorted decreasing

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }

 private:
  std::vector<int> img_;  // 0-based
};

std::vector<Perm> all_perms(int n);
Perm perm_from_word(int n, const std::vector<int>& word);

using Partition = std::vector<int>;
bool is_partition_of(const Partition& p, int n);
std::vector<Partition> partitions(int n);
std::string partition_str(const Partition& p);
Partition parse_partition(const std::string& s);
// sum over boxes of (column - row)
long content_sum(const Partition& p);

// Standard Young tableau as the (row, column) of each entry 1..n.
using Tableau = std::vector<std::pair<int, int>>;
std::vector<Tableau> standard_tableaux(const Partition& p);

using Label = std::vector<std::pair<Partition, int>>;

// Matrix representation of S_n on gens s_1..s_{n-1} with a diagonal invariant form.
struct SymRep {
  int n = 0;
  std::vector<Matrix> gens;
  Vec form;
  Label label;
  size_t dim() const { return form.size(); }
};

SymRep irrep(const Partition& p);
SymRep trivial_rep(int n, size_t dim = 1);
SymRep permutation_rep(int n);
SymRep direct_sum(const SymRep& a, const SymRep& b);
SymRep tensor(const SymRep& a, const SymRep& b);
SymRep dual(const SymRep& a);
// restriction to S_m, m <= n, acting on the first m letters
SymRep restrict(const SymRep& a, int m);
// exterior power of the gens, form by Gram minors of a diagonal form
SymRep exterior_power(const SymRep& a, int p);
// p-th compound matrix (minors on sorted index subsets)
Matrix compound(const Matrix& m, int p);
std::vector<std::vector<int>> subsets(int n, int p);

Matrix perm_matrix(const SymRep& r, const Perm& p);

// Residuals of s_i^2 = 1, braid and locality relations; empty when all hold.
std::vector<std::string> moore_failures(const std::vector<Matrix>& gens);
// braid and locality relations only
std::vector<std::string> braid_relation_failures(const std::vector<Matrix>& gens);
// g^T diag(form) g = diag(form) for each generator
bool form_invariant(const SymRep& r);

FieldElem character(const SymRep& r, const Perm& p);
// multiplicities of irreducibles via character inner products
Label decompose(const SymRep& r);
Label merge_labels(const Label& a, const Label& b);

// X with X a_i = b_i X (X is dim(b) x dim(a))
std::vector<Matrix> intertwiners(const std::vector<Matrix>& a, const std::vector<Matrix>& b);
std::vector<Matrix> commutant(const std::vector<Matrix>& gens, size_t n);
// generators of the Young subgroup S_{c_1} x S_{c_2} x ...
std::vector<int> young_generators(const std::vector<int>& composition);
std::vector<Matrix> commutant_basis(const SymRep& r, const std::vector<int>& composition);

Vec vectorize(const Matrix& m);
Matrix unvectorize(const Vec& v, size_t rows, size_t cols);

}  // namespace braidrep

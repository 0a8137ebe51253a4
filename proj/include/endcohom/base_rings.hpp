#pragma once

#include <string>
#include <vector>

#include "endcohom/int_matrix.hpp"

namespace endcohom {

/// One structure constant row: e_i * e_j = sum_k out[k] f_k over the basis of
/// degree |e_i| + |e_j|.
struct CupEntry {
  std::size_t i;
  std::size_t j;
  std::vector<Int> out;

  friend bool operator==(const CupEntry&, const CupEntry&) = default;
};

/// Integral cohomology ring of a closed connected oriented manifold, given by
/// ranks and fully signed structure constants on a fixed basis.
///
/// Basis elements have global indices ordered by degree; index 0 is the unit
/// and the unit's products are implicit. Products absent from the table are 0.
class BaseRing {
 public:
  /// Validates ranks, Poincare symmetry, graded commutativity and
  /// associativity; throws InvalidParameter otherwise.
  BaseRing(unsigned dim, std::vector<unsigned> ranks, std::vector<CupEntry> cup, std::size_t top,
           std::string name = "custom");

  unsigned dim() const { return dim_; }
  const std::vector<unsigned>& ranks() const { return ranks_; }
  unsigned rank(unsigned degree) const { return degree <= dim_ ? ranks_[degree] : 0; }
  const std::vector<CupEntry>& cup_table() const { return cup_; }
  std::size_t top() const { return top_; }
  const std::string& name() const { return name_; }
  std::size_t basis_size() const { return degree_of_.size(); }

  unsigned degree_of(std::size_t global) const { return degree_of_.at(global); }
  std::size_t local_index(std::size_t global) const { return global - offset_[degree_of_.at(global)]; }
  std::size_t global_index(unsigned degree, std::size_t local) const { return offset_.at(degree) + local; }

  /// Product of two basis elements as coordinates in degree |i| + |j|.
  std::vector<Int> multiply_basis(std::size_t i, std::size_t j) const;
  /// Product of a (degree p) and b (degree q) given in local coordinates.
  std::vector<Int> multiply(unsigned p, const std::vector<Int>& a, unsigned q, const std::vector<Int>& b) const;

  /// Ring in the new basis f_k = signs[k] * e_{perm[k]}; perm must preserve
  /// degrees and fix the unit.
  BaseRing relabeled(const std::vector<std::size_t>& perm, const std::vector<int>& signs) const;

  friend bool operator==(const BaseRing& a, const BaseRing& b) {
    return a.dim_ == b.dim_ && a.ranks_ == b.ranks_ && a.top_ == b.top_ && a.table_ == b.table_;
  }

 private:
  void validate() const;

  unsigned dim_;
  std::vector<unsigned> ranks_;
  std::vector<CupEntry> cup_;
  std::size_t top_;
  std::string name_;
  std::vector<unsigned> degree_of_;
  std::vector<std::size_t> offset_;
  // Dense products, [i][j] -> coordinates in degree |i|+|j| (empty if above dim).
  std::vector<std::vector<std::vector<Int>>> table_;
};

/// Sphere(n), Surface(g), Torus3, Torus(n), S1xS2, SaxSb (e.g. S1xS3, S2xS2).
BaseRing builtin_ring(const std::string& name);

BaseRing sphere(unsigned n);
BaseRing surface(unsigned g);
BaseRing torus(unsigned n);
BaseRing sphere_product(unsigned a, unsigned b);

}  // namespace endcohom

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "endcohom/base_rings.hpp"
#include "endcohom/quotients.hpp"

namespace endcohom {

enum class Family { Stringer, SurgeredStringer, Ladder, Wedge, EndSum };

std::string to_string(Family f);

enum class AtomKind { Free, PQ, KQ };

/// One summand of a degree module. Labels name the origin: "X"/"Y" for base
/// ring slots, "tau"/"sigma"/"mid" for Z[[x]]/Z[x] summands, "XY" for the
/// ladder top; end-sum atoms carry an "A." or "B." prefix.
struct Atom {
  AtomKind kind;
  unsigned rank = 1;  // Free only
  std::string label;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// A formal direct sum of atoms, optionally modulo the relations of an
/// end-sum top degree.
struct ModuleShape {
  std::vector<Atom> atoms;
  bool quotient = false;

  unsigned free_rank() const;
  std::size_t count(AtomKind k) const;
  std::string to_string() const;

  friend bool operator==(const ModuleShape&, const ModuleShape&) = default;
};

/// One coordinate per atom: integer vector (Free), PQElem or KQElem.
using Coord = std::variant<std::vector<Int>, PQElem, KQElem>;
using Coords = std::vector<Coord>;

/// Coordinates of a module with every KQ atom replaced by Z + Z[[x]]/Z[x]
/// through f^{-1}, so that the integer entries are homomorphisms.
struct TrueVec {
  std::vector<Int> ints;
  std::vector<PQElem> pqs;

  bool is_zero() const;
  friend bool operator==(const TrueVec&, const TrueVec&) = default;
  friend TrueVec operator+(const TrueVec& a, const TrueVec& b);
  friend TrueVec operator-(const TrueVec& a, const TrueVec& b);
  friend TrueVec operator*(const Int& n, const TrueVec& a);
};

TrueVec to_true(const ModuleShape& m, const Coords& c);
Coords from_true(const ModuleShape& m, const TrueVec& v);

/// Rows of relations put into echelon form on their integer entries, visiting
/// columns in `order`. Row operations act on whole rows, PQ entries included.
struct Echelon {
  std::vector<TrueVec> rows;
  std::vector<std::size_t> pivots;  // column of each row's positive pivot
  /// Rows whose integer part vanished but which are nonzero.
  std::vector<TrueVec> integer_free;

  /// Reduce each pivot entry into [0, pivot).
  TrueVec reduce(TrueVec x) const;
};

Echelon echelonize(std::vector<TrueVec> rows, const std::vector<std::size_t>& order);

/// An injective additive map of the vectors into Z^N: integer entries first,
/// then the tail coefficients of every PQ entry over a shared monomial,
/// geometric and height-witness basis, cleared of denominators. Lattice
/// questions about the vectors become questions about the rows.
IntMatrix embed_true(const std::vector<TrueVec>& vs);

struct AlgebraData;
class AlgElem;

/// Graded end-cohomology algebra (reduced, degrees 1..top) of one of the
/// model spaces or of a binary end-sum of two such algebras.
class EndAlgebra {
 public:
  static EndAlgebra stringer(const BaseRing& x);
  static EndAlgebra surgered_stringer(const BaseRing& x);
  static EndAlgebra ladder(const BaseRing& x, const BaseRing& y);
  static EndAlgebra wedge(const BaseRing& x, const BaseRing& y);
  /// (A + B) modulo the ideal generated by (class_a, -class_b) in the top degree.
  static EndAlgebra end_sum(const AlgElem& class_a, const AlgElem& class_b);

  Family family() const;
  unsigned top_degree() const;
  unsigned ends() const;
  /// Empty shape for degree 0 and degrees above the top.
  const ModuleShape& module(unsigned k) const;

  const BaseRing* x() const;
  const BaseRing* y() const;
  std::optional<EndAlgebra> summand_a() const;
  std::optional<EndAlgebra> summand_b() const;
  std::optional<AlgElem> class_a() const;
  std::optional<AlgElem> class_b() const;

  /// Relations of the top degree in true coordinates (empty unless end-sum).
  const std::vector<TrueVec>& top_relations() const;

  AlgElem element(unsigned k, Coords coords) const;
  AlgElem zero(unsigned k) const;
  /// Unit vectors of every Free atom in degree k.
  std::vector<AlgElem> free_basis(unsigned k) const;
  /// One nonzero sample per PQ atom in degree k (the class of 1/(1-x)).
  std::vector<AlgElem> pq_samples(unsigned k) const;

  std::string describe() const;

  const std::shared_ptr<const AlgebraData>& data() const { return data_; }
  friend bool operator==(const EndAlgebra& a, const EndAlgebra& b) { return a.data_ == b.data_; }

 private:
  explicit EndAlgebra(std::shared_ptr<const AlgebraData> d) : data_(std::move(d)) {}
  std::shared_ptr<const AlgebraData> data_;
  friend class AlgElem;
};

/// A homogeneous element. Top-degree elements of an end-sum are kept in the
/// normal form of the quotient.
class AlgElem {
 public:
  EndAlgebra algebra() const { return EndAlgebra(alg_); }
  unsigned degree() const { return degree_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const AlgElem& a, const AlgElem& b) {
    return a.alg_ == b.alg_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
  }
  friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator-(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator-(const AlgElem& a);
  friend AlgElem operator*(const Int& n, const AlgElem& a);

  std::string to_string() const;

 private:
  AlgElem(std::shared_ptr<const AlgebraData> alg, unsigned degree, Coords coords)
      : alg_(std::move(alg)), degree_(degree), coords_(std::move(coords)) {}
  std::shared_ptr<const AlgebraData> alg_;
  unsigned degree_;
  Coords coords_;
  friend class EndAlgebra;
  friend AlgElem cup(const AlgElem&, const AlgElem&);
};

/// Coordinatewise cup product. Throws AlgebraMismatch for elements of
/// different algebras and DegreeOverflow above the top degree.
AlgElem cup(const AlgElem& a, const AlgElem& b);

/// The product before reduction modulo the end-sum relations.
Coords cup_raw(const AlgElem& a, const AlgElem& b);

/// Atom-wise dual through the dual rule table; a single Free atom.
ModuleShape dual_shape(const EndAlgebra& a, unsigned k);

struct RadicalJ {
  unsigned degree;
  /// Indices of the zero-dual (PQ) atoms.
  std::vector<std::size_t> atoms;
  /// The same module with every non-J atom shown as 0.
  std::string shape;
  /// Whether J also contains elements outside the PQ atoms (KQ kernel of
  /// r + s, or integer vectors killed by every functional of a quotient).
  std::string extra;
  bool is_ideal;
  /// Number of products evaluated by the ideal check.
  std::size_t products_checked;
};

/// Elements of degree k killed by every functional, with an executed check
/// that J is a two-sided ideal.
RadicalJ radical_j(const EndAlgebra& a, unsigned k);

}  // namespace endcohom

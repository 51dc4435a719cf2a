#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hcube/bitmatrix.hpp"
#include "hcube/construct.hpp"
#include "hcube/cost.hpp"
#include "hcube/symmetry.hpp"

namespace hcube {

/// Ordered set of distinct vertices of Q_n.
class LabelClass {
 public:
  LabelClass() = default;
  /// Throws PreconditionError when a vertex has the wrong length or repeats.
  LabelClass(std::size_t n, std::vector<BitString> vertices);
  /// Every vertex of Q_n in increasing order; n <= 20.
  static LabelClass all_vertices(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<BitString>& vertices() const noexcept { return vertices_; }

 private:
  std::size_t n_ = 0;
  std::vector<BitString> vertices_;
};

/// Coordinate j of a vertex moves to position pi(j), complemented when
/// flips[j]; the same encoding as the column action on characteristic matrices.
using HypercubeAutomorphism = Permaut;

BitString apply_automorphism(const HypercubeAutomorphism& phi, const BitString& v);
/// Vertex-by-vertex image, order kept.
LabelClass apply_automorphism(const HypercubeAutomorphism& phi, const LabelClass& s);

/// Row i is the i-th vertex. PreconditionError (kEmptyClass) for an empty class.
BinaryMatrix characteristic_matrix(const LabelClass& s);

/// True iff the characteristic matrix is asymmetric, i.e. only the identity
/// automorphism of Q_n fixes S setwise. The empty class is not distinguishing.
bool is_distinguishing_class(const LabelClass& s, const SearchOptions& options = {});

/// Every automorphism of Q_n with phi(S) = S, by brute force over all n! 2^n.
/// Ordered by pi (image vectors lexicographically), then by the flip mask read
/// as an integer with coordinate 0 least significant; the identity comes first.
/// BudgetExceeded when n > 8.
std::vector<HypercubeAutomorphism> aut_preservers(const LabelClass& s);

/// A class of rho(Q_n) vertices, the rows of asymmetric_witness(rho(n), n) in
/// construction order.
LabelClass distinguishing_class(const BigInt& n, const WitnessOptions& options = {});

struct MinimalityReport {
  std::size_t subsets = 0;               // 4-subsets of V(Q_4) examined
  std::size_t group_distinguishing = 0;  // of them, fixed only by the identity
  std::size_t matrix_distinguishing = 0; // of them, asymmetric characteristic matrix
  std::size_t disagreements = 0;
  bool witness_group = false;   // the constructed 5-class, group path
  bool witness_matrix = false;  // ... and matrix path
  bool holds() const {
    return subsets == 1820 && group_distinguishing == 0 && matrix_distinguishing == 0 && disagreements == 0 &&
           witness_group && witness_matrix;
  }
};

/// Checks every 4-subset of V(Q_4) against all 384 automorphisms and against
/// the matrix checker, and the constructed 5-vertex class both ways.
MinimalityReport minimality_q4_report();
bool verify_minimality_q4();

}  // namespace hcube

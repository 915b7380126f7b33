#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detlab/ideal.hpp"
#include "detlab/matrix.hpp"

namespace detlab {

/// t x (t+n-1) banded matrix with shifted copies of (x0..x{n-1}); its
/// maximal minors generate m^t in n variables.
PolyMatrix power_ideal_matrix(std::size_t n, std::size_t t, const Field& field = Field());

/// d x (n+1) matrix (alpha_i^j * x_j) in x0..xn. Alphas must be distinct
/// and nonzero. Empty alphas means 1, 2, ..., d.
PolyMatrix squarefree_matrix(std::size_t n, std::size_t d, std::vector<Scalar> alphas = {},
                             const Field& field = Field());
/// Same matrix with the column variables replaced by arbitrary linear forms.
PolyMatrix squarefree_matrix(std::span<const Polynomial> columns, std::size_t d, std::vector<Scalar> alphas = {});
/// All squarefree monomials of degree d in the given ring.
Ideal squarefree_ideal(const Ring& ring, std::size_t d);

enum class SymmetricVariant { X, Y, U, Z, Zs };

/// Matrices of the symmetric family for t >= 2. X is the generic symmetric
/// (t+1) x (t+1) matrix in C(t+2, 2) variables x_{i,j} (i <= j, numbered
/// lexicographically). The others live in the 2t+1 outer variables
/// y_k = x_{0,k} (k <= t), y_{t+i} = x_{i,t}: Y is the Hankel matrix
/// (y_{i+j}), U the t x (t+2) Hankel matrix, Z keeps the border of Y and
/// fills the interior with random symmetric linear forms, Zs = s Z + (1-s) Y.
PolyMatrix symmetric_family(std::size_t t, SymmetricVariant variant, std::uint64_t seed = 1,
                            std::optional<Scalar> s = std::nullopt, const Field& field = Field());

struct NPlusOneCurve {
  Ideal curve;             ///< closed formula
  Ideal from_components;   ///< I_{C1} intersected with I_{C2}
  Ideal c1;
  Ideal c2;
  Ideal point;             ///< I_{C1} + I_{C2} expected
  Ideal surface;           ///< squarefree quadrics in x0, x2..xn
};

/// Curve of degree n+1 in P^{n+1}: a cone over n coordinate points plus a
/// line through the vertex region. Variables x0..x{n+1}.
NPlusOneCurve n_plus_1_curve(std::size_t n, const Field& field = Field());
/// (x0..xn)^2 + x{n+1}(x0..xn).
Ideal n_plus_1_minor_target(std::size_t n, const Field& field = Field());

struct DoubleLink {
  Ideal ideal;
  bool saturated = false;
};

/// I_S + F * I_C. Requires I_S inside I_C and (I_S : F) = I_S.
DoubleLink basic_double_link(const Ideal& curve, const Ideal& surface, const Polynomial& f);

enum class BdlMode { row_added, column_removed };

/// row_added: N is M with a row inserted at k; the result is N with a new
/// column l that is F in row k and zero elsewhere. column_removed: N is M
/// without column k; the result is N with F times that column put back.
/// Indices are 0-based. Throws PreconditionError on shape or degree
/// violations.
PolyMatrix bdl_matrix(const PolyMatrix& m, const PolyMatrix& n, const Polynomial& f, BdlMode mode,
                      std::size_t k, std::size_t l = 0);

struct FamilyMember {
  Scalar s;
  Ideal ideal;
  std::string provenance;
};

/// Substitutes x_last -> s * x_last in a minimal generating set.
FamilyMember cone_family(const Ideal& ideal, const Scalar& s, std::string provenance = "cone");

/// 3 x 3 symmetric matrix with (1,1) entry (1-s) x2 + s x3, 6 variables.
PolyMatrix veronese_deformation_matrix(const Scalar& s, const Field& field = Field());

/// a lines from one ruling and b from the other on x0x3 - x1x2.
Ideal ruling_lines_curve(std::size_t a, std::size_t b, const Field& field = Field());

/// Random t x q matrix of linear forms in n variables.
PolyMatrix random_linear_matrix(std::size_t t, std::size_t q, std::size_t nvars, std::uint64_t seed,
                                const Field& field = Field());

/// The 2 x 4 matrices of the hyperplane-section example: C in x0..x4,
/// its general section X in four variables, and Z = C at x4 = 0.
enum class SectionExample { C, X, Z };
PolyMatrix section_example_matrix(SectionExample which, const Field& field = Field());

/// A registry object: an ideal, and the matrix it came from when there is one.
struct Construction {
  std::string id;
  std::string description;
  Ideal ideal;
  std::optional<PolyMatrix> matrix;
};

/// Builds "name?key=value&..." (see registry_ids for the names).
Construction construct(const std::string& id, const Field& field = Field());
std::vector<std::string> registry_ids();

}  // namespace detlab

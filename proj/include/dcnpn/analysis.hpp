#pragma once

#include <dcnpn/signature.hpp>
#include <dcnpn/truth_table.hpp>

#include <vector>

namespace dcnpn
{

enum class Phase : std::uint8_t
{
  positive,
  negative,
  undetermined
};

char const* to_string( Phase p );

/*! \brief Which output polarity the search runs on.
 *
 * Positive keeps f (|f| < 2^(n-1)), Negative searches the complement
 * (|f| > 2^(n-1)), Undetermined searches both.
 */
Phase output_phase( TruthTable const& f );

/// Positive if |f_{x_i}| > |f_{~x_i}|, Negative if smaller, Undetermined on a tie.
Phase variable_phase( TruthTable const& f, int var );
/// variable_phase for every input; independent inputs get Positive.
std::vector<Phase> variable_phases( TruthTable const& f );

bool is_independent( TruthTable const& f, int var );

enum class SymmetryKind : std::uint8_t
{
  equivalence, ///< f invariant under x_i <-> x_j
  skew         ///< f invariant under x_i <-> ~x_j
};

/// Throws std::invalid_argument when i == j.
bool are_symmetric( TruthTable const& f, int i, int j, SymmetryKind kind );

enum class ClassKind : std::uint8_t
{
  asymmetric,
  symmetric,
  independent
};

char const* to_string( ClassKind k );

/*! \brief Block of the symmetry partition.
 *
 * `vars` is ascending. For a symmetric class, `inverted[k]` is set when vars[k]
 * relates to vars[0] by skew symmetry.
 */
struct SymmetryClass
{
  ClassKind kind = ClassKind::asymmetric;
  std::vector<int> vars;
  std::vector<bool> inverted;

  friend bool operator==( SymmetryClass const&, SymmetryClass const& ) = default;
};

/*! \brief Partition of the inputs into symmetric, asymmetric and independent classes.
 *
 * Pairs are only tested when their phase-adjusted first-order values agree.
 * Blocks are ordered by their smallest variable; all independent inputs form
 * one block.
 */
std::vector<SymmetryClass> symmetry_classes( TruthTable const& f, std::vector<Phase> const& phases );

} // namespace dcnpn

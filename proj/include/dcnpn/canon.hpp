#pragma once

#include <dcnpn/analysis.hpp>
#include <dcnpn/signature.hpp>
#include <dcnpn/transform.hpp>
#include <dcnpn/truth_table.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dcnpn
{

struct ClassMember
{
  int var = 0;
  Phase phase = Phase::undetermined;

  friend bool operator==( ClassMember const&, ClassMember const& ) = default;
};

/// Members of one symmetry class that are still unplaced, ascending by variable.
struct VarClass
{
  ClassKind kind = ClassKind::asymmetric;
  int class_id = 0;
  std::vector<ClassMember> members;

  friend bool operator==( VarClass const&, VarClass const& ) = default;
};

/// Classes whose phase-adjusted keys agree at every row examined so far.
struct Group
{
  int seq = 1;
  DCValue key;
  std::vector<VarClass> classes;

  std::size_t num_vars() const noexcept;
};

/*! \brief Search node: unresolved groups in decreasing key order plus the committed prefix.
 *
 * `class_of[v]` is the symmetry block of input v; a class keeps that id for the
 * whole search.
 */
struct GroupState
{
  std::vector<Group> groups;
  std::vector<Literal> prefix;
  std::vector<int> class_of;
  std::vector<ClassKind> class_kind;
};

/// Commit the head member of classes[class_index] with the given polarity.
struct SplitApproach
{
  std::size_t class_index = 0;
  Polarity polarity = Polarity::positive;

  friend bool operator==( SplitApproach const&, SplitApproach const& ) = default;
};

struct CanonResult
{
  Candidate c_f;
  TruthTable canonical_table;
  std::uint64_t candidates_examined = 0;
  std::uint64_t branches_pruned = 0;
  SignatureMode mode = SignatureMode::dc;
};

/*! \brief Root state for the function being searched.
 *
 * Computes phase-adjusted first-order keys, phases and symmetry classes, and
 * orders the resulting groups by decreasing key.
 */
GroupState initial_group( SignatureTable const& h, SignatureMode mode );
GroupState initial_group( TruthTable const& h, SignatureMode mode );

/// e.g. "[{~x6}] [{~x1,~x2},{x3,x7}]"; an undetermined phase prints as "?x2".
std::string to_string( GroupState const& state );

/// One class that is independent or has every phase determined.
bool group_resolved( Group const& g );

/*! \brief Branches for an unresolved group.
 *
 * One approach per class (its lowest unplaced member heads the branch), two
 * when that member's phase is undetermined. Throws std::logic_error on a
 * resolved group.
 */
std::vector<SplitApproach> split_group( Group const& g );

/// Appends the chosen literal to the prefix and removes it from the first group.
GroupState update_sequence( GroupState const& state, SplitApproach choice );

/*! \brief Refines every group by the row of the last committed literal.
 *
 * Each member is re-keyed by its value in the cofactor by prefix.back(),
 * undetermined phases are re-decided, and groups split by key in decreasing
 * order. Groups never merge.
 */
GroupState update_signature( SignatureTable const& h, GroupState const& state, SignatureMode mode );
GroupState update_signature( TruthTable const& h, GroupState const& state, SignatureMode mode );

/*! \brief Depth-first candidate enumeration from `state`.
 *
 * Returns every complete candidate in visiting order. `h` is the searched
 * polarity; the candidates carry out_negated = `out_negated`.
 */
std::vector<Candidate> enumerate_candidates( SignatureTable const& h, GroupState const& state, SignatureMode mode,
                                             bool out_negated, std::uint64_t* pruned = nullptr );

/*! \brief Searches one polarity and keeps the maximal candidate.
 *
 * `f` is the original function; candidate tables are apply_transform(f, as_transform(c)).
 */
CanonResult search( TruthTable const& f, bool out_negated, SignatureMode mode );

/// Canonical form of f; searches both polarities when |f| = 2^(n-1).
CanonResult canonical_form( TruthTable const& f, SignatureMode mode = SignatureMode::dc );

/// Transform t with apply_transform(f, t) == g, or nullopt when not NPN-equivalent.
std::optional<NPTransform> match( TruthTable const& f, TruthTable const& g );

} // namespace dcnpn

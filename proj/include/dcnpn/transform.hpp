#pragma once

#include <dcnpn/truth_table.hpp>

#include <string>
#include <vector>

namespace dcnpn
{

/*! \brief Input permutation, input negations and output negation.
 *
 * Position i of the transformed function reads source variable `perm[i]`,
 * complemented when `negated[i]` is set.
 */
class NPTransform
{
public:
  /// Identity over `num_vars` inputs.
  explicit NPTransform( int num_vars = 1 );
  /// Throws std::invalid_argument unless `perm` is a bijection of the right size.
  NPTransform( std::vector<int> perm, std::vector<bool> negated, bool out_negated );

  static NPTransform identity( int num_vars ) { return NPTransform( num_vars ); }

  int num_vars() const noexcept { return static_cast<int>( perm_.size() ); }
  std::vector<int> const& perm() const noexcept { return perm_; }
  std::vector<bool> const& negated() const noexcept { return negated_; }
  bool out_negated() const noexcept { return out_negated_; }

  friend bool operator==( NPTransform const&, NPTransform const& ) = default;

private:
  std::vector<int> perm_;
  std::vector<bool> negated_;
  bool out_negated_ = false;
};

/// h(x) = f(y) ^ out with y[perm[i]] = x_i ^ negated[i].
TruthTable apply_transform( TruthTable const& f, NPTransform const& t );
/// apply_transform(apply_transform(f, t), invert(t)) == f.
NPTransform invert( NPTransform const& t );
/// apply_transform(f, compose(t1, t2)) == apply_transform(apply_transform(f, t2), t1).
NPTransform compose( NPTransform const& t1, NPTransform const& t2 );

/// Ordered literal sequence t_1..t_n plus the output phase.
struct Candidate
{
  std::vector<Literal> literals;
  bool out_negated = false;

  bool complete( int num_vars ) const noexcept { return static_cast<int>( literals.size() ) == num_vars; }
  friend bool operator==( Candidate const&, Candidate const& ) = default;
};

/// The transform whose application to f yields the candidate's table.
NPTransform as_transform( Candidate const& c );
/// Space-separated literals, e.g. "~x6 ~x1 x3".
std::string to_string( Candidate const& c );
/// Renders `g(x1..xn) = [~]f(lit,...)` for a transform with apply_transform(f, t) == g.
std::string to_string( NPTransform const& t );

} // namespace dcnpn

#pragma once

#include <dcnpn/signature.hpp>
#include <dcnpn/transform.hpp>
#include <dcnpn/truth_table.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace dcnpn::oracle
{

inline constexpr int kMaxOracleVars = 5;

struct OracleResult
{
  TruthTable best_table;
  NPTransform best_transform;
  std::vector<DCValue> vector_digest;
};

/// Full signature vector by direct minterm enumeration (no word tricks).
std::vector<DCValue> materialize_dc_vector( TruthTable const& g, SignatureMode mode = SignatureMode::dc );

/// Minterm-by-minterm transform application.
TruthTable naive_apply( TruthTable const& f, NPTransform const& t );

/*! \brief Best member of f's orbit over all n!·2^(n+1) transforms.
 *
 * Preference: fewer minterms first, then the lexicographically largest full
 * vector. Throws std::invalid_argument for n > kMaxOracleVars.
 */
OracleResult brute_canonical( TruthTable const& f, SignatureMode mode = SignatureMode::dc );

/// Some transform maps g onto f.
bool brute_equivalent( TruthTable const& f, TruthTable const& g );

/// Calls fn(t) for every transform of the given arity.
template<class Fn>
void for_each_transform( int num_vars, Fn&& fn )
{
  std::vector<int> perm( num_vars );
  std::iota( perm.begin(), perm.end(), 0 );
  do
  {
    for ( unsigned negs = 0; negs < ( 1u << num_vars ); ++negs )
    {
      std::vector<bool> neg( num_vars );
      for ( int i = 0; i < num_vars; ++i )
        neg[i] = ( negs >> i ) & 1u;
      for ( bool out : { false, true } )
        fn( NPTransform( perm, neg, out ) );
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
}

} // namespace dcnpn::oracle

#pragma once

#include <dcnpn/transform.hpp>
#include <dcnpn/truth_table.hpp>

#include <cstdint>
#include <random>

namespace dcnpn
{

/*! \name Portable seeded generators
 *
 * Everything draws from std::mt19937_64, whose output sequence is fixed by the
 * standard. Bernoulli(p) uses the top 53 bits of one draw as a double in
 * [0, 1); bounded integers use rejection sampling. Results therefore repeat
 * across platforms and standard libraries.
 */
///@{
double uniform01( std::mt19937_64& rng );
/// Uniform in [0, bound); bound > 0.
std::uint64_t uniform_below( std::mt19937_64& rng, std::uint64_t bound );
/// Each minterm is in the onset with probability `density`, drawn in minterm order.
TruthTable random_function( int num_vars, double density, std::mt19937_64& rng );
/// Fisher-Yates permutation, then one draw per input phase, then the output phase.
NPTransform random_transform( int num_vars, std::mt19937_64& rng );
///@}

} // namespace dcnpn

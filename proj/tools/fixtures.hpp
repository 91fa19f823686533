#pragma once

#include <dcnpn/truth_table.hpp>

#include <string_view>

namespace dcnpn::fixtures
{

/// Seven-input worked example, six product terms (46 minterms).
extern std::string_view const kSevenInputCubes;
/// Six-input worked example, fifteen product terms (32 minterms).
extern std::string_view const kSixInputCubes;

TruthTable seven_input_example();
TruthTable six_input_example();

} // namespace dcnpn::fixtures

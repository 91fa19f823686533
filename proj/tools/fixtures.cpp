#include "fixtures.hpp"

namespace dcnpn::fixtures
{

std::string_view const kSevenInputCubes = "--1-0-1\n"
                                          "00-1---\n"
                                          "00-010-\n"
                                          "--1010-\n"
                                          "-10010-\n"
                                          "-00010-\n";

// the last term covers minterm 45 only
std::string_view const kSixInputCubes = "0110--\n"
                                        "1100--\n"
                                        "0001--\n"
                                        "011--1\n"
                                        "01-110\n"
                                        "101--0\n"
                                        "110--1\n"
                                        "00000-\n"
                                        "0010-1\n"
                                        "001-11\n"
                                        "000-10\n"
                                        "010100\n"
                                        "111100\n"
                                        "100011\n"
                                        "101101\n";

TruthTable seven_input_example()
{
  return TruthTable::from_cubes( kSevenInputCubes, 7 );
}

TruthTable six_input_example()
{
  return TruthTable::from_cubes( kSixInputCubes, 6 );
}

} // namespace dcnpn::fixtures

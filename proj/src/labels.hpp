#pragma once

#include <string>

#include "partitions.hpp"
#include "type_b.hpp"
#include "type_d.hpp"

namespace weylsig {

// Irreps: A "[2,1]", B "[2,1]|[1]", D "{[2],[1]}" or "[1,1]+".
// Parabolics: A "(2,1)", B "(2,1)|(1)", D "(2,2)+", "(2,2)-", "(1)|(3)".
std::string label_text(const IrrepB& v);
std::string label_text(const IrrepD& v);
std::string label_text(const ParabolicB& p);
std::string label_text(const ParabolicD& p);

IrrepB parse_irrep_b(const std::string& s);
IrrepD parse_irrep_d(const std::string& s);
ParabolicB parse_parabolic_b(const std::string& s);
ParabolicD parse_parabolic_d(const std::string& s);
// Any composition of positive parts; returns the sorted key.
Partition parse_parabolic_a(const std::string& s);

}  // namespace weylsig

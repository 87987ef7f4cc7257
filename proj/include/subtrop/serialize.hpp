#pragma once

#include "subtrop/condition.hpp"
#include "subtrop/decide.hpp"
#include "subtrop/witness.hpp"

#include <json.hpp>

namespace subtrop {

// Keys keep insertion order. Indices are 1-based.
// Integers that do not fit in 64 bits and all rationals are emitted as strings.
using Json = nlohmann::ordered_json;

Json to_json(const BigInt& value);
Json to_json(const BigRational& value);
Json to_json(const ExponentSolution& n);
Json to_json(const LinearCondition& cond);
Json to_json(const SymbolicWitness& w);
Json to_json(const Decision& decision);
Json to_json(const VerificationReport& report);

} // namespace subtrop

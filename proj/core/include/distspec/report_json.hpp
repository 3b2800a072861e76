#ifndef DISTSPEC_REPORT_JSON_HPP
#define DISTSPEC_REPORT_JSON_HPP

#include <string>

#include "distspec/charpoly.hpp"
#include "distspec/constructions.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/switching.hpp"

namespace distspec {

/// JSON serialization of the report types. Coefficients that fit in a JSON
/// int64 are emitted as numbers; larger ones as decimal strings, keeping the
/// documents exact. Output is byte-deterministic for equal inputs.

std::string charpoly_json(const CharPoly& p);                       // [c0, c1, ..., cn]
std::string switch_tuple_json(const SwitchTuple& t);                // {s, g, h, k, A, B}
std::string perturbation_report_json(const PerturbationReport& r);
std::string search_report_json(const SearchReport& r);

}  // namespace distspec

#endif

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace coarsekit {

/// Exact rational scalar used for all distances and scale parameters.
/// Magnitudes in this library are tiny (window radii, circle arcs), so a
/// 64-bit numerator/denominator never comes close to overflow.
using Rat = boost::rational<std::int64_t>;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

/// Formats as "p" or "p/q" (lowest terms, q > 0).
std::string rat_str(const Rat& r);

/// Parses "p" or "p/q". Returns nullopt on malformed input or q == 0.
std::optional<Rat> rat_parse(const std::string& text);

}  // namespace coarsekit

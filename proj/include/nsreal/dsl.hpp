// Series mini-language used by the command line:
//   series := name [ '(' (rational | series) ')' ]
// with geom(r), pser(k), powers_recip, harmonic and alt(series).
#pragma once

#include <string_view>

#include "nsreal/extsum.hpp"

namespace nsreal::dsl {

/// Throws kParse on malformed input.
extsum::SeriesSpec parse_series(std::string_view text);

}  // namespace nsreal::dsl

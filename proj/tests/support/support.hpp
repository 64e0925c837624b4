#pragma once

#include <string>
#include <string_view>

#include "sup/binding.hpp"
#include "sup/reduction.hpp"
#include "sup/syntax.hpp"

namespace sup::test {

inline Term plain(std::string_view text) { return parseTerm(text, Mode::Plain); }
inline Term scalar(std::string_view text) { return parseTerm(text, Mode::Scalar); }

inline std::string showPlain(const Term& t) { return printTerm(t, {Mode::Plain, false}); }
inline std::string showScalar(const Term& t) { return printTerm(t, {Mode::Scalar, false}); }

inline Config scalarAny() {
    Config c;
    c.mode = Mode::Scalar;
    return c;
}

}  // namespace sup::test

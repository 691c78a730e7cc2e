#include "cyccov/rational.hpp"

namespace cyccov {

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational x{BigInt(text)};
            return x;
        }
        Rational x(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        throw DomainError("bad fraction: " + text);
    }
}

}  // namespace cyccov

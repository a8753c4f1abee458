#include "quillen/bigint.hpp"

#include "quillen/errors.hpp"

namespace quillen {

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InternalError("exact_div by zero");
    BigInt q = num / den;
    if (q * den != num) throw InternalError("exact_div: non-integral result");
    return q;
}

} // namespace quillen

#include "addsys/integer.hpp"

namespace addsys {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // 2 = definitely prime, 1 = probably; reps=40 makes false positives
    // irrelevant at any scale this library touches.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

}  // namespace addsys

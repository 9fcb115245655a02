// Minimal usage example: build a code, inspect its distances, and evaluate it
// exactly on an erasure channel.
#include <cstdio>

#include "wfc/bec.hpp"
#include "wfc/constructions.hpp"

int main() {
    using namespace wfc;

    // The best 5-message code of blocklength 13.
    const TypeVector code = conjectured_m5m6(5, 13);

    const DistanceProfile profile = distance_profile(code);
    printf("M = %u, n = %llu, d_min;2 = %llu, d_min;3 = %llu\n", code.m,
           static_cast<unsigned long long>(code.n()),
           static_cast<unsigned long long>(profile.min_rwise[0]),
           static_cast<unsigned long long>(profile.min_rwise[1]));

    for (double delta : {0.1, 0.3, 0.5}) {
        const EvalResult r = error_probability(code, {delta});
        printf("delta = %.1f  P_error = %.12g\n", delta, r.p_error);
    }
    return 0;
}

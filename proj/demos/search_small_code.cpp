// Usage example: exhaustively search all 4-message codes of a given length and
// compare the optimum against the closed-form construction and the bounds.
#include <cstdio>

#include "wfc/bounds.hpp"
#include "wfc/constructions.hpp"
#include "wfc/search.hpp"

int main() {
    using namespace wfc;
    const Channel ch{0.3};

    for (std::uint64_t n = 3; n <= 8; ++n) {
        const SearchReport best = exhaustive_search(4, n, ch);
        const double closed = error_probability(optimal_m3m4(4, n), ch).p_error;
        const BoundSet b = bound_set(4, n, ch);
        printf("n = %llu  searched = %.10g  closed-form = %.10g  ppv in [%.3g, %.3g]\n",
               static_cast<unsigned long long>(n), best.best_p_error, closed, b.ppv_lower,
               b.ppv_upper);
    }
    return 0;
}

#include "hovm/parallel.hpp"

#include <omp.h>

namespace hovm {

namespace {
int default_threads() {
    static const int n = omp_get_max_threads();
    return n;
}
}  // namespace

void set_threads(int n) {
    default_threads();
    omp_set_num_threads(n > 0 ? n : default_threads());
}

int threads() { return omp_get_max_threads(); }

}  // namespace hovm

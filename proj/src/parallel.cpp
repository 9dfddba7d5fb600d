#include "delsarte/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace delsarte {

namespace {
Exec g_default = Exec::OpenMP;
}

Exec default_exec() { return g_default; }

void set_default_exec(Exec exec) { g_default = exec; }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace delsarte

#pragma once

namespace delsarte {

// Kernel execution policy. Serial variants are the reference
// implementations; OpenMP variants must produce the same results and are
// compared against them in the test suite and the benchmark target.
enum class Exec { Serial, OpenMP };

Exec default_exec();
void set_default_exec(Exec exec);

int max_threads();

}  // namespace delsarte

#pragma once

namespace infobid {

// Execution policy for the data-parallel kernels. Serial is the reference
// path; Parallel runs the same loop body under OpenMP. Both paths write
// disjoint output slots and reduce serially in index order, so results are
// bit-identical.
enum class Exec { Serial, Parallel };

void set_worker_count(int workers);  // <= 0 leaves the runtime default
int worker_count();

template <class Body>
void for_each_index(Exec exec, int count, const Body& body) {
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < count; ++i) body(i);
    return;
#endif
  }
  for (int i = 0; i < count; ++i) body(i);
}

}  // namespace infobid

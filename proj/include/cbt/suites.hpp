#pragma once

#include "cbt/report.hpp"

namespace cbt::suites {

// Named verification suites behind `verify <suite>`.  Each returns a full
// RunReport; desk-scale variants of the heavier checks keep every suite
// interactive.  The acceptance tests run the full-scale versions.
report::RunReport primes_suite();
report::RunReport bt_suite();
report::RunReport lt_suite();
report::RunReport density_suite();
report::RunReport forms_suite();
report::RunReport all_suites();

} // namespace cbt::suites

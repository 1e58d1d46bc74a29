#include <pybind11/pybind11.h>
PYBIND11_MODULE(_dimerlab, m) { m.doc() = "dimer quiver toolkit"; }

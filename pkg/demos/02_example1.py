"""The three-spheres-plus-a-5-cell coalgebra: A-infinity, not C-infinity in the strict sense."""
from hocoalg import builtin, check_ainf, check_cinf
from hocoalg.hopf import primitive_dimensions

C = builtin("example1")
print(check_ainf(C, C.basis))
print(check_cinf(C))
print(check_cinf(builtin("example1-cinf")))
print("primitives of T(H) per degree:", primitive_dimensions(C, 10, 5))

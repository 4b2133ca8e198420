"""Same Lie algebra of primitives, different l^3: the two examples are told apart."""
from hocoalg import builtin, compare, theorem_pl
from hocoalg.linf import check_linf

A, B = builtin("example1"), builtin("example2")
L = theorem_pl(A, 10, 4)
print("l^3(w) =", L.ell(3, dict(L.basis)["w"]))
print(check_linf(L, degree_cap=10, max_n=4))
print(compare(A, B, 10, 5))

"""psi- and rho-extensions of Delta_3 to the tensor algebra, and what each preserves."""
from hocoalg import PsiExtension, RhoExtension, builtin
from hocoalg.hopf import check_eq9, check_rho_preserves_primitives, find_psi_witness

C = builtin("example1")
g = {x.name: x for x in C.space.reduced}
wx = (g["w"], g["x"])
print("psi_3(wx) =", PsiExtension(C).coop(3)(wx))
print("rho_3(wx) =", RhoExtension(C).coop(3)(wx))
print(check_eq9(C, 8, 3).notes[-1])
print(check_rho_preserves_primitives(C, (2, 3, 4), 10, 5))
witness = find_psi_witness(C)
print("psi leaves the primitives at", witness.location if witness else "no witness at this truncation")

"""Cells of K_4 and K_5, their boundary, and the signed diagonal."""
from hocoalg import associahedron as K

for n in (4, 5):
    cells = K.cells(n)
    top = K.corolla(n)
    print(f"K_{n}: {len(cells)} cells, {len(K.binary_trees(n))} vertices")
    print("  d(top) =", " ".join(f"{'+' if s > 0 else '-'}{K.render(f)}" for f, s in K.boundary(top).items()))
    diag = K.diagonal(top)
    print(f"  diagonal of the top cell has {len(diag)} terms")
    if n == 4:
        for (a, b), s in diag.items():
            print(f"    {'+' if s > 0 else '-'} {K.render(a)} ⊗ {K.render(b)}")

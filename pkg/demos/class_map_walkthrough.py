"""From group-algebra words to configuration classes, step by step.

Runs at (n, g) = (2, 1): two particles on a once-punctured torus.
Shows the arrangement basis, the class of a word, the expansion of the
boundary relator, and its death on the closed surface.
"""

from confsurf.groupring import monomial, mu, zeta
from confsurf.moriyama import delta, dimension, format_arrangement, full_basis
from confsurf.surface import delta_surface, surface_space

n, g = 2, 1

print(f"ambient dimension at (n, g) = ({n}, {g}): {dimension(n, g)}")
print("arrangement basis:")
for e in full_basis(n, g).keys:
    print("  ", format_arrangement(e))

print("\nclass of the word a_1 a_{-1} (particle 1 then particle 2):")
cls = delta(monomial((1, -1), n, g), (1, 2), g)
for e, c in sorted(cls.terms.items(), key=lambda kv: kv[0].sort_key()):
    print(f"  {str(c):>3}  {format_arrangement(e)}")

print("\nthe relator expands as 1 + mu + higher order:")
z = zeta(g, n)
print("  degree 0:", {w: str(c) for w, c in z.graded_piece(0).terms.items()})
print("  degree 2:", {w: str(c) for w, c in z.graded_piece(2).terms.items()},
      "== mu:", z.graded_piece(2) == mu(g))

space = surface_space(n, g)
print(f"\nclosed surface: kernel rank {space.kernel.rank}, "
      f"quotient dim {space.quotient_dim}")
print("relator class on the closed surface:",
      delta_surface(zeta(g, n), space) or "0")
print("mu class on the closed surface:",
      delta_surface(mu(g, n), space) or "0")
coords = delta_surface(monomial((1, -1), n, g), space)
print("a_1 a_{-1} survives with coordinates:")
for e, c in sorted(coords.items(), key=lambda kv: kv[0].sort_key()):
    print(f"  {str(c):>3}  {format_arrangement(e)}")

"""The intersection matrix of the generator family at (n, g) = (3, 3).

Builds the 27 x 27 grid of pairings between the configuration classes
of the s + r = 3 generator family and their dual intersection classes,
printing the diagonal signs and confirming every off-diagonal entry is
zero, which forces linear independence of the family.
"""

from confsurf.dualpair import dual_class, pair
from confsurf.moriyama import delta
from confsurf.verify import _family, _generator_label
from confsurf.weights import generator_lift

n = g = 3

family = _family(n, g)
print(f"generator family with s + r = {n} at genus {g}: "
      f"{len(family)} elements")

duals = [dual_class(b, n, g) for b in family]
classes = [delta(generator_lift(b, n, g), range(1, n + 1), g) for b in family]

off_diag_nonzero = 0
print("\ndiagonal entries:")
for i, (b, x) in enumerate(zip(family, classes)):
    row = [pair(x, D) for D in duals]
    diag = row[i]
    off_diag_nonzero += sum(1 for j, v in enumerate(row) if v and j != i)
    print(f"  {str(diag):>3}  {_generator_label(b)}")

print(f"\nnonzero off-diagonal entries: {off_diag_nonzero}")
print("matrix is diag(+-1):", off_diag_nonzero == 0
      and all(pair(x, duals[i]) in (1, -1) for i, x in enumerate(classes)))

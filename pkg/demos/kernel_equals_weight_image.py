"""The top-degree kernel is exactly the low-weight part, at (3, 2).

Computes both sides independently: the kernel of the graded class map
on the closed surface by a relation-basis elimination, and the image of
the weight <= 1 filtration in the Labute quotient, then compares the
two subspaces as canonical RREF data.
"""

from confsurf.verify import _labute_image, ker_gr_delta, verify_theorem_A
from confsurf.weights import labute_rel, tensor_indexing, weight_filter

n = k = 3
g = 2

kernel = ker_gr_delta(k, n, g)
print(f"degree-{k} kernel at (n, g) = ({n}, {g}): rank {kernel.rank} "
      f"inside the Labute quotient of dim {len(kernel.indexing)}")

w = k - 2
wsub = weight_filter(k, w, g)
print(f"weight <= {w} part of degree {k}: rank {wsub.rank} "
      f"inside H^(x{k}) of dim {len(tensor_indexing(k, g))}")
print(f"Labute relations in degree {k}: rank {labute_rel(k, g).rank}")

wimg = _labute_image(wsub, k, g)
print(f"its image in the Labute quotient: rank {wimg.rank}")

print("kernel == weight image:", kernel == wimg)

verdict = verify_theorem_A(n, g)
print("\nverifier verdict:", verdict.to_json(include_elapsed=False))

"""Chord diagrams, insertion maps and the weight filtration of H^{otimes n}.

H is the first homology of the surface, with basis a_1, a_{-1}, ...,
a_g, a_{-g}; tensors are sparse combinations of words (tuples of signed
indices).  A chord diagram of length r on [n] marks r disjoint slot
pairs; its insertion map places a copy of the canonical symplectic
element mu = sum_i sign(i) a_i (x) a_{-i} across each pair and the
letters of its argument in the remaining slots.  Spans of insertion
images give the weight filtration, and consecutive insertions give the
relations presenting the associated graded of the augmentation-ideal
filtration (Labute's quotient).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .groupring import AlgebraElement, Word
from .linalg import BasisIndexing, Rational, Subspace, rational


def signed_letters(g: int) -> tuple:
    """Basis letters of H in canonical order a_1, a_{-1}, ..., a_g, a_{-g}."""
    out = []
    for j in range(1, g + 1):
        out += [j, -j]
    return tuple(out)


def all_words(m: int, g: int) -> list:
    """All degree-m words over the 2g letters, in canonical product order."""
    return [tuple(w) for w in product(signed_letters(g), repeat=m)]


@lru_cache(maxsize=None)
def tensor_indexing(m: int, g: int) -> BasisIndexing:
    return BasisIndexing(all_words(m, g), label=f"tensor deg={m} g={g}")


@dataclass(frozen=True)
class ChordDiagram:
    """r disjoint ordered pairs (k_i, l_i) of slots in [n], with k_i < l_i
    and k_1 < ... < k_r."""

    n: int
    ks: tuple
    ls: tuple

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(self.ks))
        object.__setattr__(self, "ls", tuple(self.ls))
        if len(self.ks) != len(self.ls):
            raise ValueError("k and l tuples differ in length")
        entries = self.ks + self.ls
        if len(set(entries)) != len(entries):
            raise ValueError("chord endpoints must be pairwise distinct")
        if any(not (1 <= e <= self.n) for e in entries):
            raise ValueError("chord endpoint out of range")
        if any(k >= l for k, l in zip(self.ks, self.ls)):
            raise ValueError("need k_i < l_i")
        if list(self.ks) != sorted(self.ks):
            raise ValueError("need k_1 < ... < k_r")

    @property
    def r(self) -> int:
        return len(self.ks)

    def is_nonconsecutive(self) -> bool:
        return all(k + 1 < l for k, l in zip(self.ks, self.ls))


def chord_diagrams(n: int, r: int) -> list:
    """All chord diagrams of length r on [n], lexicographic on the
    flattened (k_1, l_1, ..., k_r, l_r)."""
    found = []

    def extend(ks, ls, used):
        if len(ks) == r:
            found.append(ChordDiagram(n, tuple(ks), tuple(ls)))
            return
        start = ks[-1] + 1 if ks else 1
        for k in range(start, n + 1):
            if k in used:
                continue
            for l in range(k + 1, n + 1):
                if l in used:
                    continue
                extend(ks + [k], ls + [l], used | {k, l})

    extend([], [], set())
    return found


def parse_chord_diagram(text: str, n: int) -> ChordDiagram:
    """Parse e.g. '(1,4)(2,6)' into a chord diagram on [n]."""
    ks, ls = [], []
    body = text.strip()
    while body:
        if not body.startswith("("):
            raise ValueError(f"bad chord diagram text: {text!r}")
        close = body.index(")")
        k, l = body[1:close].split(",")
        ks.append(int(k))
        ls.append(int(l))
        body = body[close + 1:]
    return ChordDiagram(n, tuple(ks), tuple(ls))


def format_chord_diagram(cd: ChordDiagram) -> str:
    return "".join(f"({k},{l})" for k, l in zip(cd.ks, cd.ls))


def insertion(cd: ChordDiagram, v: dict, g: int) -> dict:
    """Insertion of mu-copies across the chords of cd, v in the free slots.

    v is a sparse degree-(n-2r) tensor; each chord contributes the 2g
    summands sign(j) a_j (first endpoint) a_{-j} (second endpoint), and
    v's letters fill the remaining slots in order.  Plain slot placement,
    no permutation sign.
    """
    n, r = cd.n, cd.r
    free = [s for s in range(1, n + 1) if s not in set(cd.ks) | set(cd.ls)]
    out: dict = {}
    for word, coeff in v.items():
        if len(word) != n - 2 * r:
            raise ValueError("tensor degree does not match diagram")
        for js in product(range(1, g + 1), (1, -1), repeat=r):
            slots = [0] * (n + 1)
            sign = 1
            for i in range(r):
                j = js[2 * i] * js[2 * i + 1]
                sign *= 1 if j > 0 else -1
                slots[cd.ks[i]] = j
                slots[cd.ls[i]] = -j
            for s, letter in zip(free, word):
                slots[s] = letter
            w = tuple(slots[1:])
            q = out.get(w, 0) + coeff * sign
            if q:
                out[w] = q
            else:
                out.pop(w, None)
    return out


@lru_cache(maxsize=None)
def weight_filter(n: int, w: int, g: int) -> Subspace:
    """Span of all chord-diagram insertion images with n - 2r <= w.

    This operational definition of the weight-<= w part of H^{otimes n}
    is what the kernel theorems consume; it agrees with the
    representation-theoretic weight space for large genus.
    """
    indexing = tensor_indexing(n, g)
    vectors = []
    if w >= 0:
        for r in range((n - min(w, n) + 1) // 2, n // 2 + 1):
            for cd in chord_diagrams(n, r):
                for m in all_words(n - 2 * r, g):
                    vectors.append(insertion(cd, {m: rational(1)}, g))
    return Subspace.span(vectors, indexing)


@lru_cache(maxsize=None)
def labute_rel(k: int, g: int) -> Subspace:
    """Relations presenting degree k of the associated graded algebra:
    the span of consecutive-chord insertions (slots i, i+1)."""
    indexing = tensor_indexing(k, g)
    vectors = []
    for i in range(1, k):
        cd = ChordDiagram(k, (i,), (i + 1,))
        for m in all_words(k - 2, g):
            vectors.append(insertion(cd, {m: rational(1)}, g))
    return Subspace.span(vectors, indexing)


@lru_cache(maxsize=None)
def labute_quotient_indexing(k: int, g: int) -> BasisIndexing:
    return BasisIndexing(labute_rel(k, g).quotient_keys(),
                         label=f"labute quotient k={k} g={g}")


def labute_quotient_coords(v: dict, k: int, g: int) -> dict:
    return labute_rel(k, g).quotient_coords(v)


@dataclass(frozen=True)
class GeneratorElement:
    """A chord diagram on [s] with a positive monomial in the free slots."""

    s: int
    r: int
    diagram: ChordDiagram
    monomial: Word

    def __post_init__(self):
        if self.diagram.n != self.s or self.diagram.r != self.r:
            raise ValueError("diagram does not match (s, r)")
        if len(self.monomial) != self.s - 2 * self.r:
            raise ValueError("monomial degree must be s - 2r")


def positive_monomials(m: int, g: int) -> list:
    """Words of degree m in the positive letters with index > g - m."""
    window = range(max(g - m, 0) + 1, g + 1)
    return [tuple(w) for w in product(window, repeat=m)]


def enumerate_B(s: int, r: int, g: int, nonconsecutive: bool = True) -> list:
    """The generator family of degree s with r chords, deterministically
    ordered: diagrams lexicographic, monomials lexicographic within."""
    if not 0 <= 2 * r <= s:
        raise ValueError("need 0 <= 2r <= s")
    m = s - 2 * r
    if g < m:
        warnings.warn(f"empty positive-monomial window: g={g} < {m}")
        return []
    out = []
    for cd in chord_diagrams(s, r):
        if nonconsecutive and not cd.is_nonconsecutive():
            continue
        for mon in positive_monomials(m, g):
            out.append(GeneratorElement(s, r, cd, mon))
    return out


def generator_tensor(b: GeneratorElement, g: int) -> dict:
    """The element of H^{otimes s} named by b."""
    return insertion(b.diagram, {b.monomial: rational(1)}, g)


def generator_lift(b: GeneratorElement, cap: int, g: int) -> AlgebraElement:
    """Lift of b to the truncated algebra, word for word."""
    return AlgebraElement(cap, generator_tensor(b, g))


def rotate_word(word: Word) -> Word:
    return word[1:] + word[:1]


def cyclic_invariants(m: int, g: int) -> Subspace:
    """Span of orbit-sums of degree-m words under rotation of slots."""
    indexing = tensor_indexing(m, g)
    seen = set()
    vectors = []
    for word in all_words(m, g):
        if word in seen:
            continue
        orbit = {word}
        w = rotate_word(word)
        while w != word:
            orbit.add(w)
            w = rotate_word(w)
        seen |= orbit
        vectors.append({w: rational(1) for w in orbit})
    return Subspace.span(vectors, indexing)


def _letter_index(i: int) -> int:
    return 2 * (abs(i) - 1) + (0 if i > 0 else 1)


def tensor_action(M, v: dict, g: int) -> dict:
    """Diagonal action of a 2g x 2g matrix on tensor slots; M's rows and
    columns follow the letter order a_1, a_{-1}, ..., a_g, a_{-g}."""
    letters = signed_letters(g)
    if len(M) != 2 * g or any(len(row) != 2 * g for row in M):
        raise ValueError("matrix size does not match genus")
    columns = [{letters[i]: rational(M[i][j]) for i in range(2 * g) if M[i][j]}
               for j in range(2 * g)]
    out: dict = {}
    for word, coeff in v.items():
        images = [columns[_letter_index(i)] for i in word]
        for combo in product(*[list(img.items()) for img in images]):
            w = tuple(i for i, _ in combo)
            factor = coeff
            for _, c in combo:
                factor *= c
            q = out.get(w, 0) + factor
            if q:
                out[w] = q
            else:
                out.pop(w, None)
    return out


def symplectic_form(g: int) -> list:
    """Matrix of the intersection form, block diagonal [[0,1],[-1,0]]."""
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for j in range(g):
        J[2 * j][2 * j + 1] = 1
        J[2 * j + 1][2 * j] = -1
    return J


def is_symplectic(M, g: int) -> bool:
    J = symplectic_form(g)
    size = 2 * g
    if len(M) != size or any(len(row) != size for row in M):
        raise ValueError("matrix size does not match genus")
    for a in range(size):
        for b in range(size):
            val = sum(rational(M[i][a]) * J[i][j] * rational(M[j][b])
                      for i in range(size) for j in range(size))
            if val != J[a][b]:
                return False
    return True

"""Permutations of {1, ..., n} and the coefficient rings Z and Z/m."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple


class SizeMismatch(ValueError):
    """Permutations on different numbers of points were combined."""


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of ``i``.

    Products are function composition: ``(p * q)(x) == p(q(x))``.
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise IndexError(f"bad transposition ({i} {j}) in S_{n}")
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(tuple(imgs))

    @classmethod
    def s(cls, n: int, i: int) -> "Permutation":
        """The adjacent transposition (i, i+1)."""
        return cls.transposition(n, i, i + 1)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.n != self.n:
            raise SizeMismatch(f"S_{self.n} vs S_{other.n}")
        imgs = self.images
        return Permutation(tuple(imgs[q - 1] for q in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``."""
    return p * q


@lru_cache(maxsize=None)
def group_elements(n: int) -> Tuple[Permutation, ...]:
    """All of S_n sorted lexicographically by image array."""
    return tuple(Permutation(p) for p in permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def group_index(n: int) -> Dict[Permutation, int]:
    return {g: i for i, g in enumerate(group_elements(n))}


def from_word(n: int, letters: Sequence[int]) -> Permutation:
    """Product s_{k1} s_{k2} ... of adjacent transpositions."""
    p = Permutation.identity(n)
    for k in letters:
        p = p * Permutation.s(n, abs(k))
    return p


# ---------------------------------------------------------------------------
# rings


@dataclass(frozen=True)
class Ring:
    """The coefficient ring: Z when ``modulus`` is None, else Z/modulus."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError("Z/m needs m >= 2")

    @classmethod
    def parse(cls, text: str) -> "Ring":
        text = text.strip()
        if text in ("Z", "ZZ"):
            return cls()
        m = re.fullmatch(r"(?:Zmod:|Z/)(\d+)", text)
        if not m:
            raise ValueError(f"unknown ring {text!r}; use Z or Zmod:m")
        return cls(int(m.group(1)))

    @property
    def is_integral(self) -> bool:
        return self.modulus is None

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"

    def reduce(self, x: int) -> int:
        return x if self.modulus is None else x % self.modulus

    def two_torsion(self) -> List[int]:
        """Elements of R[2]."""
        return self.torsion(2)

    def torsion(self, k: int) -> List[int]:
        """Elements r with k*r = 0 (Z: only 0)."""
        if self.modulus is None:
            return [0]
        m = self.modulus
        return [r for r in range(m) if (k * r) % m == 0]

    def in_two_torsion(self, r: int) -> bool:
        return self.reduce(2 * r) == 0

    def ideal_gen(self, k: int) -> int:
        """Generator of the ideal kR as an integer modulus: ``x in kR`` iff
        ``x ≡ 0 (mod ideal_gen(k))`` (Z: k itself)."""
        if self.modulus is None:
            return abs(k)
        return gcd(k, self.modulus)

    def divides(self, k: int, x: int) -> bool:
        """Whether x lies in kR."""
        g = self.ideal_gen(k)
        if g == 0:
            return x == 0
        return x % g == 0

    def to_json(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


ZZ = Ring()


# ---------------------------------------------------------------------------
# the integer constants built from a = 1/2 or 1 and b = 1 or 1/2


@dataclass(frozen=True)
class Constants:
    n: int

    @property
    def na(self) -> int:
        return self.n // 2 if self.n % 2 == 0 else self.n

    @property
    def two_a(self) -> int:
        return 1 if self.n % 2 == 0 else 2

    @property
    def two_b(self) -> int:
        return 2 if self.n % 2 == 0 else 1

    @property
    def b_n1(self) -> int:
        """b(n-1)."""
        return self.n - 1 if self.n % 2 == 0 else (self.n - 1) // 2

    @property
    def b_n1_n2(self) -> int:
        """b(n-1)(n-2)."""
        return (self.n - 1) * (self.n - 2) if self.n % 2 == 0 else (self.n - 1) * (self.n - 2) // 2

    @property
    def a_n_n2(self) -> int:
        """n(n-2)a."""
        return self.n * (self.n - 2) // 2 if self.n % 2 == 0 else self.n * (self.n - 2)

# src/groups/labels.py

"""
Vertex-group descriptors and the letter arithmetic they support
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from ..exceptions import InputError, UnsupportedLabelError

FreeLetter = Tuple[int, ...]
Letter = Union[int, FreeLetter]

GENERATOR_ALPHABET = "xyzwvutsrqponmlkjihgfedcba"

KINDS = ("cyclic", "free", "higman", "opaque")


def _free_reduce(letters: List[int]) -> FreeLetter:
    reduced: List[int] = []
    for g in letters:
        if reduced and reduced[-1] == -g:
            reduced.pop()
        else:
            reduced.append(g)
    return tuple(reduced)


@dataclass(frozen=True)
class VertexLabel:
    """
    Descriptor of a vertex group G_v

    cyclic(0) is ℤ, cyclic(n) for n ≥ 2 is ℤ/n, free(r) is the free group of
    rank r. higman(k) and opaque labels only take part in classification;
    any element arithmetic under them raises UnsupportedLabelError.
    """

    kind: str
    order: int = 0
    rank: int = 0
    k: int = 0
    tag: str = ""
    infinite: bool = True
    name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"Unknown label kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "cyclic" and (self.order < 0 or self.order == 1):
            raise InputError(f"Cyclic order must be 0 or at least 2, got {self.order}")
        if self.kind == "free" and self.rank < 1:
            raise InputError(f"Free rank must be at least 1, got {self.rank}")
        if self.kind == "free" and self.rank > len(GENERATOR_ALPHABET):
            raise InputError(f"Free rank {self.rank} exceeds the generator alphabet")
        if self.kind == "higman" and self.k < 4:
            raise InputError(f"Higman parameter must be at least 4, got {self.k}")
        if self.kind == "opaque" and not self.tag:
            raise InputError("Opaque labels need a non-empty tag")

    # constructors

    @classmethod
    def cyclic(cls, order: int, name: str = "") -> "VertexLabel":
        return cls("cyclic", order=order, name=name)

    @classmethod
    def integers(cls) -> "VertexLabel":
        return cls("cyclic", order=0)

    @classmethod
    def free(cls, rank: int, name: str = "") -> "VertexLabel":
        return cls("free", rank=rank, name=name)

    @classmethod
    def higman(cls, k: int, name: str = "") -> "VertexLabel":
        return cls("higman", k=k, name=name)

    @classmethod
    def opaque(cls, tag: str, infinite: bool = True, name: str = "") -> "VertexLabel":
        return cls("opaque", tag=tag, infinite=infinite, name=name)

    # descriptors

    @property
    def key(self) -> str:
        """Canonical short name used in relation tables and reports"""
        if self.kind == "cyclic":
            return "Z" if self.order == 0 else f"Z/{self.order}"
        if self.kind == "free":
            return f"F{self.rank}"
        if self.kind == "higman":
            return f"Hig{self.k}"
        # prefixed so a tag can never collide with a built-in key
        return f"opaque:{self.tag}"

    @property
    def display_name(self) -> str:
        return self.name or self.key

    @property
    def is_arithmetic(self) -> bool:
        return self.kind in ("cyclic", "free")

    @property
    def is_finite(self) -> bool:
        return self.kind == "cyclic" and self.order >= 2

    @property
    def is_countably_infinite(self) -> bool:
        if self.kind == "cyclic":
            return self.order == 0
        if self.kind == "opaque":
            return self.infinite
        return True

    @property
    def is_amenable(self) -> Optional[bool]:
        """Known amenability; None when the label does not say"""
        if self.kind == "cyclic":
            return True
        if self.kind == "free":
            return self.rank == 1
        if self.kind == "higman":
            return False
        return None

    def to_dict(self) -> dict:
        spec: dict = {"kind": self.kind}
        if self.kind == "cyclic":
            spec["order"] = self.order
        elif self.kind == "free":
            spec["rank"] = self.rank
        elif self.kind == "higman":
            spec["k"] = self.k
        else:
            spec["tag"] = self.tag
            spec["infinite"] = self.infinite
        if self.name:
            spec["name"] = self.name
        return spec

    # letter arithmetic

    def _require_arithmetic(self) -> None:
        if not self.is_arithmetic:
            raise UnsupportedLabelError(f"No element arithmetic for {self.kind} label {self.display_name}")

    def normalize_letter(self, raw: Letter) -> Optional[Letter]:
        """
        Canonical representative of a letter, or None for the identity

        Args:
            raw: integer exponent (cyclic) or signed generator indices (free)

        Returns:
            The unique stored representative, None when raw is trivial
        """
        self._require_arithmetic()
        if self.kind == "cyclic":
            if not isinstance(raw, int) or isinstance(raw, bool):
                raise InputError(f"Cyclic letter must be an integer, got {raw!r}")
            if self.order == 0:
                return raw or None
            residue = raw % self.order
            if residue > self.order // 2:
                residue -= self.order
            return residue or None
        if isinstance(raw, int):
            raw = (1,) * raw if raw >= 0 else (-1,) * (-raw)
        letters = list(raw)
        for g in letters:
            if not isinstance(g, int) or g == 0 or abs(g) > self.rank:
                raise InputError(f"Generator index {g!r} invalid for rank {self.rank}")
        return _free_reduce(letters) or None

    def multiply_letters(self, a: Letter, b: Letter) -> Optional[Letter]:
        self._require_arithmetic()
        if self.kind == "cyclic":
            return self.normalize_letter(a + b)
        return _free_reduce(list(a) + list(b)) or None

    def invert_letter(self, a: Letter) -> Letter:
        self._require_arithmetic()
        if self.kind == "cyclic":
            inverse = self.normalize_letter(-a)
            return a if inverse is None else inverse
        return tuple(-g for g in reversed(a))

    def letter_length(self, a: Letter) -> int:
        """Word length of a letter in the vertex generating set"""
        self._require_arithmetic()
        if self.kind == "cyclic":
            return abs(a)
        return len(a)

    def generators(self) -> List[Letter]:
        """Symmetric generating set of letters of length one"""
        self._require_arithmetic()
        if self.kind == "cyclic":
            return [1] if self.order == 2 else [1, -1]
        gens: List[Letter] = []
        for i in range(1, self.rank + 1):
            gens.extend([(i,), (-i,)])
        return gens

    def nontrivial_elements(self) -> List[Letter]:
        """All non-identity letters of a finite label"""
        if not self.is_finite:
            raise UnsupportedLabelError(f"{self.display_name} is not a finite label")
        letters = {self.normalize_letter(x) for x in range(1, self.order)}
        return sorted(letters)

    def generator_name(self, index: int) -> str:
        return GENERATOR_ALPHABET[index - 1]

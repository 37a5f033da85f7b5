"""Canonical subsets of a finite rng with lazily computed structural flags."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Iterable

import numpy as np

from .core import FiniteRng, _members_mask

if TYPE_CHECKING:
    from .rrng import RRngStructure

FLAG_NAMES = (
    "subgroup", "left_ideal", "right_ideal", "ideal",
    "r_bimodule", "left_r_submodule", "r_subrng", "r_ideal", "left_r_ideal",
)


@dataclass(frozen=True, eq=False)
class IdealSubset:
    """Members of ``ambient`` in ascending order.

    When ``context`` is an R-rng structure whose ``I`` is the ambient rng,
    the R-flags (R-ideal, R-subrng, ...) become available too.
    """

    ambient: FiniteRng
    members: tuple[int, ...]
    context: "RRngStructure | None" = field(default=None, repr=False)

    @classmethod
    def of(cls, ambient: FiniteRng, members: Iterable[int], context=None) -> "IdealSubset":
        mask = _members_mask(ambient, members)
        return cls(ambient, tuple(int(x) for x in np.flatnonzero(mask)), context)

    @classmethod
    def from_mask(cls, ambient: FiniteRng, mask: np.ndarray, context=None) -> "IdealSubset":
        return cls(ambient, tuple(int(x) for x in np.flatnonzero(mask)), context)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, IdealSubset) and self.ambient is other.ambient
                and self.members == other.members)

    def __hash__(self) -> int:
        return hash((id(self.ambient), self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __le__(self, other: "IdealSubset") -> bool:
        if self.ambient is not other.ambient:
            raise ValueError(f"subsets of different rngs ({self.ambient.name}, {other.ambient.name})")
        return bool(np.all(other.mask[self.idx]))

    def __lt__(self, other: "IdealSubset") -> bool:
        return self <= other and len(self) < len(other)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ambient.order, dtype=bool)
        m[list(self.members)] = True
        m.setflags(write=False)
        return m

    @cached_property
    def idx(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    @property
    def is_zero(self) -> bool:
        return self.members == (0,)

    @property
    def is_whole(self) -> bool:
        return len(self.members) == self.ambient.order

    def sort_key(self) -> tuple:
        return (len(self.members), self.members)

    def labels(self) -> list[str]:
        return [self.ambient.labels[x] for x in self.members]

    def with_context(self, context) -> "IdealSubset":
        return IdealSubset(self.ambient, self.members, context)

    # -- flags --------------------------------------------------------------

    def _stable(self, table: np.ndarray) -> bool:
        """All images table[m, x] for x in the subset stay inside."""
        return bool(self.mask[table[:, self.idx]].all())

    @cached_property
    def is_subgroup(self) -> bool:
        R, i = self.ambient, self.idx
        return bool(self.mask[0] and self.mask[R.add[np.ix_(i, i)]].all() and self.mask[R.neg[i]].all())

    @cached_property
    def is_left_ideal(self) -> bool:
        return self.is_subgroup and self._stable(self.ambient.mul)

    @cached_property
    def is_right_ideal(self) -> bool:
        return self.is_subgroup and self._stable(self.ambient.mul.T)

    @cached_property
    def is_ideal(self) -> bool:
        return self.is_left_ideal and self.is_right_ideal

    @cached_property
    def is_multiplicatively_closed(self) -> bool:
        i = self.idx
        return bool(self.mask[self.ambient.mul[np.ix_(i, i)]].all())

    def _ctx(self):
        if self.context is None:
            raise ValueError("R-flags need an R-rng context")
        return self.context

    @cached_property
    def is_left_r_submodule(self) -> bool:
        return self.is_subgroup and self._stable(self._ctx().left)

    @cached_property
    def is_r_bimodule(self) -> bool:
        return self.is_left_r_submodule and self._stable(self._ctx().right.T)

    @cached_property
    def is_r_subrng(self) -> bool:
        return self.is_r_bimodule and self.is_multiplicatively_closed

    @cached_property
    def is_r_ideal(self) -> bool:
        return self.is_r_bimodule and self.is_ideal

    @cached_property
    def is_left_r_ideal(self) -> bool:
        return self.is_left_r_submodule and self.is_left_ideal

    def flags(self) -> dict[str, bool]:
        out = {}
        for name in FLAG_NAMES:
            try:
                out[name] = bool(getattr(self, "is_" + name))
            except ValueError:
                continue
        return out

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Literal, Optional, Sequence, Tuple

from src.psl2 import ProjectiveMatrix

logger = logging.getLogger(__name__)


def default_cap(q: int) -> int:
    """Largest possible finite subgroup order plus one."""
    return max(60, q + 1) + 1


@dataclass(frozen=True)
class ClosureResult:
    status: Literal["finite", "exceeds-cap"]
    cap: int
    elements: Tuple[ProjectiveMatrix, ...] = ()
    words: Dict[ProjectiveMatrix, str] = field(default_factory=dict, compare=False, repr=False)
    steps: int = 0

    @property
    def is_finite(self) -> bool:
        return self.status == "finite"

    @property
    def order(self) -> Optional[int]:
        return len(self.elements) if self.is_finite else None

    def word(self, g: ProjectiveMatrix) -> str:
        return self.words.get(g, "?")


def _letters(gens: Sequence[ProjectiveMatrix], names: Sequence[str]):
    letters = []
    seen = set()
    for g, name in zip(gens, names):
        for h, label in ((g, name), (g.inverse(), f"{name}^-1")):
            if h not in seen:
                seen.add(h)
                letters.append((h, label))
    return letters


def closure_with_cap(
    gens: Sequence[ProjectiveMatrix],
    cap: Optional[int] = None,
    names: Optional[Sequence[str]] = None,
) -> ClosureResult:
    """Breadth-first closure of <gens> in PSL_2, stopping once more than `cap` elements are found.

    `steps` counts the elements whose products with the generators were formed.
    """
    if not gens:
        raise ValueError("closure needs at least one generator")
    field_ = gens[0].field
    cap = cap if cap is not None else default_cap(field_.q)
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    names = list(names) if names is not None else [chr(ord("A") + i) for i in range(len(gens))]

    identity = ProjectiveMatrix.identity(field_)
    letters = _letters(gens, names)
    words: Dict[ProjectiveMatrix, str] = {identity: "1"}
    queue = deque([identity])
    steps = 0
    while queue:
        g = queue.popleft()
        steps += 1
        for letter, label in letters:
            h = g * letter
            if h in words:
                continue
            words[h] = label if words[g] == "1" else f"{words[g]} {label}"
            queue.append(h)
            if len(words) > cap:
                logger.debug("closure exceeded cap %d after %d steps", cap, steps)
                return ClosureResult("exceeds-cap", cap, (), words, steps)

    elements = tuple(sorted(words, key=lambda m: m.sort_key()))
    logger.debug("closure is finite of order %d after %d steps", len(elements), steps)
    return ClosureResult("finite", cap, elements, words, steps)

from typing import Iterable, Optional

from src.psl2 import ProjectiveMatrix


def find_double_involution(G0: Iterable[ProjectiveMatrix], Y: ProjectiveMatrix) -> Optional[ProjectiveMatrix]:
    """First g in G0 (canonical order) with tr g = 0 and tr gY = 0, or None."""
    for g in sorted(G0, key=lambda m: m.sort_key()):
        if g.is_identity():
            continue
        if g.trace().is_zero() and (g * Y).trace().is_zero():
            return g
    return None

"""
WHQ Engine - Identity Evaluation

Named equalities between morphisms, evaluated (optionally in parallel) into
verdict lines.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence

from .moncat import Mor, mor_equal
from .models import IdentityVerdict

logger = logging.getLogger(__name__)

Thunk = Callable[[], Mor]


@dataclass(frozen=True)
class Identity:
    """A named line that holds iff every listed chain has all members equal."""

    id: str
    chains: Sequence[Sequence[Thunk]]

    def holds(self) -> bool:
        for chain in self.chains:
            first = chain[0]()
            for member in chain[1:]:
                if not mor_equal(first, member()):
                    return False
        return True


def equation(name: str, *members: Thunk) -> Identity:
    return Identity(name, (tuple(members),))


def equations(name: str, *chains: Sequence[Thunk]) -> Identity:
    return Identity(name, tuple(tuple(c) for c in chains))


def predicate(name: str, test: Callable[[], bool]) -> "Predicate":
    return Predicate(name, test)


@dataclass(frozen=True)
class Predicate:
    """A named boolean check that is not a plain equality."""

    id: str
    test: Callable[[], bool]

    def holds(self) -> bool:
        return bool(self.test())


def evaluate(lines: Iterable, max_workers: Optional[int] = None) -> List[IdentityVerdict]:
    """Evaluate lines, preserving their order in the result."""
    lines = list(lines)
    if max_workers is None:
        from config.settings import settings

        max_workers = settings.max_workers
    if max_workers <= 1 or len(lines) <= 1:
        results = [line.holds() for line in lines]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(lambda line: line.holds(), lines))
    verdicts = []
    for line, ok in zip(lines, results):
        logger.debug(f"{line.id}: {'holds' if ok else 'FAILS'}")
        verdicts.append(IdentityVerdict(id=line.id, holds=ok))
    return verdicts

"""Canonical names for constructed objects and morphisms."""

import re
from typing import Iterable, Set

NAME_PATTERN = re.compile(r"[A-Za-z0-9_()<=,:+-]+")

RESERVED_WORDS = frozenset({":", "->", "=>", "=", "<="})


def is_valid_name(name: str) -> bool:
    """Check a name against the presentation alphabet and reserved words."""
    return (
        bool(NAME_PATTERN.fullmatch(name))
        and name not in RESERVED_WORDS
        and not name.endswith(":")
    )


def pair_name(*parts: str) -> str:
    """Render a tuple of names, e.g. ``(a,b)``."""
    return "(" + ",".join(parts) + ")"


def tagged_name(tag: str, name: str) -> str:
    """Render a tagged name, e.g. ``inl:a``."""
    return f"{tag}:{name}"


def identity_name(obj: str) -> str:
    """Default identity name for an object."""
    return f"id_{obj}"


def path_name(edges: Iterable[str]) -> str:
    """Name of a composite path, edges given in applicative order."""
    return ":".join(edges)


class NameAllocator:
    """Hands out unique names, appending ``_1``, ``_2``... on collisions."""

    def __init__(self, taken: Iterable[str] = ()):
        self._taken: Set[str] = set(taken)

    def claim(self, preferred: str) -> str:
        name = preferred
        suffix = 1
        while name in self._taken:
            name = f"{preferred}_{suffix}"
            suffix += 1
        self._taken.add(name)
        return name

    def __contains__(self, name: str) -> bool:
        return name in self._taken

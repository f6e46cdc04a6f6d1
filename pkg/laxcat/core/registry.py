"""
Construction and check registry for laxcat.

Constructions (``laxcat compute <name>``) and property checks
(``laxcat check <name>``) register themselves here so that the command
line can dispatch by name and list what is available.
"""

from typing import Callable, Dict, List, Tuple

from laxcat.core.exceptions import UnknownCommand
from laxcat.core.types import RegistryKind
from laxcat.core.utils.logger import get_logger

logger = get_logger(__name__)


class ConstructionRegistry:
    """
    Registry of named command handlers.

    Example:
        @ConstructionRegistry.register(RegistryKind.CONSTRUCTION, "product")
        def compute_product(request):
            ...

        handler = ConstructionRegistry.get(RegistryKind.CONSTRUCTION, "product")
        names = ConstructionRegistry.list_available(RegistryKind.CHECK)
    """

    # Registry structure: {(kind, name): handler}
    _registry: Dict[Tuple[RegistryKind, str], Callable] = {}

    @classmethod
    def register(cls, kind: RegistryKind, name: str) -> Callable:
        """
        Decorator to register a handler.

        Args:
            kind: CONSTRUCTION or CHECK
            name: Command-line name (lowercase, e.g. "product", "lattice")

        Returns:
            Decorator function
        """

        def decorator(handler: Callable) -> Callable:
            cls._registry[(RegistryKind(kind), name.lower())] = handler
            logger.debug(f"Registered {RegistryKind(kind).value}/{name}")
            return handler

        return decorator

    @classmethod
    def get(cls, kind: RegistryKind, name: str) -> Callable:
        """
        Get a handler by kind and name.

        Raises:
            UnknownCommand: If nothing is registered under that name
        """
        key = (RegistryKind(kind), name.lower())
        if key not in cls._registry:
            raise UnknownCommand(RegistryKind(kind).value, name, cls.list_available(kind))
        return cls._registry[key]

    @classmethod
    def list_available(cls, kind: RegistryKind) -> List[str]:
        """List registered names of one kind, sorted."""
        return sorted(name for k, name in cls._registry if k == RegistryKind(kind))

    @classmethod
    def list_all(cls) -> Dict[str, List[str]]:
        """List every registered name, grouped by kind."""
        result: Dict[str, List[str]] = {}
        for kind, name in cls._registry:
            result.setdefault(kind.value, []).append(name)
        for names in result.values():
            names.sort()
        return result

    @classmethod
    def is_registered(cls, kind: RegistryKind, name: str) -> bool:
        return (RegistryKind(kind), name.lower()) in cls._registry

    @classmethod
    def clear(cls) -> None:
        """Clear the registry. Mainly used by tests."""
        cls._registry.clear()
        logger.debug("Registry cleared")

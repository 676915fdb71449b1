from collections.abc import Callable

from neolrp.modules.milp.backends.protocols import MilpBackend
from neolrp.modules.milp.backends.pulp import PulpBackend

BackendFactory = Callable[[str], MilpBackend]

DEFAULT_BACKEND_NAME = "pulp"


class BackendNotFoundError(KeyError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"Backend '{name}' not found")


class BackendAlreadyRegisteredError(ValueError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"Backend '{name}' already registered")


class BackendRegistry:
    """Backend factories by name; a factory receives the configured engine string."""

    def __init__(self) -> None:
        self._factories: dict[str, BackendFactory] = {}

    def register(self, name: str, factory: BackendFactory, *, replace: bool = False) -> None:
        if name in self._factories and not replace:
            raise BackendAlreadyRegisteredError(name)
        self._factories[name] = factory

    def get(self, name: str) -> BackendFactory:
        if name not in self._factories:
            raise BackendNotFoundError(name)
        return self._factories[name]

    def create(self, name: str, engine: str) -> MilpBackend:
        return self.get(name)(engine)

    @property
    def names(self) -> list[str]:
        return list(self._factories.keys())

    def __contains__(self, name: str) -> bool:
        return name in self._factories


_registry: BackendRegistry | None = None


def get_registry() -> BackendRegistry:
    global _registry
    if _registry is None:
        _registry = BackendRegistry()
        _registry.register(DEFAULT_BACKEND_NAME, PulpBackend)
    return _registry


def reset_registry() -> None:
    global _registry
    _registry = None

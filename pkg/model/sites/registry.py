"""
Site registry.

Central registry of named site families (Δ truncations, finite sets, small
hand-made categories). Built categories are cached per (name, size) so that
memoised classification data is shared between callers.
"""

import logging
import re
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from model.errors import BudgetExceeded, MalformedInput
from model.fincat.category import FinCategory

logger = logging.getLogger(__name__)


class SiteKind(str, Enum):
    DELTA = "delta"
    FINSET = "finset"
    CUSTOM = "custom"


@dataclass(frozen=True)
class SiteSpec:
    """Reference to a site: a generated family with its truncation, or a named/custom site."""
    kind: SiteKind
    max: int = 0
    source: Optional[str] = None

    def __post_init__(self):
        if self.max < 0:
            raise MalformedInput(f"site size must be >= 0, got {self.max}")


@dataclass
class SiteTemplate:
    """
    A registered site family.

    ``builder`` takes the truncation size when ``sized`` is set and nothing
    otherwise; ``size_limit`` is the default guard for sized families.
    """
    name: str
    description: str
    builder: Callable[..., FinCategory]
    sized: bool = False
    size_limit: Optional[int] = None


_REF = re.compile(r"^(?P<name>[A-Za-z_][\w]*)(?::(?P<size>\d+))?$")


class SiteRegistry:
    """Registry of site families with a per-size cache of built categories."""

    def __init__(self):
        self._templates: Dict[str, SiteTemplate] = {}
        self._built: Dict[Tuple[str, Optional[int]], FinCategory] = {}
        self._lock = threading.Lock()

    def register_site(self, template: SiteTemplate) -> None:
        """Register a site family under its name."""
        self._templates[template.name] = template

    def get_template(self, name: str) -> Optional[SiteTemplate]:
        return self._templates.get(name)

    def names(self) -> List[str]:
        return sorted(self._templates)

    def build(self, name: str, size: Optional[int] = None, size_limit: Optional[int] = None) -> FinCategory:
        """
        Build (or fetch from cache) a registered site.

        Raises:
            MalformedInput: unknown name, or a size given to an unsized site
            BudgetExceeded: size beyond the family's guard
        """
        template = self.get_template(name)
        if template is None:
            raise MalformedInput(f"no site registered under {name!r} (known: {', '.join(self.names())})")
        if template.sized:
            if size is None:
                raise MalformedInput(f"site {name} needs a size, e.g. {name}:2")
            limit = size_limit if size_limit is not None else template.size_limit
            if limit is not None and size > limit:
                raise BudgetExceeded(f"{name}:{size} exceeds the size guard {limit}")
        elif size is not None:
            raise MalformedInput(f"site {name} takes no size")

        key = (name, size)
        with self._lock:
            if key not in self._built:
                self._built[key] = template.builder(size) if template.sized else template.builder()
                logger.debug("built site %s", self._built[key].describe())
            return self._built[key]

    def build_ref(self, ref: str, size_limit: Optional[int] = None) -> FinCategory:
        """Build from a reference string such as ``delta:2`` or ``parallel_arrows``."""
        match = _REF.match(ref.strip())
        if match is None:
            raise MalformedInput(f"malformed site reference {ref!r}")
        size = match.group("size")
        return self.build(match.group("name"), int(size) if size is not None else None, size_limit)

    def build_spec(self, spec: SiteSpec, size_limit: Optional[int] = None) -> FinCategory:
        if spec.kind == SiteKind.CUSTOM:
            if spec.source is None:
                raise MalformedInput("custom site needs a source")
            return self.build_ref(spec.source, size_limit)
        return self.build(spec.kind.value, spec.max, size_limit)


# Global registry instance (singleton pattern)
GlobalRegistry = SiteRegistry()

"""
Caching for the combinatorial tables.

Symmetric group multiplication tables, Young coset tables and map enumerations
get rebuilt constantly otherwise: every tensor product, composition and law
check asks for them. They never change once built, so we keep them in-process
under a lock and hand the same object back to everyone.
"""

import logging
import threading
from typing import Any, Callable, Dict, Hashable

logger = logging.getLogger(__name__)

_tables: Dict[Hashable, Any] = {}
_lock = threading.Lock()


def cached_table(key: Hashable, builder: Callable[[], Any]) -> Any:
    with _lock:
        if key in _tables:
            return _tables[key]

    table = builder()

    with _lock:
        # another thread may have won the race; keep the first one
        table = _tables.setdefault(key, table)
    logger.debug(f"Cached table {key!r}")
    return table


def clear_cache() -> None:
    with _lock:
        _tables.clear()

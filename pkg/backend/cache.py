"""Memo em memória para valores puros (caracteres, expansões, fatores)"""

import threading
from typing import Dict, Any, Hashable, Optional
import logging

from config import settings

logger = logging.getLogger(__name__)


class MemoCache:
    """Cache idempotente e thread-safe: a mesma chave sempre mapeia o mesmo valor"""

    def __init__(self, enabled: bool = True, max_entries: Optional[int] = None):
        self._cache: Dict[Hashable, Any] = {}
        self._lock = threading.Lock()
        self.enabled = enabled
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Optional[Any]:
        """Retorna o valor memoizado ou None"""
        if not self.enabled:
            return None
        with self._lock:
            value = self._cache.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
        if value is not None:
            logger.debug(f"[Memo] hit: {key}")
        return value

    def set(self, key: Hashable, value: Any) -> Any:
        """Armazena o valor; se outra thread já armazenou, devolve o existente"""
        if not self.enabled:
            return value
        with self._lock:
            if key not in self._cache and self.max_entries and len(self._cache) >= self.max_entries:
                # descarta a entrada mais antiga
                self._cache.pop(next(iter(self._cache)))
            existing = self._cache.setdefault(key, value)
        if existing is value:
            logger.debug(f"[Memo] armazenado: {key}")
        return existing

    def clear(self):
        """Limpa todo o memo"""
        with self._lock:
            self._cache.clear()
            self.hits = 0
            self.misses = 0
        logger.info("[Memo] Memo limpo")

    def stats(self) -> Dict[str, int]:
        """Contadores de uso"""
        with self._lock:
            return {"hits": self.hits, "misses": self.misses, "size": len(self._cache)}


# Instância global do memo
memo = MemoCache(enabled=settings.memo_enabled, max_entries=settings.memo_max_entries)
